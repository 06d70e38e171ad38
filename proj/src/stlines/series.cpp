#include "series.hpp"

#include "ratlines/kernel/error.hpp"

namespace ratlines::detail {

Series series_zero(const FieldPtr& K, std::size_t n) { return Series(n, AlgNum(K, {})); }

Series series_mul(const Series& a, const Series& b, std::size_t n) {
  const FieldPtr& K = a.front().field();
  Series r = series_zero(K, n);
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j)
      if (!b[j].is_zero()) r[i + j] = r[i + j] + a[i] * b[j];
  }
  return r;
}

Series series_inverse(const Series& a, std::size_t n) {
  const FieldPtr& K = a.front().field();
  Series x{a.front().inverse()};
  for (std::size_t p = 1; p < n;) {
    p = std::min(2 * p, n);
    Series ax = series_mul(a, x, p);
    Series e = series_zero(K, p);
    e[0] = AlgNum::from_rational(K, 2);
    for (std::size_t i = 0; i < p; ++i) e[i] = e[i] - ax[i];
    x = series_mul(x, e, p);
  }
  x.resize(n, AlgNum(K, {}));
  return x;
}

Series series_compose(const MPoly& f, const Rational& a, const Series& s, std::size_t n) {
  const FieldPtr& K = s.front().field();
  const MPoly shifted = f.substitute(Var::t, MPoly::variable(Var::t) + MPoly(a));
  const auto coeffs = shifted.coefficients(Var::s);
  auto to_series = [&](const MPoly& c) {
    Series r = series_zero(K, n);
    for (const auto& term : c.terms()) {
      unsigned e = term.mono.exponent(Var::t);
      if (e < n) r[e] = AlgNum::from_rational(K, term.coeff);
    }
    return r;
  };
  if (coeffs.empty()) return series_zero(K, n);
  Series acc = to_series(coeffs.back());
  for (std::size_t j = coeffs.size() - 1; j-- > 0;) {
    acc = series_mul(acc, s, n);
    Series c = to_series(coeffs[j]);
    for (std::size_t i = 0; i < n; ++i) acc[i] = acc[i] + c[i];
  }
  return acc;
}

Series branch_series(const MPoly& alpha, const Rational& a, const AlgNum& b, std::size_t n) {
  const FieldPtr& K = b.field();
  const MPoly alpha_s = alpha.derivative(Var::s);
  Series s{b};
  for (std::size_t p = 1; p < n;) {
    p = std::min(2 * p, n);
    s.resize(p, AlgNum(K, {}));
    Series num = series_compose(alpha, a, s, p);
    Series den = series_compose(alpha_s, a, s, p);
    if (den.front().is_zero()) throw Error(ErrorCode::InvalidArgument, "branch is singular at the base point");
    Series step = series_mul(num, series_inverse(den, p), p);
    for (std::size_t i = 0; i < p; ++i) s[i] = s[i] - step[i];
  }
  s.resize(n, AlgNum(K, {}));
  return s;
}

bool series_is_zero(const Series& a) {
  for (const auto& c : a)
    if (!c.is_zero()) return false;
  return true;
}

}  // namespace ratlines::detail
