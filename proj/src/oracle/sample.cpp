#include <algorithm>

#include "ratlines/kernel/error.hpp"
#include "ratlines/kernel/qpoly.hpp"
#include "ratlines/kernel/roots.hpp"
#include "numeric.hpp"

namespace ratlines {

namespace {

std::vector<Complex> powers(const Complex& z, int n) {
  std::vector<Complex> p;
  p.reserve(n + 1);
  p.emplace_back(Rational(1), z.precision());
  for (int i = 1; i <= n; ++i) p.push_back(p.back() * z);
  return p;
}

Real ten_power(int e, mpfr_prec_t bits) {
  Real r(1.0, bits);
  const Real ten(10.0, bits);
  for (int i = 0; i < std::abs(e); ++i) r = e < 0 ? r / ten : r * ten;
  return r;
}

Real distance(const CVec3& a, const CVec3& b) {
  Real n2(a[0].precision());
  for (int i = 0; i < 3; ++i) n2 += (a[i] - b[i]).norm2();
  return n2.sqrt();
}

}  // namespace

Complex eval_complex(const MPoly& f, const Complex& t, const Complex& s) {
  const auto pt = powers(t, std::max(f.degree(Var::t), 0));
  const auto ps = powers(s, std::max(f.degree(Var::s), 0));
  Complex sum(Rational(0), t.precision());
  for (const auto& term : f.terms()) {
    Complex c(term.coeff, t.precision());
    sum = sum + c * pt[term.mono.exponent(Var::t)] * ps[term.mono.exponent(Var::s)];
  }
  return sum;
}

NumericSample sample_component_at(const MPoly& alpha, const SurfaceParam& S, std::span<const Rational> values,
                                  unsigned precision) {
  if (alpha.is_constant()) throw Error(ErrorCode::InvalidArgument, "sampling a constant polynomial");
  const bool solve_s = alpha.depends_on(Var::s);
  const Var fixed = solve_s ? Var::t : Var::s, free = solve_s ? Var::s : Var::t;
  const int full_degree = alpha.degree(free);
  const mpfr_prec_t bits = digits_to_bits(precision + 10);
  const Real floor = ten_power(-static_cast<int>(precision) / 2, bits);

  NumericSample out;
  out.precision_digits = precision;
  for (const Rational& v : values) {
    const QPoly m = qp::from_mpoly(alpha.evaluate(fixed, v), free);
    if (qp::degree(m) != full_degree) continue;
    QPoly u, w;
    if (qp::degree(qp::xgcd(m, qp::derivative(m), u, w)) > 0) continue;

    std::vector<std::array<Complex, 2>> params;
    std::vector<CVec3> points;
    bool ok = true;
    for (const auto& root : isolate_roots(m, precision + 10)) {
      const Complex fixed_value(v, bits);
      const Complex& t = solve_s ? fixed_value : root.z;
      const Complex& s = solve_s ? root.z : fixed_value;
      CVec3 p;
      for (int i = 0; i < 3 && ok; ++i) {
        const Complex den = eval_complex(S.x[i].den(), t, s);
        if (den.abs() < floor) ok = false;
        else p[i] = eval_complex(S.x[i].num(), t, s) / den;
      }
      if (!ok) break;
      params.push_back({t, s});
      points.push_back(std::move(p));
    }
    if (!ok) continue;
    for (auto& p : params) out.params.push_back(std::move(p));
    for (auto& p : points) out.points.push_back(std::move(p));
  }
  return out;
}

NumericSample sample_component(const MPoly& alpha, const SurfaceParam& S, int count, unsigned precision) {
  if (count < 3) throw Error(ErrorCode::InvalidArgument, "at least 3 sample values are needed");
  NumericSample out;
  out.precision_digits = precision;
  int found = 0;
  for (int j = 0; j < 10 * count && found < count; ++j) {
    const Rational v = Rational(j % 2 == 0 ? j / 2 + 1 : -(j / 2 + 1), count) + Rational(1, 97);
    const Rational one[] = {v};
    NumericSample part = sample_component_at(alpha, S, one, precision);
    if (part.points.empty()) continue;
    ++found;
    for (auto& p : part.params) out.params.push_back(std::move(p));
    for (auto& p : part.points) out.points.push_back(std::move(p));
  }
  if (found < count)
    throw Error(ErrorCode::InsufficientSamples,
                "only " + std::to_string(found) + " of " + std::to_string(count) + " sample values are admissible");
  return out;
}

Real detail::distance_to_line(const CVec3& p, const CVec3& base, const CVec3& dir) {
  const mpfr_prec_t bits = p[0].precision();
  Complex dd(Rational(0), bits), dv(Rational(0), bits);
  CVec3 v;
  for (int i = 0; i < 3; ++i) {
    v[i] = p[i] - base[i];
    dd = dd + dir[i].conj() * dir[i];
    dv = dv + dir[i].conj() * v[i];
  }
  const Complex c = dv / dd;
  Real n2(bits);
  for (int i = 0; i < 3; ++i) n2 += (v[i] - c * dir[i]).norm2();
  return n2.sqrt();
}

Real collinearity_residual(std::span<const CVec3> points) {
  if (points.size() < 3) throw Error(ErrorCode::DegenerateSample, "fewer than 3 points");
  std::size_t i0 = 0, j0 = 0;
  Real diameter(points[0][0].precision());
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      Real d = distance(points[i], points[j]);
      if (d > diameter) {
        diameter = d;
        i0 = i;
        j0 = j;
      }
    }
  if (diameter.is_zero()) throw Error(ErrorCode::DegenerateSample, "all sample points coincide");
  CVec3 dir;
  for (int k = 0; k < 3; ++k) dir[k] = points[j0][k] - points[i0][k];
  Real worst(diameter.precision());
  for (const auto& p : points) {
    Real d = detail::distance_to_line(p, points[i0], dir);
    if (d > worst) worst = d;
  }
  return worst / diameter;
}

}  // namespace ratlines
