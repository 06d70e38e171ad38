#include "modfilter.hpp"

#include <optional>
#include <random>

#include "dense.hpp"
#include "modular.hpp"

namespace ratlines::detail {

namespace {

using SeriesP = std::vector<std::uint64_t>;

bool p_integral(const MPoly& f, std::uint64_t p) {
  for (const auto& term : f.terms())
    if (mpz_divisible_ui_p(term.coeff.get_den_mpz_t(), p)) return false;
  return true;
}

// f(a + tau, s) as coefficients in s, each a truncated series in tau.
struct ShiftedP {
  std::vector<SeriesP> coeffs;
};

ShiftedP shift_reduce(const Zp& F, const MPoly& shifted, std::size_t n) {
  ShiftedP out;
  const int ds = shifted.degree(Var::s);
  out.coeffs.assign(ds < 0 ? 0 : ds + 1, SeriesP(n, 0));
  for (const auto& term : shifted.terms()) {
    const unsigned e = term.mono.exponent(Var::t);
    if (e < n) {
      auto& c = out.coeffs[term.mono.exponent(Var::s)][e];
      c = F.add(c, F.reduce(term.coeff));
    }
  }
  return out;
}

SeriesP mul(const Zp& F, const SeriesP& a, const SeriesP& b, std::size_t n) {
  SeriesP r(n, 0);
  for (std::size_t i = 0; i < n && i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < n && j < b.size(); ++j)
      if (b[j] != 0) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  return r;
}

SeriesP inverse(const Zp& F, const SeriesP& a, std::size_t n) {
  SeriesP x{F.inv(a[0])};
  for (std::size_t p = 1; p < n;) {
    p = std::min(2 * p, n);
    SeriesP ax = mul(F, a, x, p);
    for (auto& c : ax) c = F.neg(c);
    ax[0] = F.add(ax[0], 2);
    x = mul(F, x, ax, p);
  }
  x.resize(n, 0);
  return x;
}

SeriesP compose(const Zp& F, const ShiftedP& f, const SeriesP& s, std::size_t n) {
  if (f.coeffs.empty()) return SeriesP(n, 0);
  SeriesP acc(f.coeffs.back().begin(), f.coeffs.back().begin() + n);
  for (std::size_t j = f.coeffs.size() - 1; j-- > 0;) {
    acc = mul(F, acc, s, n);
    for (std::size_t i = 0; i < n; ++i) acc[i] = F.add(acc[i], f.coeffs[j][i]);
  }
  return acc;
}

std::uint64_t eval_at(const Zp& F, const MPoly& f_at_a, std::uint64_t r) {
  std::uint64_t v = 0;
  const int d = f_at_a.degree(Var::s);
  std::vector<std::uint64_t> c(d < 0 ? 0 : d + 1, 0);
  for (const auto& term : f_at_a.terms()) c[term.mono.exponent(Var::s)] = F.reduce(term.coeff);
  for (std::size_t i = c.size(); i-- > 0;) v = F.add(F.mul(v, r), c[i]);
  return v;
}

// A root of mu modulo p, if mu has a linear factor there.
std::optional<std::uint64_t> root_mod(const Zp& F, const UPolyP& mu, std::mt19937_64& rng) {
  const UPolyP x{0, 1};
  UPolyP xp = up::powmod(F, x, Integer(static_cast<unsigned long>(F.modulus())), mu);
  UPolyP g = up::gcd(F, up::sub(F, xp, x), mu);
  while (up::degree(g) > 1) {
    const std::uint64_t delta = rng() % F.modulus();
    UPolyP h = up::powmod(F, UPolyP{delta, 1}, Integer(static_cast<unsigned long>((F.modulus() - 1) / 2)), g);
    h = up::gcd(F, up::sub(F, h, UPolyP{1}), g);
    const int dh = up::degree(h);
    if (dh <= 0 || dh == up::degree(g)) continue;
    g = 2 * dh <= up::degree(g) ? h : up::quo(F, g, h);
  }
  if (up::degree(g) != 1) return std::nullopt;
  g = up::monic(F, g);
  return F.neg(g[0]);
}

}  // namespace

bool modular_rejects(const MPoly& alpha, const Rational& a, const QPoly& mu, const LineForms& forms,
                     const std::array<MPoly, 3>& W, std::size_t order) {
  const MPoly shift = MPoly::variable(Var::t) + MPoly(a);
  const MPoly alpha_a = alpha.substitute(Var::t, shift);
  const MPoly alpha_s_a = alpha.derivative(Var::s).substitute(Var::t, shift);
  std::array<MPoly, 3> X_a;
  for (int i = 0; i < 3; ++i) X_a[i] = forms.X[i].substitute(Var::t, shift);
  const MPoly D_a = forms.D.substitute(Var::t, shift);
  std::array<MPoly, 3> W0;
  for (int i = 0; i < 3; ++i) W0[i] = W[i].evaluate(Var::t, a);
  const MPoly m = alpha.evaluate(Var::t, a);
  const UPolyZ mu_z = to_uz(qp::to_mpoly(mu, Var::s).primitive_integer(), Var::s);
  const int deg_s = alpha.degree(Var::s);
  std::mt19937_64 rng(0x51ed2701u);

  for (std::size_t pi = 40; pi < 48; ++pi) {
    const std::uint64_t p = nth_prime(pi);
    if (!p_integral(alpha_a, p) || !p_integral(MPoly(a), p)) continue;
    const Zp F(p);
    const UPolyP mu_p = up::from_z(F, mu_z);
    if (up::degree(mu_p) != uz::degree(mu_z)) continue;
    if (F.reduce(m.leading_coeff_in(Var::s).constant_value()) == 0 || m.degree(Var::s) != deg_s) continue;
    const auto r = root_mod(F, up::monic(F, mu_p), rng);
    if (!r) continue;
    if (eval_at(F, alpha.derivative(Var::s).evaluate(Var::t, a), *r) == 0) continue;

    bool integral = p_integral(D_a, p);
    for (int i = 0; i < 3; ++i) integral = integral && p_integral(X_a[i], p) && p_integral(W0[i], p);
    if (!integral) continue;
    std::array<std::uint64_t, 3> w0, x0;
    for (int i = 0; i < 3; ++i) {
      w0[i] = eval_at(F, W0[i], *r);
      x0[i] = eval_at(F, X_a[i].evaluate(Var::t, 0), *r);
    }
    const std::uint64_t d0 = eval_at(F, D_a.evaluate(Var::t, 0), *r);
    if (d0 == 0 || (w0[0] == 0 && w0[1] == 0 && w0[2] == 0)) continue;

    const ShiftedP A = shift_reduce(F, alpha_a, order), As = shift_reduce(F, alpha_s_a, order);
    SeriesP s{*r};
    for (std::size_t n = 1; n < order;) {
      n = std::min(2 * n, order);
      s.resize(n, 0);
      SeriesP num = compose(F, A, s, n), den = compose(F, As, s, n);
      SeriesP step = mul(F, num, inverse(F, den, n), n);
      for (std::size_t i = 0; i < n; ++i) s[i] = F.sub(s[i], step[i]);
    }
    const SeriesP d = compose(F, shift_reduce(F, D_a, order), s, order);
    std::array<SeriesP, 3> y;
    for (int i = 0; i < 3; ++i) {
      y[i] = compose(F, shift_reduce(F, X_a[i], order), s, order);
      for (std::size_t k = 0; k < order; ++k) y[i][k] = F.sub(F.mul(y[i][k], d0), F.mul(x0[i], d[k]));
    }
    for (int i = 0; i < 3; ++i) {
      const int j = (i + 1) % 3, k = (i + 2) % 3;
      for (std::size_t e = 0; e < order; ++e)
        if (F.sub(F.mul(y[j][e], w0[k]), F.mul(y[k][e], w0[j])) != 0) return true;
    }
    return false;
  }
  return false;
}

}  // namespace ratlines::detail
