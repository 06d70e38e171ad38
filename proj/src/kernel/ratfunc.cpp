#include "ratlines/kernel/ratfunc.hpp"

#include <vector>

#include "ratlines/kernel/error.hpp"
#include "ratlines/kernel/gcd.hpp"

namespace ratlines {

namespace {

// Builds a reduced fraction from num/den with den != 0, given that any common
// factor divides `hint` (pass den when unknown).
RatFunc make_reduced(MPoly num, MPoly den, const MPoly& hint) {
  if (num.is_zero()) return RatFunc();
  if (!den.is_constant()) {
    MPoly g = poly_gcd(num, hint);
    if (!g.is_constant()) {
      num = exact_quotient(num, g);
      den = exact_quotient(den, g);
    }
  }
  return RatFunc(num, den);
}

}  // namespace

RatFunc::RatFunc(const MPoly& num, const MPoly& den) {
  if (den.is_zero()) throw Error(ErrorCode::ZeroDenominator, "rational function with zero denominator");
  if (num.is_zero()) {
    den_ = MPoly(1);
    return;
  }
  MPoly n = num, d = den;
  if (!d.is_constant()) {
    MPoly g = poly_gcd(n, d);
    if (!g.is_constant()) {
      n = exact_quotient(n, g);
      d = exact_quotient(d, g);
    }
  }
  MPoly dn = d.primitive_integer();
  Rational scale = d.leading_coeff() / dn.leading_coeff();
  num_ = n * (Rational(1) / scale);
  den_ = std::move(dn);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return make_reduced(a.num_ + b.num_, a.den_, a.den_);
  MPoly g = poly_gcd(a.den_, b.den_);
  MPoly ad = exact_quotient(a.den_, g), bd = exact_quotient(b.den_, g);
  MPoly num = a.num_ * bd + b.num_ * ad;
  MPoly den = a.den_ * bd;
  return make_reduced(num, den, g.is_constant() ? MPoly(1) : den);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ * b.num_);
  // Cross-cancel: gcd(a.num, b.den) and gcd(b.num, a.den).
  MPoly g1 = b.den_.is_constant() ? MPoly(1) : poly_gcd(a.num_, b.den_);
  MPoly g2 = a.den_.is_constant() ? MPoly(1) : poly_gcd(b.num_, a.den_);
  MPoly n = exact_quotient(a.num_, g1) * exact_quotient(b.num_, g2);
  MPoly d = exact_quotient(a.den_, g2) * exact_quotient(b.den_, g1);
  RatFunc r;
  MPoly dn = d.primitive_integer();
  r.num_ = n * (dn.leading_coeff() / d.leading_coeff());
  r.den_ = std::move(dn);
  return r;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function division by zero");
  RatFunc inv;
  inv.num_ = b.den_;
  inv.den_ = b.num_;
  MPoly dn = inv.den_.primitive_integer();
  inv.num_ *= dn.leading_coeff() / inv.den_.leading_coeff();
  inv.den_ = std::move(dn);
  return a * inv;
}

RatFunc RatFunc::derivative(Var v) const {
  if (den_.is_constant()) return RatFunc(num_.derivative(v));
  // (n/d)' = (n' d - n d') / d^2; only factors of d can cancel.
  MPoly dd = den_.derivative(v);
  MPoly num = num_.derivative(v) * den_ - num_ * dd;
  return make_reduced(num, den_ * den_, den_);
}

std::optional<Rational> RatFunc::evaluate_all(const std::array<Rational, kNumVars>& point) const {
  Rational d = den_.evaluate_all(point);
  if (d == 0) return std::nullopt;
  return num_.evaluate_all(point) / d;
}

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

namespace {

// Homogenized composition: returns p(map) * prod_v den_v^{deg_v p}.
MPoly compose_cleared(const MPoly& p, const std::array<std::optional<RatFunc>, kNumVars>& map,
                      const std::array<int, kNumVars>& degs) {
  std::array<std::vector<MPoly>, kNumVars> npow, dpow;
  for (int i = 0; i < kNumVars; ++i) {
    if (!map[i] || degs[i] <= 0) continue;
    npow[i].push_back(MPoly(1));
    dpow[i].push_back(MPoly(1));
    for (int e = 1; e <= degs[i]; ++e) {
      npow[i].push_back(npow[i].back() * map[i]->num());
      dpow[i].push_back(dpow[i].back() * map[i]->den());
    }
  }
  MPoly out;
  for (const auto& term : p.terms()) {
    MPoly piece(term.coeff);
    std::array<unsigned, kNumVars> keep{};
    for (int i = 0; i < kNumVars; ++i) {
      unsigned e = term.mono.exponent(var_at(i));
      if (map[i] && degs[i] > 0) {
        piece = piece * npow[i][e] * dpow[i][degs[i] - e];
      } else {
        keep[i] = e;
      }
    }
    out += piece.mul_monomial(Monomial::from_exponents(keep));
  }
  return out;
}

}  // namespace

RatFunc substitute_rational(const RatFunc& f, const std::array<std::optional<RatFunc>, kNumVars>& map) {
  std::array<int, kNumVars> dn{}, dd{};
  for (int i = 0; i < kNumVars; ++i) {
    dn[i] = std::max(0, f.num().degree(var_at(i)));
    dd[i] = std::max(0, f.den().degree(var_at(i)));
  }
  MPoly num = compose_cleared(f.num(), map, dn);
  MPoly den = compose_cleared(f.den(), map, dd);
  if (den.is_zero()) throw Error(ErrorCode::IdenticallyZeroDenominator, "composed denominator vanishes");
  // Balance the homogenizing factors prod den_v^{dn_v - dd_v}.
  for (int i = 0; i < kNumVars; ++i) {
    if (!map[i]) continue;
    int diff = dn[i] - dd[i];
    if (diff > 0) den = den * map[i]->den().pow(static_cast<unsigned>(diff));
    if (diff < 0) num = num * map[i]->den().pow(static_cast<unsigned>(-diff));
  }
  return RatFunc(num, den);
}

}  // namespace ratlines
