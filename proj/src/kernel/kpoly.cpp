#include "ratlines/kernel/kpoly.hpp"

#include "ratlines/kernel/error.hpp"

namespace ratlines {

namespace {

MPoly minpoly_in_gen(const FieldPtr& field) { return qp::to_mpoly(field->minpoly(), KPoly::kGen); }

MPoly algnum_to_mpoly(const AlgNum& c) { return qp::to_mpoly(c.coords(), KPoly::kGen); }

}  // namespace

KPoly::KPoly(FieldPtr field, const MPoly& p) : field_(std::move(field)), p_(p) { reduce(); }

KPoly KPoly::constant(const AlgNum& c) { return KPoly(c.field(), algnum_to_mpoly(c)); }

void KPoly::reduce() {
  if (p_.degree(kGen) >= field_->degree()) p_ = p_.divmod(minpoly_in_gen(field_)).second;
}

KPoly operator+(const KPoly& a, const KPoly& b) {
  KPoly r(a.field_);
  r.p_ = a.p_ + b.p_;
  return r;
}

KPoly operator-(const KPoly& a, const KPoly& b) {
  KPoly r(a.field_);
  r.p_ = a.p_ - b.p_;
  return r;
}

KPoly operator*(const KPoly& a, const KPoly& b) { return KPoly(a.field_, a.p_ * b.p_); }

KPoly KPoly::operator*(const AlgNum& c) const { return KPoly(field_, p_ * algnum_to_mpoly(c)); }

std::vector<MPoly> KPoly::components() const {
  std::vector<MPoly> out = p_.coefficients(kGen);
  out.resize(field_->degree());
  return out;
}

KPoly KPoly::evaluate(Var v, const AlgNum& value) const {
  return KPoly(field_, p_.substitute(v, algnum_to_mpoly(value)));
}

KPoly KPoly::evaluate(Var v, const Rational& value) const {
  KPoly r(field_);
  r.p_ = p_.evaluate(v, value);
  return r;
}

AlgNum KPoly::evaluate_all(const std::vector<std::pair<Var, AlgNum>>& point) const {
  KPoly r = *this;
  for (const auto& [v, value] : point) r = r.evaluate(v, value);
  if (r.p_.variables() & ~bit(kGen)) throw Error(ErrorCode::InvalidArgument, "evaluate_all leaves free variables");
  return AlgNum(field_, qp::from_mpoly(r.p_, kGen));
}

std::vector<KPoly> KPoly::coefficients(Var v) const {
  std::vector<KPoly> out;
  for (auto& c : p_.coefficients(v)) {
    KPoly k(field_);
    k.p_ = std::move(c);
    out.push_back(std::move(k));
  }
  return out;
}

KPoly KPoly::leading_coeff_in(Var v) const {
  KPoly k(field_);
  k.p_ = p_.leading_coeff_in(v);
  return k;
}

KPoly KPoly::derivative(Var v) const {
  KPoly k(field_);
  k.p_ = p_.derivative(v);
  return k;
}

bool KPoly::divisible_by(const MPoly& alpha) const {
  for (const auto& c : p_.coefficients(kGen))
    if (!c.is_zero() && !c.divide_exact(alpha)) return false;
  return true;
}

namespace {

// Univariate helpers over K in the variable x. Elements are KPoly free of other variables.

AlgNum leading_algnum(const KPoly& a, Var x) {
  KPoly lc = a.leading_coeff_in(x);
  return AlgNum(a.field(), qp::from_mpoly(lc.raw(), KPoly::kGen));
}

KPoly monic_in(const KPoly& a, Var x) {
  if (a.is_zero()) return a;
  return a * leading_algnum(a, x).inverse();
}

// Remainder of a by b in K[x] (b nonzero).
KPoly urem(KPoly a, const KPoly& b, Var x) {
  const int db = b.degree(x);
  const KPoly bm = monic_in(b, x);
  while (!a.is_zero() && a.degree(x) >= db) {
    const int da = a.degree(x);
    AlgNum lc = leading_algnum(a, x);
    KPoly shift(a.field(), MPoly::monomial(Monomial::variable(x, static_cast<unsigned>(da - db))));
    a = a - (bm * shift) * lc;
  }
  return a;
}

KPoly ugcd(KPoly a, KPoly b, Var x) {
  while (!b.is_zero()) {
    KPoly r = urem(a, b, x);
    a = std::move(b);
    b = std::move(r);
  }
  return monic_in(a, x);
}

// Exact quotient of a by c in K[x]; c nonzero.
KPoly uquo(KPoly a, const KPoly& c, Var x) {
  const int dc = c.degree(x);
  const AlgNum inv = leading_algnum(c, x).inverse();
  KPoly q(a.field());
  while (!a.is_zero() && a.degree(x) >= dc) {
    const int da = a.degree(x);
    AlgNum lc = leading_algnum(a, x) * inv;
    KPoly term = KPoly(a.field(), MPoly::monomial(Monomial::variable(x, static_cast<unsigned>(da - dc)))) * lc;
    q = q + term;
    a = a - c * term;
  }
  if (!a.is_zero()) throw Error(ErrorCode::InvalidArgument, "inexact division over K");
  return q;
}

KPoly content_in(const KPoly& a, Var x, Var y) {
  KPoly c(a.field());
  for (const auto& coeff : a.coefficients(y)) {
    if (coeff.is_zero()) continue;
    c = ugcd(c, coeff, x);
    if (c.degree(x) == 0) break;
  }
  return c;
}

KPoly primitive_in(const KPoly& a, Var x, Var y) {
  if (a.is_zero()) return a;
  KPoly c = content_in(a, x, y);
  if (c.degree(x) <= 0) return a;
  std::vector<KPoly> coeffs = a.coefficients(y);
  KPoly out(a.field());
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    KPoly q = uquo(coeffs[k], c, x);
    out = out + q * KPoly(a.field(), MPoly::monomial(Monomial::variable(y, static_cast<unsigned>(k))));
  }
  return out;
}

KPoly kprem(const KPoly& a, const KPoly& b, Var y) {
  const int db = b.degree(y);
  const KPoly lb = b.leading_coeff_in(y);
  KPoly r = a;
  while (!r.is_zero() && r.degree(y) >= db) {
    const int dr = r.degree(y);
    KPoly lr = r.leading_coeff_in(y);
    KPoly shift(a.field(), MPoly::monomial(Monomial::variable(y, static_cast<unsigned>(dr - db))));
    r = lb * r - lr * b * shift;
  }
  return r;
}

}  // namespace

KPoly kpoly_gcd(const KPoly& a, const KPoly& b, Var x, Var y) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  KPoly ca = content_in(a, x, y), cb = content_in(b, x, y);
  KPoly c = ugcd(ca, cb, x);
  KPoly p = primitive_in(a, x, y), q = primitive_in(b, x, y);
  if (p.degree(y) < q.degree(y)) std::swap(p, q);
  while (q.degree(y) > 0) {
    KPoly r = kprem(p, q, y);
    if (r.is_zero()) return c * primitive_in(q, x, y);
    p = std::move(q);
    q = primitive_in(r, x, y);
  }
  return c;
}

}  // namespace ratlines
