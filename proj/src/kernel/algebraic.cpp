#include "ratlines/kernel/algebraic.hpp"

#include <algorithm>

#include "ratlines/kernel/error.hpp"
#include "ratlines/kernel/factor.hpp"

namespace ratlines {

NumberField::NumberField(QPoly minpoly) : minpoly_(qp::monic(std::move(minpoly))) {
  if (minpoly_.size() < 2) throw Error(ErrorCode::InvalidArgument, "minimal polynomial must have positive degree");
}

std::string NumberField::to_string() const { return qp::to_mpoly(minpoly_, Var::b).to_string(); }

FieldPtr make_field(const QPoly& minpoly) { return std::make_shared<const NumberField>(minpoly); }

FieldPtr rational_field() {
  static const FieldPtr q = make_field(QPoly{Rational(0), Rational(1)});
  return q;
}

ComplexBox Embedding::box() const {
  Rational r = disk.radius.to_rational();
  Rational re = disk.z.re.to_rational(), im = disk.z.im.to_rational();
  return {re - r, re + r, im - r, im + r};
}

AlgNum::AlgNum(FieldPtr field, QPoly coords, EmbeddingPtr embedding)
    : field_(std::move(field)), coords_(std::move(coords)), embedding_(std::move(embedding)) {
  qp::trim(coords_);
  if (qp::degree(coords_) >= field_->degree()) coords_ = qp::rem(coords_, field_->minpoly());
}

AlgNum AlgNum::from_rational(FieldPtr field, const Rational& q, EmbeddingPtr embedding) {
  return AlgNum(std::move(field), QPoly{q}, std::move(embedding));
}

AlgNum AlgNum::generator(FieldPtr field, EmbeddingPtr embedding) {
  return AlgNum(std::move(field), QPoly{Rational(0), Rational(1)}, std::move(embedding));
}

Rational AlgNum::coord(int k) const {
  return k < static_cast<int>(coords_.size()) ? coords_[k] : Rational(0);
}

namespace {

const EmbeddingPtr& check_compatible(const AlgNum& a, const AlgNum& b) {
  if (a.field() != b.field() && a.field()->minpoly() != b.field()->minpoly())
    throw Error(ErrorCode::MixedFields, "operands live in different number fields");
  if (a.embedding() && b.embedding() && a.embedding() != b.embedding())
    throw Error(ErrorCode::MixedFields, "operands use different embeddings");
  return a.embedding() ? a.embedding() : b.embedding();
}

}  // namespace

AlgNum operator+(const AlgNum& a, const AlgNum& b) {
  const auto& e = check_compatible(a, b);
  return AlgNum(a.field_, qp::add(a.coords_, b.coords_), e);
}

AlgNum operator-(const AlgNum& a, const AlgNum& b) {
  const auto& e = check_compatible(a, b);
  return AlgNum(a.field_, qp::sub(a.coords_, b.coords_), e);
}

AlgNum operator*(const AlgNum& a, const AlgNum& b) {
  const auto& e = check_compatible(a, b);
  return AlgNum(a.field_, qp::rem(qp::mul(a.coords_, b.coords_), a.field_->minpoly()), e);
}

AlgNum operator/(const AlgNum& a, const AlgNum& b) { return a * b.inverse(); }

AlgNum AlgNum::operator-() const { return AlgNum(field_, qp::scale(coords_, Rational(-1)), embedding_); }

bool operator==(const AlgNum& a, const AlgNum& b) {
  check_compatible(a, b);
  return a.coords_ == b.coords_;
}

AlgNum AlgNum::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero algebraic number");
  QPoly s, t;
  QPoly g = qp::xgcd(coords_, field_->minpoly(), s, t);
  if (qp::degree(g) != 0) throw Error(ErrorCode::DivisionByZero, "element not invertible: reducible minimal polynomial");
  return AlgNum(field_, s, embedding_);
}

Complex AlgNum::approx(unsigned digits) const {
  const mpfr_prec_t bits = digits_to_bits(digits);
  if (is_rational()) return Complex(coord(0), bits);
  if (!embedding_) throw Error(ErrorCode::InvalidArgument, "algebraic number without embedding");
  Complex root = embedding_->disk.real
                     ? Complex(Real(refine_root(field_->minpoly(), embedding_->disk.z, digits).re), Real(bits))
                     : refine_root(field_->minpoly(), embedding_->disk.z, digits);
  Complex acc(bits);
  for (std::size_t i = coords_.size(); i-- > 0;) {
    acc = acc * root;
    acc.re += Real(coords_[i], bits);
  }
  return acc;
}

std::string AlgNum::to_string() const { return qp::to_mpoly(coords_, Var::b).to_string(); }

std::vector<AlgNum> complex_roots(const MPoly& m, unsigned digits) {
  if (m.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "complex_roots of zero");
  std::vector<AlgNum> out;
  if (m.is_constant()) return out;
  VarSet vars = m.variables();
  Var v = Var::t;
  for (int i = 0; i < kNumVars; ++i)
    if (vars & bit(var_at(i))) v = var_at(i);
  if (vars != bit(v)) throw Error(ErrorCode::InvalidArgument, "complex_roots needs a univariate polynomial");
  for (const MPoly& f : irreducible_factors(m)) {
    QPoly q = qp::from_mpoly(f, v);
    FieldPtr K = make_field(q);
    if (K->degree() == 1) {
      out.push_back(AlgNum::from_rational(K, -K->minpoly()[0]));
      continue;
    }
    auto disks = isolate_roots(K->minpoly(), digits);
    std::sort(disks.begin(), disks.end(), [](const RootDisk& a, const RootDisk& b) {
      if (a.real != b.real) return a.real;
      if (a.z.re != b.z.re) return a.z.re < b.z.re;
      return a.z.im < b.z.im;
    });
    for (auto& d : disks) out.push_back(AlgNum::generator(K, std::make_shared<const Embedding>(Embedding{d})));
  }
  return out;
}

}  // namespace ratlines
