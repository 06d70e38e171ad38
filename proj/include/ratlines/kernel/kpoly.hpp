#pragma once

#include <vector>

#include "ratlines/kernel/algebraic.hpp"
#include "ratlines/kernel/mpoly.hpp"

namespace ratlines {

/// Polynomial over a number field K. Stored as an MPoly in which the field
/// generator occupies the slot kGen, reduced modulo the minimal polynomial.
class KPoly {
 public:
  static constexpr Var kGen = Var::w;

  explicit KPoly(FieldPtr field) : field_(std::move(field)) {}
  /// p must not involve kGen other than as the generator.
  KPoly(FieldPtr field, const MPoly& p);
  static KPoly constant(const AlgNum& c);

  const FieldPtr& field() const { return field_; }
  const MPoly& raw() const { return p_; }
  bool is_zero() const { return p_.is_zero(); }
  int degree(Var v) const { return p_.degree(v); }

  friend KPoly operator+(const KPoly& a, const KPoly& b);
  friend KPoly operator-(const KPoly& a, const KPoly& b);
  friend KPoly operator*(const KPoly& a, const KPoly& b);
  KPoly operator*(const AlgNum& c) const;
  friend bool operator==(const KPoly& a, const KPoly& b) { return a.p_ == b.p_; }

  /// Power-basis components P_k over Q with this = sum gen^k P_k.
  std::vector<MPoly> components() const;
  /// Substitutes v := value.
  KPoly evaluate(Var v, const AlgNum& value) const;
  KPoly evaluate(Var v, const Rational& value) const;
  /// Value at a point where every remaining variable is assigned.
  AlgNum evaluate_all(const std::vector<std::pair<Var, AlgNum>>& point) const;
  /// Coefficients with respect to v.
  std::vector<KPoly> coefficients(Var v) const;
  KPoly leading_coeff_in(Var v) const;
  /// v must differ from kGen.
  KPoly derivative(Var v) const;

  /// Exact divisibility by a polynomial with rational coefficients.
  bool divisible_by(const MPoly& alpha) const;

 private:
  void reduce();
  FieldPtr field_;
  MPoly p_;
};

/// gcd over K[x, y] (y main variable, x the other), monic in the leading
/// coefficient sense up to a unit of K[x].
KPoly kpoly_gcd(const KPoly& a, const KPoly& b, Var x, Var y);

}  // namespace ratlines
