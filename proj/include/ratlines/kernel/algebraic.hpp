#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ratlines/kernel/qpoly.hpp"
#include "ratlines/kernel/roots.hpp"

namespace ratlines {

/// Q[b]/(minpoly) for a monic irreducible minpoly over Q.
class NumberField {
 public:
  /// Makes minpoly monic; irreducibility is the caller's responsibility.
  explicit NumberField(QPoly minpoly);
  const QPoly& minpoly() const { return minpoly_; }
  int degree() const { return qp::degree(minpoly_); }
  /// Minimal polynomial printed in the generator symbol b.
  std::string to_string() const;

 private:
  QPoly minpoly_;
};

using FieldPtr = std::shared_ptr<const NumberField>;
FieldPtr make_field(const QPoly& minpoly);
FieldPtr rational_field();

/// Rectangle with rational corners in the complex plane.
struct ComplexBox {
  Rational re_lo, re_hi, im_lo, im_hi;
};

/// A chosen complex root of a field's minimal polynomial.
struct Embedding {
  RootDisk disk;
  ComplexBox box() const;
};

using EmbeddingPtr = std::shared_ptr<const Embedding>;

/// Element of a number field in the power basis of the generator, optionally
/// tied to an embedding into C.
class AlgNum {
 public:
  AlgNum(FieldPtr field, QPoly coords, EmbeddingPtr embedding = nullptr);
  static AlgNum from_rational(FieldPtr field, const Rational& q, EmbeddingPtr embedding = nullptr);
  static AlgNum generator(FieldPtr field, EmbeddingPtr embedding = nullptr);

  const FieldPtr& field() const { return field_; }
  const QPoly& coords() const { return coords_; }
  const EmbeddingPtr& embedding() const { return embedding_; }
  /// Power-basis coordinate k (zero beyond the stored length).
  Rational coord(int k) const;

  bool is_zero() const { return coords_.empty(); }
  bool is_rational() const { return coords_.size() <= 1; }

  friend AlgNum operator+(const AlgNum& a, const AlgNum& b);
  friend AlgNum operator-(const AlgNum& a, const AlgNum& b);
  friend AlgNum operator*(const AlgNum& a, const AlgNum& b);
  friend AlgNum operator/(const AlgNum& a, const AlgNum& b);
  AlgNum operator-() const;
  friend bool operator==(const AlgNum& a, const AlgNum& b);
  /// Throws Error(DivisionByZero) for zero.
  AlgNum inverse() const;

  /// Value under the embedding; throws Error(InvalidArgument) without one.
  Complex approx(unsigned digits) const;
  /// Power-basis polynomial printed in b.
  std::string to_string() const;

 private:
  FieldPtr field_;
  QPoly coords_;
  EmbeddingPtr embedding_;
};

/// One AlgNum per distinct complex root of the univariate polynomial m, each
/// the generator of the field of its irreducible factor. Throws Error(ZeroPolynomial).
std::vector<AlgNum> complex_roots(const MPoly& m, unsigned digits = 50);

}  // namespace ratlines
