#pragma once

#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ratlines/kernel/monomial.hpp"
#include "ratlines/kernel/rational.hpp"

namespace ratlines {

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept sorted by decreasing graded-lex monomial and never carry a
/// zero coefficient, so two equal polynomials have identical term vectors.
class MPoly {
 public:
  struct Term {
    Monomial mono;
    Rational coeff;
  };

  MPoly() = default;
  MPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  MPoly(long c) : MPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  MPoly(int c) : MPoly(Rational(c)) {}   // NOLINT(google-explicit-constructor)

  static MPoly variable(Var v);
  static MPoly monomial(Monomial m, const Rational& c = 1);
  /// Builds from arbitrary terms: sorts, merges duplicates, drops zeros.
  static MPoly from_terms(std::vector<Term> terms);
  /// Trusted constructor: terms already sorted decreasing, distinct, nonzero.
  static MPoly from_sorted_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || terms_.front().mono.is_one(); }
  bool is_one() const;
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  /// Constant value; requires is_constant().
  Rational constant_value() const;
  const Term& leading_term() const { return terms_.front(); }
  const Rational& leading_coeff() const { return terms_.front().coeff; }

  int degree(Var v) const;  // -1 for the zero polynomial
  int total_degree() const;
  VarSet variables() const;
  bool depends_on(Var v) const { return (variables() & bit(v)) != 0; }

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& other);
  MPoly& operator-=(const MPoly& other);
  MPoly& operator*=(const MPoly& other);
  MPoly& operator*=(const Rational& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
  friend bool operator==(const MPoly& a, const MPoly& b);

  MPoly pow(unsigned e) const;
  MPoly derivative(Var v) const;
  MPoly mul_monomial(Monomial m, const Rational& c = 1) const;

  /// Coefficients with respect to v, index = power of v. Empty for zero.
  std::vector<MPoly> coefficients(Var v) const;
  static MPoly from_coefficients(Var v, std::span<const MPoly> coeffs);
  /// Coefficient of v^k.
  MPoly coefficient(Var v, unsigned k) const;
  /// Leading coefficient with respect to v (zero poly for zero input).
  MPoly leading_coeff_in(Var v) const;

  MPoly evaluate(Var v, const Rational& value) const;
  /// Substitutes v := p (p may involve any variables).
  MPoly substitute(Var v, const MPoly& p) const;
  /// Renames variables according to `target[index(v)]`.
  MPoly rename(const std::array<Var, kNumVars>& target) const;
  /// Full evaluation at a rational point indexed by Var.
  Rational evaluate_all(const std::array<Rational, kNumVars>& point) const;

  /// Exact quotient when `divisor` divides *this, nullopt otherwise.
  std::optional<MPoly> divide_exact(const MPoly& divisor) const;
  /// Multivariate division by a single divisor in graded-lex order.
  std::pair<MPoly, MPoly> divmod(const MPoly& divisor) const;
  bool divisible_by(const MPoly& divisor) const { return divmod(divisor).second.is_zero(); }

  /// Positive rational c such that this / c has coprime integer coefficients.
  Rational rational_content() const;
  /// this / rational_content(), sign-adjusted so the leading coefficient is positive.
  MPoly primitive_integer() const;
  /// this scaled to a monic polynomial (leading coefficient 1).
  MPoly monic() const;

  void map_coefficients(const std::function<void(Rational&)>& f);

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const MPoly& p);

/// Multiplies out a product of factors raised to multiplicities.
MPoly expand_product(std::span<const std::pair<MPoly, unsigned>> factors);

}  // namespace ratlines
