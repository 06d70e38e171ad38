#pragma once

#include <mpfr.h>

#include <string>

#include "ratlines/kernel/rational.hpp"

namespace ratlines {

/// Decimal digits to MPFR bits, with a few guard bits.
mpfr_prec_t digits_to_bits(unsigned digits);

/// Owning wrapper around an mpfr_t. Binary operations use the larger operand
/// precision and round to nearest.
class Real {
 public:
  explicit Real(mpfr_prec_t bits = 128);
  Real(double v, mpfr_prec_t bits);
  Real(const Rational& q, mpfr_prec_t bits);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  Real operator-() const;
  Real& operator+=(const Real& b) { return *this = *this + b; }
  Real& operator-=(const Real& b) { return *this = *this - b; }
  Real& operator*=(const Real& b) { return *this = *this * b; }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  Rational to_rational() const;
  /// Scientific notation with the given significant digits.
  std::string to_string(unsigned digits = 20) const;

  Real abs() const;
  Real sqrt() const;
  /// Exponent e with 2^(e-1) <= |x| < 2^e; very negative for zero.
  long exponent2() const;

 private:
  mpfr_t v_;
};

struct Complex {
  Real re;
  Real im;

  explicit Complex(mpfr_prec_t bits = 128) : re(bits), im(bits) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(const Rational& r, mpfr_prec_t bits) : re(r, bits), im(bits) {}

  mpfr_prec_t precision() const { return re.precision(); }
  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator/(const Complex& a, const Complex& b);
  Complex operator-() const { return {-re, -im}; }
  Complex conj() const { return {re, -im}; }
  Real norm2() const { return re * re + im * im; }
  Real abs() const { return norm2().sqrt(); }
  std::string to_string(unsigned digits = 20) const;
};

/// Evaluates a dense polynomial (index = degree) with rational coefficients.
Complex eval_poly(const std::vector<Rational>& coeffs, const Complex& z);
/// Value and derivative at z.
void eval_poly_d(const std::vector<Rational>& coeffs, const Complex& z, Complex& value, Complex& deriv);

}  // namespace ratlines
