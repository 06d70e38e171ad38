#include "ratlines/kernel/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace ratlines {

mpfr_prec_t digits_to_bits(unsigned digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 16;
}

Real::Real(mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_zero(v_, 1);
}

Real::Real(double v, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_d(v_, v, MPFR_RNDN);
}

Real::Real(const Rational& q, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(v_, other.precision());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

namespace {
mpfr_prec_t join(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }
}  // namespace

Real operator+(const Real& a, const Real& b) {
  Real r(join(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r(join(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r(join(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  Real r(join(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real Real::operator-() const {
  Real r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

Rational Real::to_rational() const {
  Rational q;
  mpfr_get_q(q.get_mpq_t(), v_);
  return q;
}

std::string Real::to_string(unsigned digits) const {
  std::vector<char> buf(digits + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", static_cast<int>(digits > 0 ? digits - 1 : 0), v_);
  return buf.data();
}

Real Real::abs() const {
  Real r(precision());
  mpfr_abs(r.v_, v_, MPFR_RNDN);
  return r;
}

Real Real::sqrt() const {
  Real r(precision());
  mpfr_sqrt(r.v_, v_, MPFR_RNDN);
  return r;
}

long Real::exponent2() const {
  if (mpfr_zero_p(v_)) return -(1L << 40);
  return mpfr_get_exp(v_);
}

Complex operator/(const Complex& a, const Complex& b) {
  Real d = b.norm2();
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

std::string Complex::to_string(unsigned digits) const {
  return "(" + re.to_string(digits) + ", " + im.to_string(digits) + ")";
}

Complex eval_poly(const std::vector<Rational>& coeffs, const Complex& z) {
  Complex acc(z.precision());
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    acc = acc * z;
    acc.re += Real(coeffs[i], z.precision());
  }
  return acc;
}

void eval_poly_d(const std::vector<Rational>& coeffs, const Complex& z, Complex& value, Complex& deriv) {
  value = Complex(z.precision());
  deriv = Complex(z.precision());
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    deriv = deriv * z + value;
    value = value * z;
    value.re += Real(coeffs[i], z.precision());
  }
}

}  // namespace ratlines
