#pragma once

// Word-size prime field arithmetic and dense polynomials over Z and F_p.
// Internal to the kernel.

#include <cstdint>
#include <vector>

#include "ratlines/kernel/rational.hpp"

namespace ratlines::detail {

class Zp {
 public:
  explicit Zp(std::uint64_t p) : p_(p) {}
  std::uint64_t modulus() const { return p_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t r = a + b;
    return r >= p_ ? r - p_ : r;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t reduce(const Integer& z) const;
  std::uint64_t reduce(const Rational& q) const;  // requires p not dividing the denominator
  std::uint64_t from_signed(long v) const;

 private:
  std::uint64_t p_;
};

/// Primes just below 2^62, largest first. Deterministic sequence.
std::uint64_t nth_prime(std::size_t i);

/// Dense polynomial over F_p, coefficient index = degree, no trailing zeros.
using UPolyP = std::vector<std::uint64_t>;
/// Dense polynomial over Z, coefficient index = degree, no trailing zeros.
using UPolyZ = std::vector<Integer>;

namespace up {

void trim(UPolyP& a);
inline int degree(const UPolyP& a) { return static_cast<int>(a.size()) - 1; }
UPolyP add(const Zp& F, const UPolyP& a, const UPolyP& b);
UPolyP sub(const Zp& F, const UPolyP& a, const UPolyP& b);
UPolyP mul(const Zp& F, const UPolyP& a, const UPolyP& b);
UPolyP scale(const Zp& F, const UPolyP& a, std::uint64_t c);
void divmod(const Zp& F, const UPolyP& a, const UPolyP& b, UPolyP& q, UPolyP& r);
UPolyP rem(const Zp& F, const UPolyP& a, const UPolyP& b);
UPolyP quo(const Zp& F, const UPolyP& a, const UPolyP& b);
UPolyP monic(const Zp& F, const UPolyP& a);
UPolyP gcd(const Zp& F, UPolyP a, UPolyP b);
/// Returns monic g = gcd(a, b) and s, t with s*a + t*b = g.
UPolyP xgcd(const Zp& F, const UPolyP& a, const UPolyP& b, UPolyP& s, UPolyP& t);
std::uint64_t eval(const Zp& F, const UPolyP& a, std::uint64_t x);
UPolyP derivative(const Zp& F, const UPolyP& a);
UPolyP mulmod(const Zp& F, const UPolyP& a, const UPolyP& b, const UPolyP& m);
UPolyP powmod(const Zp& F, UPolyP base, const Integer& e, const UPolyP& m);
UPolyP reduce(const Zp& F, const UPolyP& a);  // no-op helper for symmetry
UPolyP from_z(const Zp& F, const UPolyZ& a);

}  // namespace up

namespace uz {

void trim(UPolyZ& a);
inline int degree(const UPolyZ& a) { return static_cast<int>(a.size()) - 1; }
UPolyZ add(const UPolyZ& a, const UPolyZ& b);
UPolyZ sub(const UPolyZ& a, const UPolyZ& b);
UPolyZ mul(const UPolyZ& a, const UPolyZ& b);
UPolyZ scale(const UPolyZ& a, const Integer& c);
/// Exact quotient a / b over Z; false if b does not divide a.
bool divide_exact(const UPolyZ& a, const UPolyZ& b, UPolyZ& q);
/// Pseudo-remainder style division over Q would leave Z; this is exact only.
Integer content(const UPolyZ& a);
UPolyZ primitive(const UPolyZ& a);  // positive leading coefficient
UPolyZ derivative(const UPolyZ& a);
Integer eval(const UPolyZ& a, const Integer& x);
/// Modular gcd over Z; result primitive with positive leading coefficient times
/// the gcd of the contents.
UPolyZ gcd(const UPolyZ& a, const UPolyZ& b);
Integer max_abs(const UPolyZ& a);
/// Symmetric CRT step: combine h (mod m) with c (mod p). Returns whether h changed.
bool crt_combine(UPolyZ& h, const Integer& m, const UPolyP& c, const Zp& F);

}  // namespace uz

/// Symmetric CRT lift of a single residue.
void crt_combine(Integer& h, const Integer& m, std::uint64_t c, const Zp& F);

}  // namespace ratlines::detail
