#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string_view>

namespace ratlines {

/// Variables known to the kernel. The first three are the surface parameters and
/// the slope variable; a..d are the unknowns of the two-planes line system.
enum class Var : std::uint8_t { t = 0, s = 1, w = 2, a = 3, b = 4, c = 5, d = 6 };

inline constexpr int kNumVars = 7;

constexpr int index(Var v) { return static_cast<int>(v); }
constexpr Var var_at(int i) { return static_cast<Var>(i); }
std::string_view var_name(Var v);

/// Bitmask over Var.
using VarSet = std::uint8_t;
constexpr VarSet bit(Var v) { return static_cast<VarSet>(1u << index(v)); }

/// Packed exponent vector. Sixteen bits per variable plus the total degree in the
/// top sixteen bits, so comparing the packed keys is graded lexicographic order
/// with t < s < w < a < b < c < d.
class Monomial {
 public:
  using Key = unsigned __int128;

  constexpr Monomial() = default;

  static Monomial variable(Var v, unsigned exponent = 1);
  static Monomial from_exponents(const std::array<unsigned, kNumVars>& exps);

  unsigned exponent(Var v) const {
    return static_cast<unsigned>((key_ >> (16 * index(v))) & 0xFFFFu);
  }
  unsigned degree() const { return static_cast<unsigned>(key_ >> 112); }
  bool is_one() const { return key_ == 0; }
  VarSet support() const;

  std::array<unsigned, kNumVars> exponents() const;
  Monomial with_exponent(Var v, unsigned e) const;

  Monomial operator*(Monomial other) const;
  bool divides(Monomial other) const;
  /// Requires divides(other).
  Monomial quotient_of(Monomial other) const;
  static Monomial gcd(Monomial x, Monomial y);

  Key key() const { return key_; }
  friend constexpr bool operator==(Monomial, Monomial) = default;
  friend constexpr std::strong_ordering operator<=>(Monomial x, Monomial y) {
    return x.key_ <=> y.key_;
  }

 private:
  explicit constexpr Monomial(Key k) : key_(k) {}
  Key key_ = 0;
};

}  // namespace ratlines
