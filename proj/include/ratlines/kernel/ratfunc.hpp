#pragma once

#include <array>
#include <optional>
#include <string>

#include "ratlines/kernel/mpoly.hpp"

namespace ratlines {

/// Reduced quotient num/den. den is primitive over Z with positive leading
/// coefficient; zero is 0/1.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const MPoly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(long c) : RatFunc(MPoly(c)) {}         // NOLINT(google-explicit-constructor)
  /// Throws Error(ZeroDenominator) for den = 0.
  RatFunc(const MPoly& num, const MPoly& den);

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  VarSet variables() const { return static_cast<VarSet>(num_.variables() | den_.variables()); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }

  RatFunc derivative(Var v) const;
  /// nullopt when the denominator vanishes at the point.
  std::optional<Rational> evaluate_all(const std::array<Rational, kNumVars>& point) const;

  std::string to_string() const;

 private:
  MPoly num_;
  MPoly den_;
};

/// Simultaneous substitution v -> map[v] for every v with a value.
/// Throws Error(IdenticallyZeroDenominator) when the composed denominator is 0.
RatFunc substitute_rational(const RatFunc& f, const std::array<std::optional<RatFunc>, kNumVars>& map);

}  // namespace ratlines
