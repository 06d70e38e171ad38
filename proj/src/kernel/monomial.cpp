#include "ratlines/kernel/monomial.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace ratlines {

namespace {
constexpr unsigned kFieldMax = 0xFFFFu;
}

std::string_view var_name(Var v) {
  static constexpr std::array<std::string_view, kNumVars> names = {"t", "s", "w", "a",
                                                                   "b", "c", "d"};
  return names[index(v)];
}

Monomial Monomial::variable(Var v, unsigned exponent) {
  std::array<unsigned, kNumVars> e{};
  e[index(v)] = exponent;
  return from_exponents(e);
}

Monomial Monomial::from_exponents(const std::array<unsigned, kNumVars>& exps) {
  Key k = 0;
  unsigned total = 0;
  for (int i = 0; i < kNumVars; ++i) {
    if (exps[i] > kFieldMax) throw std::overflow_error("monomial exponent overflow");
    k |= static_cast<Key>(exps[i]) << (16 * i);
    total += exps[i];
  }
  if (total > kFieldMax) throw std::overflow_error("monomial degree overflow");
  k |= static_cast<Key>(total) << 112;
  return Monomial(k);
}

VarSet Monomial::support() const {
  VarSet s = 0;
  for (int i = 0; i < kNumVars; ++i)
    if (exponent(var_at(i)) != 0) s |= bit(var_at(i));
  return s;
}

std::array<unsigned, kNumVars> Monomial::exponents() const {
  std::array<unsigned, kNumVars> e{};
  for (int i = 0; i < kNumVars; ++i) e[i] = exponent(var_at(i));
  return e;
}

Monomial Monomial::with_exponent(Var v, unsigned e) const {
  auto exps = exponents();
  exps[index(v)] = e;
  return from_exponents(exps);
}

Monomial Monomial::operator*(Monomial other) const {
  if (degree() + other.degree() > kFieldMax) throw std::overflow_error("monomial degree overflow");
  // Fields cannot carry into each other: every field is bounded by the total degree.
  return Monomial(key_ + other.key_);
}

bool Monomial::divides(Monomial other) const {
  if (degree() > other.degree()) return false;
  for (int i = 0; i < kNumVars; ++i)
    if (exponent(var_at(i)) > other.exponent(var_at(i))) return false;
  return true;
}

Monomial Monomial::quotient_of(Monomial other) const {
  assert(divides(other));
  return Monomial(other.key_ - key_);
}

Monomial Monomial::gcd(Monomial x, Monomial y) {
  std::array<unsigned, kNumVars> e{};
  for (int i = 0; i < kNumVars; ++i)
    e[i] = std::min(x.exponent(var_at(i)), y.exponent(var_at(i)));
  return from_exponents(e);
}

}  // namespace ratlines
