#pragma once

#include <random>
#include <vector>

#include "ratlines/kernel/mpoly.hpp"

namespace ratlines::testing {

/// Random polynomial in the given variables with small integer coefficients.
inline MPoly random_poly(std::mt19937& rng, const std::vector<Var>& vars, unsigned max_deg, int terms,
                         int coeff_range = 5) {
  std::uniform_int_distribution<int> coeff(-coeff_range, coeff_range);
  std::uniform_int_distribution<unsigned> expo(0, max_deg);
  std::vector<MPoly::Term> out;
  for (int i = 0; i < terms; ++i) {
    std::array<unsigned, kNumVars> e{};
    unsigned budget = max_deg;
    for (Var v : vars) {
      unsigned x = std::min(budget, expo(rng));
      e[index(v)] = x;
      budget -= x;
    }
    int c = coeff(rng);
    if (c == 0) c = 1;
    out.push_back({Monomial::from_exponents(e), Rational(c)});
  }
  return MPoly::from_terms(std::move(out));
}

inline MPoly random_nonconstant(std::mt19937& rng, const std::vector<Var>& vars, unsigned max_deg, int terms) {
  while (true) {
    MPoly p = random_poly(rng, vars, max_deg, terms);
    if (!p.is_constant()) return p;
  }
}

}  // namespace ratlines::testing
