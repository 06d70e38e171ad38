#pragma once

#include <utility>
#include <vector>

#include "ratlines/kernel/mpoly.hpp"

namespace ratlines {

using FactorList = std::vector<std::pair<MPoly, unsigned>>;

/// Irreducible factorization over Q of a polynomial in at most two variables.
/// Factors are primitive over Z with positive leading coefficient, listed in
/// canonical order. Throws Error(ZeroPolynomial) for f = 0 and
/// Error(InvalidArgument) for more than two variables.
FactorList factor_over_Q(const MPoly& f);

/// Distinct irreducible factors of f (multiplicities dropped).
std::vector<MPoly> irreducible_factors(const MPoly& f);

/// Deterministic total order used for reporting factors.
bool canonical_less(const MPoly& a, const MPoly& b);

}  // namespace ratlines
