#pragma once

// Internal factorization routines shared by the kernel.

#include <vector>

#include "dense.hpp"

namespace ratlines::detail {

/// Distinct monic irreducible factors of a squarefree monic f over F_p, p odd.
std::vector<UPolyP> factor_mod_p(const Zp& F, const UPolyP& f);

/// Irreducible factors over Z of a primitive squarefree f of degree >= 1 with
/// positive leading coefficient. Each factor primitive with positive leading coefficient.
std::vector<UPolyZ> factor_squarefree_uz(const UPolyZ& f);

/// Irreducible factors over Z of a squarefree f in exactly the two variables
/// x, y, primitive with respect to each of them.
/// Throws Error(UnluckyEvaluations) after the retry budget.
std::vector<MPoly> factor_squarefree_bivariate(const MPoly& f, Var x, Var y);

/// Multi-factor Bezout cofactors: s_i with sum s_i * prod_{l != i} u_l = 1 over F_p.
std::vector<UPolyP> bezout_cofactors(const Zp& F, const std::vector<UPolyP>& u);

}  // namespace ratlines::detail
