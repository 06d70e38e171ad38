#pragma once

// Conversions between sparse MPoly and dense univariate/bivariate integer forms.
// Internal to the kernel.

#include "modular.hpp"
#include "ratlines/kernel/mpoly.hpp"

namespace ratlines::detail {

/// Dense bivariate over Z: outer index = power of the main variable y,
/// inner UPolyZ in the other variable x.
using BiZ = std::vector<UPolyZ>;
using BiP = std::vector<UPolyP>;

/// f must have integer coefficients and depend on v only.
UPolyZ to_uz(const MPoly& f, Var v);
MPoly from_uz(const UPolyZ& a, Var v);

/// f must have integer coefficients and depend on x, y only.
BiZ to_biz(const MPoly& f, Var x, Var y);
MPoly from_biz(const BiZ& a, Var x, Var y);

BiP reduce(const Zp& F, const BiZ& a);
/// Evaluates the inner variable x at x0, giving a polynomial in y.
UPolyP eval_inner(const Zp& F, const BiP& a, std::uint64_t x0);

/// First variable in v's order present in mask, or nullopt-like -1.
int first_var(VarSet mask);
int var_count(VarSet mask);

}  // namespace ratlines::detail
