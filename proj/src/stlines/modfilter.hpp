#pragma once

// Line test for a branch reduced modulo a degree-one prime of the field.
// Internal to stlines.

#include <array>
#include <cstddef>

#include "ratlines/kernel/mpoly.hpp"
#include "ratlines/kernel/qpoly.hpp"

namespace ratlines::detail {

/// Curve data shared by the exact and modular line tests: x = X / D and the
/// tangent field W of alpha = 0.
struct LineForms {
  std::array<MPoly, 3> X;
  MPoly D;
  int degree = 0;
};

/// True when, for some prime P of K = Q[b]/(mu) of degree one, the branch of
/// alpha(a + tau, s) = 0 through s = b does not map into the tangent line at
/// x(a, b) modulo (P, tau^order). Since the branch, the point and the tangent
/// are P-integral there, this proves that the branch is not a line. False means
/// that no prime tried was conclusive. mu must be an irreducible factor of
/// alpha(a, s), which must be squarefree of full degree in s.
bool modular_rejects(const MPoly& alpha, const Rational& a, const QPoly& mu, const LineForms& forms,
                     const std::array<MPoly, 3>& W, std::size_t order);

}  // namespace ratlines::detail
