#pragma once

// Truncated power series over a number field. Internal to stlines.

#include <vector>

#include "ratlines/kernel/algebraic.hpp"
#include "ratlines/kernel/mpoly.hpp"

namespace ratlines::detail {

using Series = std::vector<AlgNum>;

Series series_zero(const FieldPtr& K, std::size_t n);
Series series_mul(const Series& a, const Series& b, std::size_t n);
/// a[0] must be nonzero.
Series series_inverse(const Series& a, std::size_t n);
/// f(a + tau, s(tau)) mod tau^n for f in Q[t, s].
Series series_compose(const MPoly& f, const Rational& a, const Series& s, std::size_t n);
/// The branch s(tau) of alpha(a + tau, s) = 0 through s(0) = b, to order n.
/// Requires alpha_s(a, b) != 0.
Series branch_series(const MPoly& alpha, const Rational& a, const AlgNum& b, std::size_t n);
bool series_is_zero(const Series& a);

}  // namespace ratlines::detail
