#pragma once

#include <vector>

#include "ratlines/kernel/mpoly.hpp"

namespace ratlines {

/// Dense univariate polynomial over Q, index = degree, no trailing zeros.
using QPoly = std::vector<Rational>;

namespace qp {

void trim(QPoly& a);
inline int degree(const QPoly& a) { return static_cast<int>(a.size()) - 1; }
QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly scale(const QPoly& a, const Rational& c);
void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r);
QPoly rem(const QPoly& a, const QPoly& b);
QPoly derivative(const QPoly& a);
QPoly monic(const QPoly& a);
/// Monic gcd and Bezout cofactors s*a + t*b = g.
QPoly xgcd(const QPoly& a, const QPoly& b, QPoly& s, QPoly& t);
Rational eval(const QPoly& a, const Rational& x);

/// v must be the only variable of f.
QPoly from_mpoly(const MPoly& f, Var v);
MPoly to_mpoly(const QPoly& a, Var v);

/// Number of distinct real roots (Sturm sequence).
int count_real_roots(const QPoly& a);

}  // namespace qp

}  // namespace ratlines
