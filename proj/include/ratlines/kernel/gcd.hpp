#pragma once

#include <utility>
#include <vector>

#include "ratlines/kernel/mpoly.hpp"

namespace ratlines {

/// Greatest common divisor, primitive over Z with positive leading coefficient.
/// gcd(f, 0) is f normalized; gcd(0, 0) is 0.
MPoly poly_gcd(const MPoly& f, const MPoly& g);

/// Exact f / g; throws Error(InvalidArgument) when g does not divide f.
MPoly exact_quotient(const MPoly& f, const MPoly& g);

struct ContentPrimitive {
  MPoly content;
  MPoly primitive;
};

/// content * primitive == f, with primitive normalized as in poly_gcd and the
/// content free of v. Zero input gives (0, 0).
ContentPrimitive content_primitive(const MPoly& f, Var v);

/// Product of the distinct irreducible factors of f, normalized.
/// Throws Error(ZeroPolynomial) for f = 0.
MPoly squarefree_part(const MPoly& f);

/// Pairwise coprime squarefree (factor, multiplicity) list, multiplicities
/// strictly increasing, whose product is f up to a rational constant.
/// Constant f gives an empty list.
std::vector<std::pair<MPoly, unsigned>> squarefree_decomposition(const MPoly& f);

/// Removes from f every irreducible factor shared with g, to full multiplicity.
MPoly remove_common_factors(const MPoly& f, const MPoly& g);

}  // namespace ratlines
