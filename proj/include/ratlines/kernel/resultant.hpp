#pragma once

#include "ratlines/kernel/mpoly.hpp"

namespace ratlines {

/// Res_v(f, g) by the subresultant PRS. Normalized to the Sylvester determinant
/// with the rows of f first. Throws Error(NoEliminationVariable) when neither
/// operand depends on v.
MPoly resultant_wrt(const MPoly& f, const MPoly& g, Var v);

/// Same quantity as the determinant of the Sylvester matrix (Bareiss
/// elimination). Slow; kept as an independent reference.
MPoly sylvester_resultant(const MPoly& f, const MPoly& g, Var v);

}  // namespace ratlines
