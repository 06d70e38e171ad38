#pragma once

// Complex 3-space helpers shared by the oracle sources.

#include "ratlines/oracle/oracle.hpp"

namespace ratlines::detail {

/// Distance from p to the complex line base + C dir (Hermitian projection).
Real distance_to_line(const CVec3& p, const CVec3& base, const CVec3& dir);

}  // namespace ratlines::detail
