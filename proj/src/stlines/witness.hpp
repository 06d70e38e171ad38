#pragma once

// Construction and comparison of line witnesses. Internal to stlines.

#include <array>
#include <vector>

#include "ratlines/stlines/stlines.hpp"

namespace ratlines::detail {

/// Normalizes (point, direction) and evaluates every embedding, keeping one
/// entry per distinct complex line. direction must be nonzero.
LineWitness make_witness(const MPoly& factor, const FieldPtr& K, std::array<AlgNum, 3> point,
                         std::array<AlgNum, 3> direction, const std::vector<EmbeddingPtr>& embeddings, bool vertical,
                         const Rational& a, unsigned digits);

bool same_line(const LineEmbedding& x, const LineEmbedding& y, unsigned digits);

}  // namespace ratlines::detail
