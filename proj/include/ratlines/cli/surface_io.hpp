#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ratlines/geometry/surface.hpp"

namespace ratlines {

/// Reads the `key: value` surface format (name, x.num, x.den, y.num, ...).
/// Omitted denominators default to 1; '#' starts a comment. Throws
/// Error(SyntaxError) with the offending line, Error(ZeroDenominator).
SurfaceParam parse_surface(const std::string& text);
std::string print_surface(const SurfaceParam& S);

/// t := 2t/(t^2+s), s := 3s/(t^2+s).
SurfaceParam star_reparam(const SurfaceParam& S);

/// Largest degree in t and in s over all numerators and denominators.
std::pair<int, int> bidegree(const SurfaceParam& S);

struct CorpusSurface {
  std::string name;
  std::string text;
};

struct CorpusRow {
  std::string label;  // e.g. "S1*"
  std::string surface;
  bool star;
  int expected_lines;
};

const std::vector<CorpusSurface>& corpus();
/// Rows with published line counts.
const std::vector<CorpusRow>& corpus_table();
/// Accepts "S1" or "S1*"; throws Error(InvalidArgument) for unknown names.
SurfaceParam corpus_surface(const std::string& label);

}  // namespace ratlines
