#pragma once

#include <vector>

#include "ratlines/kernel/bigfloat.hpp"
#include "ratlines/kernel/qpoly.hpp"

namespace ratlines {

/// Approximation z of a root and a radius r such that the disk |x - z| <= r
/// contains exactly one root of the polynomial.
struct RootDisk {
  Complex z;
  Real radius;
  bool real = false;
};

/// All roots of a squarefree polynomial of positive degree, at least `digits`
/// correct decimal digits, with pairwise disjoint inclusion disks. Real roots
/// are flagged (Sturm count) and carry a zero imaginary part.
std::vector<RootDisk> isolate_roots(const QPoly& p, unsigned digits);

/// Newton refinement of an isolated root to the requested precision.
Complex refine_root(const QPoly& p, const Complex& start, unsigned digits);

}  // namespace ratlines
