#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ratlines/geometry/surface.hpp"
#include "ratlines/kernel/bigfloat.hpp"
#include "ratlines/stlines/stlines.hpp"

namespace ratlines {

using CVec3 = std::array<Complex, 3>;

struct NumericSample {
  std::vector<std::array<Complex, 2>> params;
  std::vector<CVec3> points;
  unsigned precision_digits = 40;
};

/// Value of f at a complex point (t, s); other variables must be absent.
Complex eval_complex(const MPoly& f, const Complex& t, const Complex& s);

/// Images under x of every complex point of alpha = 0 above each given
/// parameter value. The value fixes t, or s when alpha does not involve s.
/// Values where alpha drops degree, repeats a root, or meets a denominator
/// of x are skipped.
NumericSample sample_component_at(const MPoly& alpha, const SurfaceParam& S, std::span<const Rational> values,
                                  unsigned precision);

/// Same as above at `count` admissible values near the origin. Throws
/// Error(InsufficientSamples) when fewer are found within 10 * count tries.
NumericSample sample_component(const MPoly& alpha, const SurfaceParam& S, int count, unsigned precision);

/// Largest distance of a point to the complex line through the two most
/// distant sample points, divided by that distance. Throws
/// Error(DegenerateSample) when all points coincide or fewer than 3 are given.
Real collinearity_residual(std::span<const CVec3> points);
inline Real collinearity_residual(const NumericSample& sample) { return collinearity_residual(sample.points); }

/// Coefficients in t of P = Res_s(num(y - a x - b), num(z - c x - d)), as
/// polynomials in the unknowns a, b, c, d.
struct TwoPlanesSystem {
  MPoly P;
  std::vector<MPoly> equations;
  int P_degree = -1;
};

TwoPlanesSystem two_planes_system(const SurfaceParam& S);

enum class SkipReason { NonReal, NotCertifiable };
std::string_view to_string(SkipReason r);

struct NumericCheck {
  bool passed = false;
  /// Largest residual over the witness lines.
  double residual = 0;
  /// Largest gap between a witness line and the line fitted to its samples.
  double deviation = 0;
  int samples = 0;
};

struct AlgebraicCheck {
  bool ran = false;
  bool passed = false;
  std::optional<SkipReason> skipped;
};

struct VerifyOptions {
  unsigned precision = 40;
  int samples = 20;
  double threshold = 1e-25;
  bool numeric = true;
  bool algebraic = true;
};

struct VerificationResult {
  std::optional<NumericCheck> numeric;
  AlgebraicCheck algebraic;
  bool passed() const;
};

/// Numeric sampling of the witness's factor, and for real lines not parallel
/// to the yz-plane, exact vanishing of the two-planes resultant at the
/// witness's (a, b, c, d). Samples are assigned to the nearest line among the
/// witness and its siblings (other witnesses of the same factor); the numeric
/// check covers the clusters of the witness's own lines.
VerificationResult verify_line(const LineWitness& witness, const SurfaceParam& S, const VerifyOptions& options = {},
                               std::span<const LineWitness> siblings = {});

/// Whether the two-planes resultant vanishes for y = a x + b, z = c x + d with
/// a, b, c, d in K (K-valued point and direction, direction x-coordinate 1).
bool two_planes_vanish(const SurfaceParam& S, const std::array<AlgNum, 3>& point,
                       const std::array<AlgNum, 3>& direction, bool eliminate_t);

}  // namespace ratlines
