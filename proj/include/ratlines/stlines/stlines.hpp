#pragma once

#include <array>
#include <chrono>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ratlines/geometry/surface.hpp"
#include "ratlines/kernel/algebraic.hpp"

namespace ratlines {

/// The variable standing for ds/dt.
inline constexpr Var kOmega = Var::w;

enum class Branch { General, StarDegenerate };

struct AsymptoticPoly {
  MPoly Mtilde, M;
};

struct GeodesicPoly {
  RatFunc A, B;
  MPoly Ntilde, N;
};

struct DeltaPolys {
  /// As defined, before square-freeing. Zero marks an identically vanishing delta.
  std::array<MPoly, 4> raw;
  /// Square-free parts (zero stays zero).
  std::array<MPoly, 4> squarefree;
};

struct CandidateSet {
  Branch branch = Branch::General;
  MPoly Mtilde, M, Ntilde, N;
  MPoly xi_tilde, xi;
  DeltaPolys delta;
  /// Distinct irreducible factors of mu in canonical order; empty when mu is 0.
  std::vector<MPoly> mu_factors;
  MPoly mu;
  /// gcd of num(g*) and the numerator of the unscaled symbol Gamma^1_22.
  MPoly eta;
  bool ruled = false;
};

/// Throws Error(PlaneInput) for a plane.
AsymptoticPoly asymptotic_poly(const FundamentalData& fd);
/// Throws Error(DegenerateBranchMismatch) when the branch does not fit the data.
GeodesicPoly geodesic_poly(const FundamentalData& fd, Branch branch);
Branch branch_of(const FundamentalData& fd);
/// Returns (xi_tilde, xi).
std::pair<MPoly, MPoly> eliminate_omega(const MPoly& M, const MPoly& N, std::span<const MPoly> denominators);
DeltaPolys delta_polys(const FundamentalData& fd, const MPoly& Mtilde, const MPoly& Ntilde, const RatFunc& A, Branch branch);
/// Every denominator that the elimination step strips from the resultant.
std::vector<MPoly> pipeline_denominators(const FundamentalData& fd, const GeodesicPoly& geo);
CandidateSet assemble_candidates(const FundamentalData& fd, const AsymptoticPoly& asym, const GeodesicPoly& geo,
                                 Branch branch);

/// One complex line of a witness class.
struct LineEmbedding {
  EmbeddingPtr embedding;
  std::array<Complex, 3> point, direction;
  bool real = false;
};

/// Exact description of a class of conjugate lines: point and direction are
/// in the field of the witness, with the first nonzero direction coordinate 1
/// and the point's matching coordinate 0.
struct LineWitness {
  MPoly factor;
  FieldPtr field;
  std::vector<AlgNum> point, direction;
  /// The component is a curve t = c.
  bool vertical = false;
  /// Parameter value t = a used by the check (unused for vertical lines).
  Rational a;
  /// Distinct complex lines represented by the class.
  std::vector<LineEmbedding> lines;

  bool is_real() const;
  int conjugate_count() const { return static_cast<int>(lines.size()); }
  int real_count() const;
};

enum class RejectReason { NotLine, Degenerate, AtInfinity };
std::string_view to_string(RejectReason r);

struct Rejection {
  MPoly factor;
  RejectReason reason;
};

struct ComponentVerdict {
  std::vector<LineWitness> lines;
  std::optional<RejectReason> rejected;
  bool is_line() const { return !rejected.has_value(); }
};

struct StlinesOptions {
  int max_retries = 50;
  /// Digits for the numeric images of witness lines.
  unsigned digits = 50;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// Tangent field (x_t a_s - x_s a_t, ...) of the curve alpha = 0, scaled to a
/// polynomial vector.
std::array<MPoly, 3> tangent_field(const FundamentalData& fd, const MPoly& alpha);

/// Line test for an irreducible alpha that depends on s. Throws
/// Error(RetryBudgetExhausted) when no admissible a is found.
ComponentVerdict check_component(const MPoly& alpha, const FundamentalData& fd, const StlinesOptions& options = {});
/// Same test with the first admissible a taken from `start` onward in the
/// order 0, 1, -1, 2, -2, ...
ComponentVerdict check_component_from(const MPoly& alpha, const FundamentalData& fd, int start,
                                      const StlinesOptions& options = {});
/// Line test for the curves x(c, s) with c a root of the irreducible c_factor(t).
ComponentVerdict vertical_line_check(const MPoly& c_factor, const FundamentalData& fd,
                                     const StlinesOptions& options = {});

enum class Status { Lines, Ruled, Plane };
std::string_view to_string(Status s);

struct Diagnostics {
  double seconds_candidates = 0, seconds_checks = 0;
  int deg_xi = -1, deg_mu = -1, factor_count = 0;
};

struct AlgorithmReport {
  Status status = Status::Lines;
  std::optional<CandidateSet> candidates;
  std::vector<LineWitness> lines;
  std::vector<Rejection> rejected;
  Diagnostics diagnostics;

  int line_count() const;
  int real_line_count() const;
};

AlgorithmReport run_stlines(const SurfaceParam& S, const StlinesOptions& options = {});

/// Throws Error(Timeout) once the deadline has passed.
void check_deadline(const StlinesOptions& options);

}  // namespace ratlines
