#include <algorithm>

#include "ratlines/kernel/error.hpp"
#include "numeric.hpp"

namespace ratlines {

std::string_view to_string(SkipReason r) {
  switch (r) {
    case SkipReason::NonReal: return "NonReal";
    case SkipReason::NotCertifiable: return "NotCertifiable";
  }
  return "?";
}

bool VerificationResult::passed() const {
  if (numeric && !numeric->passed) return false;
  return !algebraic.ran || algebraic.passed;
}

namespace {

using detail::distance_to_line;

struct NumericLine {
  CVec3 point, direction;
  bool own;
};

CVec3 rounded(const std::array<Complex, 3>& v, mpfr_prec_t bits) {
  CVec3 out;
  for (int i = 0; i < 3; ++i) {
    out[i] = Complex(Real(bits), Real(bits));
    mpfr_set(out[i].re.raw(), v[i].re.raw(), MPFR_RNDN);
    mpfr_set(out[i].im.raw(), v[i].im.raw(), MPFR_RNDN);
  }
  return out;
}

NumericCheck numeric_check(const LineWitness& witness, const SurfaceParam& S, const VerifyOptions& options,
                           std::span<const LineWitness> siblings) {
  NumericSample sample = sample_component(witness.factor, S, options.samples, options.precision);
  const mpfr_prec_t bits = sample.points.empty() ? digits_to_bits(options.precision) : sample.points[0][0].precision();

  std::vector<NumericLine> lines;
  for (const auto& l : witness.lines) lines.push_back({rounded(l.point, bits), rounded(l.direction, bits), true});
  for (const auto& w : siblings) {
    if (!(w.factor == witness.factor) || &w == &witness) continue;
    bool same_class = w.field == witness.field && w.point == witness.point && w.direction == witness.direction;
    if (same_class) continue;
    for (const auto& l : w.lines) lines.push_back({rounded(l.point, bits), rounded(l.direction, bits), false});
  }

  std::vector<std::vector<CVec3>> clusters(lines.size());
  for (const auto& p : sample.points) {
    std::size_t best = 0;
    Real best_d(bits);
    for (std::size_t k = 0; k < lines.size(); ++k) {
      Real d = distance_to_line(p, lines[k].point, lines[k].direction);
      if (k == 0 || d < best_d) {
        best_d = d;
        best = k;
      }
    }
    clusters[best].push_back(p);
  }

  NumericCheck check;
  check.samples = static_cast<int>(sample.points.size());
  check.passed = true;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    if (!lines[k].own) continue;
    const auto& cl = clusters[k];
    if (cl.size() < 3) {
      check.passed = false;
      check.residual = std::max(check.residual, 1.0);
      continue;
    }
    Real diameter(bits);
    for (std::size_t i = 0; i < cl.size(); ++i)
      for (std::size_t j = i + 1; j < cl.size(); ++j) {
        Real n2(bits);
        for (int c = 0; c < 3; ++c) n2 += (cl[i][c] - cl[j][c]).norm2();
        Real d = n2.sqrt();
        if (d > diameter) diameter = d;
      }
    double residual = 1.0, deviation = 1.0;
    if (!diameter.is_zero()) {
      residual = collinearity_residual(cl).to_double();
      Real worst(bits);
      for (const auto& p : cl) {
        Real d = distance_to_line(p, lines[k].point, lines[k].direction);
        if (d > worst) worst = d;
      }
      deviation = (worst / diameter).to_double();
    }
    check.residual = std::max(check.residual, residual);
    check.deviation = std::max(check.deviation, deviation);
    if (!(residual < options.threshold) || !(deviation < options.threshold)) check.passed = false;
  }
  return check;
}

}  // namespace

VerificationResult verify_line(const LineWitness& witness, const SurfaceParam& S, const VerifyOptions& options,
                               std::span<const LineWitness> siblings) {
  VerificationResult result;
  if (options.numeric) result.numeric = numeric_check(witness, S, options, siblings);
  if (!options.algebraic) return result;
  if (!witness.is_real()) {
    result.algebraic.skipped = SkipReason::NonReal;
    return result;
  }
  if (witness.direction[0].is_zero()) {
    result.algebraic.skipped = SkipReason::NotCertifiable;
    return result;
  }
  const std::array<AlgNum, 3> point{witness.point[0], witness.point[1], witness.point[2]};
  const std::array<AlgNum, 3> direction{witness.direction[0], witness.direction[1], witness.direction[2]};
  result.algebraic.ran = true;
  result.algebraic.passed = two_planes_vanish(S, point, direction, !witness.factor.depends_on(Var::s));
  return result;
}

}  // namespace ratlines
