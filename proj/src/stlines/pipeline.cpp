#include <algorithm>

#include "ratlines/kernel/error.hpp"
#include "ratlines/kernel/factor.hpp"
#include "ratlines/stlines/stlines.hpp"
#include "witness.hpp"

namespace ratlines {

std::string_view to_string(RejectReason r) {
  switch (r) {
    case RejectReason::NotLine: return "NotLine";
    case RejectReason::Degenerate: return "Degenerate";
    case RejectReason::AtInfinity: return "AtInfinity";
  }
  return "?";
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Lines: return "Lines";
    case Status::Ruled: return "Ruled";
    case Status::Plane: return "Plane";
  }
  return "?";
}

bool LineWitness::is_real() const { return real_count() > 0; }

int LineWitness::real_count() const {
  return static_cast<int>(std::count_if(lines.begin(), lines.end(), [](const LineEmbedding& l) { return l.real; }));
}

int AlgorithmReport::line_count() const {
  int n = 0;
  for (const auto& w : lines) n += w.conjugate_count();
  return n;
}

int AlgorithmReport::real_line_count() const {
  int n = 0;
  for (const auto& w : lines) n += w.real_count();
  return n;
}

void check_deadline(const StlinesOptions& options) {
  if (options.deadline && std::chrono::steady_clock::now() > *options.deadline)
    throw Error(ErrorCode::Timeout, "deadline exceeded");
}

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void merge(AlgorithmReport& report, const MPoly& factor, ComponentVerdict verdict, unsigned digits) {
  if (!verdict.is_line()) {
    report.rejected.push_back({factor, *verdict.rejected});
    return;
  }
  for (auto& w : verdict.lines) {
    std::erase_if(w.lines, [&](const LineEmbedding& l) {
      for (const auto& prev : report.lines)
        for (const auto& p : prev.lines)
          if (detail::same_line(p, l, digits)) return true;
      return false;
    });
    if (!w.lines.empty()) report.lines.push_back(std::move(w));
  }
}

}  // namespace

AlgorithmReport run_stlines(const SurfaceParam& S, const StlinesOptions& options) {
  AlgorithmReport report;
  const auto start = std::chrono::steady_clock::now();
  FundamentalData fd(S);
  if (fd.is_plane()) {
    report.status = Status::Plane;
    return report;
  }
  check_deadline(options);
  const Branch branch = branch_of(fd);
  const auto asym = asymptotic_poly(fd);
  check_deadline(options);
  const auto geo = geodesic_poly(fd, branch);
  check_deadline(options);
  report.candidates = assemble_candidates(fd, asym, geo, branch);
  const CandidateSet& cand = *report.candidates;
  report.diagnostics.seconds_candidates = seconds_since(start);
  report.diagnostics.deg_xi = cand.xi.is_zero() ? -1 : cand.xi.total_degree();
  report.diagnostics.deg_mu = cand.mu.is_zero() ? -1 : cand.mu.total_degree();
  report.diagnostics.factor_count = static_cast<int>(cand.mu_factors.size());
  if (cand.ruled) {
    report.status = Status::Ruled;
    return report;
  }

  const auto checks_start = std::chrono::steady_clock::now();
  std::vector<MPoly> vertical_done;
  for (const auto& alpha : cand.mu_factors) {
    check_deadline(options);
    if (!alpha.depends_on(Var::s)) {
      vertical_done.push_back(alpha);
      merge(report, alpha, vertical_line_check(alpha, fd, options), options.digits);
    } else {
      merge(report, alpha, check_component(alpha, fd, options), options.digits);
    }
  }
  if (!cand.eta.is_constant()) {
    for (const auto& c : irreducible_factors(cand.eta)) {
      check_deadline(options);
      if (c.depends_on(Var::s) || std::find(vertical_done.begin(), vertical_done.end(), c) != vertical_done.end())
        continue;
      merge(report, c, vertical_line_check(c, fd, options), options.digits);
    }
  }
  report.diagnostics.seconds_checks = seconds_since(checks_start);
  return report;
}

}  // namespace ratlines
