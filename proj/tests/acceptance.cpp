// Acceptance run: one PASS/FAIL line per criterion. Criteria listed with
// --known-failures are reported as failing but do not change the exit status.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kernel_props.hpp"
#include "line_sets.hpp"
#include "ratlines/cli/surface_io.hpp"
#include "ratlines/kernel/error.hpp"
#include "ratlines/kernel/parse.hpp"
#include "ratlines/oracle/oracle.hpp"
#include "ratlines/stlines/stlines.hpp"

using namespace ratlines;
using namespace ratlines::testing;
using Clock = std::chrono::steady_clock;

namespace {

MPoly P(const std::string& s) { return parse_poly(s); }

SurfaceParam surface(const std::string& x, const std::string& y, const std::string& z) {
  SurfaceParam S;
  S.x = {RatFunc(P(x)), RatFunc(P(y)), RatFunc(P(z))};
  return S;
}

bool same_up_to_constant(const MPoly& a, const MPoly& b) { return a.primitive_integer() == b.primitive_integer(); }

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool passed = true;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& what) { notes.push_back(what); }
};

struct Run {
  SurfaceParam surface;
  std::optional<AlgorithmReport> report;
  std::string error;
  double seconds = 0;
};

// Reports shared between the count criteria and the oracle criterion.
std::map<std::string, Run> g_runs;

const Run& run_corpus(const std::string& label, double budget) {
  if (auto it = g_runs.find(label); it != g_runs.end()) return it->second;
  Run r;
  r.surface = corpus_surface(label);
  StlinesOptions o;
  o.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(budget));
  const auto t0 = Clock::now();
  try {
    r.report = run_stlines(r.surface, o);
  } catch (const Error& e) {
    r.error = e.what();
  }
  r.seconds = seconds_since(t0);
  return g_runs.emplace(label, std::move(r)).first->second;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

Outcome enneper_pipeline() {
  Outcome out;
  const auto t0 = Clock::now();
  const Run& r = run_corpus("S1", 10);
  const double seconds = seconds_since(t0);
  out.expect(r.report.has_value(), "pipeline finished: " + r.error);
  if (!r.report) return out;
  const AlgorithmReport& rep = *r.report;
  if (!rep.candidates) {
    out.expect(false, "candidate data present");
    return out;
  }
  const CandidateSet& c = *rep.candidates;
  out.expect(same_up_to_constant(c.M, P("w^2 - 1")), "M = w^2 - 1, got " + c.M.to_string());
  out.expect(same_up_to_constant(c.N, P("2*(w^2 + 1)*(-t*w + s)")),
             "N~ = 2(w^2+1)(-t w + s) up to content, got primitive part " + c.N.to_string());
  out.expect(same_up_to_constant(c.xi, P("16*(-t + s)*(t + s)")), "xi = 16(-t+s)(t+s), got " + c.xi.to_string());
  out.expect(same_up_to_constant(c.mu, P("(t + s)*(t - s)*(s^2 + t^2 + 1)")), "mu, got " + c.mu.to_string());
  out.expect(c.eta.is_constant() && !c.eta.is_zero(), "eta constant, got " + c.eta.to_string());
  out.expect(rep.status == Status::Lines, "status Lines");
  const std::set<std::string> expected = {line_key(canonical_line({0, 0, 0}, {1, 1, 0})),
                                          line_key(canonical_line({0, 0, 0}, {1, -1, 0}))};
  out.expect(rep.line_count() == 2 && rep.real_line_count() == 2, "exactly 2 real lines");
  out.expect(rational_line_set(rep) == expected, "lines through the origin along (1,1,0) and (1,-1,0)");
  bool rejected = false;
  for (const auto& rj : rep.rejected)
    rejected = rejected || (same_up_to_constant(rj.factor, P("s^2 + t^2 + 1")) && rj.reason == RejectReason::NotLine);
  out.expect(rejected, "s^2 + t^2 + 1 rejected as NotLine");
  out.expect(seconds < 10, "runtime < 10 s");
  out.note("runtime " + fmt(seconds) + " s");
  return out;
}

Outcome clebsch_count() {
  Outcome out;
  const Run& r = run_corpus("S2*", 600);
  out.expect(r.report.has_value(), "finished within 600 s: " + r.error);
  if (!r.report) return out;
  const int n = r.report->line_count();
  out.expect(n == 18, "18 line classes, got " + std::to_string(n));
  out.expect(r.report->real_line_count() == n, "all lines real");
  out.note("S2* lines " + std::to_string(n) + " (real " + std::to_string(r.report->real_line_count()) + "), " +
           fmt(r.seconds) + " s");
  return out;
}

Outcome table_counts() {
  Outcome out;
  const std::vector<std::pair<std::string, int>> rows = {
      {"S1*", 2}, {"S4*", 1}, {"S7*", 1}, {"S8*", 0},  {"S9*", 0},  {"S10", 0}, {"S11*", 0}, {"S13", 1},
      {"S14", 2}, {"S15*", 2}, {"S17", 0}, {"S18", 0}, {"S19", 0}, {"S20", 2}, {"S21", 1},  {"S22", 0}};
  for (const auto& [label, expected] : rows) {
    const Run& r = run_corpus(label, 600);
    if (!r.report) {
      out.expect(false, label + ": " + r.error);
      continue;
    }
    const int n = r.report->line_count();
    out.expect(n == expected, label + " expected " + std::to_string(expected) + ", got " + std::to_string(n));
    out.note(label + " " + std::to_string(n) + " lines, " + fmt(r.seconds) + " s");
  }
  return out;
}

Outcome ruledness() {
  Outcome out;
  out.expect(run_stlines(surface("t", "s", "t*s")).status == Status::Ruled, "(t,s,ts) Ruled");
  out.expect(run_stlines(surface("t", "t^2", "s")).status == Status::Ruled, "(t,t^2,s) Ruled");
  out.expect(run_stlines(corpus_surface("S1")).status == Status::Lines, "Enneper not ruled");
  return out;
}

Outcome planes() {
  Outcome out;
  for (const auto& S : {surface("t", "s", "0"), surface("t + s", "t - s", "2*t")}) {
    const FundamentalData fd(S);
    out.expect(fd.is_plane(), "e* = f* = g* = 0");
    out.expect(run_stlines(S).status == Status::Plane, "status Plane");
  }
  return out;
}

Outcome special_curve() {
  Outcome out;
  const SurfaceParam S = surface("1/2*t*(s^3 + 3*s) + 1/2*s^2", "t^2", "t + s");
  const AlgorithmReport rep = run_stlines(S);
  const MPoly alpha = P("s^2 + 1");
  out.expect(rep.candidates.has_value(), "candidates present");
  if (!rep.candidates) return out;
  const auto& f = rep.candidates->mu_factors;
  out.expect(std::find(f.begin(), f.end(), alpha) != f.end(), "s^2 + 1 among the candidate factors");
  out.expect(rep.candidates->delta.squarefree[3].divisible_by(alpha), "s^2 + 1 divides delta4");
  bool not_line = false;
  for (const auto& rj : rep.rejected) not_line = not_line || (rj.factor == alpha && rj.reason == RejectReason::NotLine);
  out.expect(not_line, "s^2 + 1 classified NotLine");
  const double residual = collinearity_residual(sample_component(alpha, S, 20, 40)).to_double();
  out.expect(residual > 1e-3, "numeric residual > 1e-3");
  out.note("residual on s^2 + 1: " + sci(residual));
  return out;
}

Outcome oracle_concordance() {
  Outcome out;
  int numeric = 0, exact = 0, skipped = 0;
  double worst = 0;
  for (const auto& label : {"S1", "S2*", "S1*", "S4*", "S7*", "S13", "S14", "S15*", "S20", "S21"}) {
    const Run& r = run_corpus(label, 600);
    if (!r.report) {
      out.expect(false, std::string(label) + ": no report");
      continue;
    }
    VerifyOptions vo;
    vo.precision = 40;
    vo.samples = 20;
    vo.threshold = 1e-25;
    for (const auto& w : r.report->lines) {
      const VerificationResult v = verify_line(w, r.surface, vo, r.report->lines);
      const std::string who = std::string(label) + " factor " + w.factor.to_string();
      out.expect(v.numeric && v.numeric->passed, who + " numeric");
      if (v.numeric) worst = std::max(worst, v.numeric->residual);
      ++numeric;
      const bool yz_parallel = w.direction[0].is_zero();
      if (w.is_real() && !yz_parallel) {
        out.expect(v.algebraic.ran && v.algebraic.passed, who + " two-planes system");
        ++exact;
      } else {
        ++skipped;
      }
    }
  }
  out.note(std::to_string(numeric) + " classes numerically checked (worst residual " + sci(worst) + "), " +
           std::to_string(exact) + " certified exactly, " + std::to_string(skipped) + " not applicable");
  return out;
}

Outcome kernel_properties() {
  Outcome out;
  const std::pair<const char*, PropertyRun> runs[] = {{"gcd", gcd_reconstruction(500)},
                                                      {"content", content_primitive_reconstruction(500)},
                                                      {"factorization", factorization_reconstruction(500)},
                                                      {"resultant", resultant_common_factor(500)}};
  for (const auto& [name, run] : runs) {
    out.expect(run.instances == 500 && run.failures == 0, std::string(name) + ": " + run.first_failure);
    out.note(std::string(name) + " " + std::to_string(run.instances) + " instances, " + std::to_string(run.failures) +
             " failures");
  }
  return out;
}

Outcome invariance() {
  Outcome out;
  const SurfaceParam S = corpus_surface("S1");
  const AlgorithmReport base = run_stlines(S);
  const auto lines = rational_line_set(base);
  const auto moved_param = rational_line_set(run_stlines(affine_reparam(S)));
  out.expect(lines && moved_param && *lines == *moved_param, "t -> 2t+1, s -> 3s-2 keeps the line set");
  const RigidMotion m;
  const auto moved = rational_line_set(run_stlines(m.apply(S)));
  out.expect(moved && *moved == m.apply(base), "rigid motion maps lines to lines");
  return out;
}

std::set<int> parse_list(const std::string& s) {
  std::set<int> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.insert(std::stoi(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> known;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg.rfind("--known-failures=", 0) == 0) known = parse_list(arg.substr(17));
  }

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Enneper pipeline", enneper_pipeline},
      {"Clebsch S2* count", clebsch_count},
      {"published counts", table_counts},
      {"ruledness detection", ruledness},
      {"plane rejection", planes},
      {"special curve rejection", special_curve},
      {"oracle concordance", oracle_concordance},
      {"kernel property suite", kernel_properties},
      {"invariance suite", invariance},
  };

  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i + 1);
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.expect(false, e.what());
    }
    const bool listed = known.count(id) > 0;
    std::printf("criterion %d %s  %s (%s s)%s\n", id, o.passed ? "PASS" : "FAIL", criteria[i].first.c_str(),
                fmt(seconds_since(t0)).c_str(), !o.passed && listed ? "  [known]" : "");
    for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
    std::fflush(stdout);
    if (!o.passed && !listed) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}
