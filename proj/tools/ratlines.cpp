#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "ratlines/cli/report.hpp"
#include "ratlines/cli/surface_io.hpp"
#include "ratlines/kernel/error.hpp"

using namespace ratlines;
using Clock = std::chrono::steady_clock;

namespace {

struct ComputeArgs {
  std::string input;
  bool real_only = false;
  std::string format = "text";
  std::string verify = "numeric";
  unsigned precision = 40;
  int samples = 20;
  int max_retries = 50;
  bool star = false;
  double timeout = 0;
};

// A path, a corpus label such as S2 or S2*, or "enneper" for S1.
SurfaceParam load_surface(const std::string& input) {
  if (std::filesystem::exists(input)) {
    std::ifstream in(input);
    std::stringstream text;
    text << in.rdbuf();
    return parse_surface(text.str());
  }
  if (input == "enneper") return corpus_surface("S1");
  return corpus_surface(input);
}

// Backstop for computations that do not reach a cooperative deadline check.
void arm_watchdog(double seconds) {
  std::thread([seconds] {
    std::this_thread::sleep_for(std::chrono::duration<double>(seconds * 1.25 + 5));
    std::fprintf(stderr, "error: Timeout: computation exceeded %.1f s\n", seconds);
    std::fflush(stderr);
    std::quick_exit(exit_code(ErrorCode::Timeout));
  }).detach();
}

int cmd_compute(const ComputeArgs& args) {
  SurfaceParam S = load_surface(args.input);
  if (args.star) S = star_reparam(S);

  StlinesOptions options;
  options.max_retries = args.max_retries;
  if (args.timeout > 0) {
    options.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                          std::chrono::duration<double>(args.timeout));
    arm_watchdog(args.timeout);
  }
  ReportOptions ro;
  ro.verify = parse_verify_mode(args.verify);
  ro.real_only = args.real_only;
  ro.oracle.precision = args.precision;
  ro.oracle.samples = args.samples;

  const auto t0 = Clock::now();
  const AlgorithmReport report = run_stlines(S, options);
  const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  const ReportDocument doc = make_report(S, report, ro, seconds);
  if (args.format == "json") std::cout << to_json(doc) << "\n";
  else std::cout << to_text(doc);
  return exit_code(report.status);
}

int cmd_corpus_list() {
  std::printf("%-6s %-9s %s\n", "name", "bidegree", "published counts");
  for (const auto& c : corpus()) {
    const auto [dt, ds] = bidegree(parse_surface(c.text));
    std::string counts;
    for (const auto& row : corpus_table())
      if (row.surface == c.name) counts += (counts.empty() ? "" : ", ") + row.label + " -> " + std::to_string(row.expected_lines);
    const std::string bideg = "(" + std::to_string(dt) + "," + std::to_string(ds) + ")";
    std::printf("%-6s %-9s %s\n", c.name.c_str(), bideg.c_str(), counts.c_str());
  }
  return 0;
}

int cmd_corpus_run(const std::vector<std::string>& requested, double timeout, const std::string& verify) {
  std::vector<std::pair<std::string, int>> rows;
  if (requested.empty()) {
    for (const auto& row : corpus_table()) rows.emplace_back(row.label, row.expected_lines);
  } else {
    for (const auto& label : requested) {
      int expected = -1;
      for (const auto& row : corpus_table())
        if (row.label == label) expected = row.expected_lines;
      rows.emplace_back(label, expected);
    }
  }
  ReportOptions ro;
  ro.verify = parse_verify_mode(verify);
  int mismatches = 0;
  std::printf("%-6s %-9s %-7s %5s %5s %9s %10s  %s\n", "label", "bidegree", "status", "n", "real", "expected", "seconds",
              "verification");
  for (const auto& [label, expected] : rows) {
    const SurfaceParam S = corpus_surface(label);
    const auto [dt, ds] = bidegree(S);
    const std::string bideg = "(" + std::to_string(dt) + "," + std::to_string(ds) + ")";
    StlinesOptions options;
    if (timeout > 0)
      options.deadline =
          Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(timeout));
    const auto t0 = Clock::now();
    try {
      const AlgorithmReport report = run_stlines(S, options);
      const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
      const ReportDocument doc = make_report(S, report, ro, seconds);
      int failed = 0;
      for (const auto& l : doc.lines)
        if (l.verification && (l.verification->numeric == "fail" || l.verification->exact == "fail")) ++failed;
      const std::string check = ro.verify == VerifyMode::None ? "off" : failed ? std::to_string(failed) + " failed" : "ok";
      const std::string exp = expected < 0 ? "-" : std::to_string(expected);
      if (expected >= 0 && expected != doc.line_count) ++mismatches;
      std::printf("%-6s %-9s %-7s %5d %5d %9s %10.2f  %s%s\n", label.c_str(), bideg.c_str(), doc.status.c_str(),
                  doc.line_count, doc.real_line_count, exp.c_str(), doc.timings.total, check.c_str(),
                  expected >= 0 && expected != doc.line_count ? "  MISMATCH" : "");
    } catch (const Error& e) {
      ++mismatches;
      std::printf("%-6s %-9s %-7s %5s %5s %9s %10.2f  %s\n", label.c_str(), bideg.c_str(), "error", "-", "-",
                  expected < 0 ? "-" : std::to_string(expected).c_str(),
                  std::chrono::duration<double>(Clock::now() - t0).count(), e.what());
    }
    std::fflush(stdout);
  }
  return mismatches ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Straight lines on rationally parameterized surfaces"};
  app.require_subcommand(1);

  ComputeArgs args;
  auto* compute = app.add_subcommand("compute", "Find the lines of a surface");
  compute->add_option("file", args.input, "Surface file, corpus label (S1, S2*, ...) or `enneper`")->required();
  compute->add_flag("--real-only", args.real_only, "Report real lines only");
  compute->add_option("--format", args.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  compute->add_option("--verify", args.verify, "Oracle checks on every line")
      ->check(CLI::IsMember({"none", "numeric", "exact", "both"}))
      ->capture_default_str();
  compute->add_option("--precision", args.precision, "Digits for numeric verification")->capture_default_str();
  compute->add_option("--samples", args.samples, "Sample points for numeric verification")->capture_default_str();
  compute->add_option("--max-retries", args.max_retries, "Attempts to find an admissible parameter value")
      ->capture_default_str();
  compute->add_flag("--star", args.star, "Apply t := 2t/(t^2+s), s := 3s/(t^2+s) first");
  compute->add_option("--timeout", args.timeout, "Wall-clock limit in seconds");

  auto* corpus_cmd = app.add_subcommand("corpus", "Bundled example surfaces");
  corpus_cmd->require_subcommand(1);
  auto* list = corpus_cmd->add_subcommand("list", "List the bundled surfaces");
  std::vector<std::string> labels;
  double corpus_timeout = 600;
  std::string corpus_verify = "numeric";
  auto* run = corpus_cmd->add_subcommand("run", "Count lines on bundled surfaces");
  run->add_option("labels", labels, "Labels such as S1* or S13 (default: every published count)");
  run->add_option("--timeout", corpus_timeout, "Per-surface limit in seconds")->capture_default_str();
  run->add_option("--verify", corpus_verify, "Oracle checks")
      ->check(CLI::IsMember({"none", "numeric", "exact", "both"}))
      ->capture_default_str();
  std::string show_label;
  bool show_star = false;
  auto* show = corpus_cmd->add_subcommand("show", "Print a bundled surface file");
  show->add_option("label", show_label)->required();
  show->add_flag("--star", show_star, "Print the reparameterized surface");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*compute) return cmd_compute(args);
    if (*list) return cmd_corpus_list();
    if (*run) return cmd_corpus_run(labels, corpus_timeout, corpus_verify);
    if (*show) {
      SurfaceParam S = corpus_surface(show_label);
      if (show_star) S = star_reparam(S);
      std::cout << print_surface(S);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 10;
  }
  return 0;
}
