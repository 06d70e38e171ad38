#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ratlines/kernel/error.hpp"
#include "ratlines/oracle/oracle.hpp"
#include "ratlines/stlines/stlines.hpp"

namespace ratlines {

enum class VerifyMode { None, Numeric, Exact, Both };

/// Parses none|numeric|exact|both; throws Error(InvalidArgument).
VerifyMode parse_verify_mode(const std::string& text);

/// One complex line of a class: the chosen root of the field's minimal
/// polynomial (isolating box) and decimal images of point and direction.
struct EmbeddingDoc {
  std::vector<std::string> box;  // re_lo, re_hi, im_lo, im_hi
  bool real = false;
  std::vector<std::string> point, direction;
  bool operator==(const EmbeddingDoc&) const = default;
};

struct VerificationDoc {
  std::string numeric;  // pass | fail | off
  double residual = 0;
  double deviation = 0;
  int samples = 0;
  std::string exact;  // pass | fail | off | NonReal | NotCertifiable
  bool operator==(const VerificationDoc&) const = default;
};

/// Algebraic numbers are power-basis coordinates over the field generated by
/// a root of `minpoly`.
struct LineDoc {
  std::string factor;
  std::string minpoly;
  int field_degree = 1;
  std::vector<std::vector<std::string>> point, direction;
  bool vertical = false;
  bool real = false;
  int conjugate_count = 0;
  int real_count = 0;
  std::vector<EmbeddingDoc> embeddings;
  std::optional<VerificationDoc> verification;
  bool operator==(const LineDoc&) const = default;
};

struct RejectedDoc {
  std::string factor;
  std::string reason;
  bool operator==(const RejectedDoc&) const = default;
};

struct TimingsDoc {
  double candidates = 0, checks = 0, verification = 0, total = 0;
  bool operator==(const TimingsDoc&) const = default;
};

struct ReportDocument {
  std::string surface;
  std::vector<int> bidegree;
  std::string status;
  int line_count = 0;
  int real_line_count = 0;
  int deg_xi = -1;
  int candidate_factors = 0;
  std::string eta;
  std::vector<LineDoc> lines;
  std::vector<RejectedDoc> rejected;
  TimingsDoc timings;
  bool operator==(const ReportDocument&) const = default;
};

struct ReportOptions {
  VerifyMode verify = VerifyMode::Numeric;
  VerifyOptions oracle;
  bool real_only = false;
  /// Digits for decimal images of the lines.
  unsigned print_digits = 20;
};

/// Runs the verification requested in `options` and assembles the document.
ReportDocument make_report(const SurfaceParam& S, const AlgorithmReport& report, const ReportOptions& options,
                           double seconds_total);

std::string to_json(const ReportDocument& doc, int indent = 2);
/// Throws Error(SyntaxError) on malformed input.
ReportDocument report_from_json(const std::string& text);
std::string to_text(const ReportDocument& doc);

/// Process exit code for a status: Lines 0, Ruled 2, Plane 3.
int exit_code(Status s);
int exit_code(const std::string& status);
/// Exit code for a library error (at least 10).
int exit_code(ErrorCode code);

}  // namespace ratlines
