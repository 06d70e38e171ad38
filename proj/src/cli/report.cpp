#include "ratlines/cli/report.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "ratlines/cli/surface_io.hpp"
#include "ratlines/kernel/error.hpp"

namespace ratlines {

using nlohmann::json;

VerifyMode parse_verify_mode(const std::string& text) {
  if (text == "none") return VerifyMode::None;
  if (text == "numeric") return VerifyMode::Numeric;
  if (text == "exact") return VerifyMode::Exact;
  if (text == "both") return VerifyMode::Both;
  throw Error(ErrorCode::InvalidArgument, "unknown verification mode `" + text + "`");
}

namespace {

std::string rounded(const Real& x, unsigned digits, mpfr_rnd_t mode) {
  std::vector<char> buf(digits + 32);
  const char* fmt = mode == MPFR_RNDD ? "%.*RDe" : mode == MPFR_RNDU ? "%.*RUe" : "%.*RNe";
  mpfr_snprintf(buf.data(), buf.size(), fmt, static_cast<int>(digits - 1), x.raw());
  return buf.data();
}

std::string complex_text(const Complex& z, unsigned digits, bool real) {
  if (real || z.im.is_zero()) return rounded(z.re, digits, MPFR_RNDN);
  std::string im = rounded(z.im.abs(), digits, MPFR_RNDN);
  return rounded(z.re, digits, MPFR_RNDN) + (z.im.sign() < 0 ? " - " : " + ") + im + "i";
}

std::vector<std::string> isolating_box(const Embedding& e, unsigned digits) {
  const Real r = e.disk.radius + e.disk.radius;
  return {rounded(e.disk.z.re - r, digits, MPFR_RNDD), rounded(e.disk.z.re + r, digits, MPFR_RNDU),
          rounded(e.disk.z.im - r, digits, MPFR_RNDD), rounded(e.disk.z.im + r, digits, MPFR_RNDU)};
}

std::vector<std::string> coordinates(const AlgNum& x) {
  std::vector<std::string> out;
  for (int k = 0; k < x.field()->degree(); ++k) out.push_back(to_string(x.coord(k)));
  while (out.size() > 1 && out.back() == "0") out.pop_back();
  return out;
}

VerificationDoc verification_doc(const VerificationResult& v) {
  VerificationDoc d;
  if (v.numeric) {
    d.numeric = v.numeric->passed ? "pass" : "fail";
    d.residual = v.numeric->residual;
    d.deviation = v.numeric->deviation;
    d.samples = v.numeric->samples;
  } else {
    d.numeric = "off";
  }
  if (v.algebraic.ran) d.exact = v.algebraic.passed ? "pass" : "fail";
  else if (v.algebraic.skipped) d.exact = std::string(to_string(*v.algebraic.skipped));
  else d.exact = "off";
  return d;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

ReportDocument make_report(const SurfaceParam& S, const AlgorithmReport& report, const ReportOptions& options,
                           double seconds_total) {
  ReportDocument doc;
  doc.surface = S.name;
  auto [dt, ds] = bidegree(S);
  doc.bidegree = {dt, ds};
  doc.status = std::string(to_string(report.status));
  doc.deg_xi = report.diagnostics.deg_xi;
  doc.candidate_factors = report.diagnostics.factor_count;
  if (report.candidates) doc.eta = report.candidates->eta.to_string();
  doc.timings.candidates = report.diagnostics.seconds_candidates;
  doc.timings.checks = report.diagnostics.seconds_checks;

  VerifyOptions vo = options.oracle;
  vo.numeric = options.verify == VerifyMode::Numeric || options.verify == VerifyMode::Both;
  vo.algebraic = options.verify == VerifyMode::Exact || options.verify == VerifyMode::Both;
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& w : report.lines) {
    if (options.real_only && !w.is_real()) continue;
    LineDoc line;
    line.factor = w.factor.to_string();
    line.minpoly = w.field->to_string();
    line.field_degree = w.field->degree();
    for (const auto& c : w.point) line.point.push_back(coordinates(c));
    for (const auto& c : w.direction) line.direction.push_back(coordinates(c));
    line.vertical = w.vertical;
    line.real = w.is_real();
    line.real_count = w.real_count();
    for (const auto& e : w.lines) {
      if (options.real_only && !e.real) continue;
      EmbeddingDoc ed;
      if (e.embedding) ed.box = isolating_box(*e.embedding, options.print_digits);
      ed.real = e.real;
      for (const auto& c : e.point) ed.point.push_back(complex_text(c, options.print_digits, e.real));
      for (const auto& c : e.direction) ed.direction.push_back(complex_text(c, options.print_digits, e.real));
      line.embeddings.push_back(std::move(ed));
    }
    line.conjugate_count = static_cast<int>(line.embeddings.size());
    if (options.verify != VerifyMode::None) line.verification = verification_doc(verify_line(w, S, vo, report.lines));
    doc.line_count += line.conjugate_count;
    doc.real_line_count += line.real_count;
    doc.lines.push_back(std::move(line));
  }
  doc.timings.verification = seconds_since(t0);
  doc.timings.total = seconds_total + doc.timings.verification;
  for (const auto& r : report.rejected) doc.rejected.push_back({r.factor.to_string(), std::string(to_string(r.reason))});
  return doc;
}

void to_json(json& j, const EmbeddingDoc& e) {
  j = json{{"box", e.box}, {"real", e.real}, {"point", e.point}, {"direction", e.direction}};
}
void from_json(const json& j, EmbeddingDoc& e) {
  j.at("box").get_to(e.box);
  j.at("real").get_to(e.real);
  j.at("point").get_to(e.point);
  j.at("direction").get_to(e.direction);
}

void to_json(json& j, const VerificationDoc& v) {
  j = json{{"numeric", v.numeric}, {"residual", v.residual}, {"deviation", v.deviation},
           {"samples", v.samples}, {"exact", v.exact}};
}
void from_json(const json& j, VerificationDoc& v) {
  j.at("numeric").get_to(v.numeric);
  j.at("residual").get_to(v.residual);
  j.at("deviation").get_to(v.deviation);
  j.at("samples").get_to(v.samples);
  j.at("exact").get_to(v.exact);
}

void to_json(json& j, const LineDoc& l) {
  j = json{{"factor", l.factor},
           {"minpoly", l.minpoly},
           {"field_degree", l.field_degree},
           {"point", l.point},
           {"direction", l.direction},
           {"vertical", l.vertical},
           {"real", l.real},
           {"conjugate_count", l.conjugate_count},
           {"real_count", l.real_count},
           {"embeddings", l.embeddings}};
  j["verification"] = l.verification ? json(*l.verification) : json(nullptr);
}
void from_json(const json& j, LineDoc& l) {
  j.at("factor").get_to(l.factor);
  j.at("minpoly").get_to(l.minpoly);
  j.at("field_degree").get_to(l.field_degree);
  j.at("point").get_to(l.point);
  j.at("direction").get_to(l.direction);
  j.at("vertical").get_to(l.vertical);
  j.at("real").get_to(l.real);
  j.at("conjugate_count").get_to(l.conjugate_count);
  j.at("real_count").get_to(l.real_count);
  j.at("embeddings").get_to(l.embeddings);
  if (j.at("verification").is_null()) l.verification.reset();
  else l.verification = j.at("verification").get<VerificationDoc>();
}

void to_json(json& j, const RejectedDoc& r) { j = json{{"factor", r.factor}, {"reason", r.reason}}; }
void from_json(const json& j, RejectedDoc& r) {
  j.at("factor").get_to(r.factor);
  j.at("reason").get_to(r.reason);
}

void to_json(json& j, const TimingsDoc& t) {
  j = json{{"candidates", t.candidates}, {"checks", t.checks}, {"verification", t.verification}, {"total", t.total}};
}
void from_json(const json& j, TimingsDoc& t) {
  j.at("candidates").get_to(t.candidates);
  j.at("checks").get_to(t.checks);
  j.at("verification").get_to(t.verification);
  j.at("total").get_to(t.total);
}

std::string to_json(const ReportDocument& doc, int indent) {
  json j{{"surface", doc.surface},
         {"bidegree", doc.bidegree},
         {"status", doc.status},
         {"line_count", doc.line_count},
         {"real_line_count", doc.real_line_count},
         {"deg_xi", doc.deg_xi},
         {"candidate_factors", doc.candidate_factors},
         {"eta", doc.eta},
         {"lines", doc.lines},
         {"rejected", doc.rejected},
         {"timings", doc.timings}};
  return j.dump(indent);
}

ReportDocument report_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    ReportDocument doc;
    j.at("surface").get_to(doc.surface);
    j.at("bidegree").get_to(doc.bidegree);
    j.at("status").get_to(doc.status);
    j.at("line_count").get_to(doc.line_count);
    j.at("real_line_count").get_to(doc.real_line_count);
    j.at("deg_xi").get_to(doc.deg_xi);
    j.at("candidate_factors").get_to(doc.candidate_factors);
    j.at("eta").get_to(doc.eta);
    j.at("lines").get_to(doc.lines);
    j.at("rejected").get_to(doc.rejected);
    j.at("timings").get_to(doc.timings);
    return doc;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::SyntaxError, std::string("report: ") + e.what());
  }
}

namespace {

std::string algebraic_text(const std::vector<std::string>& coords) {
  std::string out;
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (coords[k] == "0") continue;
    std::string term = coords[k];
    if (k > 0) term = (term == "1" ? "" : term == "-1" ? "-" : term + "*") + (k == 1 ? "b" : "b^" + std::to_string(k));
    if (!out.empty()) out += term[0] == '-' ? " - " + term.substr(1) : " + " + term;
    else out = term;
  }
  return out.empty() ? "0" : out;
}

std::string triple(const std::vector<std::vector<std::string>>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + algebraic_text(v[i]);
  return out + ")";
}

std::string triple(const std::vector<std::string>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i];
  return out + ")";
}

}  // namespace

std::string to_text(const ReportDocument& doc) {
  std::ostringstream os;
  os << "surface " << (doc.surface.empty() ? "(unnamed)" : doc.surface);
  if (doc.bidegree.size() == 2) os << "  bidegree (" << doc.bidegree[0] << "," << doc.bidegree[1] << ")";
  os << "\nstatus " << doc.status << "\n";
  if (doc.status == "Plane") os << "the surface is a plane\n";
  if (doc.status == "Ruled") os << "ruled surface: it contains a line through every point\n";
  if (doc.status == "Lines") {
    if (doc.lines.empty()) os << "no straight lines found\n";
    else os << doc.line_count << " lines (" << doc.real_line_count << " real)\n";
  }
  int k = 0;
  for (const auto& l : doc.lines) {
    os << "[" << ++k << "] factor " << l.factor << "\n";
    if (l.field_degree > 1) os << "    field Q(b), " << l.minpoly << " = 0\n";
    os << "    point " << triple(l.point) << "  direction " << triple(l.direction) << "\n";
    os << "    " << l.conjugate_count << (l.conjugate_count == 1 ? " line" : " lines") << ", " << l.real_count
       << " real" << (l.vertical ? ", curve t = const" : "") << "\n";
    if (l.field_degree > 1)
      for (const auto& e : l.embeddings)
        os << "      point " << triple(e.point) << "  direction " << triple(e.direction) << (e.real ? "  real" : "")
           << "\n";
    if (l.verification) {
      const auto& v = *l.verification;
      os << "    verification: numeric " << v.numeric;
      if (v.numeric != "off") os << " (residual " << v.residual << ", " << v.samples << " samples)";
      os << ", exact " << v.exact << "\n";
    }
  }
  if (!doc.rejected.empty()) {
    os << "rejected candidates\n";
    for (const auto& r : doc.rejected) os << "    " << r.reason << "  " << r.factor << "\n";
  }
  os << "time " << doc.timings.total << " s (candidates " << doc.timings.candidates << ", checks " << doc.timings.checks
     << ", verification " << doc.timings.verification << ")\n";
  return os.str();
}

int exit_code(Status s) {
  switch (s) {
    case Status::Lines: return 0;
    case Status::Ruled: return 2;
    case Status::Plane: return 3;
  }
  return 10;
}

int exit_code(const std::string& status) {
  if (status == "Lines") return 0;
  if (status == "Ruled") return 2;
  if (status == "Plane") return 3;
  return 10;
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError:
    case ErrorCode::ZeroDenominator:
    case ErrorCode::IdenticallyZeroDenominator: return 11;
    case ErrorCode::Timeout: return 12;
    case ErrorCode::RetryBudgetExhausted: return 13;
    case ErrorCode::InvalidArgument: return 14;
    default: return 10;
  }
}

}  // namespace ratlines
