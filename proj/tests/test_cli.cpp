#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "ratlines/cli/report.hpp"
#include "ratlines/cli/surface_io.hpp"
#include "ratlines/kernel/error.hpp"
#include "ratlines/kernel/parse.hpp"

using namespace ratlines;
namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ErrorCode parse_error(const std::string& text) {
  try {
    parse_surface(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error for " << text);
  return ErrorCode::InvalidArgument;
}

bool same_surface(const SurfaceParam& a, const SurfaceParam& b) {
  return a.name == b.name && a.x[0] == b.x[0] && a.x[1] == b.x[1] && a.x[2] == b.x[2];
}

ReportDocument enneper_report() {
  const SurfaceParam S = corpus_surface("S1");
  ReportOptions o;
  o.verify = VerifyMode::Both;
  ReportDocument doc = make_report(S, run_stlines(S), o, 0);
  doc.timings = {};
  return doc;
}

// Runs the command-line tool and returns its exit status.
int run_tool(const std::string& args, std::string* out = nullptr) {
  const fs::path log = fs::temp_directory_path() / "ratlines_cli_test.out";
  const std::string cmd = std::string(RATLINES_CLI) + " " + args + " > " + log.string() + " 2>&1";
  const int raw = std::system(cmd.c_str());
  if (out) *out = read_file(log);
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

fs::path write_temp(const std::string& name, const std::string& text) {
  const fs::path p = fs::temp_directory_path() / name;
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST_CASE("parse the Enneper file") {
  const SurfaceParam S = parse_surface(read_file(fs::path(RATLINES_DATA_DIR) / "corpus" / "S1.surf"));
  CHECK(S.name == "S1");
  CHECK(S.x[0] == RatFunc(parse_poly("-s^3 + 3*t^2*s + 3*s")));
  CHECK(S.x[1] == RatFunc(parse_poly("3*s^2*t - t^3 + 3*t")));
  CHECK(S.x[2] == RatFunc(parse_poly("3*s^2 - 3*t^2")));
  for (const auto& c : S.x) CHECK(c.is_polynomial());
}

TEST_CASE("parse errors") {
  CHECK(parse_error("x.num: t^^2\ny.num: s\nz.num: t") == ErrorCode::SyntaxError);
  CHECK(parse_error("x.num: t\nx.den: 0\ny.num: s\nz.num: t") == ErrorCode::ZeroDenominator);
  CHECK(parse_error("x.num: t\ny.num: s") == ErrorCode::SyntaxError);
  CHECK(parse_error("x.num: t\nq.num: s\nz.num: t") == ErrorCode::SyntaxError);
  try {
    parse_surface("name: bad\nx.num: t\ny.num: s^^2\nz.num: t");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    CHECK(std::string(e.what()).find("column") != std::string::npos);
  }
}

TEST_CASE("comments and default denominators") {
  const SurfaceParam S = parse_surface("# plane-like\nname: c\nx.num: t # first\ny.num: s\ny.den: 2\nz.num: t*s\n");
  CHECK(S.x[0].den() == MPoly(1));
  CHECK(S.x[1] == RatFunc(parse_poly("s/2")));
}

TEST_CASE("star reparameterization") {
  CHECK(bidegree(star_reparam(corpus_surface("S1"))) == std::pair{6, 3});
  CHECK(bidegree(star_reparam(corpus_surface("S8"))) == std::pair{10, 5});
  CHECK(bidegree(corpus_surface("S8*")) == std::pair{10, 5});
  const SurfaceParam e = corpus_surface("S1"), s = star_reparam(e);
  for (int i = 0; i < 3; ++i) CHECK_FALSE(e.x[i] == s.x[i]);
  CHECK(s.name == "S1*");
}

TEST_CASE("print and parse round trip on the corpus") {
  for (const auto& c : corpus()) {
    INFO(c.name);
    const SurfaceParam S = parse_surface(c.text);
    CHECK(same_surface(parse_surface(print_surface(S)), S));
    const SurfaceParam T = star_reparam(S);
    CHECK(same_surface(parse_surface(print_surface(T)), T));
  }
}

TEST_CASE("bundled corpus matches the data files") {
  CHECK(corpus().size() == 19);
  int files = 0;
  for (const auto& entry : fs::directory_iterator(fs::path(RATLINES_DATA_DIR) / "corpus")) {
    ++files;
    const std::string name = entry.path().stem().string();
    INFO(name);
    const auto it = std::find_if(corpus().begin(), corpus().end(), [&](const auto& c) { return c.name == name; });
    REQUIRE(it != corpus().end());
    CHECK(same_surface(parse_surface(read_file(entry.path())), parse_surface(it->text)));
  }
  CHECK(files == 19);
  for (const char* absent : {"S5", "S12", "S16"}) CHECK_THROWS_AS(corpus_surface(absent), Error);
}

TEST_CASE("published counts table") {
  CHECK(corpus_table().size() >= 17);
  for (const auto& row : corpus_table()) CHECK_NOTHROW(corpus_surface(row.label));
}

TEST_CASE("JSON report round trip") {
  const ReportDocument doc = enneper_report();
  CHECK(doc.line_count == 2);
  CHECK(doc.real_line_count == 2);
  REQUIRE(doc.lines.size() == 2);
  for (const auto& l : doc.lines) {
    REQUIRE(l.verification.has_value());
    CHECK(l.verification->numeric == "pass");
    CHECK(l.verification->exact == "pass");
  }
  CHECK(report_from_json(to_json(doc)) == doc);
  CHECK(report_from_json(to_json(doc, -1)) == doc);
  CHECK_THROWS_AS(report_from_json("{\"status\": 1}"), Error);
}

TEST_CASE("JSON round trip with algebraic lines") {
  const SurfaceParam S = corpus_surface("S15*");
  ReportOptions o;
  o.verify = VerifyMode::None;
  const ReportDocument doc = make_report(S, run_stlines(S), o, 1.5);
  CHECK(doc.line_count == 2);
  bool extension = false;
  for (const auto& l : doc.lines) {
    extension = extension || l.field_degree > 1;
    for (const auto& e : l.embeddings) CHECK(e.box.size() == 4);
  }
  CHECK(extension);
  CHECK(report_from_json(to_json(doc)) == doc);
}

TEST_CASE("Enneper report matches the golden file") {
  const fs::path path = fs::path(RATLINES_TEST_DIR) / "golden" / "enneper.json";
  if (std::getenv("RATLINES_UPDATE_GOLDEN")) std::ofstream(path) << to_json(enneper_report()) << "\n";
  const std::string golden = read_file(path);
  REQUIRE_FALSE(golden.empty());
  CHECK(report_from_json(golden) == enneper_report());
  CHECK(to_json(enneper_report()) + "\n" == golden);
}

TEST_CASE("text report") {
  const std::string text = to_text(enneper_report());
  CHECK(text.find("status Lines") != std::string::npos);
  CHECK(text.find("2 lines (2 real)") != std::string::npos);
  CHECK(text.find("(1, -1, 0)") != std::string::npos);
  CHECK(text.find("NotLine") != std::string::npos);
}

TEST_CASE("exit codes depend on the status only") {
  CHECK(exit_code(Status::Lines) == 0);
  CHECK(exit_code(Status::Ruled) == 2);
  CHECK(exit_code(Status::Plane) == 3);
  CHECK(exit_code("Lines") == 0);
  CHECK(exit_code("Ruled") == 2);
  CHECK(exit_code("Plane") == 3);
  for (ErrorCode c : {ErrorCode::SyntaxError, ErrorCode::ZeroDenominator, ErrorCode::Timeout,
                      ErrorCode::RetryBudgetExhausted, ErrorCode::InvalidArgument, ErrorCode::ZeroPolynomial})
    CHECK(exit_code(c) >= 10);
  CHECK(parse_verify_mode("both") == VerifyMode::Both);
  CHECK_THROWS_AS(parse_verify_mode("all"), Error);
}

TEST_CASE("command-line tool") {
  std::string out;
  CHECK(run_tool("compute enneper --verify both", &out) == 0);
  CHECK(out.find("2 lines (2 real)") != std::string::npos);
  CHECK(out.find("exact pass") != std::string::npos);

  const fs::path plane = write_temp("ratlines_plane.surf", "name: plane\nx.num: t\ny.num: s\nz.num: 0\n");
  CHECK(run_tool("compute " + plane.string(), &out) == 3);
  CHECK(out.find("plane") != std::string::npos);

  const fs::path hypar = write_temp("ratlines_hypar.surf", "name: hypar\nx.num: t\ny.num: s\nz.num: t*s\n");
  CHECK(run_tool("compute " + hypar.string(), &out) == 2);
  CHECK(out.find("ruled surface") != std::string::npos);

  const fs::path bad = write_temp("ratlines_bad.surf", "x.num: t^^2\ny.num: s\nz.num: t\n");
  CHECK(run_tool("compute " + bad.string(), &out) >= 10);
  CHECK(out.find("SyntaxError") != std::string::npos);

  CHECK(run_tool("compute enneper --format json --verify none", &out) == 0);
  CHECK(report_from_json(out).line_count == 2);

  CHECK(run_tool("corpus list", &out) == 0);
  CHECK(out.find("S22") != std::string::npos);

  CHECK(run_tool("corpus run S1* S8* --verify none", &out) == 0);
  CHECK(out.find("S1*") != std::string::npos);

  CHECK(run_tool("corpus show S1", &out) == 0);
  CHECK(same_surface(parse_surface(out), corpus_surface("S1")));

  CHECK(run_tool("compute S2 --timeout 0.001", &out) >= 10);
}
