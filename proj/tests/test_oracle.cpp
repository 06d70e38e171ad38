#include <doctest.h>

#include "ratlines/kernel/error.hpp"
#include "ratlines/kernel/parse.hpp"
#include "ratlines/oracle/oracle.hpp"

using namespace ratlines;

namespace {

MPoly P(const std::string& s) { return parse_poly(s); }

SurfaceParam surface(const std::string& x, const std::string& y, const std::string& z) {
  SurfaceParam S;
  S.x = {RatFunc(P(x)), RatFunc(P(y)), RatFunc(P(z))};
  return S;
}

SurfaceParam enneper() { return surface("-s^3 + 3*t^2*s + 3*s", "3*s^2*t - t^3 + 3*t", "3*s^2 - 3*t^2"); }

CVec3 cvec(double x, double y, double z) {
  return {Complex(Rational(x), 128), Complex(Rational(y), 128), Complex(Rational(z), 128)};
}

double value(const Complex& z) { return z.re.to_double(); }

}  // namespace

TEST_CASE("sample points on the Enneper line component") {
  const Rational one[] = {Rational(1)};
  NumericSample s = sample_component_at(P("t + s"), enneper(), one, 40);
  REQUIRE(s.points.size() == 1);
  CHECK(value(s.points[0][0]) == doctest::Approx(-5));
  CHECK(value(s.points[0][1]) == doctest::Approx(5));
  CHECK(std::abs(value(s.points[0][2])) < 1e-30);
  CHECK(s.params[0][1].re.to_double() == doctest::Approx(-1));
}

TEST_CASE("conic samples are non-real") {
  NumericSample s = sample_component(P("s^2 + t^2 + 1"), enneper(), 20, 40);
  CHECK(s.points.size() == 40);
  for (const auto& p : s.params) CHECK(p[1].im.abs().to_double() > 1e-3);
}

TEST_CASE("plane samples follow the diagonal") {
  NumericSample s = sample_component(P("t - s"), surface("t", "s", "0"), 5, 30);
  CHECK(s.points.size() == 5);
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    CHECK((s.points[i][0] - s.points[i][1]).abs().to_double() < 1e-30);
    CHECK(s.points[i][2].abs().is_zero());
  }
  CHECK_THROWS_AS(sample_component(P("t - s"), surface("t", "s", "0"), 2, 30), Error);
}

TEST_CASE("samples avoid denominator zeros") {
  SurfaceParam S;
  S.x = {RatFunc(P("1"), P("t - 1/97 - 1/5")), RatFunc(P("s")), RatFunc(P("t"))};
  NumericSample s = sample_component(P("t - s"), S, 5, 30);
  CHECK(s.points.size() == 5);
  for (const auto& p : s.params) CHECK(std::abs(p[0].re.to_double() - (1.0 / 97 + 1.0 / 5)) > 1e-6);
}

TEST_CASE("collinearity residual") {
  std::vector<CVec3> line{cvec(0, 0, 0), cvec(1, 1, 0), cvec(2, 2, 0)};
  CHECK(collinearity_residual(line).is_zero());
  std::vector<CVec3> bent{cvec(0, 0, 0), cvec(1, 1, 0), cvec(2, 0, 0)};
  CHECK(collinearity_residual(bent).to_double() == doctest::Approx(0.5));
  std::vector<CVec3> same{cvec(1, 1, 1), cvec(1, 1, 1), cvec(1, 1, 1)};
  CHECK_THROWS_AS(collinearity_residual(same), Error);
  std::vector<CVec3> two{cvec(0, 0, 0), cvec(1, 1, 0)};
  CHECK_THROWS_AS(collinearity_residual(two), Error);
}

TEST_CASE("residual separates lines from curves") {
  CHECK(collinearity_residual(sample_component(P("t + s"), enneper(), 20, 40)).to_double() < 1e-25);
  CHECK(collinearity_residual(sample_component(P("t - s"), enneper(), 20, 40)).to_double() < 1e-25);
  CHECK(collinearity_residual(sample_component(P("s^2 + t^2 + 1"), enneper(), 20, 40)).to_double() > 1e-3);
  SurfaceParam parabola = surface("t*s^3/2 + 3*t*s/2 + s^2/2", "t^2", "t + s");
  CHECK(collinearity_residual(sample_component(P("s^2 + 1"), parabola, 20, 40)).to_double() > 1e-3);
}

TEST_CASE("residual shrinks with precision") {
  const MPoly alpha = P("t - s^3");
  const SurfaceParam S = surface("t - s^3", "s", "t*s - s^4");
  double previous = 1;
  for (unsigned digits : {20u, 40u, 80u}) {
    double r = collinearity_residual(sample_component(alpha, S, 10, digits)).to_double();
    CHECK(r < previous / 10);
    previous = r;
  }
}

TEST_CASE("two planes system of the Enneper surface") {
  TwoPlanesSystem sys = two_planes_system(enneper());
  CHECK(sys.P_degree == 9);
  REQUIRE(!sys.equations.empty());
  std::array<Rational, kNumVars> line{};
  line[index(Var::a)] = -1;
  for (const auto& e : sys.equations) CHECK(e.evaluate_all(line) == 0);
  line[index(Var::a)] = 1;
  for (const auto& e : sys.equations) CHECK(e.evaluate_all(line) == 0);
  line[index(Var::a)] = 2;
  bool all_zero = true;
  for (const auto& e : sys.equations) all_zero = all_zero && e.evaluate_all(line) == 0;
  CHECK(!all_zero);
}

TEST_CASE("two planes certificate over a number field") {
  FieldPtr K = make_field({Rational(-2), Rational(0), Rational(1)});
  const AlgNum zero = AlgNum::from_rational(K, 0), one = AlgNum::from_rational(K, 1);
  const AlgNum r = AlgNum::generator(K);
  SurfaceParam S = surface("t", "s", "t^2 - 2*s^2 - t^3*s + 2*t*s^3");
  // z = (x^2 - 2 y^2)(1 - x y) contains x = r y, z = 0.
  CHECK(two_planes_vanish(S, {zero, zero, zero}, {one, r.inverse(), zero}, false));
  CHECK(!two_planes_vanish(S, {zero, zero, zero}, {one, r, zero}, false));
}

TEST_CASE("verify Enneper witnesses") {
  const SurfaceParam S = enneper();
  AlgorithmReport report = run_stlines(S);
  REQUIRE(report.lines.size() == 2);
  for (const auto& w : report.lines) {
    VerificationResult v = verify_line(w, S, {}, report.lines);
    REQUIRE(v.numeric);
    CHECK(v.numeric->passed);
    CHECK(v.numeric->residual < 1e-25);
    CHECK(v.algebraic.ran);
    CHECK(v.algebraic.passed);
    CHECK(v.passed());
  }

  LineWitness bad = report.lines[0];
  bad.direction[1] = bad.direction[1] + AlgNum::from_rational(bad.field, Rational(1, 1000));
  for (auto& l : bad.lines) l.direction[1] = l.direction[1] + Complex(Rational(1, 1000), l.direction[1].precision());
  VerificationResult v = verify_line(bad, S);
  CHECK(!v.numeric->passed);
  CHECK(!v.algebraic.passed);
  CHECK(!v.passed());
}

TEST_CASE("verify skips uncertifiable lines") {
  const SurfaceParam S = surface("t", "t*s^2", "s + t");
  ComponentVerdict vertical = vertical_line_check(P("t"), FundamentalData(S));
  REQUIRE(vertical.lines.size() == 1);
  const LineWitness& w = vertical.lines[0];
  CHECK(w.direction[0].is_zero());
  VerificationResult v = verify_line(w, S);
  CHECK(v.numeric->passed);
  CHECK(!v.algebraic.ran);
  REQUIRE(v.algebraic.skipped);
  CHECK(*v.algebraic.skipped == SkipReason::NotCertifiable);

  const SurfaceParam C = surface("t", "s", "t^2*s + s^3 + t");
  AlgorithmReport complex_report = run_stlines(C);
  int non_real = 0;
  for (const auto& w : complex_report.lines)
    if (!w.is_real()) {
      ++non_real;
      VerificationResult vc = verify_line(w, C, {}, complex_report.lines);
      CHECK(vc.numeric->passed);
      REQUIRE(vc.algebraic.skipped);
      CHECK(*vc.algebraic.skipped == SkipReason::NonReal);
    }
  CHECK(non_real > 0);
}
