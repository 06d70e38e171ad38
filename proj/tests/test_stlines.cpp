#include <doctest.h>

#include "line_sets.hpp"
#include "ratlines/cli/surface_io.hpp"
#include "ratlines/kernel/error.hpp"
#include "ratlines/kernel/factor.hpp"
#include "ratlines/kernel/gcd.hpp"
#include "ratlines/kernel/parse.hpp"
#include "ratlines/kernel/resultant.hpp"
#include "ratlines/stlines/stlines.hpp"

using namespace ratlines;
using namespace ratlines::testing;

namespace {

MPoly P(const std::string& s) { return parse_poly(s); }

SurfaceParam surface(const std::string& x, const std::string& y, const std::string& z) {
  SurfaceParam S;
  S.x = {RatFunc(P(x)), RatFunc(P(y)), RatFunc(P(z))};
  return S;
}

SurfaceParam enneper() { return corpus_surface("S1"); }
SurfaceParam special() { return surface("1/2*t*(s^3 + 3*s) + 1/2*s^2", "t^2", "t + s"); }

bool same_up_to_constant(const MPoly& a, const MPoly& b) { return a.primitive_integer() == b.primitive_integer(); }

CandidateSet candidates(const FundamentalData& fd) {
  const Branch br = branch_of(fd);
  return assemble_candidates(fd, asymptotic_poly(fd), geodesic_poly(fd, br), br);
}

RVec rational_vec(const std::vector<AlgNum>& v) { return {v[0].coord(0), v[1].coord(0), v[2].coord(0)}; }

bool close(const std::array<Complex, 3>& x, const std::array<Complex, 3>& y) {
  for (int i = 0; i < 3; ++i)
    if ((x[i] - y[i]).abs().to_double() > 1e-20 * (1 + x[i].abs().to_double())) return false;
  return true;
}

// Distinct complex lines over all witnesses of a verdict.
int distinct_lines(const ComponentVerdict& v) {
  std::vector<const LineEmbedding*> seen;
  for (const auto& w : v.lines)
    for (const auto& l : w.lines) {
      bool dup = false;
      for (const auto* o : seen) dup = dup || (close(o->point, l.point) && close(o->direction, l.direction));
      if (!dup) seen.push_back(&l);
    }
  return static_cast<int>(seen.size());
}

}  // namespace

TEST_CASE("asymptotic polynomial") {
  const FundamentalData e(enneper());
  AsymptoticPoly a = asymptotic_poly(e);
  CHECK(same_up_to_constant(a.M, P("w^2 - 1")));
  CHECK(same_up_to_constant(a.Mtilde, P("(w - 1)*(w + 1)*(s^2 + t^2 + 1)^2")));

  AsymptoticPoly h = asymptotic_poly(FundamentalData(surface("t", "s", "t*s")));
  CHECK(h.Mtilde == P("2*w"));
  CHECK(same_up_to_constant(h.M, P("w")));

  try {
    asymptotic_poly(FundamentalData(surface("t", "s", "0")));
    FAIL("plane accepted");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::PlaneInput);
  }
}

TEST_CASE("geodesic polynomial") {
  const FundamentalData e(enneper());
  GeodesicPoly g = geodesic_poly(e, Branch::General);
  // Agrees with 2(w^2+1)(-t w + s) modulo M = w^2 - 1 up to the unit w.
  const MPoly M = P("w^2 - 1");
  CHECK(same_up_to_constant(resultant_wrt(M, g.N, Var::w), resultant_wrt(M, P("2*(w^2 + 1)*(-t*w + s)"), Var::w)));
  CHECK(same_up_to_constant(resultant_wrt(M, g.N, Var::w), P("(s - t)*(s + t)")));

  GeodesicPoly h = geodesic_poly(FundamentalData(surface("t", "s", "t*s")), Branch::General);
  CHECK(same_up_to_constant(h.Ntilde, P("2*s*w^2 - 2*t*w")));
  CHECK(same_up_to_constant(h.N, P("s*w^2 - t*w")));

  try {
    geodesic_poly(e, Branch::StarDegenerate);
    FAIL("branch mismatch accepted");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::DegenerateBranchMismatch);
  }
}

TEST_CASE("elimination and delta polynomials on Enneper") {
  const FundamentalData fd(enneper());
  CandidateSet c = candidates(fd);
  CHECK(same_up_to_constant(c.xi, P("(s - t)*(s + t)")));
  CHECK(same_up_to_constant(c.delta.raw[2], P("(s^2 + t^2 + 1)^4")));
  CHECK(c.delta.raw[2].leading_coeff() == Rational(-2916));
  CHECK(same_up_to_constant(c.delta.raw[3], P("(s^2 + t^2 + 1)^4")));
  for (const auto& d : c.delta.squarefree) CHECK(same_up_to_constant(d, P("s^2 + t^2 + 1")));
  CHECK(same_up_to_constant(c.mu, P("(t + s)*(t - s)*(s^2 + t^2 + 1)")));
  CHECK(c.mu_factors.size() == 3);
  CHECK(c.eta.is_constant());
  CHECK_FALSE(c.eta.is_zero());
  CHECK_FALSE(c.ruled);
}

TEST_CASE("hyperbolic paraboloid eliminates to zero") {
  const FundamentalData fd(surface("t", "s", "t*s"));
  CandidateSet c = candidates(fd);
  CHECK(c.xi_tilde.is_zero());
  CHECK(c.delta.raw[2] == P("-1"));
  CHECK(c.ruled);
}

TEST_CASE("polynomial surface keeps xi") {
  const FundamentalData fd(enneper());
  CandidateSet c = candidates(fd);
  CHECK(c.xi == c.xi_tilde);
}

TEST_CASE("ruled and plane statuses") {
  CHECK(run_stlines(surface("t", "s", "t*s")).status == Status::Ruled);
  CHECK(run_stlines(surface("t", "t^2", "s")).status == Status::Ruled);
  CHECK(run_stlines(surface("t", "s", "0")).status == Status::Plane);
  CHECK(run_stlines(surface("t + s", "t - s", "2*t")).status == Status::Plane);
  CHECK(run_stlines(enneper()).status == Status::Lines);

  const FundamentalData cyl(surface("t", "t^2", "s"));
  CandidateSet c = candidates(cyl);
  CHECK(c.eta.is_zero());
}

TEST_CASE("non-ruled corpus surfaces have nonzero mu and eta") {
  for (const char* label : {"S1", "S8*", "S11*"}) {
    INFO(label);
    const FundamentalData fd(corpus_surface(label));
    CandidateSet c = candidates(fd);
    CHECK_FALSE(c.mu.is_zero());
    CHECK_FALSE(c.eta.is_zero());
    CHECK(run_stlines(corpus_surface(label)).status == Status::Lines);
  }
}

TEST_CASE("Enneper lines") {
  AlgorithmReport r = run_stlines(enneper());
  REQUIRE(r.lines.size() == 2);
  std::set<std::string> expected = {line_key(canonical_line({0, 0, 0}, {1, 1, 0})),
                                    line_key(canonical_line({0, 0, 0}, {1, -1, 0}))};
  CHECK(rational_line_set(r) == expected);
  for (const auto& w : r.lines) {
    CHECK(w.is_real());
    CHECK(w.conjugate_count() == 1);
  }
  REQUIRE(r.rejected.size() == 1);
  CHECK(same_up_to_constant(r.rejected[0].factor, P("s^2 + t^2 + 1")));
  CHECK(r.rejected[0].reason == RejectReason::NotLine);
}

TEST_CASE("component checks on Enneper") {
  const FundamentalData fd(enneper());
  ComponentVerdict v = check_component(P("t + s"), fd);
  REQUIRE(v.is_line());
  REQUIRE(v.lines.size() == 1);
  CHECK(rational_vec(v.lines[0].direction) == RVec{1, -1, 0});

  std::array<MPoly, 3> W = tangent_field(fd, P("t + s"));
  CHECK(same_up_to_constant(W[0], P("3*s^2 + 6*s*t - 3*t^2 - 3")));

  ComponentVerdict c = check_component(P("s^2 + t^2 + 1"), fd);
  CHECK_FALSE(c.is_line());
  CHECK(c.rejected == RejectReason::NotLine);
}

TEST_CASE("special curve is not a line") {
  const FundamentalData fd(special());
  CandidateSet c = candidates(fd);
  const MPoly alpha = P("s^2 + 1");
  CHECK(std::find(c.mu_factors.begin(), c.mu_factors.end(), alpha) != c.mu_factors.end());
  CHECK(c.delta.squarefree[3].divisible_by(alpha));
  ComponentVerdict v = check_component(alpha, fd);
  CHECK(v.rejected == RejectReason::NotLine);
}

TEST_CASE("vertical line check") {
  const FundamentalData fd(surface("t", "t*s^2", "s + t"));
  ComponentVerdict v = vertical_line_check(P("t"), fd);
  REQUIRE(v.is_line());
  CHECK(rational_vec(v.lines[0].direction) == RVec{0, 0, 1});
  CHECK(rational_vec(v.lines[0].point) == RVec{0, 0, 0});
  CHECK(v.lines[0].vertical);

  CHECK_FALSE(vertical_line_check(P("t - 1"), fd).is_line());
}

TEST_CASE("verdicts do not depend on the parameter value") {
  for (const char* label : {"S1", "S1*", "S2", "S7*", "S8*", "S15*", "S20"}) {
    const FundamentalData fd(corpus_surface(label));
    CandidateSet c = candidates(fd);
    for (const auto& alpha : c.mu_factors) {
      if (!alpha.depends_on(Var::s)) continue;
      INFO(std::string(label) << " " << alpha.to_string());
      const ComponentVerdict first = check_component_from(alpha, fd, 0);
      std::set<Rational> used{first.lines.empty() ? Rational(0) : first.lines[0].a};
      for (int start = 1, tried = 0; tried < 4 && start < 40; ++start) {
        const ComponentVerdict v = check_component_from(alpha, fd, start);
        if (!v.lines.empty() && !used.insert(v.lines[0].a).second) continue;
        ++tried;
        CHECK(v.rejected == first.rejected);
        CHECK(distinct_lines(v) == distinct_lines(first));
      }
    }
  }
}

TEST_CASE("mu is square-free") {
  for (const char* label : {"S1", "S1*", "S2", "S7*", "S8*", "S11*", "S15*", "S17", "S20"}) {
    INFO(label);
    const FundamentalData fd(corpus_surface(label));
    CandidateSet c = candidates(fd);
    REQUIRE_FALSE(c.mu.is_zero());
    const MPoly g = poly_gcd(poly_gcd(c.mu, c.mu.derivative(Var::t)), c.mu.derivative(Var::s));
    CHECK(g.is_constant());
  }
}

TEST_CASE("affine reparameterization leaves the line set unchanged") {
  const auto a = rational_line_set(run_stlines(enneper()));
  const auto b = rational_line_set(run_stlines(affine_reparam(enneper())));
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(*a == *b);
}

TEST_CASE("rigid motion moves the lines with the surface") {
  const RigidMotion m;
  const AlgorithmReport before = run_stlines(enneper());
  const auto after = rational_line_set(run_stlines(m.apply(enneper())));
  REQUIRE(after.has_value());
  CHECK(m.apply(before) == *after);
}

TEST_CASE("retry budget") {
  StlinesOptions o;
  o.max_retries = 0;
  CHECK_THROWS_AS(check_component(P("t + s"), FundamentalData(enneper()), o), Error);
}

TEST_CASE("deadline") {
  StlinesOptions o;
  o.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  try {
    run_stlines(corpus_surface("S2"), o);
    FAIL("deadline ignored");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::Timeout);
  }
}
