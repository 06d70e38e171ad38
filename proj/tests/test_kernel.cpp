#include "doctest.h"

#include "ratlines/kernel/error.hpp"
#include "ratlines/kernel/gcd.hpp"
#include "ratlines/kernel/parse.hpp"

using namespace ratlines;

namespace {
MPoly P(const std::string& s) { return parse_poly(s); }
}

TEST_CASE("parse and print round trip") {
  MPoly p = P("3/2*t*s - t^2 - 1");
  CHECK(p.to_string() == "3/2*t*s - t^2 - 1");
  CHECK(P(p.to_string()) == p);
  CHECK(P("(t+s)^2") == P("t^2 + 2*t*s + s^2"));
  CHECK_THROWS_AS(P("t^^2"), Error);
  CHECK_THROWS_AS(P("2t"), Error);
}

TEST_CASE("poly_gcd examples") {
  CHECK(poly_gcd(P("w^2-1"), P("2*(w^2+1)*(-t*w+s)")) == MPoly(1));
  CHECK(poly_gcd(P("(t+s)^2*(t-s)"), P("(t+s)*t^2")) == P("t+s"));
  CHECK(poly_gcd(P("-2*t+4"), MPoly()) == P("t-2"));
  CHECK(poly_gcd(MPoly(), MPoly()).is_zero());
  CHECK(poly_gcd(P("(t*s+1)*(t-w)*(s+w^2)"), P("(t*s+1)*(s+w^2)^2*(t+1)")) == P("(t*s+1)*(s+w^2)"));
}

TEST_CASE("content_primitive examples") {
  auto a = content_primitive(P("2*s*w^2 - 2*t*w"), Var::w);
  CHECK(a.content == MPoly(2));
  CHECK(a.primitive == P("s*w^2 - t*w"));
  auto b = content_primitive(P("w^2-1"), Var::w);
  CHECK(b.content == MPoly(1));
  auto c = content_primitive(P("(s^2+t^2+1)*(w+1)"), Var::w);
  CHECK(c.content == P("s^2+t^2+1"));
  CHECK(c.primitive == P("w+1"));
}

TEST_CASE("squarefree examples") {
  CHECK(squarefree_part(P("t^2")) == P("t"));
  CHECK(squarefree_part(P("(t-s)^3*(t+s)")) == P("(t-s)*(t+s)").primitive_integer());
  auto d = squarefree_decomposition(P("3*(t-s)^3*(t+s)*t^2"));
  REQUIRE(d.size() == 3);
  CHECK(d[0].second == 1);
  CHECK(d[0].first == P("t+s"));
  CHECK(d[1].first == P("t"));
  CHECK(d[2].first == P("s-t"));
}

#include "ratlines/kernel/factor.hpp"
#include "ratlines/kernel/resultant.hpp"

TEST_CASE("resultant examples") {
  MPoly r = resultant_wrt(P("w^2-1"), P("2*(w^2+1)*(-t*w+s)"), Var::w);
  CHECK(r == P("16*(-t+s)*(t+s)"));
  CHECK(resultant_wrt(P("w-t"), P("w-s"), Var::w) == P("t-s"));
  CHECK(sylvester_resultant(P("w-t"), P("w-s"), Var::w) == P("t-s"));
  MPoly f = P("t*w^3 + (s-1)*w^2 + 2*w - t*s");
  MPoly g = P("(t+s)*w^3 - w + s^2");
  CHECK(resultant_wrt(f, g, Var::w) == sylvester_resultant(f, g, Var::w));
  CHECK(resultant_wrt(g, f, Var::w) == sylvester_resultant(g, f, Var::w));
  MPoly h = P("(t-s)*w^2 + w + 1");
  CHECK(resultant_wrt(f, h, Var::w) == sylvester_resultant(f, h, Var::w));
  CHECK(resultant_wrt(h, f, Var::w) == sylvester_resultant(h, f, Var::w));
  CHECK_THROWS_AS(resultant_wrt(P("t"), P("s"), Var::w), Error);
}

TEST_CASE("factor examples") {
  auto fl = factor_over_Q(P("(t+s)*(t-s)*(s^2+t^2+1)"));
  REQUIRE(fl.size() == 3);
  CHECK(fl[0].first == P("s-t"));
  CHECK(fl[1].first == P("s+t"));
  CHECK(fl[2].first == P("s^2+t^2+1"));
  CHECK(factor_over_Q(P("t^4+1")).size() == 1);
  CHECK(factor_over_Q(P("t^2-s^2")).size() == 2);
  auto big = factor_over_Q(P("(t^3*s + 2*s^2 - t + 7)^2*(s^4 - t^3*s + 3)*(t^2+1)*(s-2)*17"));
  REQUIRE(big.size() == 4);
  auto u = factor_over_Q(P("t^8 - 1"));
  CHECK(u.size() == 4);
}
