#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "ratlines/kernel/algebraic.hpp"
#include "ratlines/kernel/error.hpp"
#include "ratlines/kernel/kpoly.hpp"
#include "ratlines/kernel/parse.hpp"
#include "ratlines/kernel/ratfunc.hpp"
#include "ratlines/kernel/roots.hpp"

using namespace ratlines;

namespace {

MPoly P(const std::string& s) { return parse_poly(s); }

QPoly Q(std::initializer_list<long> c) {
  QPoly q;
  for (long v : c) q.emplace_back(v);
  return q;
}

AlgNum random_element(std::mt19937& rng, const FieldPtr& K) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  QPoly c;
  for (int k = 0; k < K->degree(); ++k) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    c.push_back(q);
  }
  qp::trim(c);
  return AlgNum(K, c);
}

}  // namespace

TEST_CASE("ratfunc normalizes and substitutes") {
  RatFunc f(P("t^2 - s^2"), P("2*t + 2*s"));
  CHECK(f.num() == P("t/2 - s/2"));
  CHECK(f.den() == MPoly(1));
  CHECK_THROWS_AS(RatFunc(P("t"), MPoly()), Error);

  std::array<std::optional<RatFunc>, kNumVars> shift{};
  shift[index(Var::t)] = RatFunc(P("t + 1"));
  CHECK(substitute_rational(RatFunc(P("t^2")), shift) == RatFunc(P("t^2 + 2*t + 1")));

  std::array<std::optional<RatFunc>, kNumVars> ident{};
  ident[index(Var::t)] = RatFunc(P("t"));
  ident[index(Var::s)] = RatFunc(P("s"));
  RatFunc g(P("t*s + 1"), P("t - s^2"));
  CHECK(substitute_rational(g, ident) == g);

  std::array<std::optional<RatFunc>, kNumVars> vanish{};
  vanish[index(Var::s)] = RatFunc(P("t"));
  CHECK_THROWS_AS(substitute_rational(RatFunc(P("1"), P("t - s")), vanish), Error);
}

TEST_CASE("ratfunc arithmetic round trip") {
  RatFunc a(P("t + s"), P("t - 1")), b(P("s^2"), P("t*s + 1"));
  CHECK((a + b) - b == a);
  CHECK((a * b) / b == a);
  CHECK(RatFunc(P("1"), P("t")).derivative(Var::t) == RatFunc(P("-1"), P("t^2")));
}

TEST_CASE("number field arithmetic") {
  FieldPtr K = make_field(Q({2, 0, 1}));
  AlgNum b = AlgNum::generator(K);
  CHECK(b.inverse() == AlgNum(K, {Rational(0), Rational(-1, 2)}));
  CHECK(b * b == AlgNum::from_rational(K, -2));
  AlgNum eighteen = AlgNum::from_rational(K, 18), twelve = AlgNum::from_rational(K, 12);
  CHECK(eighteen * b * b - twelve == AlgNum::from_rational(K, -48));
  CHECK_THROWS_AS(AlgNum(K, {}).inverse(), Error);
  FieldPtr L = make_field(Q({-2, 0, 0, 1}));
  CHECK_THROWS_AS(b + AlgNum::generator(L), Error);
}

TEST_CASE("number field inverse property") {
  std::mt19937 rng(21);
  for (const auto& mp : {Q({2, 0, 1}), Q({-2, 0, 0, 1})}) {
    FieldPtr K = make_field(mp);
    for (int i = 0; i < 100; ++i) {
      AlgNum x = random_element(rng, K), y = random_element(rng, K);
      if (y.is_zero()) y = AlgNum::generator(K);
      CHECK((x * y) * y.inverse() == x);
    }
  }
}

TEST_CASE("complex roots") {
  auto r = complex_roots(P("s^2 + 2"));
  REQUIRE(r.size() == 2);
  for (const auto& z : r) {
    CHECK(z.field()->minpoly() == Q({2, 0, 1}));
    Complex v = z.approx(30);
    CHECK(v.re.abs().to_double() < 1e-25);
    CHECK(std::abs(std::abs(v.im.to_double()) - std::sqrt(2.0)) < 1e-12);
  }

  auto three = complex_roots(P("s - 3"));
  REQUIRE(three.size() == 1);
  CHECK(three[0].is_rational());
  CHECK(three[0].coord(0) == Rational(3));

  QPoly cubic = Q({-2, 0, 0, 1});
  auto c = complex_roots(P("s^3 - 2"));
  REQUIRE(c.size() == 3);
  int real = 0;
  for (const auto& z : c) {
    CHECK(z.field()->minpoly() == cubic);
    if (z.embedding()->disk.real) ++real;
  }
  CHECK(real == qp::count_real_roots(cubic));
  CHECK(real == 1);

  for (const auto& z : c) {
    Real coarse = eval_poly(cubic, refine_root(cubic, z.embedding()->disk.z, 15)).abs();
    Real fine = eval_poly(cubic, refine_root(cubic, z.embedding()->disk.z, 60)).abs();
    CHECK(fine <= coarse);
    CHECK(fine.to_double() < 1e-50);
  }

  CHECK_THROWS_AS(complex_roots(MPoly()), Error);
}

TEST_CASE("complex roots count equals degree") {
  for (const char* m : {"s^6 - 1", "s^4 + 1", "(s^2 - 2)*(s^3 + s + 1)*(s - 5)", "s^5 - 3*s + 1"}) {
    MPoly p = P(m);
    CHECK(complex_roots(p).size() == static_cast<std::size_t>(p.degree(Var::s)));
  }
}

TEST_CASE("ill-conditioned roots are isolated") {
  QPoly w{Rational(1)};
  for (int i = 1; i <= 24; ++i) w = qp::mul(w, Q({-i, 1}));
  const auto disks = isolate_roots(w, 50);
  REQUIRE(disks.size() == 24);
  std::set<long> hit;
  for (const auto& d : disks) {
    CHECK(d.real);
    const long k = std::lround(d.z.re.to_double());
    hit.insert(k);
    CHECK((d.z.re - Real(Rational(k), d.z.re.precision())).abs().to_double() < 1e-45);
  }
  CHECK(hit.size() == 24);
}

TEST_CASE("polynomials over a number field") {
  CHECK(KPoly(rational_field(), P("54*s^2 - 54*t^2")).divisible_by(P("t + s")));
  CHECK(KPoly(rational_field(), P("t^3*s - 7")).divisible_by(MPoly(1)));

  FieldPtr K = make_field(Q({2, 0, 1}));
  AlgNum b = AlgNum::generator(K);
  auto W = [&](const char* s) { return KPoly(K, P(s)); };
  KPoly w1 = W("18*s^2*t - 6*t^3 - 6*t"), w2 = W("6*s^3 - 18*s*t^2 + 6*s"), w3 = W("-24*s*t");
  AlgNum w01 = AlgNum::from_rational(K, 18) * b * b - AlgNum::from_rational(K, 12);
  AlgNum w02 = AlgNum::from_rational(K, 6) * b * b * b - AlgNum::from_rational(K, 12) * b;
  AlgNum w03 = AlgNum::from_rational(K, -24) * b;
  KPoly first = w2 * w03 - w3 * w02;
  CHECK(first == KPoly(K, P("-144*w*s*(s^2 - 3*t^2 + 4*t + 1)")));
  CHECK_FALSE(first.divisible_by(P("t^2 + s^2 + 1")));
  KPoly second = w3 * w01 - w1 * w03;
  KPoly third = w1 * w02 - w2 * w01;
  CHECK_FALSE(second.divisible_by(P("t^2 + s^2 + 1")));
  CHECK_FALSE(third.divisible_by(P("t^2 + s^2 + 1")));
}

TEST_CASE("gcd over a number field") {
  FieldPtr K = make_field(Q({1, 0, 1}));
  // t^2 + s^2 = (t + b s)(t - b s) over Q(i)
  KPoly f(K, P("t^2 + s^2")), g(K, P("(t + w*s)*(t^2 + 3*s + 1)"));
  KPoly h = kpoly_gcd(f, g, Var::t, Var::s);
  CHECK(h.degree(Var::s) == 1);
  CHECK(h.degree(Var::t) == 1);
  AlgNum b = AlgNum::generator(K);
  AlgNum one = AlgNum::from_rational(K, 1);
  CHECK(h.evaluate_all({{Var::t, -b}, {Var::s, one}}).is_zero());

  KPoly u(K, P("t*s + 1")), v(K, P("t - s"));
  CHECK(kpoly_gcd(u, v, Var::t, Var::s).degree(Var::s) == 0);
}
