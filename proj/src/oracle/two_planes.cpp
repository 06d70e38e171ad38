#include "ratlines/kernel/error.hpp"
#include "ratlines/kernel/gcd.hpp"
#include "ratlines/kernel/kpoly.hpp"
#include "ratlines/kernel/resultant.hpp"
#include "ratlines/oracle/oracle.hpp"

namespace ratlines {

namespace {

struct PlanePair {
  // Q = Ny * ly - slope * Nx * lx - offset * l, with l = lcm(Dx, Dother).
  MPoly ny, nx, l;
};

PlanePair plane_pair(const RatFunc& x, const RatFunc& y) {
  const MPoly l = exact_quotient(x.den() * y.den(), poly_gcd(x.den(), y.den()));
  return {y.num() * exact_quotient(l, y.den()), x.num() * exact_quotient(l, x.den()), l};
}

MPoly resultant_or_power(const MPoly& f, const MPoly& g, Var v) {
  if (f.is_zero() || g.is_zero()) return MPoly();
  if (!f.depends_on(v) && !g.depends_on(v)) return MPoly(1);
  return resultant_wrt(f, g, v);
}

}  // namespace

TwoPlanesSystem two_planes_system(const SurfaceParam& S) {
  const PlanePair p1 = plane_pair(S.x[0], S.x[1]), p2 = plane_pair(S.x[0], S.x[2]);
  const MPoly a = MPoly::variable(Var::a), b = MPoly::variable(Var::b);
  const MPoly c = MPoly::variable(Var::c), d = MPoly::variable(Var::d);
  const MPoly q1 = p1.ny - a * p1.nx - b * p1.l;
  const MPoly q2 = p2.ny - c * p2.nx - d * p2.l;
  TwoPlanesSystem sys;
  sys.P = resultant_or_power(q1, q2, Var::s);
  sys.P_degree = sys.P.degree(Var::t);
  for (auto& e : sys.P.coefficients(Var::t))
    if (!e.is_zero()) sys.equations.push_back(std::move(e));
  return sys;
}

bool two_planes_vanish(const SurfaceParam& S, const std::array<AlgNum, 3>& point,
                       const std::array<AlgNum, 3>& direction, bool eliminate_t) {
  const FieldPtr& K = point[0].field();
  if (!(direction[0] == AlgNum::from_rational(K, 1)))
    throw Error(ErrorCode::InvalidArgument, "two-planes certificate needs direction x-coordinate 1");
  const AlgNum a = direction[1], c = direction[2];
  const AlgNum b = point[1] - a * point[0], d = point[2] - c * point[0];
  const PlanePair p1 = plane_pair(S.x[0], S.x[1]), p2 = plane_pair(S.x[0], S.x[2]);
  const KPoly q1 = KPoly(K, p1.ny) - KPoly(K, p1.nx) * a - KPoly(K, p1.l) * b;
  const KPoly q2 = KPoly(K, p2.ny) - KPoly(K, p2.nx) * c - KPoly(K, p2.l) * d;
  const MPoly r = resultant_or_power(q1.raw(), q2.raw(), eliminate_t ? Var::t : Var::s);
  return KPoly(K, r).is_zero();
}

}  // namespace ratlines
