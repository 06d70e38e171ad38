#include <algorithm>

#include "ratlines/kernel/error.hpp"
#include "ratlines/kernel/factor.hpp"
#include "ratlines/kernel/gcd.hpp"
#include "ratlines/kernel/resultant.hpp"
#include "ratlines/stlines/stlines.hpp"

namespace ratlines {

namespace {

MPoly normalized(const MPoly& f) { return f.is_zero() || f.is_constant() ? (f.is_zero() ? f : MPoly(1)) : f.primitive_integer(); }

RatFunc omega() { return RatFunc(MPoly::variable(kOmega)); }

RatFunc cubic_in_omega(const RatFunc& c3, const RatFunc& c2, const RatFunc& c1, const RatFunc& c0) {
  const RatFunc w = omega();
  return ((c3 * w + c2) * w + c1) * w + c0;
}

void push_unique(std::vector<MPoly>& list, const MPoly& p) {
  if (p.is_constant()) return;
  MPoly n = p.primitive_integer();
  if (std::find(list.begin(), list.end(), n) == list.end()) list.push_back(std::move(n));
}

}  // namespace

Branch branch_of(const FundamentalData& fd) {
  const auto& st = fd.star_form();
  return st.fstar.is_zero() && st.gstar.is_zero() ? Branch::StarDegenerate : Branch::General;
}

AsymptoticPoly asymptotic_poly(const FundamentalData& fd) {
  if (fd.is_plane()) throw Error(ErrorCode::PlaneInput, "e*, f*, g* vanish identically");
  const auto& st = fd.star_form();
  const RatFunc w = omega();
  AsymptoticPoly out;
  out.Mtilde = (st.estar + RatFunc(2) * st.fstar * w + st.gstar * w * w).num();
  out.M = out.Mtilde.depends_on(kOmega) ? content_primitive(out.Mtilde, kOmega).primitive : out.Mtilde;
  return out;
}

GeodesicPoly geodesic_poly(const FundamentalData& fd, Branch branch) {
  if (branch != branch_of(fd)) throw Error(ErrorCode::DegenerateBranchMismatch, "branch does not match f*, g*");
  const auto& st = fd.star_form();
  GeodesicPoly out;
  const RatFunc two(2);
  if (branch == Branch::General) {
    out.A = two * (st.fstar + st.gstar * omega());
    out.B = cubic_in_omega(st.gstar.derivative(Var::s), two * st.fstar.derivative(Var::s) + st.gstar.derivative(Var::t),
                           two * st.fstar.derivative(Var::t) + st.estar.derivative(Var::s), st.estar.derivative(Var::t));
  } else {
    if (st.estar.is_zero()) throw Error(ErrorCode::PlaneInput, "e*, f*, g* vanish identically");
    const RatFunc es = st.estar.derivative(Var::s);
    out.A = es;
    out.B = cubic_in_omega(RatFunc(), es.derivative(Var::s), two * es.derivative(Var::t),
                           st.estar.derivative(Var::t).derivative(Var::t));
  }
  const auto& G = fd.christoffel_hat();
  const RatFunc R = cubic_in_omega(G[kG122], two * G[kG112] - G[kG222], G[kG111] - two * G[kG212], -G[kG211]);
  out.Ntilde = (out.A * R + fd.first_form().Idet * out.B).num();
  if (out.Ntilde.is_zero() || !out.Ntilde.depends_on(kOmega)) out.N = out.Ntilde.is_zero() ? out.Ntilde : MPoly(1);
  else out.N = content_primitive(out.Ntilde, kOmega).primitive;
  return out;
}

std::vector<MPoly> pipeline_denominators(const FundamentalData& fd, const GeodesicPoly& geo) {
  std::vector<MPoly> dens;
  for (const auto& c : fd.surface().x) push_unique(dens, c.den());
  const auto& st = fd.star_form();
  for (const RatFunc* r : {&st.estar, &st.fstar, &st.gstar, &geo.A, &geo.B, &fd.first_form().Idet})
    push_unique(dens, r->den());
  for (const auto& g : fd.christoffel_hat()) push_unique(dens, g.den());
  return dens;
}

std::pair<MPoly, MPoly> eliminate_omega(const MPoly& M, const MPoly& N, std::span<const MPoly> denominators) {
  MPoly xi_tilde;
  if (M.is_zero() || N.is_zero()) xi_tilde = MPoly();
  else if (!M.depends_on(kOmega) && !N.depends_on(kOmega)) xi_tilde = MPoly(1);
  else xi_tilde = resultant_wrt(M, N, kOmega);
  MPoly xi = xi_tilde;
  for (const auto& d : denominators) xi = remove_common_factors(xi, d);
  return {xi_tilde, xi};
}

DeltaPolys delta_polys(const FundamentalData& fd, const MPoly& Mtilde, const MPoly& Ntilde, const RatFunc& A,
                       Branch branch) {
  auto content_w = [](const MPoly& p) {
    if (p.is_zero()) return MPoly();
    return p.depends_on(kOmega) ? content_primitive(p, kOmega).content : p;
  };
  DeltaPolys d;
  d.raw[0] = normalized(content_w(A.num()));
  d.raw[1] = normalized(content_w(Mtilde) * content_w(Ntilde));
  if (branch == Branch::General) {
    const auto& st = fd.star_form();
    d.raw[2] = (st.estar * st.gstar - st.fstar * st.fstar).num();
  } else {
    d.raw[2] = MPoly(1);
  }
  d.raw[3] = fd.cross_norm_sq().num();
  for (int i = 0; i < 4; ++i) d.squarefree[i] = d.raw[i].is_zero() ? MPoly() : squarefree_part(d.raw[i]);
  return d;
}

CandidateSet assemble_candidates(const FundamentalData& fd, const AsymptoticPoly& asym, const GeodesicPoly& geo,
                                 Branch branch) {
  CandidateSet c;
  c.branch = branch;
  c.Mtilde = asym.Mtilde;
  c.M = asym.M;
  c.Ntilde = geo.Ntilde;
  c.N = geo.N;
  const auto dens = pipeline_denominators(fd, geo);
  if (branch == Branch::General) {
    std::tie(c.xi_tilde, c.xi) = eliminate_omega(c.M, c.N, dens);
  } else {
    c.xi_tilde = asym.Mtilde;
    c.xi = c.xi_tilde;
    for (const auto& d : dens) c.xi = remove_common_factors(c.xi, d);
  }
  c.delta = delta_polys(fd, c.Mtilde, c.Ntilde, geo.A, branch);

  bool mu_zero = c.xi.is_zero();
  for (const auto& d : c.delta.squarefree) mu_zero = mu_zero || d.is_zero();
  if (!mu_zero) {
    std::vector<MPoly> factors;
    for (const MPoly* p : {&c.xi, &c.delta.squarefree[0], &c.delta.squarefree[1], &c.delta.squarefree[2],
                           &c.delta.squarefree[3]})
      if (!p->is_constant())
        for (auto& f : irreducible_factors(*p)) push_unique(factors, f);
    std::sort(factors.begin(), factors.end(), canonical_less);
    c.mu = MPoly(1);
    for (const auto& f : factors) c.mu *= f;
    c.mu_factors = std::move(factors);
  }

  const auto& st = fd.star_form();
  // Numerator of the unscaled symbol Gamma^1_22 = Gamma-hat^1_22 / Idet.
  MPoly gamma = fd.christoffel_hat()[kG122].num();
  const MPoly& idet = fd.first_form().Idet.num();
  if (!gamma.is_zero())
    for (MPoly g = poly_gcd(gamma, idet); !g.is_constant(); g = poly_gcd(gamma, idet)) gamma = *gamma.divide_exact(g);
  c.eta = poly_gcd(st.gstar.num(), gamma);
  c.ruled = mu_zero || c.eta.is_zero();
  return c;
}

}  // namespace ratlines
