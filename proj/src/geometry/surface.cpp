#include "ratlines/geometry/surface.hpp"

#include "ratlines/kernel/error.hpp"

namespace ratlines {

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

RatFunc dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 derivative(const Vec3& a, Var v) { return {a[0].derivative(v), a[1].derivative(v), a[2].derivative(v)}; }

void SurfaceParam::validate() const {
  const VarSet allowed = static_cast<VarSet>(bit(Var::t) | bit(Var::s));
  bool all_constant = true;
  for (const auto& c : x) {
    if (c.variables() & ~allowed) throw Error(ErrorCode::InvalidArgument, "surface components must depend on t and s only");
    if (c.variables() != 0) all_constant = false;
  }
  if (all_constant) throw Error(ErrorCode::InvalidArgument, "all components are constant");
}

std::array<MPoly, 3> SurfaceParam::denominators() const { return {x[0].den(), x[1].den(), x[2].den()}; }

FundamentalData::FundamentalData(SurfaceParam surface) : surface_(std::move(surface)) { surface_.validate(); }

const Vec3& FundamentalData::xt() const {
  std::call_once(partials_once_, [this] {
    xt_ = derivative(surface_.x, Var::t);
    xs_ = derivative(surface_.x, Var::s);
    normal_ = cross(xt_, xs_);
  });
  return xt_;
}

const Vec3& FundamentalData::xs() const {
  xt();
  return xs_;
}

const Vec3& FundamentalData::normal() const {
  xt();
  return normal_;
}

const FirstForm& FundamentalData::first_form() const {
  std::call_once(first_once_, [this] {
    const Vec3 &a = xt(), &b = xs();
    first_.E = dot(a, a);
    first_.F = dot(a, b);
    first_.G = dot(b, b);
    first_.Idet = first_.E * first_.G - first_.F * first_.F;
  });
  return first_;
}

const StarForm& FundamentalData::star_form() const {
  std::call_once(star_once_, [this] {
    const Vec3& n = normal();
    star_.estar = dot(derivative(xt(), Var::t), n);
    star_.fstar = dot(derivative(xt(), Var::s), n);
    star_.gstar = dot(derivative(xs(), Var::s), n);
  });
  return star_;
}

const ChristoffelHat& FundamentalData::christoffel_hat() const {
  std::call_once(gamma_once_, [this] {
    const auto& [E, F, G, I] = first_form();
    const RatFunc Et = E.derivative(Var::t), Es = E.derivative(Var::s);
    const RatFunc Ft = F.derivative(Var::t), Fs = F.derivative(Var::s);
    const RatFunc Gt = G.derivative(Var::t), Gs = G.derivative(Var::s);
    const RatFunc half(MPoly(Rational(1, 2)));
    const RatFunc two(2);
    gamma_[kG111] = half * (G * Et - two * F * Ft + F * Es);
    gamma_[kG211] = half * (two * E * Ft - E * Es - F * Et);
    gamma_[kG112] = half * (G * Es - F * Gt);
    gamma_[kG212] = half * (E * Gt - F * Es);
    gamma_[kG122] = half * (two * G * Fs - G * Gt - F * Gs);
    gamma_[kG222] = half * (E * Gs - two * F * Fs + F * Gt);
  });
  return gamma_;
}

const RatFunc& FundamentalData::cross_norm_sq() const {
  std::call_once(norm_once_, [this] { norm_sq_ = dot(normal(), normal()); });
  return norm_sq_;
}

bool FundamentalData::is_plane() const {
  const auto& st = star_form();
  return st.estar.is_zero() && st.fstar.is_zero() && st.gstar.is_zero();
}

FirstForm first_form(const SurfaceParam& S) { return FundamentalData(S).first_form(); }
StarForm star_form(const SurfaceParam& S) { return FundamentalData(S).star_form(); }
ChristoffelHat christoffel_hat(const SurfaceParam& S) { return FundamentalData(S).christoffel_hat(); }
RatFunc cross_norm_sq(const SurfaceParam& S) { return FundamentalData(S).cross_norm_sq(); }

}  // namespace ratlines
