#pragma once

#include <array>
#include <memory>
#include <mutex>
#include <string>

#include "ratlines/kernel/ratfunc.hpp"

namespace ratlines {

using Vec3 = std::array<RatFunc, 3>;

Vec3 cross(const Vec3& a, const Vec3& b);
RatFunc dot(const Vec3& a, const Vec3& b);
Vec3 derivative(const Vec3& a, Var v);

/// Rational parameterization (x(t,s), y(t,s), z(t,s)).
struct SurfaceParam {
  std::string name;
  Vec3 x;

  /// Throws Error(InvalidArgument) when a component involves variables other
  /// than t and s, or when all three components are constant.
  void validate() const;
  /// Denominator polynomials of the three components.
  std::array<MPoly, 3> denominators() const;
};

struct FirstForm {
  RatFunc E, F, G, Idet;
};

struct StarForm {
  RatFunc estar, fstar, gstar;
};

/// Index order of christoffel_hat(): G111, G211, G112, G212, G122, G222 where
/// Gijk stands for the scaled symbol with upper index i and lower jk.
enum ChristoffelIndex { kG111, kG211, kG112, kG212, kG122, kG222 };
using ChristoffelHat = std::array<RatFunc, 6>;

/// Differential data of a parameterization, each piece computed once on
/// first use. Safe to share between threads.
class FundamentalData {
 public:
  explicit FundamentalData(SurfaceParam surface);

  const SurfaceParam& surface() const { return surface_; }
  const Vec3& xt() const;
  const Vec3& xs() const;
  /// x_t cross x_s.
  const Vec3& normal() const;

  const FirstForm& first_form() const;
  const StarForm& star_form() const;
  const ChristoffelHat& christoffel_hat() const;
  const RatFunc& cross_norm_sq() const;

  /// e*, f*, g* all identically zero.
  bool is_plane() const;

 private:
  SurfaceParam surface_;
  mutable std::once_flag partials_once_, first_once_, star_once_, gamma_once_, norm_once_;
  mutable Vec3 xt_, xs_, normal_;
  mutable FirstForm first_;
  mutable StarForm star_;
  mutable ChristoffelHat gamma_;
  mutable RatFunc norm_sq_;
};

FirstForm first_form(const SurfaceParam& S);
StarForm star_form(const SurfaceParam& S);
ChristoffelHat christoffel_hat(const SurfaceParam& S);
RatFunc cross_norm_sq(const SurfaceParam& S);

}  // namespace ratlines
