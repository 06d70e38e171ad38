#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <string>

#include "ratlines/geometry/surface.hpp"
#include "ratlines/stlines/stlines.hpp"

namespace ratlines::testing {

using RVec = std::array<Rational, 3>;

/// Point with a zero coordinate where the direction's first nonzero
/// coordinate (scaled to 1) sits.
inline std::pair<RVec, RVec> canonical_line(RVec p, RVec d) {
  int k = 0;
  while (d[k] == 0) ++k;
  const Rational scale = d[k];
  for (auto& c : d) c /= scale;
  const Rational shift = p[k];
  for (int i = 0; i < 3; ++i) p[i] -= shift * d[i];
  return {p, d};
}

inline std::string line_key(const std::pair<RVec, RVec>& l) {
  std::string out;
  for (const auto& c : l.first) out += to_string(c) + ",";
  out += "|";
  for (const auto& c : l.second) out += to_string(c) + ",";
  return out;
}

/// Lines of a report with rational witnesses as canonical keys; nullopt when
/// some witness lives in a proper extension.
inline std::optional<std::set<std::string>> rational_line_set(const AlgorithmReport& r) {
  std::set<std::string> out;
  for (const auto& w : r.lines) {
    if (w.field->degree() > 1) return std::nullopt;
    RVec p, d;
    for (int i = 0; i < 3; ++i) {
      p[i] = w.point[i].coord(0);
      d[i] = w.direction[i].coord(0);
    }
    out.insert(line_key(canonical_line(p, d)));
  }
  return out;
}

/// Rotation with cosine 3/5 and sine 4/5 about z, then translation (1, 2, -3).
struct RigidMotion {
  Rational c{3, 5}, s{4, 5};
  RVec v{Rational(1), Rational(2), Rational(-3)};

  RVec rotate(const RVec& p) const { return {c * p[0] - s * p[1], s * p[0] + c * p[1], p[2]}; }
  RVec move(const RVec& p) const {
    RVec q = rotate(p);
    for (int i = 0; i < 3; ++i) q[i] += v[i];
    return q;
  }
  SurfaceParam apply(const SurfaceParam& S) const {
    SurfaceParam out = S;
    const RatFunc C{MPoly(c)}, Sn{MPoly(s)};
    out.x[0] = C * S.x[0] - Sn * S.x[1] + RatFunc(MPoly(v[0]));
    out.x[1] = Sn * S.x[0] + C * S.x[1] + RatFunc(MPoly(v[1]));
    out.x[2] = S.x[2] + RatFunc(MPoly(v[2]));
    return out;
  }
  /// Image of a line set produced by rational_line_set.
  std::set<std::string> apply(const AlgorithmReport& r) const {
    std::set<std::string> out;
    for (const auto& w : r.lines) {
      RVec p, d;
      for (int i = 0; i < 3; ++i) {
        p[i] = w.point[i].coord(0);
        d[i] = w.direction[i].coord(0);
      }
      out.insert(line_key(canonical_line(move(p), rotate(d))));
    }
    return out;
  }
};

/// t -> 2t + 1, s -> 3s - 2.
inline SurfaceParam affine_reparam(const SurfaceParam& S) {
  const RatFunc t(MPoly::variable(Var::t)), s(MPoly::variable(Var::s));
  std::array<std::optional<RatFunc>, kNumVars> map{};
  map[index(Var::t)] = RatFunc(2) * t + RatFunc(1);
  map[index(Var::s)] = RatFunc(3) * s - RatFunc(2);
  SurfaceParam out = S;
  for (auto& c : out.x) c = substitute_rational(c, map);
  return out;
}

}  // namespace ratlines::testing
