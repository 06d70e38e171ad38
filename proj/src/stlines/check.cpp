#include <algorithm>

#include "ratlines/kernel/error.hpp"
#include "ratlines/kernel/gcd.hpp"
#include "ratlines/kernel/kpoly.hpp"
#include "ratlines/stlines/stlines.hpp"
#include "modfilter.hpp"
#include "series.hpp"
#include "witness.hpp"

namespace ratlines {

using namespace detail;

namespace {

Rational a_value(int k) { return k == 0 ? Rational(0) : Rational(k % 2 ? (k + 1) / 2 : -(k / 2)); }

AlgNum reduce_at(const FieldPtr& K, const MPoly& f, const Rational& a) {
  MPoly u = f.evaluate(Var::t, a);
  return AlgNum(K, qp::from_mpoly(u, Var::s));
}

bool divides_any(const MPoly& alpha, const std::array<MPoly, 3>& dens) {
  for (const auto& d : dens)
    if (!d.is_constant() && d.divide_exact(alpha)) return true;
  return false;
}

struct Admissible {
  Rational a;
  MPoly m;
};

std::optional<Admissible> admissible_value(const MPoly& alpha, const Rational& a, const std::array<MPoly, 3>& dens) {
  MPoly m = alpha.evaluate(Var::t, a);
  if (m.degree(Var::s) != alpha.degree(Var::s)) return std::nullopt;
  if (!poly_gcd(m, m.derivative(Var::s)).is_constant()) return std::nullopt;
  for (const auto& d : dens) {
    if (d.is_constant()) continue;
    MPoly dm = d.evaluate(Var::t, a);
    if (dm.is_zero() || !poly_gcd(m, dm).is_constant()) return std::nullopt;
  }
  return Admissible{a, std::move(m)};
}

// Components of W x W0 in the power basis are W_j c_k - W_k c_j; all must vanish mod alpha.
bool cross_divisible(const std::array<MPoly, 3>& W, const std::array<AlgNum, 3>& w0, const MPoly& alpha) {
  const int deg = w0[0].field()->degree();
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    for (int e = 0; e < deg; ++e) {
      MPoly c = W[j] * MPoly(w0[k].coord(e)) - W[k] * MPoly(w0[j].coord(e));
      if (!c.is_zero() && !c.divide_exact(alpha)) return false;
    }
  }
  return true;
}

LineForms line_forms(const FundamentalData& fd) {
  LineForms f;
  f.D = MPoly(1);
  for (const auto& c : fd.surface().x) f.D = exact_quotient(f.D * c.den(), poly_gcd(f.D, c.den()));
  for (int i = 0; i < 3; ++i) {
    const RatFunc& c = fd.surface().x[i];
    f.X[i] = c.num() * exact_quotient(f.D, c.den());
    f.degree = std::max(f.degree, f.X[i].total_degree());
  }
  f.degree = std::max(f.degree, f.D.total_degree());
  return f;
}

// Whether x maps the branch of alpha through (a, b) into the line P0 + K W0,
// checked to order n. At the Bezout bound deg(alpha) deg(forms) + 1 the answer
// is exact for the whole absolute component through (a, b).
bool branch_on_line(const LineForms& lf, const std::array<AlgNum, 3>& p0, const std::array<AlgNum, 3>& w0,
                    const MPoly& alpha, const Rational& a, const AlgNum& b, std::size_t n) {
  Series s = branch_series(alpha, a, b, n);
  Series d = series_compose(lf.D, a, s, n);
  std::array<Series, 3> y;
  for (int i = 0; i < 3; ++i) {
    y[i] = series_compose(lf.X[i], a, s, n);
    for (std::size_t r = 0; r < n; ++r) y[i][r] = y[i][r] - p0[i] * d[r];
  }
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    for (std::size_t r = 0; r < n; ++r)
      if (!(y[j][r] * w0[k] - y[k][r] * w0[j]).is_zero()) return false;
  }
  return true;
}

}  // namespace

std::array<MPoly, 3> tangent_field(const FundamentalData& fd, const MPoly& alpha) {
  const RatFunc at(alpha.derivative(Var::t)), as(alpha.derivative(Var::s));
  std::array<RatFunc, 3> w;
  for (int i = 0; i < 3; ++i) w[i] = fd.xt()[i] * as - fd.xs()[i] * at;
  MPoly L = MPoly(1);
  for (const auto& c : w) L = exact_quotient(L * c.den(), poly_gcd(L, c.den()));
  std::array<MPoly, 3> W;
  for (int i = 0; i < 3; ++i) W[i] = w[i].num() * exact_quotient(L, w[i].den());
  return W;
}

ComponentVerdict check_component(const MPoly& alpha, const FundamentalData& fd, const StlinesOptions& options) {
  return check_component_from(alpha, fd, 0, options);
}

ComponentVerdict check_component_from(const MPoly& alpha, const FundamentalData& fd, int start,
                                      const StlinesOptions& options) {
  if (!alpha.depends_on(Var::s)) throw Error(ErrorCode::InvalidArgument, "check_component needs a factor in s");
  ComponentVerdict verdict;
  const auto dens = fd.surface().denominators();
  if (divides_any(alpha, dens)) {
    verdict.rejected = RejectReason::AtInfinity;
    return verdict;
  }
  const auto W = tangent_field(fd, alpha);
  const LineForms lf = line_forms(fd);
  bool degenerate = true;
  for (const auto& c : W)
    if (!c.is_zero() && !c.divide_exact(alpha)) degenerate = false;
  if (degenerate) {
    verdict.rejected = RejectReason::Degenerate;
    return verdict;
  }

  for (int k = start, tries = 0; tries < options.max_retries; ++k, ++tries) {
    check_deadline(options);
    auto adm = admissible_value(alpha, a_value(k), dens);
    if (!adm) continue;
    const Rational& a = adm->a;

    std::vector<std::pair<FieldPtr, std::vector<EmbeddingPtr>>> fields;
    for (const auto& root : complex_roots(adm->m, options.digits)) {
      auto it = std::find_if(fields.begin(), fields.end(),
                             [&](const auto& f) { return f.first->minpoly() == root.field()->minpoly(); });
      if (it == fields.end()) fields.push_back({root.field(), {root.embedding()}});
      else it->second.push_back(root.embedding());
    }

    const std::size_t bound = static_cast<std::size_t>(alpha.total_degree()) * lf.degree + 1;
    std::vector<std::size_t> survivors;
    for (std::size_t f = 0; f < fields.size(); ++f) {
      check_deadline(options);
      if (!modular_rejects(alpha, a, fields[f].first->minpoly(), lf, W, std::min<std::size_t>(bound, 64)))
        survivors.push_back(f);
    }

    std::vector<std::array<AlgNum, 3>> w0s;
    bool zero_tangent = false;
    for (std::size_t f : survivors) {
      const FieldPtr& K = fields[f].first;
      std::array<AlgNum, 3> w0{reduce_at(K, W[0], a), reduce_at(K, W[1], a), reduce_at(K, W[2], a)};
      if (w0[0].is_zero() && w0[1].is_zero() && w0[2].is_zero()) zero_tangent = true;
      w0s.push_back(std::move(w0));
    }
    if (zero_tangent) continue;

    for (std::size_t i = 0; i < survivors.size(); ++i) {
      const auto& [K, embeddings] = fields[survivors[i]];
      const auto& w0 = w0s[i];
      const AlgNum b = K->degree() == 1 ? AlgNum::from_rational(K, -K->minpoly()[0]) : AlgNum::generator(K);
      std::array<AlgNum, 3> point{AlgNum(K, {}), AlgNum(K, {}), AlgNum(K, {})};
      for (int c = 0; c < 3; ++c) {
        const RatFunc& xc = fd.surface().x[c];
        point[c] = reduce_at(K, xc.num(), a) / reduce_at(K, xc.den(), a);
      }
      check_deadline(options);
      if (!cross_divisible(W, w0, alpha) && !branch_on_line(lf, point, w0, alpha, a, b, bound)) continue;
      verdict.lines.push_back(make_witness(alpha, K, point, w0, embeddings, false, a, options.digits));
    }
    if (verdict.lines.empty()) verdict.rejected = RejectReason::NotLine;
    return verdict;
  }
  throw Error(ErrorCode::RetryBudgetExhausted, "no admissible parameter value for " + alpha.to_string());
}

ComponentVerdict vertical_line_check(const MPoly& c_factor, const FundamentalData& fd, const StlinesOptions& options) {
  if (c_factor.variables() != bit(Var::t)) throw Error(ErrorCode::InvalidArgument, "vertical check needs a factor in t only");
  ComponentVerdict verdict;
  const auto roots = complex_roots(c_factor, options.digits);
  const FieldPtr K = roots.front().field();
  std::vector<EmbeddingPtr> embeddings;
  for (const auto& r : roots) embeddings.push_back(r.embedding());

  auto at_c = [&](const MPoly& p) {
    if (K->degree() == 1) return KPoly(K, p.evaluate(Var::t, -K->minpoly()[0]));
    return KPoly(K, p.substitute(Var::t, MPoly::variable(KPoly::kGen)));
  };
  std::array<KPoly, 3> P{KPoly(K), KPoly(K), KPoly(K)}, Q = P, V = P;
  for (int i = 0; i < 3; ++i) {
    P[i] = at_c(fd.surface().x[i].num());
    Q[i] = at_c(fd.surface().x[i].den());
    if (Q[i].is_zero()) {
      verdict.rejected = RejectReason::AtInfinity;
      return verdict;
    }
  }
  for (int i = 0; i < 3; ++i) {
    V[i] = P[i].derivative(Var::s) * Q[i] - P[i] * Q[i].derivative(Var::s);
    for (int j = 0; j < 3; ++j)
      if (j != i) V[i] = V[i] * Q[j] * Q[j];
  }
  if (V[0].is_zero() && V[1].is_zero() && V[2].is_zero()) {
    verdict.rejected = RejectReason::Degenerate;
    return verdict;
  }
  std::array<KPoly, 3> dV{V[0].derivative(Var::s), V[1].derivative(Var::s), V[2].derivative(Var::s)};
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    if (!(V[j] * dV[k] - V[k] * dV[j]).is_zero()) {
      verdict.rejected = RejectReason::NotLine;
      return verdict;
    }
  }
  auto value = [&](const KPoly& p, const Rational& s0) {
    return AlgNum(K, qp::from_mpoly(p.evaluate(Var::s, s0).raw(), KPoly::kGen));
  };
  for (int k = 0;; ++k) {
    const Rational s0 = a_value(k);
    std::array<AlgNum, 3> dir{value(V[0], s0), value(V[1], s0), value(V[2], s0)};
    if (dir[0].is_zero() && dir[1].is_zero() && dir[2].is_zero()) continue;
    std::array<AlgNum, 3> q{value(Q[0], s0), value(Q[1], s0), value(Q[2], s0)};
    if (q[0].is_zero() || q[1].is_zero() || q[2].is_zero()) continue;
    std::array<AlgNum, 3> point{value(P[0], s0) / q[0], value(P[1], s0) / q[1], value(P[2], s0) / q[2]};
    verdict.lines.push_back(make_witness(c_factor, K, point, dir, embeddings, true, Rational(0), options.digits));
    return verdict;
  }
}

}  // namespace ratlines
