#include "ratlines/kernel/factor.hpp"

#include <algorithm>

#include "factor_internal.hpp"
#include "ratlines/kernel/error.hpp"
#include "ratlines/kernel/gcd.hpp"

namespace ratlines {

using namespace detail;

namespace {

std::vector<MPoly> factor_univariate(const MPoly& f, Var v) {
  std::vector<MPoly> out;
  for (const auto& g : factor_squarefree_uz(to_uz(f.primitive_integer(), v)))
    out.push_back(from_uz(g, v).primitive_integer());
  return out;
}

std::vector<MPoly> factor_squarefree(const MPoly& f0) {
  if (f0.is_constant()) return {};
  const MPoly f = f0.primitive_integer();
  const VarSet vars = f.variables();
  const int n = var_count(vars);
  if (n > 2) throw Error(ErrorCode::InvalidArgument, "factor_over_Q supports at most two variables");
  const Var a = var_at(first_var(vars));
  if (n == 1) return factor_univariate(f, a);
  const Var b = var_at(first_var(static_cast<VarSet>(vars & ~bit(a))));

  std::vector<MPoly> out;
  auto [ca, pa] = content_primitive(f, b);  // ca depends on a only
  for (auto& g : factor_squarefree(ca)) out.push_back(std::move(g));
  auto [cb, pb] = content_primitive(pa, a);  // cb depends on b only
  for (auto& g : factor_squarefree(cb)) out.push_back(std::move(g));
  if (pb.is_constant()) return out;
  if (!pb.depends_on(a) || !pb.depends_on(b)) {
    for (auto& g : factor_squarefree(pb)) out.push_back(std::move(g));
    return out;
  }
  // Lift along the variable of larger degree; evaluate the other one.
  const bool b_main = pb.degree(b) <= pb.degree(a);
  const Var y = b_main ? b : a;
  const Var x = b_main ? a : b;
  for (auto& g : factor_squarefree_bivariate(pb, x, y)) out.push_back(g.primitive_integer());
  return out;
}

}  // namespace

bool canonical_less(const MPoly& a, const MPoly& b) {
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  for (std::size_t i = 0; i < ta.size() && i < tb.size(); ++i) {
    if (ta[i].mono != tb[i].mono) return ta[i].mono < tb[i].mono;
    if (ta[i].coeff != tb[i].coeff) return ta[i].coeff < tb[i].coeff;
  }
  return ta.size() < tb.size();
}

FactorList factor_over_Q(const MPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "factor_over_Q of zero");
  if (var_count(f.variables()) > 2)
    throw Error(ErrorCode::InvalidArgument, "factor_over_Q supports at most two variables");
  FactorList out;
  for (const auto& [piece, m] : squarefree_decomposition(f))
    for (auto& g : factor_squarefree(piece)) out.emplace_back(std::move(g), m);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return canonical_less(x.first, y.first); });
  return out;
}

std::vector<MPoly> irreducible_factors(const MPoly& f) {
  std::vector<MPoly> out;
  for (auto& [g, m] : factor_over_Q(f)) out.push_back(std::move(g));
  std::sort(out.begin(), out.end(), canonical_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace ratlines
