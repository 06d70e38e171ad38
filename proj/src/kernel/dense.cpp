#include "dense.hpp"

#include <bit>

namespace ratlines::detail {

UPolyZ to_uz(const MPoly& f, Var v) {
  if (f.is_zero()) return {};
  UPolyZ a(f.degree(v) + 1);
  for (const auto& term : f.terms()) a[term.mono.exponent(v)] = term.coeff.get_num();
  return a;
}

MPoly from_uz(const UPolyZ& a, Var v) {
  std::vector<MPoly::Term> terms;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != 0) terms.push_back({Monomial::variable(v, static_cast<unsigned>(i)), Rational(a[i])});
  return MPoly::from_sorted_terms(std::move(terms));
}

BiZ to_biz(const MPoly& f, Var x, Var y) {
  if (f.is_zero()) return {};
  BiZ a(f.degree(y) + 1);
  for (const auto& term : f.terms()) {
    auto& row = a[term.mono.exponent(y)];
    unsigned ex = term.mono.exponent(x);
    if (row.size() <= ex) row.resize(ex + 1);
    row[ex] = term.coeff.get_num();
  }
  return a;
}

MPoly from_biz(const BiZ& a, Var x, Var y) {
  std::vector<MPoly::Term> terms;
  for (std::size_t j = 0; j < a.size(); ++j)
    for (std::size_t i = 0; i < a[j].size(); ++i)
      if (a[j][i] != 0) {
        std::array<unsigned, kNumVars> e{};
        e[index(x)] = static_cast<unsigned>(i);
        e[index(y)] = static_cast<unsigned>(j);
        terms.push_back({Monomial::from_exponents(e), Rational(a[j][i])});
      }
  return MPoly::from_terms(std::move(terms));
}

BiP reduce(const Zp& F, const BiZ& a) {
  BiP r(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) r[j] = up::from_z(F, a[j]);
  return r;
}

UPolyP eval_inner(const Zp& F, const BiP& a, std::uint64_t x0) {
  UPolyP r(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) r[j] = up::eval(F, a[j], x0);
  up::trim(r);
  return r;
}

int first_var(VarSet mask) { return mask == 0 ? -1 : std::countr_zero(static_cast<unsigned>(mask)); }
int var_count(VarSet mask) { return std::popcount(static_cast<unsigned>(mask)); }

}  // namespace ratlines::detail
