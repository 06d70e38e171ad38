#pragma once

#include <random>
#include <string>

#include "random_poly.hpp"
#include "ratlines/kernel/factor.hpp"
#include "ratlines/kernel/gcd.hpp"
#include "ratlines/kernel/resultant.hpp"

namespace ratlines::testing {

struct PropertyRun {
  int instances = 0;
  int failures = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    ++instances;
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
};

inline const std::vector<Var>& vars_ts() {
  static const std::vector<Var> v = {Var::t, Var::s};
  return v;
}
inline const std::vector<Var>& vars_tsw() {
  static const std::vector<Var> v = {Var::t, Var::s, Var::w};
  return v;
}

/// True when h restricted to one of a few random lines is irreducible of full
/// degree, which proves h irreducible.
inline bool irreducible_on_some_line(const MPoly& h, std::mt19937& rng) {
  if (h.total_degree() <= 1) return true;
  std::uniform_int_distribution<int> small(-1000, 1000);
  for (int lines = 0, attempt = 0; lines < 3 && attempt < 20; ++attempt) {
    const Var keep = h.depends_on(Var::t) ? Var::t : Var::s;
    const Var drop = keep == Var::t ? Var::s : Var::t;
    const MPoly line = MPoly::variable(keep) * Rational(small(rng)) + MPoly(Rational(small(rng)));
    const MPoly img = h.substitute(drop, line);
    if (img.degree(keep) != h.total_degree()) continue;
    ++lines;
    const FactorList fl = factor_over_Q(img);
    if (fl.size() == 1 && fl[0].second == 1) return true;
  }
  return false;
}

/// f = u c, g = v c: the gcd d divides both, c divides d, and the cofactors
/// are coprime.
inline PropertyRun gcd_reconstruction(int n) {
  PropertyRun run;
  std::mt19937 rng(11);
  for (int i = 0; i < n; ++i) {
    MPoly c = random_poly(rng, vars_ts(), 3, 3);
    if (c.is_zero()) c = MPoly(1);
    const MPoly f = random_nonconstant(rng, vars_ts(), 3, 4) * c;
    const MPoly g = random_nonconstant(rng, vars_ts(), 3, 4) * c;
    const MPoly d = poly_gcd(f, g);
    const auto fq = f.divide_exact(d), gq = g.divide_exact(d);
    const bool ok = fq && gq && d.divide_exact(c).has_value() && poly_gcd(*fq, *gq).is_constant();
    run.record(ok, "gcd(" + f.to_string() + ", " + g.to_string() + ")");
  }
  return run;
}

inline PropertyRun content_primitive_reconstruction(int n) {
  PropertyRun run;
  std::mt19937 rng(12);
  for (int i = 0; i < n; ++i) {
    const MPoly f = random_poly(rng, vars_tsw(), 3, 4) * random_poly(rng, vars_ts(), 2, 3);
    const auto cp = content_primitive(f, Var::w);
    run.record(cp.content * cp.primitive == f && !cp.content.depends_on(Var::w), "content of " + f.to_string());
  }
  return run;
}

inline PropertyRun factorization_reconstruction(int n) {
  PropertyRun run;
  std::mt19937 rng(13);
  for (int i = 0; i < n; ++i) {
    MPoly f = random_nonconstant(rng, vars_ts(), 3, 3) * random_nonconstant(rng, vars_ts(), 2, 3);
    if (i % 3 == 0) f *= random_nonconstant(rng, vars_ts(), 2, 2).pow(2);
    const FactorList fl = factor_over_Q(f);
    const MPoly prod = expand_product(fl);
    bool ok = prod.total_degree() == f.total_degree() && prod * (f.leading_coeff() / prod.leading_coeff()) == f;
    for (const auto& [h, m] : fl) ok = ok && irreducible_on_some_line(h, rng);
    run.record(ok, "factor " + f.to_string());
  }
  return run;
}

/// Res_w(f, g) = 0 exactly when f and g share a factor of positive degree in w.
inline PropertyRun resultant_common_factor(int n) {
  PropertyRun run;
  std::mt19937 rng(14);
  for (int i = 0; i < n; ++i) {
    MPoly c = (i % 2 == 0) ? random_nonconstant(rng, vars_tsw(), 2, 3) : random_poly(rng, vars_ts(), 1, 2);
    if (c.is_zero()) c = MPoly(1);
    MPoly a = random_nonconstant(rng, vars_tsw(), 2, 3);
    const MPoly b = random_nonconstant(rng, vars_tsw(), 2, 3);
    if (!a.depends_on(Var::w)) a += MPoly::variable(Var::w);
    const MPoly f = a * c, g = b * c;
    const bool common = poly_gcd(f, g).degree(Var::w) > 0;
    run.record(resultant_wrt(f, g, Var::w).is_zero() == common, "Res(" + f.to_string() + ", " + g.to_string() + ")");
  }
  return run;
}

}  // namespace ratlines::testing
