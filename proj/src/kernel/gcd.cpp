#include "ratlines/kernel/gcd.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "dense.hpp"
#include "ratlines/kernel/error.hpp"

namespace ratlines {

using namespace detail;

namespace {

MPoly normalized(const MPoly& f) { return f.is_zero() ? f : f.primitive_integer(); }

int inner_degree(const BiZ& a) {
  int d = -1;
  for (const auto& row : a) d = std::max(d, uz::degree(row));
  return d;
}

UPolyZ row_content(const BiZ& a) {
  UPolyZ c;
  for (const auto& row : a) {
    c = uz::gcd(c, row);
    if (c.size() == 1) break;
  }
  return c;
}

BiZ divide_rows(const BiZ& a, const UPolyZ& c) {
  BiZ r(a.size());
  for (std::size_t j = 0; j < a.size(); ++j)
    if (!uz::divide_exact(a[j], c, r[j])) throw Error(ErrorCode::InvalidArgument, "row content does not divide");
  return r;
}

// Brown's dense modular gcd for primitive integer polynomials in exactly x and y.
MPoly brown_gcd(const MPoly& f, const MPoly& g, Var x, Var y) {
  BiZ A = to_biz(f, x, y), B = to_biz(g, x, y);
  UPolyZ cA = row_content(A), cB = row_content(B);
  UPolyZ c = uz::gcd(cA, cB);
  A = divide_rows(A, cA);
  B = divide_rows(B, cB);
  MPoly cpoly = from_uz(c, x);
  if (A.size() == 1 || B.size() == 1) return normalized(cpoly);

  UPolyZ gamma = uz::gcd(A.back(), B.back());
  const int bound = uz::degree(gamma) + std::min(inner_degree(A), inner_degree(B));
  const MPoly Apoly = from_biz(A, x, y), Bpoly = from_biz(B, x, y);

  BiZ HZ;
  Integer modulus = 1;
  int global_dy = -1;
  int failures = 0;
  for (std::size_t pi = 0;; ++pi) {
    Zp F(nth_prime(pi));
    UPolyP lcA = up::from_z(F, A.back()), lcB = up::from_z(F, B.back());
    if (lcA.empty() || lcB.empty()) continue;
    UPolyP gp = up::from_z(F, gamma);
    BiP Ap = reduce(F, A), Bp = reduce(F, B);

    BiP H;
    UPolyP q = {1};
    int dy = -1, count = 0;
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ pi);
    while (count <= bound) {
      const std::uint64_t x0 = rng() % F.modulus();
      std::uint64_t ga = up::eval(F, gp, x0);
      if (up::eval(F, lcA, x0) == 0 || up::eval(F, lcB, x0) == 0 || ga == 0) continue;
      UPolyP g0 = up::gcd(F, eval_inner(F, Ap, x0), eval_inner(F, Bp, x0));
      int d = up::degree(g0);
      if (d == 0) return normalized(cpoly);
      if (dy >= 0 && d > dy) continue;
      if (dy < 0 || d < dy) {
        dy = d;
        H.assign(d + 1, UPolyP{});
        q = {1};
        count = 0;
      }
      std::uint64_t qinv = F.inv(up::eval(F, q, x0));
      for (int j = 0; j <= d; ++j) {
        std::uint64_t v = F.mul(g0[j], ga);
        std::uint64_t coef = F.mul(F.sub(v, up::eval(F, H[j], x0)), qinv);
        if (coef != 0) H[j] = up::add(F, H[j], up::scale(F, q, coef));
      }
      q = up::mul(F, q, UPolyP{F.neg(x0), 1});
      ++count;
    }

    if (global_dy >= 0 && dy > global_dy) continue;
    if (global_dy < 0 || dy < global_dy) {
      global_dy = dy;
      HZ.assign(dy + 1, UPolyZ{});
      modulus = 1;
    }
    const bool first = modulus == 1;
    bool changed = false;
    for (int j = 0; j <= dy; ++j)
      if (uz::crt_combine(HZ[j], modulus, H[j], F)) changed = true;
    modulus *= F.modulus();
    if (first || changed) continue;

    BiZ cand = divide_rows(HZ, row_content(HZ));
    MPoly G = from_biz(cand, x, y);
    if (Apoly.divide_exact(G) && Bpoly.divide_exact(G)) return normalized(G * cpoly);
    if (++failures > 3) {
      global_dy = -1;
      failures = 0;
    }
  }
}

MPoly content_in(const MPoly& f, Var v) {
  MPoly c;
  for (const auto& coeff : f.coefficients(v)) {
    if (coeff.is_zero()) continue;
    c = poly_gcd(c, coeff);
    if (c.is_constant()) return c;
  }
  return c;
}

MPoly pseudo_remainder(const MPoly& a, const MPoly& b, Var v) {
  const int db = b.degree(v);
  const MPoly lb = b.leading_coeff_in(v);
  MPoly r = a;
  int steps = 0;
  const int da = a.degree(v);
  while (!r.is_zero() && r.degree(v) >= db) {
    int dr = r.degree(v);
    MPoly lr = r.leading_coeff_in(v);
    r = lb * r - (lr * b).mul_monomial(Monomial::variable(v, static_cast<unsigned>(dr - db)));
    ++steps;
  }
  int extra = da - db + 1 - steps;
  if (extra > 0) r = r * lb.pow(static_cast<unsigned>(extra));
  return r;
}

MPoly prs_gcd(const MPoly& f, const MPoly& g, Var v) {
  MPoly cf = content_in(f, v), cg = content_in(g, v);
  MPoly c = poly_gcd(cf, cg);
  MPoly a = exact_quotient(f, cf), b = exact_quotient(g, cg);
  if (a.degree(v) < b.degree(v)) std::swap(a, b);
  while (true) {
    if (b.degree(v) == 0) return normalized(c);
    MPoly r = pseudo_remainder(a, b, v);
    if (r.is_zero()) break;
    a = std::move(b);
    b = exact_quotient(r, content_in(r, v));
  }
  return normalized(c * exact_quotient(b, content_in(b, v)));
}

}  // namespace

MPoly exact_quotient(const MPoly& f, const MPoly& g) {
  if (g.is_zero()) throw Error(ErrorCode::DivisionByZero, "exact_quotient by zero");
  auto q = f.divide_exact(g);
  if (!q) throw Error(ErrorCode::InvalidArgument, "divisor does not divide: " + g.to_string());
  return std::move(*q);
}

MPoly poly_gcd(const MPoly& f0, const MPoly& g0) {
  if (f0.is_zero()) return normalized(g0);
  if (g0.is_zero()) return normalized(f0);
  if (f0.is_constant() || g0.is_constant()) return MPoly(1);
  MPoly f = f0.primitive_integer(), g = g0.primitive_integer();
  if (f == g) return f;

  const VarSet vf = f.variables(), vg = g.variables();
  for (int i = 0; i < kNumVars; ++i) {
    Var v = var_at(i);
    if ((vf & bit(v)) && !(vg & bit(v))) return poly_gcd(content_in(f, v), g);
    if ((vg & bit(v)) && !(vf & bit(v))) return poly_gcd(f, content_in(g, v));
  }
  const int n = var_count(vf);
  if (n == 1) {
    Var v = var_at(first_var(vf));
    return normalized(from_uz(uz::gcd(to_uz(f, v), to_uz(g, v)), v));
  }
  if (n == 2) {
    Var a = var_at(first_var(vf));
    Var b = var_at(first_var(static_cast<VarSet>(vf & ~bit(a))));
    int wa = f.degree(a) + g.degree(a), wb = f.degree(b) + g.degree(b);
    return wa <= wb ? brown_gcd(f, g, b, a) : brown_gcd(f, g, a, b);
  }
  int last = 0;
  for (int i = 0; i < kNumVars; ++i)
    if (vf & bit(var_at(i))) last = i;
  return prs_gcd(f, g, var_at(last));
}

ContentPrimitive content_primitive(const MPoly& f, Var v) {
  if (f.is_zero()) return {MPoly(), MPoly()};
  MPoly cont = content_in(f, v);
  MPoly prim = exact_quotient(f, cont);
  MPoly prim_n = prim.primitive_integer();
  Rational r = prim.leading_coeff() / prim_n.leading_coeff();
  return {cont * r, prim_n};
}

MPoly squarefree_part(const MPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree_part of zero");
  if (f.is_constant()) return MPoly(1);
  Var v = var_at(first_var(f.variables()));
  auto [cont, prim] = content_primitive(f, v);
  MPoly sp = exact_quotient(prim, poly_gcd(prim, prim.derivative(v)));
  if (cont.is_constant()) return normalized(sp);
  return normalized(squarefree_part(cont) * sp);
}

std::vector<std::pair<MPoly, unsigned>> squarefree_decomposition(const MPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree_decomposition of zero");
  std::map<unsigned, MPoly> by_mult;
  if (!f.is_constant()) {
    Var v = var_at(first_var(f.variables()));
    auto [cont, prim] = content_primitive(f, v);
    if (!prim.is_constant()) {
      MPoly dp = prim.derivative(v);
      MPoly a0 = poly_gcd(prim, dp);
      MPoly b = exact_quotient(prim, a0);
      MPoly c = exact_quotient(dp, a0);
      MPoly d = c - b.derivative(v);
      for (unsigned i = 1; !b.is_constant(); ++i) {
        MPoly a = poly_gcd(b, d);
        MPoly bn = exact_quotient(b, a);
        MPoly cn = exact_quotient(d, a);
        d = cn - bn.derivative(v);
        b = std::move(bn);
        if (!a.is_constant()) by_mult[i] = normalized(a);
      }
    }
    for (auto& [piece, m] : squarefree_decomposition(cont)) {
      auto it = by_mult.find(m);
      if (it == by_mult.end()) by_mult[m] = piece;
      else it->second = normalized(it->second * piece);
    }
  }
  std::vector<std::pair<MPoly, unsigned>> out;
  for (auto& [m, p] : by_mult) out.emplace_back(p, m);
  return out;
}

MPoly remove_common_factors(const MPoly& f, const MPoly& g) {
  if (f.is_zero() || g.is_zero()) return f;
  MPoly r = f;
  MPoly h = poly_gcd(r, g);
  while (!h.is_constant()) {
    r = exact_quotient(r, h);
    h = poly_gcd(r, h);
  }
  return r;
}

}  // namespace ratlines
