#include <algorithm>

#include "factor_internal.hpp"
#include "ratlines/kernel/error.hpp"
#include "ratlines/kernel/gcd.hpp"

namespace ratlines::detail {

namespace {

constexpr int kEvaluationRetries = 20;

// Power series in X with coefficients in F_p[y]: index = power of X.
using Series = std::vector<UPolyP>;

Series series_mul(const Zp& F, const Series& a, const Series& b, std::size_t k) {
  Series r(std::min(k, a.size() + b.size() - 1));
  for (std::size_t i = 0; i < a.size() && i < r.size(); ++i) {
    if (a[i].empty()) continue;
    for (std::size_t j = 0; i + j < r.size() && j < b.size(); ++j)
      if (!b[j].empty()) r[i + j] = up::add(F, r[i + j], up::mul(F, a[i], b[j]));
  }
  return r;
}

// Inverse of a power series in X with F_p coefficients, to precision k.
UPolyP series_inverse(const Zp& F, const UPolyP& a, std::size_t k) {
  UPolyP inv(k, 0);
  std::uint64_t a0inv = F.inv(a[0]);
  inv[0] = a0inv;
  for (std::size_t j = 1; j < k; ++j) {
    std::uint64_t acc = 0;
    for (std::size_t l = 1; l <= j && l < a.size(); ++l) acc = F.add(acc, F.mul(a[l], inv[j - l]));
    inv[j] = F.mul(F.neg(acc), a0inv);
  }
  return inv;
}

// Rows indexed by y-power, inner polynomial in X  ->  series in X of polynomials in y.
Series to_series(const BiP& a, std::size_t k) {
  Series s(k);
  for (std::size_t j = 0; j < a.size(); ++j)
    for (std::size_t i = 0; i < a[j].size() && i < k; ++i) {
      if (a[j][i] == 0) continue;
      if (s[i].size() <= j) s[i].resize(j + 1, 0);
      s[i][j] = a[j][i];
    }
  for (auto& c : s) up::trim(c);
  return s;
}

BiP from_series(const Series& s) {
  std::size_t ny = 0;
  for (const auto& c : s) ny = std::max(ny, c.size());
  BiP a(ny);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s[i].size(); ++j) {
      if (s[i][j] == 0) continue;
      if (a[j].size() <= i) a[j].resize(i + 1, 0);
      a[j][i] = s[i][j];
    }
  for (auto& row : a) up::trim(row);
  while (!a.empty() && a.back().empty()) a.pop_back();
  return a;
}

// Exact division test in F_p[X][y].
bool divides_bip(const Zp& F, const BiP& num, const BiP& den) {
  if (den.empty()) return false;
  BiP r = num;
  const int db = static_cast<int>(den.size()) - 1;
  while (!r.empty() && static_cast<int>(r.size()) - 1 >= db) {
    UPolyP q, rem;
    up::divmod(F, r.back(), den.back(), q, rem);
    if (!rem.empty()) return false;
    const int shift = static_cast<int>(r.size()) - 1 - db;
    for (int j = 0; j <= db; ++j) r[j + shift] = up::sub(F, r[j + shift], up::mul(F, q, den[j]));
    while (!r.empty() && r.back().empty()) r.pop_back();
  }
  return r.empty();
}

BiP primitive_bip(const Zp& F, const BiP& a) {
  UPolyP c;
  for (const auto& row : a) c = up::gcd(F, c, row);
  BiP r(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) r[j] = up::quo(F, a[j], c);
  return r;
}

// Lifts f = lc * prod u_i from X = 0 to precision k. u0 are monic, pairwise coprime.
std::vector<Series> hensel_lift(const Zp& F, const BiP& f, const std::vector<UPolyP>& u0, std::size_t k) {
  const std::size_t r = u0.size();
  Series fs = to_series(f, k);
  UPolyP lc = f.back();
  lc.resize(std::max(lc.size(), k), 0);
  UPolyP linv = series_inverse(F, lc, k);
  Series monic(k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t l = 0; l <= j; ++l)
      if (linv[l] != 0 && !fs[j - l].empty())
        monic[j] = up::add(F, monic[j], up::scale(F, fs[j - l], linv[l]));

  std::vector<Series> u(r, Series(k));
  std::vector<Series> P(r, Series(k));
  for (std::size_t i = 0; i < r; ++i) u[i][0] = u0[i];
  P[0][0] = u0[0];
  for (std::size_t i = 1; i < r; ++i) P[i][0] = up::mul(F, P[i - 1][0], u0[i]);
  const std::vector<UPolyP> s = bezout_cofactors(F, u0);

  auto product_coeff = [&](std::size_t j) {
    P[0][j] = u[0][j];
    for (std::size_t i = 1; i < r; ++i) {
      UPolyP acc;
      for (std::size_t l = 0; l <= j; ++l)
        if (!P[i - 1][l].empty() && !u[i][j - l].empty())
          acc = up::add(F, acc, up::mul(F, P[i - 1][l], u[i][j - l]));
      P[i][j] = std::move(acc);
    }
  };

  for (std::size_t j = 1; j < k; ++j) {
    product_coeff(j);
    UPolyP e = up::sub(F, monic[j], P[r - 1][j]);
    if (e.empty()) continue;
    for (std::size_t i = 0; i < r; ++i) u[i][j] = up::rem(F, up::mul(F, e, s[i]), u0[i]);
    product_coeff(j);
  }
  return u;
}

// lc_y(f) * prod_{i in S} u_i truncated to precision k, as rows in y.
BiP subset_product(const Zp& F, const BiP& f, const std::vector<Series>& u,
                   const std::vector<std::size_t>& subset, std::size_t k) {
  Series acc(1);
  acc[0] = UPolyP{1};
  for (std::size_t i : subset) acc = series_mul(F, acc, u[i], k);
  Series lc(std::min(k, f.back().size()));
  for (std::size_t i = 0; i < lc.size(); ++i)
    if (f.back()[i] != 0) lc[i] = UPolyP{f.back()[i]};
  return from_series(series_mul(F, acc, lc, k));
}

// Finds the subsets of lifted factors that correspond to true factors mod p.
std::vector<std::vector<std::size_t>> recombine(const Zp& F, const BiP& f, const std::vector<Series>& u,
                                                std::size_t k) {
  std::vector<std::vector<std::size_t>> parts;
  std::vector<std::size_t> remaining(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) remaining[i] = i;
  for (std::size_t size = 1; 2 * size <= remaining.size();) {
    bool found = false;
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      std::vector<std::size_t> subset;
      for (std::size_t i : idx) subset.push_back(remaining[i]);
      BiP g = primitive_bip(F, subset_product(F, f, u, subset, k));
      if (divides_bip(F, f, g)) {
        parts.push_back(subset);
        std::vector<std::size_t> rest;
        for (std::size_t q = 0; q < remaining.size(); ++q)
          if (std::find(idx.begin(), idx.end(), q) == idx.end()) rest.push_back(remaining[q]);
        remaining = std::move(rest);
        found = true;
        break;
      }
      int q = static_cast<int>(size) - 1;
      while (q >= 0 && idx[q] == remaining.size() - size + q) --q;
      if (q < 0) break;
      ++idx[q];
      for (std::size_t j = q + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++size;
  }
  if (!remaining.empty()) parts.push_back(remaining);
  return parts;
}

struct Image {
  Integer x0;
  std::vector<UPolyZ> factors;
};

}  // namespace

std::vector<MPoly> factor_squarefree_bivariate(const MPoly& f, Var x, Var y) {
  const std::size_t k = static_cast<std::size_t>(f.degree(x)) + 1;
  const MPoly lcy = f.leading_coeff_in(y);
  const MPoly xv = MPoly::variable(x);

  std::vector<Image> images;
  int admissible = 0, failures = 0;
  for (long step = 0; failures < kEvaluationRetries; ++step) {
    // x0 = 0, 1, -1, 2, -2, ...
    long x0 = (step % 2 == 1) ? (step + 1) / 2 : -(step / 2);
    if (!lcy.evaluate(x, Rational(x0)).is_constant() || lcy.evaluate(x, Rational(x0)).is_zero()) continue;
    MPoly img = f.evaluate(x, Rational(x0));
    UPolyZ iz = to_uz(img.primitive_integer(), y);
    if (uz::degree(uz::gcd(iz, uz::derivative(iz))) > 0) {
      ++failures;
      continue;
    }
    auto facs = factor_squarefree_uz(uz::primitive(iz));
    if (facs.size() == 1) return {f};
    images.push_back({Integer(x0), std::move(facs)});
    if (++admissible < 3) continue;

    auto best = std::min_element(images.begin(), images.end(), [](const Image& a, const Image& b) {
      return a.factors.size() < b.factors.size();
    });
    Image image = *best;
    images.erase(best);
    --admissible;

    const Rational shift(image.x0);
    const MPoly fs = f.substitute(x, xv + MPoly(shift));
    const BiZ fz = to_biz(fs, x, y);

    std::vector<std::vector<std::size_t>> parts;
    std::vector<BiZ> crt;
    Integer modulus = 1;
    for (std::size_t pi = 0; pi < 64; ++pi) {
      Zp F(nth_prime(pi));
      BiP fp = reduce(F, fz);
      if (fp.back().empty() || fp.back()[0] == 0) continue;
      std::vector<UPolyP> u0;
      for (const auto& g : image.factors) u0.push_back(up::monic(F, up::from_z(F, g)));
      bool coprime = true;
      for (std::size_t i = 0; i < u0.size() && coprime; ++i)
        for (std::size_t j = i + 1; j < u0.size() && coprime; ++j)
          if (up::degree(up::gcd(F, u0[i], u0[j])) > 0) coprime = false;
      if (!coprime) continue;
      auto u = hensel_lift(F, fp, u0, k);
      if (parts.empty()) {
        parts = recombine(F, fp, u, k);
        if (parts.size() == 1) return {f};
        crt.assign(parts.size(), BiZ{});
      }
      const bool first = modulus == 1;
      bool changed = false;
      for (std::size_t q = 0; q < parts.size(); ++q) {
        BiP g = subset_product(F, fp, u, parts[q], k);
        if (crt[q].size() < g.size()) crt[q].resize(g.size());
        for (std::size_t j = 0; j < crt[q].size(); ++j)
          if (uz::crt_combine(crt[q][j], modulus, j < g.size() ? g[j] : UPolyP{}, F)) changed = true;
      }
      modulus *= F.modulus();
      if (first || changed) continue;

      std::vector<MPoly> out;
      MPoly rest = f;
      bool all = true;
      for (const auto& c : crt) {
        UPolyZ cont;
        for (const auto& row : c) cont = uz::gcd(cont, row);
        BiZ prim(c.size());
        for (std::size_t j = 0; j < c.size(); ++j) uz::divide_exact(c[j], cont, prim[j]);
        MPoly g = from_biz(prim, x, y).substitute(x, xv - MPoly(shift)).primitive_integer();
        auto q = rest.divide_exact(g);
        if (!q) {
          all = false;
          break;
        }
        rest = std::move(*q);
        out.push_back(g);
      }
      if (all && rest.is_constant()) return out;
      break;
    }
    ++failures;
  }
  throw Error(ErrorCode::UnluckyEvaluations, "bivariate factorization failed after retries");
}

}  // namespace ratlines::detail
