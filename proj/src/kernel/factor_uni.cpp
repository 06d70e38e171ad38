#include <algorithm>
#include <random>

#include "factor_internal.hpp"
#include "ratlines/kernel/error.hpp"

namespace ratlines::detail {

namespace {

std::vector<std::uint64_t> small_primes() {
  static const std::vector<std::uint64_t> primes = [] {
    std::vector<std::uint64_t> out;
    const int limit = 20000;
    std::vector<bool> composite(limit + 1, false);
    for (int i = 2; i <= limit; ++i) {
      if (composite[i]) continue;
      if (i > 2) out.push_back(static_cast<std::uint64_t>(i));
      for (long j = static_cast<long>(i) * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

void equal_degree_split(const Zp& F, const UPolyP& g, int d, std::mt19937_64& rng,
                        std::vector<UPolyP>& out) {
  if (up::degree(g) == d) {
    out.push_back(g);
    return;
  }
  const std::uint64_t p = F.modulus();
  Integer e = pow(Integer(static_cast<unsigned long>(p)), static_cast<unsigned>(d));
  e = (e - 1) / 2;
  while (true) {
    UPolyP a(up::degree(g));
    for (auto& c : a) c = rng() % p;
    up::trim(a);
    if (up::degree(a) < 1) continue;
    UPolyP h = up::gcd(F, a, g);
    if (up::degree(h) > 0 && up::degree(h) < up::degree(g)) {
      equal_degree_split(F, h, d, rng, out);
      equal_degree_split(F, up::quo(F, g, h), d, rng, out);
      return;
    }
    UPolyP b = up::powmod(F, a, e, g);
    b = up::sub(F, b, UPolyP{1});
    h = up::gcd(F, b, g);
    if (up::degree(h) > 0 && up::degree(h) < up::degree(g)) {
      equal_degree_split(F, h, d, rng, out);
      equal_degree_split(F, up::quo(F, g, h), d, rng, out);
      return;
    }
  }
}

bool squarefree_mod(const Zp& F, const UPolyP& f) {
  return up::degree(up::gcd(F, f, up::derivative(F, f))) == 0;
}

// Reduces coefficients into the symmetric range modulo m.
UPolyZ sym_mod(UPolyZ a, const Integer& m) {
  Integer half = m / 2;
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  uz::trim(a);
  return a;
}

UPolyZ to_signed(const Zp& F, const UPolyP& a) {
  UPolyZ r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = Integer(static_cast<unsigned long>(a[i]));
  (void)F;
  return r;
}

}  // namespace

std::vector<UPolyP> factor_mod_p(const Zp& F, const UPolyP& f0) {
  std::vector<UPolyP> out;
  UPolyP f = up::monic(F, f0);
  if (up::degree(f) <= 0) return out;
  std::mt19937_64 rng(0x5eed1234ULL + F.modulus());
  const UPolyP x = {0, 1};
  UPolyP h = up::rem(F, x, f);
  Integer p(static_cast<unsigned long>(F.modulus()));
  for (int d = 1; 2 * d <= up::degree(f); ++d) {
    h = up::powmod(F, h, p, f);
    UPolyP g = up::gcd(F, up::sub(F, h, x), f);
    if (up::degree(g) > 0) {
      equal_degree_split(F, g, d, rng, out);
      f = up::quo(F, f, g);
      h = up::rem(F, h, f);
    }
  }
  if (up::degree(f) > 0) out.push_back(f);
  return out;
}

std::vector<UPolyP> bezout_cofactors(const Zp& F, const std::vector<UPolyP>& u) {
  std::vector<UPolyP> s(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    UPolyP q = {1};
    for (std::size_t l = 0; l < u.size(); ++l)
      if (l != i) q = up::mulmod(F, q, u[l], u[i]);
    UPolyP a, b;
    UPolyP g = up::xgcd(F, q, u[i], a, b);
    if (up::degree(g) != 0) throw Error(ErrorCode::InvalidArgument, "factors not coprime mod p");
    s[i] = up::rem(F, a, u[i]);
  }
  return s;
}

std::vector<UPolyZ> factor_squarefree_uz(const UPolyZ& f) {
  const int n = uz::degree(f);
  if (n <= 1) return {f};
  const Integer& lc = f.back();

  // Choose a prime giving few modular factors.
  std::uint64_t best_p = 0;
  std::vector<UPolyP> best;
  int tried = 0;
  for (std::uint64_t p : small_primes()) {
    if (mpz_fdiv_ui(lc.get_mpz_t(), p) == 0) continue;
    Zp F(p);
    UPolyP fp = up::from_z(F, f);
    if (!squarefree_mod(F, fp)) continue;
    auto facs = factor_mod_p(F, fp);
    if (best_p == 0 || facs.size() < best.size()) {
      best_p = p;
      best = std::move(facs);
    }
    if (best.size() == 1 || ++tried >= 5) break;
  }
  if (best_p == 0) throw Error(ErrorCode::UnluckyEvaluations, "no admissible prime for factorization");
  if (best.size() == 1) return {f};

  const Zp F(best_p);
  const Integer P(static_cast<unsigned long>(best_p));

  // Coefficient bound for lc * (factor of f): |lc| * 2^n * ||f||_2, doubled.
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  root += 1;
  Integer bound = abs(lc) * root * 2;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n));

  // Linear p-adic Hensel lifting of f = lc * prod u_i.
  const std::size_t r = best.size();
  std::vector<UPolyZ> u(r);
  for (std::size_t i = 0; i < r; ++i) u[i] = to_signed(F, best[i]);
  std::vector<UPolyP> s = bezout_cofactors(F, best);
  const std::uint64_t lc_inv = F.inv(F.reduce(lc));
  Integer m = P;
  while (m <= bound) {
    Integer next = m * P;
    UPolyZ prod = {lc};
    for (const auto& ui : u) prod = sym_mod(uz::mul(prod, ui), next);
    UPolyZ e = uz::sub(f, prod);
    for (auto& c : e) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    UPolyP ep = up::scale(F, up::from_z(F, e), lc_inv);
    for (std::size_t i = 0; i < r; ++i) {
      UPolyP delta = up::rem(F, up::mul(F, ep, s[i]), best[i]);
      UPolyZ dz = to_signed(F, delta);
      u[i] = uz::add(u[i], uz::scale(dz, m));
    }
    m = next;
  }
  for (auto& ui : u) ui = sym_mod(ui, m);

  // Subset recombination.
  std::vector<UPolyZ> result;
  std::vector<std::size_t> remaining(r);
  for (std::size_t i = 0; i < r; ++i) remaining[i] = i;
  UPolyZ cur = f;
  for (std::size_t size = 1; 2 * size <= remaining.size();) {
    bool found = false;
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      UPolyZ g = {cur.back()};
      for (std::size_t i : idx) g = sym_mod(uz::mul(g, u[remaining[i]]), m);
      // Cheap constant-term test before the full division.
      bool plausible = g[0] == 0 || cur[0] == 0 ||
                       mpz_divisible_p(Integer(cur[0] * cur.back()).get_mpz_t(), g[0].get_mpz_t());
      if (plausible) {
        UPolyZ cand = uz::primitive(g);
        UPolyZ q;
        if (uz::divide_exact(cur, cand, q)) {
          result.push_back(cand);
          cur = uz::primitive(q);
          std::vector<std::size_t> rest;
          for (std::size_t k = 0; k < remaining.size(); ++k)
            if (std::find(idx.begin(), idx.end(), k) == idx.end()) rest.push_back(remaining[k]);
          remaining = std::move(rest);
          found = true;
          break;
        }
      }
      // Next combination.
      int k = static_cast<int>(size) - 1;
      while (k >= 0 && idx[k] == remaining.size() - size + k) --k;
      if (k < 0) break;
      ++idx[k];
      for (std::size_t j = k + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++size;
  }
  if (uz::degree(cur) > 0) result.push_back(cur);
  return result;
}

}  // namespace ratlines::detail
