#include "modular.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace ratlines::detail {

std::uint64_t Zp::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1 % p_;
  a %= p_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t Zp::inv(std::uint64_t a) const {
  // Extended Euclid on signed 128-bit values.
  __int128 t = 0, new_t = 1;
  __int128 r = p_, new_r = a % p_;
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::domain_error("element not invertible mod p");
  if (t < 0) t += p_;
  return static_cast<std::uint64_t>(t);
}

std::uint64_t Zp::reduce(const Integer& z) const {
  return mpz_fdiv_ui(z.get_mpz_t(), p_);
}

std::uint64_t Zp::reduce(const Rational& q) const {
  std::uint64_t n = mpz_fdiv_ui(q.get_num_mpz_t(), p_);
  if (q.get_den() == 1) return n;
  std::uint64_t d = mpz_fdiv_ui(q.get_den_mpz_t(), p_);
  return mul(n, inv(d));
}

std::uint64_t Zp::from_signed(long v) const {
  if (v >= 0) return static_cast<std::uint64_t>(v) % p_;
  std::uint64_t m = static_cast<std::uint64_t>(-(v + 1)) + 1;
  return neg(m % p_);
}

std::uint64_t nth_prime(std::size_t i) {
  static std::mutex mu;
  static std::vector<std::uint64_t> primes;
  std::lock_guard<std::mutex> lock(mu);
  while (primes.size() <= i) {
    std::uint64_t start = primes.empty() ? (std::uint64_t{1} << 62) - 1 : primes.back() - 2;
    if (start % 2 == 0) --start;
    Integer z;
    for (std::uint64_t c = start;; c -= 2) {
      mpz_set_ui(z.get_mpz_t(), c);
      if (mpz_probab_prime_p(z.get_mpz_t(), 30)) {
        primes.push_back(c);
        break;
      }
    }
  }
  return primes[i];
}

namespace up {

void trim(UPolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

UPolyP add(const Zp& F, const UPolyP& a, const UPolyP& b) {
  UPolyP r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = F.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

UPolyP sub(const Zp& F, const UPolyP& a, const UPolyP& b) {
  UPolyP r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

UPolyP mul(const Zp& F, const UPolyP& a, const UPolyP& b) {
  if (a.empty() || b.empty()) return {};
  const std::uint64_t p = F.modulus();
  // Accumulate in 128 bits; products are < 2^124, so reduce every few steps.
  std::vector<unsigned __int128> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      unsigned __int128& slot = acc[i + j];
      slot += static_cast<unsigned __int128>(a[i]) * b[j];
      if (slot >> 125) slot %= p;
    }
  }
  UPolyP r(acc.size());
  for (std::size_t k = 0; k < acc.size(); ++k) r[k] = static_cast<std::uint64_t>(acc[k] % p);
  trim(r);
  return r;
}

UPolyP scale(const Zp& F, const UPolyP& a, std::uint64_t c) {
  if (c == 0) return {};
  UPolyP r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
  trim(r);
  return r;
}

void divmod(const Zp& F, const UPolyP& a, const UPolyP& b, UPolyP& q, UPolyP& r) {
  if (b.empty()) throw std::domain_error("polynomial division by zero mod p");
  r = a;
  if (a.size() < b.size()) {
    q.clear();
    return;
  }
  q.assign(a.size() - b.size() + 1, 0);
  std::uint64_t inv_lc = F.inv(b.back());
  for (std::size_t k = q.size(); k-- > 0;) {
    std::uint64_t c = F.mul(r[k + b.size() - 1], inv_lc);
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] = F.sub(r[k + j], F.mul(c, b[j]));
  }
  r.resize(b.size() - 1);
  trim(r);
  trim(q);
}

UPolyP rem(const Zp& F, const UPolyP& a, const UPolyP& b) {
  UPolyP q, r;
  divmod(F, a, b, q, r);
  return r;
}

UPolyP quo(const Zp& F, const UPolyP& a, const UPolyP& b) {
  UPolyP q, r;
  divmod(F, a, b, q, r);
  return q;
}

UPolyP monic(const Zp& F, const UPolyP& a) {
  if (a.empty() || a.back() == 1) return a;
  return scale(F, a, F.inv(a.back()));
}

UPolyP gcd(const Zp& F, UPolyP a, UPolyP b) {
  while (!b.empty()) {
    UPolyP r = rem(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, a);
}

UPolyP xgcd(const Zp& F, const UPolyP& a, const UPolyP& b, UPolyP& s, UPolyP& t) {
  UPolyP r0 = a, r1 = b;
  UPolyP s0 = {1}, s1 = {};
  UPolyP t0 = {}, t1 = {1};
  while (!r1.empty()) {
    UPolyP q, r;
    divmod(F, r0, r1, q, r);
    UPolyP s2 = sub(F, s0, mul(F, q, s1));
    UPolyP t2 = sub(F, t0, mul(F, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) {
    s = {};
    t = {};
    return {};
  }
  std::uint64_t inv = F.inv(r0.back());
  s = scale(F, s0, inv);
  t = scale(F, t0, inv);
  return scale(F, r0, inv);
}

std::uint64_t eval(const Zp& F, const UPolyP& a, std::uint64_t x) {
  std::uint64_t r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = F.add(F.mul(r, x), a[i]);
  return r;
}

UPolyP derivative(const Zp& F, const UPolyP& a) {
  if (a.size() <= 1) return {};
  UPolyP r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = F.mul(a[i], i % F.modulus());
  trim(r);
  return r;
}

UPolyP mulmod(const Zp& F, const UPolyP& a, const UPolyP& b, const UPolyP& m) {
  return rem(F, mul(F, a, b), m);
}

UPolyP powmod(const Zp& F, UPolyP base, const Integer& e, const UPolyP& m) {
  UPolyP result = {1};
  result = rem(F, result, m);
  base = rem(F, base, m);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return result;
  for (std::size_t i = bits; i-- > 0;) {
    result = mulmod(F, result, result, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mulmod(F, result, base, m);
  }
  return result;
}

UPolyP reduce(const Zp&, const UPolyP& a) { return a; }

UPolyP from_z(const Zp& F, const UPolyZ& a) {
  UPolyP r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.reduce(a[i]);
  trim(r);
  return r;
}

}  // namespace up

namespace uz {

void trim(UPolyZ& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

UPolyZ add(const UPolyZ& a, const UPolyZ& b) {
  UPolyZ r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] += b[i];
  }
  trim(r);
  return r;
}

UPolyZ sub(const UPolyZ& a, const UPolyZ& b) {
  UPolyZ r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] -= b[i];
  }
  trim(r);
  return r;
}

UPolyZ mul(const UPolyZ& a, const UPolyZ& b) {
  if (a.empty() || b.empty()) return {};
  UPolyZ r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  trim(r);
  return r;
}

UPolyZ scale(const UPolyZ& a, const Integer& c) {
  if (c == 0) return {};
  UPolyZ r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return r;
}

bool divide_exact(const UPolyZ& a, const UPolyZ& b, UPolyZ& q) {
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  q.clear();
  if (a.empty()) return true;
  if (a.size() < b.size()) return false;
  UPolyZ r = a;
  q.assign(a.size() - b.size() + 1, Integer(0));
  const Integer& lc = b.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    Integer& top = r[k + b.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) return false;
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_submul(r[k + j].get_mpz_t(), q[k].get_mpz_t(), b[j].get_mpz_t());
  }
  for (std::size_t i = 0; i + 1 < b.size() && i < r.size(); ++i)
    if (r[i] != 0) return false;
  trim(q);
  return true;
}

Integer content(const UPolyZ& a) {
  Integer g = 0;
  for (const auto& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

UPolyZ primitive(const UPolyZ& a) {
  if (a.empty()) return a;
  Integer g = content(a);
  if (a.back() < 0) g = -g;
  UPolyZ r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) mpz_divexact(r[i].get_mpz_t(), a[i].get_mpz_t(), g.get_mpz_t());
  return r;
}

UPolyZ derivative(const UPolyZ& a) {
  if (a.size() <= 1) return {};
  UPolyZ r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<unsigned long>(i);
  trim(r);
  return r;
}

Integer eval(const UPolyZ& a, const Integer& x) {
  Integer r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = r * x + a[i];
  return r;
}

Integer max_abs(const UPolyZ& a) {
  Integer m = 0;
  for (const auto& c : a)
    if (abs(c) > m) m = abs(c);
  return m;
}

bool crt_combine(UPolyZ& h, const Integer& m, const UPolyP& c, const Zp& F) {
  bool changed = false;
  if (h.size() < c.size()) h.resize(c.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    std::uint64_t ci = i < c.size() ? c[i] : 0;
    Integer before = h[i];
    ratlines::detail::crt_combine(h[i], m, ci, F);
    if (h[i] != before) changed = true;
  }
  trim(h);
  return changed;
}

UPolyZ gcd(const UPolyZ& a0, const UPolyZ& b0) {
  if (a0.empty()) return primitive(b0);
  if (b0.empty()) return primitive(a0);
  Integer ca = content(a0), cb = content(b0);
  Integer c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  UPolyZ a = primitive(a0), b = primitive(b0);
  if (a.size() == 1 || b.size() == 1) return {c};
  Integer gamma;
  mpz_gcd(gamma.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());
  UPolyZ h;
  Integer m = 1;
  int hdeg = -1;
  for (std::size_t pi = 0;; ++pi) {
    Zp F(nth_prime(pi));
    if (F.reduce(gamma) == 0 || F.reduce(a.back()) == 0 || F.reduce(b.back()) == 0) continue;
    UPolyP g = up::gcd(F, up::from_z(F, a), up::from_z(F, b));
    if (up::degree(g) == 0) return {c};
    g = up::scale(F, g, F.reduce(gamma));
    if (hdeg < 0 || up::degree(g) < hdeg) {
      h.assign(g.size(), Integer(0));
      m = 1;
      crt_combine(h, m, g, F);
      m = F.modulus();
      hdeg = up::degree(g);
      continue;
    }
    if (up::degree(g) > hdeg) continue;
    bool changed = crt_combine(h, m, g, F);
    m *= F.modulus();
    if (!changed) {
      UPolyZ cand = primitive(h);
      UPolyZ q;
      if (divide_exact(a, cand, q) && divide_exact(b, cand, q)) return scale(cand, c);
    }
  }
}

}  // namespace uz

void crt_combine(Integer& h, const Integer& m, std::uint64_t c, const Zp& F) {
  // h' = h + m * ((c - h) * m^{-1} mod p), symmetric in (-mp/2, mp/2].
  std::uint64_t hm = F.reduce(h);
  std::uint64_t minv = F.inv(F.reduce(m));
  std::uint64_t k = F.mul(F.sub(c, hm), minv);
  Integer mk = m;
  mk *= static_cast<unsigned long>(k);
  h += mk;
  Integer mp = m * static_cast<unsigned long>(F.modulus());
  Integer half = mp / 2;
  if (h > half) h -= mp;
  else if (h < -half) h += mp;
}

}  // namespace ratlines::detail
