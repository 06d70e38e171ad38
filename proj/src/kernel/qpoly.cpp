#include "ratlines/kernel/qpoly.hpp"

#include <algorithm>

#include "ratlines/kernel/error.hpp"

namespace ratlines::qp {

void trim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

QPoly add(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] += b[i];
  }
  trim(r);
  return r;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] -= b[i];
  }
  trim(r);
  return r;
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

QPoly scale(const QPoly& a, const Rational& c) {
  if (c == 0) return {};
  QPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return r;
}

void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  if (b.empty()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  r = a;
  if (a.size() < b.size()) {
    q.clear();
    return;
  }
  q.assign(a.size() - b.size() + 1, Rational(0));
  const Rational inv = Rational(1) / b.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    Rational c = r[k + b.size() - 1] * inv;
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] -= c * b[j];
  }
  r.resize(b.size() - 1);
  trim(r);
  trim(q);
}

QPoly rem(const QPoly& a, const QPoly& b) {
  QPoly q, r;
  divmod(a, b, q, r);
  return r;
}

QPoly derivative(const QPoly& a) {
  if (a.size() <= 1) return {};
  QPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<unsigned long>(i);
  trim(r);
  return r;
}

QPoly monic(const QPoly& a) {
  if (a.empty()) return a;
  return scale(a, Rational(1) / a.back());
}

QPoly xgcd(const QPoly& a, const QPoly& b, QPoly& s, QPoly& t) {
  QPoly r0 = a, r1 = b, s0 = {Rational(1)}, s1, t0, t1 = {Rational(1)};
  while (!r1.empty()) {
    QPoly q, r;
    divmod(r0, r1, q, r);
    QPoly s2 = sub(s0, mul(q, s1));
    QPoly t2 = sub(t0, mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) {
    s.clear();
    t.clear();
    return r0;
  }
  Rational inv = Rational(1) / r0.back();
  s = scale(s0, inv);
  t = scale(t0, inv);
  return scale(r0, inv);
}

Rational eval(const QPoly& a, const Rational& x) {
  Rational r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = r * x + a[i];
  return r;
}

QPoly from_mpoly(const MPoly& f, Var v) {
  if (f.is_zero()) return {};
  QPoly a(f.degree(v) + 1);
  for (const auto& term : f.terms()) a[term.mono.exponent(v)] = term.coeff;
  return a;
}

MPoly to_mpoly(const QPoly& a, Var v) {
  std::vector<MPoly::Term> terms;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != 0) terms.push_back({Monomial::variable(v, static_cast<unsigned>(i)), a[i]});
  return MPoly::from_sorted_terms(std::move(terms));
}

int count_real_roots(const QPoly& a) {
  if (a.size() <= 1) return 0;
  std::vector<QPoly> seq = {a, derivative(a)};
  while (seq.back().size() > 1) {
    QPoly r = rem(seq[seq.size() - 2], seq.back());
    if (r.empty()) break;
    seq.push_back(scale(r, Rational(-1)));
  }
  auto changes = [&](bool at_plus) {
    int count = 0, prev = 0;
    for (const auto& p : seq) {
      int sg = sgn(p.back());
      if (!at_plus && degree(p) % 2 == 1) sg = -sg;
      if (sg != 0 && prev != 0 && sg != prev) ++count;
      if (sg != 0) prev = sg;
    }
    return count;
  };
  return changes(false) - changes(true);
}

}  // namespace ratlines::qp
