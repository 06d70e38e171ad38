#include "ratlines/kernel/mpoly.hpp"

#include <algorithm>
#include <ostream>
#include <queue>
#include <sstream>

#include "ratlines/kernel/error.hpp"

namespace ratlines {

namespace {

using Term = MPoly::Term;

bool term_greater(const Term& x, const Term& y) { return x.mono > y.mono; }

// Merges two sorted term lists, adding coefficients (sign = +1 or -1 for rhs).
std::vector<Term> merge_terms(const std::vector<Term>& lhs, const std::vector<Term>& rhs, int sign) {
  std::vector<Term> out;
  out.reserve(lhs.size() + rhs.size());
  std::size_t i = 0, j = 0;
  while (i < lhs.size() || j < rhs.size()) {
    if (j == rhs.size() || (i < lhs.size() && lhs[i].mono > rhs[j].mono)) {
      out.push_back(lhs[i++]);
    } else if (i == lhs.size() || rhs[j].mono > lhs[i].mono) {
      out.push_back(rhs[j++]);
      if (sign < 0) out.back().coeff = -out.back().coeff;
    } else {
      Rational c = sign > 0 ? Rational(lhs[i].coeff + rhs[j].coeff)
                            : Rational(lhs[i].coeff - rhs[j].coeff);
      if (c != 0) out.push_back({lhs[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

struct HeapEntry {
  Monomial mono;
  std::uint32_t i;
  std::uint32_t j;
};

struct HeapLess {
  bool operator()(const HeapEntry& x, const HeapEntry& y) const { return x.mono < y.mono; }
};

using Heap = std::priority_queue<HeapEntry, std::vector<HeapEntry>, HeapLess>;

}  // namespace

MPoly::MPoly(const Rational& c) {
  if (c != 0) terms_.push_back({Monomial(), c});
}

MPoly MPoly::variable(Var v) { return monomial(Monomial::variable(v), 1); }

MPoly MPoly::monomial(Monomial m, const Rational& c) {
  MPoly p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

MPoly MPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  MPoly p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

MPoly MPoly::from_sorted_terms(std::vector<Term> terms) {
  MPoly p;
  p.terms_ = std::move(terms);
  return p;
}

bool MPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1;
}

Rational MPoly::constant_value() const {
  if (terms_.empty()) return 0;
  if (!terms_.front().mono.is_one())
    throw Error(ErrorCode::InvalidArgument, "polynomial is not constant");
  return terms_.front().coeff;
}

int MPoly::degree(Var v) const {
  if (terms_.empty()) return -1;
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(v));
  return static_cast<int>(d);
}

int MPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.front().mono.degree());
}

VarSet MPoly::variables() const {
  VarSet s = 0;
  for (const auto& t : terms_) s |= t.mono.support();
  return s;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  terms_ = merge_terms(terms_, other.terms_, +1);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) {
  if (other.is_zero()) return *this;
  terms_ = merge_terms(terms_, other.terms_, -1);
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& other) { return *this = *this * other; }

MPoly& MPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else if (c != 1) {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& f = a.size() <= b.size() ? a.terms_ : b.terms_;
  const auto& g = a.size() <= b.size() ? b.terms_ : a.terms_;
  if (f.size() == 1) return b.size() >= a.size() ? b.mul_monomial(f[0].mono, f[0].coeff)
                                                 : a.mul_monomial(f[0].mono, f[0].coeff);
  // Johnson's heap: one cursor per term of the shorter factor.
  std::vector<HeapEntry> storage;
  storage.reserve(f.size());
  Heap heap(HeapLess{}, std::move(storage));
  for (std::uint32_t i = 0; i < f.size(); ++i) heap.push({f[i].mono * g[0].mono, i, 0});
  std::vector<Term> out;
  Rational acc, prod;
  while (!heap.empty()) {
    Monomial m = heap.top().mono;
    acc = 0;
    while (!heap.empty() && heap.top().mono == m) {
      HeapEntry e = heap.top();
      heap.pop();
      mpq_mul(prod.get_mpq_t(), f[e.i].coeff.get_mpq_t(), g[e.j].coeff.get_mpq_t());
      acc += prod;
      if (e.j + 1 < g.size()) heap.push({f[e.i].mono * g[e.j + 1].mono, e.i, e.j + 1});
    }
    if (acc != 0) out.push_back({m, acc});
  }
  return MPoly::from_sorted_terms(std::move(out));
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  return true;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly result(1);
  MPoly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

MPoly MPoly::derivative(Var v) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    unsigned e = t.mono.exponent(v);
    if (e == 0) continue;
    out.push_back({t.mono.with_exponent(v, e - 1), t.coeff * e});
  }
  // Lowering the same exponent in every surviving term keeps their order.
  return from_sorted_terms(std::move(out));
}

MPoly MPoly::mul_monomial(Monomial m, const Rational& c) const {
  if (c == 0) return {};
  MPoly r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
  return r;
}

std::vector<MPoly> MPoly::coefficients(Var v) const {
  std::vector<std::vector<Term>> buckets;
  for (const auto& t : terms_) {
    unsigned e = t.mono.exponent(v);
    if (buckets.size() <= e) buckets.resize(e + 1);
    buckets[e].push_back({t.mono.with_exponent(v, 0), t.coeff});
  }
  std::vector<MPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_sorted_terms(std::move(b)));
  return out;
}

MPoly MPoly::from_coefficients(Var v, std::span<const MPoly> coeffs) {
  std::vector<Term> all;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    for (const auto& t : coeffs[k].terms_)
      all.push_back({t.mono * Monomial::variable(v, static_cast<unsigned>(k)), t.coeff});
  return from_terms(std::move(all));
}

MPoly MPoly::coefficient(Var v, unsigned k) const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (t.mono.exponent(v) == k) out.push_back({t.mono.with_exponent(v, 0), t.coeff});
  return from_sorted_terms(std::move(out));
}

MPoly MPoly::leading_coeff_in(Var v) const {
  int d = degree(v);
  if (d < 0) return {};
  return coefficient(v, static_cast<unsigned>(d));
}

MPoly MPoly::evaluate(Var v, const Rational& value) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  std::vector<Rational> powers(1, Rational(1));
  for (const auto& t : terms_) {
    unsigned e = t.mono.exponent(v);
    if (e == 0) {
      out.push_back(t);
      continue;
    }
    if (value == 0) continue;
    while (powers.size() <= e) powers.push_back(powers.back() * value);
    out.push_back({t.mono.with_exponent(v, 0), t.coeff * powers[e]});
  }
  return from_terms(std::move(out));
}

MPoly MPoly::substitute(Var v, const MPoly& p) const {
  auto cs = coefficients(v);
  if (cs.empty()) return {};
  MPoly acc = cs.back();
  for (std::size_t k = cs.size() - 1; k-- > 0;) {
    acc = acc * p;
    acc += cs[k];
  }
  return acc;
}

MPoly MPoly::rename(const std::array<Var, kNumVars>& target) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::array<unsigned, kNumVars> e{};
    for (int i = 0; i < kNumVars; ++i) e[index(target[i])] += t.mono.exponent(var_at(i));
    out.push_back({Monomial::from_exponents(e), t.coeff});
  }
  return from_terms(std::move(out));
}

Rational MPoly::evaluate_all(const std::array<Rational, kNumVars>& point) const {
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (int i = 0; i < kNumVars; ++i) {
      unsigned e = t.mono.exponent(var_at(i));
      if (e) v *= ratlines::pow(point[i], e);
    }
    sum += v;
  }
  return sum;
}

namespace {

// Monagan-Pearce heap division. With `exact`, stops at the first remainder term.
bool heap_divide(const std::vector<Term>& F, const std::vector<Term>& G, std::vector<Term>& Q,
                 std::vector<Term>& R, bool exact) {
  Heap heap;
  Rational inv_lc = 1 / G[0].coeff;
  Rational c, prod;
  std::size_t k = 0;
  const Monomial lead = G[0].mono;
  while (k < F.size() || !heap.empty()) {
    Monomial m;
    if (heap.empty() || (k < F.size() && F[k].mono > heap.top().mono))
      m = F[k].mono;
    else
      m = heap.top().mono;
    c = 0;
    if (k < F.size() && F[k].mono == m) c = F[k++].coeff;
    while (!heap.empty() && heap.top().mono == m) {
      HeapEntry e = heap.top();
      heap.pop();
      mpq_mul(prod.get_mpq_t(), G[e.i].coeff.get_mpq_t(), Q[e.j].coeff.get_mpq_t());
      c -= prod;
      if (e.i + 1 < G.size()) heap.push({G[e.i + 1].mono * Q[e.j].mono, e.i + 1, e.j});
    }
    if (c == 0) continue;
    if (lead.divides(m)) {
      Q.push_back({lead.quotient_of(m), c * inv_lc});
      if (G.size() > 1)
        heap.push({G[1].mono * Q.back().mono, 1, static_cast<std::uint32_t>(Q.size() - 1)});
    } else {
      if (exact) return false;
      R.push_back({m, c});
    }
  }
  return true;
}

}  // namespace

std::optional<MPoly> MPoly::divide_exact(const MPoly& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero polynomial");
  if (is_zero()) return MPoly();
  if (divisor.size() == 1) {
    const auto& d = divisor.terms_[0];
    for (const auto& t : terms_)
      if (!d.mono.divides(t.mono)) return std::nullopt;
    MPoly r;
    r.terms_.reserve(terms_.size());
    Rational inv = 1 / d.coeff;
    for (const auto& t : terms_) r.terms_.push_back({d.mono.quotient_of(t.mono), t.coeff * inv});
    return r;
  }
  if (!divisor.leading_term().mono.divides(leading_term().mono)) return std::nullopt;
  for (int i = 0; i < kNumVars; ++i)
    if (divisor.degree(var_at(i)) > degree(var_at(i))) return std::nullopt;
  std::vector<Term> q, r;
  if (!heap_divide(terms_, divisor.terms_, q, r, true)) return std::nullopt;
  return from_sorted_terms(std::move(q));
}

std::pair<MPoly, MPoly> MPoly::divmod(const MPoly& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero polynomial");
  std::vector<Term> q, r;
  if (!is_zero()) heap_divide(terms_, divisor.terms_, q, r, false);
  return {from_sorted_terms(std::move(q)), from_sorted_terms(std::move(r))};
}

Rational MPoly::rational_content() const {
  if (terms_.empty()) return 0;
  Integer g = 0, l = 1;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Rational c(g, l);
  c.canonicalize();
  return c;
}

MPoly MPoly::primitive_integer() const {
  if (terms_.empty()) return {};
  Rational c = rational_content();
  if (leading_coeff() < 0) c = -c;
  if (c == 1) return *this;
  MPoly r = *this;
  Rational inv = 1 / c;
  for (auto& t : r.terms_) t.coeff *= inv;
  return r;
}

MPoly MPoly::monic() const {
  if (terms_.empty()) return {};
  if (leading_coeff() == 1) return *this;
  return *this * Rational(1 / leading_coeff());
}

void MPoly::map_coefficients(const std::function<void(Rational&)>& f) {
  for (auto& t : terms_) f(t.coeff);
  std::erase_if(terms_, [](const Term& t) { return t.coeff == 0; });
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (c != 1 || t.mono.is_one()) {
      os << c.get_str();
      wrote = true;
    }
    for (int i = 0; i < kNumVars; ++i) {
      unsigned e = t.mono.exponent(var_at(i));
      if (e == 0) continue;
      if (wrote) os << "*";
      os << var_name(var_at(i));
      if (e > 1) os << "^" << e;
      wrote = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.to_string(); }

MPoly expand_product(std::span<const std::pair<MPoly, unsigned>> factors) {
  MPoly r(1);
  for (const auto& [f, m] : factors) r *= f.pow(m);
  return r;
}

}  // namespace ratlines
