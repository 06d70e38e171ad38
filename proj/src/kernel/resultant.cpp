#include "ratlines/kernel/resultant.hpp"

#include <utility>

#include "ratlines/kernel/error.hpp"
#include "ratlines/kernel/gcd.hpp"

namespace ratlines {

namespace {

MPoly prem(const MPoly& a, const MPoly& b, Var v) {
  const int db = b.degree(v);
  const MPoly lb = b.leading_coeff_in(v);
  std::vector<MPoly> r = a.coefficients(v);
  const std::vector<MPoly> bc = b.coefficients(v);
  const int da = a.degree(v);
  for (int k = da; k >= db; --k) {
    MPoly lr = r[k];
    for (int i = 0; i < k; ++i) r[i] = r[i] * lb;
    if (!lr.is_zero())
      for (int j = 0; j < db; ++j) r[k - db + j] -= lr * bc[j];
    r[k] = MPoly();
  }
  r.resize(db > 0 ? db : 0);
  return MPoly::from_coefficients(v, r);
}

void check_operands(const MPoly& f, const MPoly& g, Var v) {
  if (f.degree(v) <= 0 && g.degree(v) <= 0)
    throw Error(ErrorCode::NoEliminationVariable,
                "neither operand depends on " + std::string(var_name(v)));
}

}  // namespace

MPoly resultant_wrt(const MPoly& f, const MPoly& g, Var v) {
  check_operands(f, g, v);
  if (f.is_zero() || g.is_zero()) return MPoly();
  MPoly A = f, B = g;
  int sign = 1;
  if (A.degree(v) < B.degree(v)) {
    std::swap(A, B);
    if ((A.degree(v) % 2) && (B.degree(v) % 2)) sign = -sign;
  }
  if (B.degree(v) == 0) return B.pow(static_cast<unsigned>(A.degree(v))) * Rational(sign);

  MPoly g_(1), h(1);
  while (true) {
    const int da = A.degree(v), db = B.degree(v);
    const int delta = da - db;
    if ((da % 2) && (db % 2)) sign = -sign;
    MPoly R = prem(A, B, v);
    if (R.is_zero()) return MPoly();
    A = std::move(B);
    B = exact_quotient(R, g_ * h.pow(static_cast<unsigned>(delta)));
    g_ = A.leading_coeff_in(v);
    if (delta == 0) {
      // h unchanged
    } else {
      h = exact_quotient(g_.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
    }
    if (B.degree(v) <= 0) break;
  }
  const int da = A.degree(v);
  MPoly res = da == 0 ? MPoly(1)
                      : exact_quotient(B.pow(static_cast<unsigned>(da)), h.pow(static_cast<unsigned>(da - 1)));
  return res * Rational(sign);
}

MPoly sylvester_resultant(const MPoly& f, const MPoly& g, Var v) {
  check_operands(f, g, v);
  if (f.is_zero() || g.is_zero()) return MPoly();
  const int m = f.degree(v), n = g.degree(v);
  const int size = m + n;
  if (size == 0) return MPoly(1);
  auto fc = f.coefficients(v), gc = g.coefficients(v);
  std::vector<std::vector<MPoly>> M(size, std::vector<MPoly>(size));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) M[i][i + (m - k)] = fc[k];
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) M[n + i][i + (n - k)] = gc[k];

  // Fraction-free Bareiss elimination.
  int sign = 1;
  MPoly prev(1);
  for (int k = 0; k < size - 1; ++k) {
    if (M[k][k].is_zero()) {
      int r = k + 1;
      while (r < size && M[r][k].is_zero()) ++r;
      if (r == size) return MPoly();
      std::swap(M[k], M[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j)
        M[i][j] = exact_quotient(M[i][j] * M[k][k] - M[i][k] * M[k][j], prev);
      M[i][k] = MPoly();
    }
    prev = M[k][k];
  }
  return M[size - 1][size - 1] * Rational(sign);
}

}  // namespace ratlines
