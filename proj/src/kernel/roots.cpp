#include "ratlines/kernel/roots.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>

#include "ratlines/kernel/error.hpp"

namespace ratlines {

namespace {

// Double-precision starting values from the companion matrix, or points on a
// circle when the coefficients do not fit in doubles.
std::vector<std::complex<double>> initial_guesses(const QPoly& p) {
  const int n = qp::degree(p);
  std::vector<std::complex<double>> out;
  bool finite = true;
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(n, n);
  const Rational lc = p.back();
  for (int i = 0; i < n; ++i) {
    double v = Rational(-p[i] / lc).get_d();
    if (!std::isfinite(v)) finite = false;
    C(i, n - 1) = v;
    if (i > 0) C(i, i - 1) = 1.0;
  }
  if (finite) {
    Eigen::EigenSolver<Eigen::MatrixXd> solver(C, false);
    if (solver.info() == Eigen::Success) {
      for (int i = 0; i < n; ++i) out.push_back(solver.eigenvalues()[i]);
      bool ok = std::all_of(out.begin(), out.end(),
                            [](const std::complex<double>& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
      if (ok) {
        // Separate coincident guesses so Aberth corrections stay finite.
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < i; ++j)
            if (std::abs(out[i] - out[j]) < 1e-12 * (1 + std::abs(out[i])))
              out[i] += std::complex<double>(1e-7 * (i + 1), 1e-7 * (j + 2));
        return out;
      }
    }
  }
  out.clear();
  double radius = 1.0;
  for (int i = 0; i < n; ++i) {
    double v = std::abs(Rational(p[i] / lc).get_d());
    if (std::isfinite(v)) radius = std::max(radius, 1.0 + v);
  }
  const double pi = std::acos(-1.0);
  for (int i = 0; i < n; ++i)
    out.emplace_back(radius * std::cos(2 * pi * i / n + 0.4), radius * std::sin(2 * pi * i / n + 0.4));
  return out;
}

bool aberth(const QPoly& p, std::vector<Complex>& z, mpfr_prec_t bits, int max_iter) {
  const std::size_t n = z.size();
  Real tol(1.0, bits);
  mpfr_mul_2si(tol.raw(), tol.raw(), -static_cast<long>(bits) + 12, MPFR_RNDN);
  Real stall(1.0, bits);
  mpfr_mul_2si(stall.raw(), stall.raw(), -static_cast<long>(bits) / 2, MPFR_RNDN);
  std::vector<bool> done(n, false);
  std::vector<Real> last(n, Real(bits));
  for (int iter = 0; iter < max_iter; ++iter) {
    bool all = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      Complex v(bits), d(bits);
      eval_poly_d(p, z[i], v, d);
      if (v.re.is_zero() && v.im.is_zero()) {
        done[i] = true;
        continue;
      }
      Complex ratio = v / d;
      Complex sum(bits);
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) sum = sum + Complex(Real(1.0, bits), Real(bits)) / (z[i] - z[j]);
      Complex denom = Complex(Real(1.0, bits), Real(bits)) - ratio * sum;
      Complex w = ratio / denom;
      if (!w.re.is_finite() || !w.im.is_finite()) return false;
      z[i] = z[i] - w;
      Real scale = z[i].abs();
      if (scale < Real(1.0, bits)) scale = Real(1.0, bits);
      // A step that no longer shrinks sits at the rounding noise of p; the
      // inclusion disks decide whether that is accurate enough.
      const Real step = w.abs();
      const bool stalled = iter > 4 && step <= stall * scale && step + step >= last[i];
      if (step <= tol * scale || stalled) done[i] = true;
      else all = false;
      last[i] = step;
    }
    if (all) return true;
  }
  return false;
}

}  // namespace

Complex refine_root(const QPoly& p, const Complex& start, unsigned digits) {
  const mpfr_prec_t bits = digits_to_bits(digits);
  Complex z(Real(start.re), Real(start.im));
  z.re = Real(start.re.to_rational(), bits);
  z.im = Real(start.im.to_rational(), bits);
  Real tol(1.0, bits);
  mpfr_mul_2si(tol.raw(), tol.raw(), -static_cast<long>(bits) + 8, MPFR_RNDN);
  for (int iter = 0; iter < 200; ++iter) {
    Complex v(bits), d(bits);
    eval_poly_d(p, z, v, d);
    if (v.re.is_zero() && v.im.is_zero()) break;
    Complex step = v / d;
    z = z - step;
    Real scale = z.abs();
    if (scale < Real(1.0, bits)) scale = Real(1.0, bits);
    if (step.abs() <= tol * scale) break;
  }
  return z;
}

std::vector<RootDisk> isolate_roots(const QPoly& p, unsigned digits) {
  const int n = qp::degree(p);
  if (n < 1) throw Error(ErrorCode::ZeroPolynomial, "isolate_roots needs positive degree");
  const int nreal = qp::count_real_roots(p);
  auto guesses = initial_guesses(p);
  mpfr_prec_t bits = digits_to_bits(digits) + 32;
  std::vector<Complex> z;
  for (const auto& g : guesses) z.emplace_back(Real(g.real(), bits), Real(g.imag(), bits));

  for (int round = 0; round < 8; ++round, bits *= 2) {
    for (auto& zi : z) {
      zi.re = Real(zi.re.to_rational(), bits);
      zi.im = Real(zi.im.to_rational(), bits);
    }
    if (!aberth(p, z, bits, 2000)) continue;

    // Inclusion disks |x - z_i| <= n |p(z_i) / p'(z_i)|.
    std::vector<RootDisk> out;
    bool ok = true;
    for (auto& zi : z) {
      Complex v(bits), d(bits);
      eval_poly_d(p, zi, v, d);
      if (d.re.is_zero() && d.im.is_zero()) {
        ok = false;
        break;
      }
      Real r = (v.abs() / d.abs()) * Real(static_cast<double>(n), bits);
      // Guard against an exactly zero residual.
      Real floor_r = zi.abs() + Real(1.0, bits);
      mpfr_mul_2si(floor_r.raw(), floor_r.raw(), -static_cast<long>(bits) + 4, MPFR_RNDN);
      if (r < floor_r) r = floor_r;
      out.push_back({zi, r, false});
    }
    for (int i = 0; ok && i < n; ++i)
      for (int j = 0; ok && j < i; ++j)
        if ((out[i].z - out[j].z).abs() <= out[i].radius + out[j].radius) ok = false;
    if (!ok) continue;

    // Accuracy target: radius below 10^-digits relative to magnitude.
    Real target(1.0, bits);
    mpfr_mul_2si(target.raw(), target.raw(), -static_cast<long>(digits_to_bits(digits)), MPFR_RNDN);
    for (auto& d : out) {
      Real scale = d.z.abs() + Real(1.0, bits);
      if (d.radius > target * scale) ok = false;
    }
    if (!ok) continue;

    // The nreal disks closest to the real axis hold the real roots; a disk that
    // meets the axis and contains one root holds a real root.
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return out[a].z.im.abs() < out[b].z.im.abs(); });
    for (int k = 0; k < nreal; ++k) {
      RootDisk& d = out[order[k]];
      if (d.z.im.abs() > d.radius) ok = false;
      d.real = true;
      d.z.im = Real(bits);
    }
    if (!ok) continue;
    return out;
  }
  throw Error(ErrorCode::InvalidArgument, "root isolation did not converge");
}

}  // namespace ratlines
