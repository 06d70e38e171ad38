#include "witness.hpp"

#include "ratlines/kernel/error.hpp"

namespace ratlines::detail {

namespace {

Real tolerance(unsigned digits, mpfr_prec_t bits) {
  Real ten(10.0, bits), r(1.0, bits);
  for (unsigned i = 0; i < digits / 2; ++i) r = r / ten;
  return r;
}

bool close(const Complex& x, const Complex& y, const Real& tol) {
  Real scale = Real(1.0, x.precision()) + x.abs();
  return (x - y).abs() <= tol * scale;
}

}  // namespace

bool same_line(const LineEmbedding& x, const LineEmbedding& y, unsigned digits) {
  const Real tol = tolerance(digits, x.point[0].precision());
  for (int i = 0; i < 3; ++i)
    if (!close(x.point[i], y.point[i], tol) || !close(x.direction[i], y.direction[i], tol)) return false;
  return true;
}

LineWitness make_witness(const MPoly& factor, const FieldPtr& K, std::array<AlgNum, 3> point,
                         std::array<AlgNum, 3> direction, const std::vector<EmbeddingPtr>& embeddings, bool vertical,
                         const Rational& a, unsigned digits) {
  int k = 0;
  while (k < 3 && direction[k].is_zero()) ++k;
  if (k == 3) throw Error(ErrorCode::InvalidArgument, "zero line direction");
  const AlgNum inv = direction[k].inverse();
  for (auto& d : direction) d = d * inv;
  const AlgNum shift = point[k];
  for (int i = 0; i < 3; ++i) point[i] = point[i] - shift * direction[i];

  LineWitness w;
  w.factor = factor;
  w.field = K;
  w.point.assign(point.begin(), point.end());
  w.direction.assign(direction.begin(), direction.end());
  w.vertical = vertical;
  w.a = a;

  const mpfr_prec_t bits = digits_to_bits(digits);
  const Real real_tol = tolerance(2 * digits - 20, bits);
  for (const auto& e : embeddings) {
    LineEmbedding line;
    line.embedding = e;
    line.real = true;
    for (int i = 0; i < 3; ++i) {
      line.point[i] = AlgNum(K, point[i].coords(), e).approx(digits);
      line.direction[i] = AlgNum(K, direction[i].coords(), e).approx(digits);
      for (const Complex* z : {&line.point[i], &line.direction[i]})
        if (z->im.abs() > real_tol * (Real(1.0, bits) + z->re.abs())) line.real = false;
    }
    bool duplicate = false;
    for (const auto& other : w.lines) duplicate = duplicate || same_line(other, line, digits);
    if (!duplicate) w.lines.push_back(std::move(line));
  }
  return w;
}

}  // namespace ratlines::detail
