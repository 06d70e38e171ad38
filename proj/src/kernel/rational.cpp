#include "ratlines/kernel/rational.hpp"

#include <cctype>

#include "ratlines/kernel/error.hpp"

namespace ratlines {

Rational parse_rational(const std::string& text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j;
  };
  std::size_t end = digits(i);
  if (end == i) throw Error(ErrorCode::SyntaxError, "expected digits in '" + text + "'");
  Integer num(text.substr(i, end - i));
  Integer den = 1;
  if (end < text.size()) {
    if (text[end] != '/') throw Error(ErrorCode::SyntaxError, "bad rational '" + text + "'");
    std::size_t dstart = end + 1;
    std::size_t dend = digits(dstart);
    if (dend == dstart || dend != text.size())
      throw Error(ErrorCode::SyntaxError, "bad rational '" + text + "'");
    den = Integer(text.substr(dstart, dend - dstart));
    if (den == 0) throw Error(ErrorCode::ZeroDenominator, "rational with zero denominator");
  }
  Rational q(negative ? Integer(-num) : num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

Rational pow(const Rational& base, unsigned exponent) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  return r;
}

Integer pow(const Integer& base, unsigned exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

std::size_t bit_length(const Integer& z) {
  if (z == 0) return 0;
  return mpz_sizeinbase(z.get_mpz_t(), 2);
}

}  // namespace ratlines
