#include "autrel/rational.hpp"

#include <cctype>

#include "autrel/error.hpp"

namespace autrel {

namespace {

Integer parse_integer(std::string_view digits, std::size_t offset) {
  if (digits.empty()) throw ParseError("expected digits", offset);
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(digits[i]))) {
      throw ParseError("unexpected character '" + std::string(1, digits[i]) + "'", offset + i);
    }
  }
  return Integer(std::string(digits));
}

std::optional<Integer> integer_root(const Integer& z, unsigned long k) {
  if (z < 0 && k % 2 == 0) return std::nullopt;
  Integer magnitude = abs(z);
  Integer root;
  if (mpz_root(root.get_mpz_t(), magnitude.get_mpz_t(), k) == 0) return std::nullopt;
  return z < 0 ? Integer(-root) : root;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::size_t start = 0;
  bool negative = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    start = 1;
  }
  auto slash = text.find('/', start);
  Integer num = parse_integer(text.substr(start, slash == std::string_view::npos ? text.npos : slash - start), start);
  Integer den = 1;
  if (slash != std::string_view::npos) {
    den = parse_integer(text.substr(slash + 1), slash + 1);
    if (den == 0) throw ParseError("zero denominator", slash + 1);
  }
  Rational q(num, den);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::optional<Rational> rational_root(const Rational& q, unsigned long k) {
  if (k == 0) return std::nullopt;
  if (k == 1) return q;
  auto num = integer_root(q.get_num(), k);
  if (!num) return std::nullopt;
  auto den = integer_root(q.get_den(), k);
  if (!den) return std::nullopt;
  Rational r(*num, *den);
  r.canonicalize();
  return r;
}

Rational rational_pow(const Rational& q, unsigned long k) {
  Rational result(1);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), k);
  result = Rational(num, den);
  result.canonicalize();
  return result;
}

}  // namespace autrel
