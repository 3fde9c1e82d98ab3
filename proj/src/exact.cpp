#include "chaindex/exact.hpp"

#include <stdexcept>

namespace chaindex {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  return make_rational(BigInt(std::to_string(num)), BigInt(std::to_string(den)));
}

std::string to_string(const Rational& r) { return r.get_str(10); }
std::string to_string(const BigInt& z) { return z.get_str(10); }

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
  if (!is_integer_literal(text)) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  return BigInt(std::string(text), 10);
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  const BigInt num = parse_bigint(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text[0] == '-') {
    throw std::invalid_argument("negative denominator: '" + std::string(text) + "'");
  }
  const BigInt den = parse_bigint(den_text);
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return make_rational(num, den);
}

std::string to_fixed(const Rational& r, unsigned digits) {
  BigInt scale = bigint_pow(10, digits);
  const bool negative = sgn(r) < 0;
  Rational scaled = abs(r) * scale;
  // floor(x + 1/2) on a nonnegative value
  BigInt twice = 2 * scaled.get_num() + scaled.get_den();
  BigInt q = twice / (2 * scaled.get_den());
  std::string body = q.get_str(10);
  if (digits > 0) {
    if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
  }
  if (negative && q != 0) body.insert(0, "-");
  return body;
}

Rational rational_pow(const Rational& base, long exp) {
  if (exp < 0) {
    if (base == 0) throw std::domain_error("zero to a negative power");
    return rational_pow(make_rational(base.get_den(), base.get_num()), -exp);
  }
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exp));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exp));
  return make_rational(num, den);
}

BigInt bigint_pow(long base, unsigned long exp) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), BigInt(base).get_mpz_t(), exp);
  return out;
}

}  // namespace chaindex
