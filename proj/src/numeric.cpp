#include "pebbling/numeric.hpp"

#include <cctype>

namespace pebbling {

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

BigInt multichoose(long n, long k) {
  if (k < 0 || n < 0) return 0;
  if (n == 0) return k == 0 ? 1 : 0;
  return binomial(n + k - 1, k);
}

BigInt int_pow(unsigned long base, unsigned long exponent) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
  return out;
}

BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

double to_double(const Rational& r) { return mpq_get_d(r.get_mpq_t()); }

std::string to_string(const BigInt& z) { return z.get_str(); }

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw DomainError("empty rational literal");
  auto dot = text.find('.');
  try {
    if (dot == std::string::npos) {
      Rational r(text, 10);
      if (r.get_den() == 0) throw DomainError("zero denominator in '" + text + "'");
      r.canonicalize();
      return r;
    }
    // decimal literal: scale to an exact fraction
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    const auto frac_len = text.size() - dot - 1;
    for (std::size_t i = 0; i < digits.size(); ++i) {
      const char ch = digits[i];
      if (!(std::isdigit(static_cast<unsigned char>(ch)) || (i == 0 && (ch == '-' || ch == '+'))))
        throw DomainError("malformed number '" + text + "'");
    }
    if (!digits.empty() && digits[0] == '+') digits.erase(0, 1);
    Rational r(BigInt(digits, 10), int_pow(10, frac_len));
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument& e) {
    if (dynamic_cast<const DomainError*>(&e)) throw;
    throw DomainError("malformed number '" + text + "'");
  }
}

}  // namespace pebbling
