#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace pebbling {

using BigInt = mpz_class;
using Rational = mpq_class;
using Count = std::int64_t;

/// Raised when an input violates an operation's domain (bad shape, out of
/// bounds vertex, illegal move, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a search or enumeration exceeds its configured work limit.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// C(n, k); zero outside 0 <= k <= n.
BigInt binomial(long n, long k);

// Number of multisets of size k drawn from n kinds. multichoose(0, 0) = 1.
BigInt multichoose(long n, long k);

BigInt int_pow(unsigned long base, unsigned long exponent);

BigInt factorial(unsigned long n);

double to_double(const Rational& r);

std::string to_string(const BigInt& z);
std::string to_string(const Rational& r);

/// Parses "7", "-3/4" or a plain decimal such as "2.5" into an exact rational.
Rational parse_rational(const std::string& text);

}  // namespace pebbling
