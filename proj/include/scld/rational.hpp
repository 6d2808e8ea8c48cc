#ifndef SCLD_RATIONAL_HPP
#define SCLD_RATIONAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "scld/errors.hpp"

namespace scld {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Parse "0.3", "-2", "3/10" or "1e-2" into an exact rational.
Rational parse_rational(const std::string& text);

std::string rational_to_string(const Rational& q);

/// An exponent in [0, +inf]; +inf encodes p_i = 0 for n >= 2.
struct Alpha {
  bool infinite = false;
  Rational value = 0;

  static Alpha inf() { return Alpha{true, 0}; }
  static Alpha of(const Rational& q) { return Alpha{false, q}; }
  bool positive() const { return infinite || value > 0; }
};

/// Parses "inf"/"infinity" or any rational literal; negative values rejected.
Alpha parse_alpha(const std::string& text);
std::string alpha_to_string(const Alpha& a);

BigInt binomial(std::uint64_t n, std::uint64_t k);
BigInt falling_factorial(std::uint64_t n, std::uint64_t k);
BigInt factorial(std::uint64_t n);

bool is_prime_u64(std::uint64_t v);

double to_double(const Rational& q);

}  // namespace scld

#endif
