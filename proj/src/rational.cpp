#include "scld/rational.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace scld {

const char* errc_name(errc code) {
  switch (code) {
    case errc::invalid_vertex: return "InvalidVertex";
    case errc::malformed_facet: return "MalformedFacet";
    case errc::invalid_argument: return "InvalidArgument";
    case errc::pattern_too_large: return "PatternTooLarge";
    case errc::oracle_too_large: return "OracleTooLarge";
    case errc::no_positive_exponent: return "NoPositiveExponent";
    case errc::invalid_subcomplex: return "InvalidSubcomplex";
    case errc::invalid_range: return "InvalidRange";
    case errc::invalid_field: return "InvalidField";
    case errc::degenerate_mean: return "DegenerateMean";
    case errc::witness_bound_violated: return "WitnessBoundViolated";
    case errc::nonconvergent_float: return "NonconvergentFloat";
    case errc::parse_error: return "ParseError";
    case errc::io_error: return "IoError";
    case errc::internal: return "Internal";
  }
  return "Unknown";
}

namespace {

bool all_digits(const std::string& s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

// Base-10 always; the mpz string constructor would autodetect octal/hex.
BigInt parse_int10(const std::string& s) {
  BigInt z;
  if (mpz_set_str(z.get_mpz_t(), s.c_str(), 10) != 0)
    fail(errc::parse_error, "bad integer '" + s + "'");
  return z;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char raw : text) {
    if (!std::isspace(static_cast<unsigned char>(raw))) s.push_back(raw);
  }
  if (s.empty()) fail(errc::parse_error, "empty rational literal");

  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    s.erase(s.begin());
  }

  // a/b
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      fail(errc::parse_error, "bad fraction '" + text + "'");
    BigInt num_z = parse_int10(num), den_z = parse_int10(den);
    if (den_z == 0) fail(errc::parse_error, "zero denominator in '" + text + "'");
    Rational q{num_z, den_z};
    q.canonicalize();
    return negative ? Rational(-q) : q;
  }

  // mantissa with optional exponent: 12, 0.3, 3e-2, 1.25e3
  std::string mant = s;
  long exp10 = 0;
  if (auto e = s.find_first_of("eE"); e != std::string::npos) {
    mant = s.substr(0, e);
    std::string es = s.substr(e + 1);
    if (es.empty()) fail(errc::parse_error, "bad exponent in '" + text + "'");
    exp10 = std::strtol(es.c_str(), nullptr, 10);
  }
  std::string digits = mant;
  long frac_digits = 0;
  if (auto dot = mant.find('.'); dot != std::string::npos) {
    digits = mant.substr(0, dot) + mant.substr(dot + 1);
    frac_digits = static_cast<long>(mant.size() - dot - 1);
  }
  if (digits.empty()) digits = "0";
  if (!all_digits(digits)) fail(errc::parse_error, "bad rational '" + text + "'");

  BigInt digits_z = parse_int10(digits);
  Rational q{digits_z};
  long net = exp10 - frac_digits;
  BigInt pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(net)));
  if (net > 0) q *= Rational(pow10);
  if (net < 0) q /= Rational(pow10);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string rational_to_string(const Rational& q) {
  return q.get_str();
}

Alpha parse_alpha(const std::string& text) {
  std::string lower;
  for (char c : text) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (lower == "inf" || lower == "infinity" || lower == "+inf") return Alpha::inf();
  Rational q = parse_rational(text);
  if (q < 0) fail(errc::invalid_argument, "alpha must be >= 0, got " + text);
  return Alpha::of(q);
}

std::string alpha_to_string(const Alpha& a) {
  return a.infinite ? "inf" : rational_to_string(a.value);
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

BigInt falling_factorial(std::uint64_t n, std::uint64_t k) {
  BigInt out = 1;
  for (std::uint64_t i = 0; i < k; ++i) out *= BigInt(static_cast<unsigned long>(n - i));
  return out;
}

BigInt factorial(std::uint64_t n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

bool is_prime_u64(std::uint64_t v) {
  if (v < 2) return false;
  BigInt z(static_cast<unsigned long>(v));
  return mpz_probab_prime_p(z.get_mpz_t(), 32) != 0;
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace scld
