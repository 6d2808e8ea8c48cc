#ifndef SCLD_LOGVALUE_HPP
#define SCLD_LOGVALUE_HPP

#include <map>
#include <optional>
#include <string>

#include "scld/rational.hpp"

namespace scld {

/// Exact real of the form sum_j c_j * ln(a_j) with rational c_j and integer
/// bases a_j >= 2. Closed under addition and rational scaling; the sign is
/// decidable by comparing products of integer powers, so LP pivoting and
/// threshold predicates on log scales stay exact.
class LogValue {
public:
  LogValue() = default;

  static LogValue log_of_integer(const BigInt& a);
  static LogValue log_of_integer(std::uint64_t a) {
    return log_of_integer(BigInt(static_cast<unsigned long>(a)));
  }
  /// ln(num/den) for a positive rational.
  static LogValue log_of_rational(const Rational& q);

  bool is_zero() const { return terms_.empty(); }

  LogValue& operator+=(const LogValue& other);
  LogValue& operator-=(const LogValue& other);
  LogValue& operator*=(const Rational& s);
  friend LogValue operator+(LogValue a, const LogValue& b) { return a += b; }
  friend LogValue operator-(LogValue a, const LogValue& b) { return a -= b; }
  friend LogValue operator*(LogValue a, const Rational& s) { return a *= s; }
  LogValue operator-() const;

  /// this += s * other, one pass.
  void add_scaled(const Rational& s, const LogValue& other);

  /// Exact sign: -1, 0, +1.
  int sign() const;
  int compare(const LogValue& other) const;
  bool operator<(const LogValue& o) const { return compare(o) < 0; }
  bool operator<=(const LogValue& o) const { return compare(o) <= 0; }
  bool operator==(const LogValue& o) const { return compare(o) == 0; }

  double to_double() const;

  /// If the value is c * ln(base) for the given base, returns c.
  std::optional<Rational> as_multiple_of_log(const BigInt& base) const;

  /// Human-readable form like "3/2*ln(10) - ln(4)".
  std::string to_string() const;

  const std::map<BigInt, Rational>& terms() const { return terms_; }

private:
  void prune(const BigInt& key);
  std::map<BigInt, Rational> terms_;
};

/// floor(exp(v)) for v >= 0, exact (v = ln of a product of rational powers).
BigInt floor_exp(const LogValue& v);
/// ceil(exp(v)) for v >= 0, exact.
BigInt ceil_exp(const LogValue& v);

}  // namespace scld

#endif
