#include "scld/logvalue.hpp"

#include <cfloat>
#include <cmath>
#include <sstream>

namespace scld {

LogValue LogValue::log_of_integer(const BigInt& a) {
  if (a <= 0) fail(errc::invalid_argument, "log of nonpositive integer");
  LogValue v;
  if (a > 1) v.terms_[a] = 1;
  return v;
}

LogValue LogValue::log_of_rational(const Rational& q) {
  if (q <= 0) fail(errc::invalid_argument, "log of nonpositive rational");
  LogValue v = log_of_integer(BigInt(q.get_num()));
  v -= log_of_integer(BigInt(q.get_den()));
  return v;
}

void LogValue::prune(const BigInt& key) {
  auto it = terms_.find(key);
  if (it != terms_.end() && it->second == 0) terms_.erase(it);
}

LogValue& LogValue::operator+=(const LogValue& other) {
  for (const auto& [base, coeff] : other.terms_) {
    terms_[base] += coeff;
    prune(base);
  }
  return *this;
}

LogValue& LogValue::operator-=(const LogValue& other) {
  for (const auto& [base, coeff] : other.terms_) {
    terms_[base] -= coeff;
    prune(base);
  }
  return *this;
}

LogValue& LogValue::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [base, coeff] : terms_) coeff *= s;
  return *this;
}

LogValue LogValue::operator-() const {
  LogValue v = *this;
  for (auto& [base, coeff] : v.terms_) coeff = -coeff;
  return v;
}

void LogValue::add_scaled(const Rational& s, const LogValue& other) {
  if (s == 0) return;
  for (const auto& [base, coeff] : other.terms_) {
    terms_[base] += s * coeff;
    prune(base);
  }
}

namespace {

// Writes exp(v * lcm) = X / Y as a quotient of integer power products.
// Returns the lcm of the coefficient denominators.
BigInt power_products(const std::map<BigInt, Rational>& terms, BigInt& X, BigInt& Y) {
  BigInt lcm = 1;
  for (const auto& [base, coeff] : terms) {
    BigInt den(coeff.get_den());
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
  }
  X = 1;
  Y = 1;
  for (const auto& [base, coeff] : terms) {
    Rational scaled = coeff * Rational(lcm);
    BigInt e(scaled.get_num());
    BigInt ae = abs(e);
    if (!ae.fits_ulong_p() || mpz_get_ui(ae.get_mpz_t()) > 2'000'000ul)
      fail(errc::internal, "log-value exponent blew up");
    BigInt power;
    mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), mpz_get_ui(ae.get_mpz_t()));
    if (e > 0)
      X *= power;
    else if (e < 0)
      Y *= power;
  }
  return lcm;
}

}  // namespace

int LogValue::sign() const {
  if (terms_.empty()) return 0;

  // All coefficients of one sign settle it: each ln(base) is positive.
  bool any_pos = false, any_neg = false;
  for (const auto& [base, coeff] : terms_) {
    if (coeff > 0) any_pos = true;
    if (coeff < 0) any_neg = true;
  }
  if (!any_neg) return 1;
  if (!any_pos) return -1;

  // Fast numeric path when the estimate is safely away from zero.
  long double est = 0.0L, mag = 0.0L;
  for (const auto& [base, coeff] : terms_) {
    signed long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, base.get_mpz_t());
    long double lnb = std::log(static_cast<long double>(mant)) +
                      static_cast<long double>(exp2) * 0.6931471805599453094L;
    long double term = static_cast<long double>(coeff.get_d()) * lnb;
    est += term;
    mag += std::fabs(term);
  }
  long double margin = mag * 1e-12L + LDBL_MIN;
  if (est > margin) return 1;
  if (est < -margin) return -1;

  // Exact path: clear denominators, compare products of integer powers.
  BigInt lhs, rhs;
  power_products(terms_, lhs, rhs);
  int c = cmp(lhs, rhs);
  return c > 0 ? 1 : (c < 0 ? -1 : 0);
}

int LogValue::compare(const LogValue& other) const {
  LogValue diff = *this;
  diff -= other;
  return diff.sign();
}

double LogValue::to_double() const {
  double out = 0.0;
  for (const auto& [base, coeff] : terms_) {
    signed long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, base.get_mpz_t());
    out += coeff.get_d() * (std::log(mant) + static_cast<double>(exp2) * std::log(2.0));
  }
  return out;
}

std::optional<Rational> LogValue::as_multiple_of_log(const BigInt& base) const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1) {
    auto it = terms_.begin();
    if (it->first == base) return it->second;
  }
  return std::nullopt;
}

std::string LogValue::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [base, coeff] : terms_) {
    Rational a = coeff < 0 ? Rational(-coeff) : coeff;
    if (first) {
      if (coeff < 0) os << "-";
    } else {
      os << (coeff < 0 ? " - " : " + ");
    }
    if (a != 1) os << a.get_str() << "*";
    os << "ln(" << base.get_str() << ")";
    first = false;
  }
  return os.str();
}

BigInt floor_exp(const LogValue& v) {
  if (v.sign() < 0) return 0;  // exp(v) < 1
  BigInt X, Y;
  BigInt lcm = power_products(v.terms(), X, Y);
  unsigned long D = static_cast<unsigned long>(mpz_get_ui(lcm.get_mpz_t()));

  // exp(v) = (X/Y)^(1/D); find the largest k with k^D * Y <= X.
  BigInt q = X / Y;
  BigInt k;
  mpz_root(k.get_mpz_t(), q.get_mpz_t(), D);
  auto le = [&](const BigInt& cand) {
    BigInt p;
    mpz_pow_ui(p.get_mpz_t(), cand.get_mpz_t(), D);
    return p * Y <= X;
  };
  while (k > 0 && !le(k)) k -= 1;
  while (le(k + 1)) k += 1;
  return k;
}

BigInt ceil_exp(const LogValue& v) {
  BigInt f = floor_exp(v);
  if (f == 0) return 1;  // exp is positive
  // ceil equals floor exactly when v == ln(floor).
  if (v.compare(LogValue::log_of_integer(f)) == 0) return f;
  return f + 1;
}

}  // namespace scld
