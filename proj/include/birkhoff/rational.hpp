#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

namespace birkhoff {

/// Arbitrary-precision signed integer.
using Int = mpz_class;

/// n! as an exact integer.
inline Int factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

/// binom(n, k), zero outside 0 <= k <= n.
inline Int binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

/// Falling factorial (n)_k = n (n-1) ... (n-k+1).
inline Int falling_factorial(long n, long k) {
  if (k < 0) throw std::invalid_argument("falling_factorial: negative k");
  Int r = 1;
  for (long i = 0; i < k; ++i) r *= (n - i);
  return r;
}

enum class RoundDir { down, up };

/// Exact rational scalar. Always canonical: denominator > 0 and
/// gcd(|num|, den) = 1, maintained by every operation.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long v) : q_(v) {}  // NOLINT: implicit on purpose
  Rational(const Int& v) : q_(v) {}
  Rational(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  /// Parses "p" or "p/q" with p a decimal integer and q a positive
  /// decimal integer. Anything else is rejected.
  static Rational from_string(const std::string& s) {
    auto is_digits = [](const std::string& t) {
      if (t.empty()) return false;
      for (char ch : t)
        if (ch < '0' || ch > '9') return false;
      return true;
    };
    std::string num = s, den = "1";
    auto slash = s.find('/');
    if (slash != std::string::npos) {
      num = s.substr(0, slash);
      den = s.substr(slash + 1);
    }
    std::string num_digits = num;
    if (!num_digits.empty() && num_digits[0] == '-')
      num_digits = num_digits.substr(1);
    if (!is_digits(num_digits) || !is_digits(den))
      throw std::invalid_argument("Rational: malformed text '" + s + "'");
    Int d(den);
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    return Rational(Int(num), d);
  }

  Int num() const { return q_.get_num(); }
  Int den() const { return q_.get_den(); }
  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }

  /// "p/q", with "/q" omitted when the denominator is 1.
  std::string to_string() const {
    std::string s = q_.get_str();
    return s;
  }

  Rational operator-() const { return Rational(mpq_class(-q_), raw_tag{}); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t()) < 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  Rational inverse() const {
    if (is_zero()) throw std::invalid_argument("Rational: inverse of zero");
    return Rational(den(), num());
  }

  double to_double() const { return q_.get_d(); }

 private:
  struct raw_tag {};
  Rational(mpq_class q, raw_tag) : q_(std::move(q)) {}
  mpq_class q_;
};

/// q^e for e >= 0; q^0 = 1.
inline Rational rational_pow(const Rational& q, long e) {
  if (e < 0) throw std::invalid_argument("rational_pow: negative exponent");
  Int n, d;
  mpz_pow_ui(n.get_mpz_t(), q.num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), q.den().get_mpz_t(), static_cast<unsigned long>(e));
  return Rational(n, d);
}

/// Nearest dyadic with denominator dividing 2^bits in the requested
/// direction: result >= q for up, <= q for down, |result - q| < 2^-bits.
/// Fixed point on values that are already dyadic at this resolution.
inline Rational round_dyadic(const Rational& q, int bits, RoundDir dir) {
  if (bits < 1) throw std::invalid_argument("round_dyadic: bits must be >= 1");
  Int scale = 1;
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), static_cast<unsigned long>(bits));
  Int t = q.num() * scale;
  Int k;
  if (dir == RoundDir::down)
    mpz_fdiv_q(k.get_mpz_t(), t.get_mpz_t(), q.den().get_mpz_t());
  else
    mpz_cdiv_q(k.get_mpz_t(), t.get_mpz_t(), q.den().get_mpz_t());
  return Rational(k, scale);
}

}  // namespace birkhoff
