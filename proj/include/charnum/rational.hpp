#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace charnum {

// Arbitrary-precision integer used throughout the library.
using Int = mpz_class;

// Exact rational number.  Thin wrapper around GMP's mpq_class that keeps the
// value canonical (lowest terms, positive denominator) and forbids any
// floating-point construction.  Serialized as "a/b", or "a" when b == 1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}          // NOLINT(google-explicit-constructor)
  Rational(const Int& n) : v_(n) {}    // NOLINT(google-explicit-constructor)
  Rational(long num, long den) : v_(num, den) { normalize(); }
  Rational(const Int& num, const Int& den) : v_(num, den) { normalize(); }

  Rational(double) = delete;
  Rational(float) = delete;

  // Parses "a", "-a", or "a/b".  Throws std::invalid_argument on malformed
  // input or zero denominator.
  static Rational parse(const std::string& s);

  const Int num() const { return Int(v_.get_num()); }
  const Int den() const { return Int(v_.get_den()); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  // The integer value; throws if the denominator is not 1.
  Int as_integer() const {
    if (!is_integer()) throw std::domain_error("not an integer: " + str());
    return num();
  }

  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational abs() const { return sign() < 0 ? -*this : *this; }
  Rational pow(int e) const;
  Rational inv() const {
    if (is_zero()) throw std::domain_error("division by zero");
    return Rational(1) / *this;
  }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  void normalize() {
    if (v_.get_den() == 0) throw std::invalid_argument("zero denominator");
    v_.canonicalize();
  }

  mpq_class v_;
};

// n! as an exact integer; n must be >= 0.
Int factorial(int n);

// Binomial coefficient C(n, k) for integer n (possibly negative) and k >= 0.
Int binomial(long n, int k);

// p-adic valuation of a nonzero integer.  Throws on n == 0.
int valuation(const Int& p, const Int& n);

// Greatest common divisor of |a| and |b| (gcd(0, 0) == 0).
Int gcd_int(const Int& a, const Int& b);

}  // namespace charnum
