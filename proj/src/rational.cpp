#include "charnum/rational.hpp"

#include <cctype>

namespace charnum {

Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto check_int = [&](const std::string& part) {
    if (part.empty()) throw std::invalid_argument("malformed rational: " + s);
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) throw std::invalid_argument("malformed rational: " + s);
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i])))
        throw std::invalid_argument("malformed rational: " + s);
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    check_int(s);
    return Rational(Int(s));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  check_int(num);
  check_int(den);
  Int d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + s);
  return Rational(Int(num), d);
}

std::string Rational::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

Rational Rational::pow(int e) const {
  if (e == 0) return Rational(1);
  Rational base = e > 0 ? *this : inv();
  int n = e > 0 ? e : -e;
  Rational acc(1);
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

Int factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative integer");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Int binomial(long n, int k) {
  if (k < 0) return Int(0);
  if (n >= 0) {
    if (k > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
  }
  // C(n, k) = (-1)^k C(k - n - 1, k) for n < 0.
  Int r = binomial(k - n - 1, k);
  return (k % 2 == 0) ? r : Int(-r);
}

int valuation(const Int& p, const Int& n) {
  if (n == 0) throw std::domain_error("valuation of zero");
  if (p < 2) throw std::invalid_argument("valuation base must be >= 2");
  Int m = abs(n);
  int v = 0;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

Int gcd_int(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace charnum
