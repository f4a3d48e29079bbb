#pragma once

#include <string>
#include <vector>

#include "charnum/graded_poly.hpp"

namespace charnum {

// Truncated q-expansion: coeffs[n] is the coefficient of q^n, n = 0..trunc.
struct QSeries {
  int trunc = 0;
  std::vector<Rational> coeffs;

  explicit QSeries(int trunc_ = 0)
      : trunc(trunc_), coeffs(trunc_ + 1, Rational(0)) {}

  Rational at(int n) const {
    return (n >= 0 && n <= trunc) ? coeffs[n] : Rational(0);
  }

  QSeries truncated(int n) const;
  QSeries operator-() const;
  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend bool operator==(const QSeries& a, const QSeries& b) {
    return a.trunc == b.trunc && a.coeffs == b.coeffs;
  }
  QSeries scaled(const Rational& c) const;

  bool is_zero() const;
  // "[c0, c1, ...]" with rational entries as strings.
  std::string str() const;
};

QSeries q_mul(const QSeries& a, const QSeries& b);
QSeries q_pow(const QSeries& a, int k);

// Eisenstein series E4 = 1 + 240 sum sigma_3(n) q^n and
// E6 = 1 - 504 sum sigma_5(n) q^n.
QSeries eisenstein_e4(int n);
QSeries eisenstein_e6(int n);

// Discriminant cusp form Delta = q prod_{n>=1} (1 - q^n)^24; requires n >= 1.
QSeries delta(int n);

// Delta-bar = E4^3 - 744 Delta (constant term 1, integral coefficients).
QSeries delta_bar(int n);

// Witten genus of a 24-dimensional class via the modular identity
// W(M) = Ahat(M) * Delta-bar + Ahat(M, T) * Delta.
// Throws std::invalid_argument for dim != 24.
QSeries witten_modular(const PontryaginNumbers& nums, int n);

// Witten genus computed directly from the Witten bundle: coefficient bundles
// of tensor_{m>=1} S_{q^m}(T_C - C^24) through q^n, each paired with the
// A-hat class.  n <= 3 (cost grows quickly); dim must be 24.
QSeries witten_direct(const PontryaginNumbers& nums, int n);

}  // namespace charnum
