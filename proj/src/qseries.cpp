#include "charnum/qseries.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "charnum/chern.hpp"
#include "charnum/genus.hpp"

namespace charnum {

QSeries QSeries::truncated(int n) const {
  QSeries out(n);
  for (int i = 0; i <= n && i <= trunc; ++i) out.coeffs[i] = coeffs[i];
  return out;
}

QSeries QSeries::operator-() const {
  QSeries out(trunc);
  for (int i = 0; i <= trunc; ++i) out.coeffs[i] = -coeffs[i];
  return out;
}

QSeries& QSeries::operator+=(const QSeries& o) {
  if (trunc != o.trunc)
    throw std::invalid_argument("q-series truncation mismatch");
  for (int i = 0; i <= trunc; ++i) coeffs[i] += o.coeffs[i];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
  if (trunc != o.trunc)
    throw std::invalid_argument("q-series truncation mismatch");
  for (int i = 0; i <= trunc; ++i) coeffs[i] -= o.coeffs[i];
  return *this;
}

QSeries QSeries::scaled(const Rational& c) const {
  QSeries out(trunc);
  for (int i = 0; i <= trunc; ++i) out.coeffs[i] = coeffs[i] * c;
  return out;
}

bool QSeries::is_zero() const {
  for (const Rational& c : coeffs)
    if (!c.is_zero()) return false;
  return true;
}

std::string QSeries::str() const {
  std::string s = "[";
  for (int i = 0; i <= trunc; ++i) {
    if (i) s += ", ";
    s += coeffs[i].str();
  }
  return s + "]";
}

QSeries q_mul(const QSeries& a, const QSeries& b) {
  if (a.trunc != b.trunc)
    throw std::invalid_argument("q-series truncation mismatch");
  QSeries out(a.trunc);
  for (int i = 0; i <= a.trunc; ++i) {
    if (a.coeffs[i].is_zero()) continue;
    for (int j = 0; i + j <= a.trunc; ++j)
      out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return out;
}

QSeries q_pow(const QSeries& a, int k) {
  if (k < 0) throw std::invalid_argument("negative q-series power");
  QSeries acc(a.trunc);
  acc.coeffs[0] = Rational(1);
  QSeries base = a;
  while (k > 0) {
    if (k & 1) acc = q_mul(acc, base);
    if (k >>= 1) base = q_mul(base, base);
  }
  return acc;
}

namespace {
Int sigma(int n, int k) {
  Int s(0);
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) {
      Int dk(1);
      for (int i = 0; i < k; ++i) dk *= d;
      s += dk;
    }
  return s;
}
}  // namespace

QSeries eisenstein_e4(int n) {
  if (n < 0) throw std::invalid_argument("negative truncation");
  QSeries out(n);
  out.coeffs[0] = Rational(1);
  for (int m = 1; m <= n; ++m) out.coeffs[m] = Rational(Int(240) * sigma(m, 3));
  return out;
}

QSeries eisenstein_e6(int n) {
  if (n < 0) throw std::invalid_argument("negative truncation");
  QSeries out(n);
  out.coeffs[0] = Rational(1);
  for (int m = 1; m <= n; ++m) out.coeffs[m] = Rational(Int(-504) * sigma(m, 5));
  return out;
}

QSeries delta(int n) {
  if (n < 1) throw std::invalid_argument("delta needs truncation >= 1");
  QSeries prod(n);
  prod.coeffs[0] = Rational(1);
  for (int m = 1; m <= n; ++m) {
    QSeries f(n);
    f.coeffs[0] = Rational(1);
    f.coeffs[m] = Rational(-1);
    prod = q_mul(prod, q_pow(f, 24));
  }
  // Multiply by q: shift up one degree.
  QSeries out(n);
  for (int i = 1; i <= n; ++i) out.coeffs[i] = prod.coeffs[i - 1];
  return out;
}

QSeries delta_bar(int n) {
  if (n < 0) throw std::invalid_argument("negative truncation");
  QSeries out = q_pow(eisenstein_e4(n), 3);
  if (n >= 1) out -= delta(n).scaled(Rational(744));
  return out;
}

QSeries witten_modular(const PontryaginNumbers& nums, int n) {
  if (nums.dim != 24)
    throw std::invalid_argument("Witten genus supported for dimension 24 only");
  Rational a = pair(ahat_class(6).total(), nums);
  Rational at = twisted_ahat(nums, ch_tangent(24, 6));
  QSeries out = delta_bar(n).scaled(a);
  if (n >= 1) out += delta(n).scaled(at);
  return out;
}

QSeries witten_direct(const PontryaginNumbers& nums, int n) {
  if (nums.dim != 24)
    throw std::invalid_argument("Witten genus supported for dimension 24 only");
  if (n < 0 || n > 3)
    throw std::invalid_argument("direct Witten expansion supported for order <= 3");
  const int cap = 6;
  ChernCharacter t = ch_tangent(24, cap);
  // S^m(T) for m <= n, then the reduced powers
  // S^k(T - 24) = sum_m S^m(T) * (-1)^(k-m) C(24, k-m).
  std::vector<ChernCharacter> sym{trivial_character(Rational(1), cap)};
  for (int m = 1; m <= n; ++m) sym.push_back(symmetric_power(m, t));
  std::vector<ChernCharacter> sred;
  for (int k = 0; k <= n; ++k) {
    ChernCharacter acc(cap);
    for (int m = 0; m <= k; ++m) {
      Int c = binomial(24, k - m);
      if ((k - m) % 2 == 1) c = -c;
      acc = ch_sum(acc, ch_scale(Rational(c), sym[m]));
    }
    sred.push_back(acc);
  }
  // q^d coefficient bundle of tensor_{m>=1} S_{q^m}(T~): sum over all
  // {m -> k_m >= 1} with sum m k_m = d of tensor_m S^{k_m}(T~).
  QSeries out(n);
  for (int d = 0; d <= n; ++d) {
    ChernCharacter acc(cap);
    if (d == 0) {
      acc = trivial_character(Rational(1), cap);
    } else {
      std::map<int, int> cur;
      std::function<void(int, int)> rec = [&](int rem, int minm) {
        if (rem == 0) {
          ChernCharacter term = trivial_character(Rational(1), cap);
          for (const auto& [m, k] : cur) term = tensor(term, sred[k]);
          acc = ch_sum(acc, term);
          return;
        }
        for (int m = minm; m <= rem; ++m) {
          for (int k = 1; m * k <= rem; ++k) {
            cur[m] = k;
            rec(rem - m * k, m + 1);
          }
          cur.erase(m);
        }
      };
      rec(d, 1);
    }
    out.coeffs[d] = twisted_ahat(nums, acc);
  }
  return out;
}

}  // namespace charnum
