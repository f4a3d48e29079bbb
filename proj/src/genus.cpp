#include "charnum/genus.hpp"

#include <stdexcept>

namespace charnum {

const GradedPoly& MultiplicativeSequence::K(int j) const {
  if (j < 0 || j > cap || j >= static_cast<int>(polys.size()))
    throw std::invalid_argument("multiplicative sequence index out of range");
  return polys[j];
}

GradedPoly MultiplicativeSequence::total() const {
  GradedPoly t(cap);
  for (const GradedPoly& k : polys) t += k;
  return t;
}

GradedPoly newton_power_sum(int j, int cap) {
  if (j < 1) throw std::invalid_argument("power sum index must be positive");
  // ps_1 = p_1; ps_j = sum_{m=1}^{j-1} (-1)^{m-1} p_m ps_{j-m} + (-1)^{j-1} j p_j
  std::vector<GradedPoly> ps(j + 1, GradedPoly(cap));
  for (int n = 1; n <= j; ++n) {
    GradedPoly acc(cap);
    for (int m = 1; m < n; ++m) {
      GradedPoly term = poly_mul(GradedPoly::gen(m, cap), ps[n - m]);
      acc += (m % 2 == 1) ? term : -term;
    }
    GradedPoly lead = GradedPoly::gen(n, cap).scaled(Rational(n));
    acc += (n % 2 == 1) ? lead : -lead;
    ps[n] = acc;
  }
  return ps[j];
}

std::vector<Rational> series_mul(const std::vector<Rational>& a,
                                 const std::vector<Rational>& b, int cap) {
  std::vector<Rational> out(cap + 1, Rational(0));
  for (int i = 0; i <= cap && i < static_cast<int>(a.size()); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= cap && j < static_cast<int>(b.size()); ++j)
      out[i + j] += a[i] * b[j];
  }
  return out;
}

std::vector<Rational> series_inv(const std::vector<Rational>& a, int cap) {
  if (a.empty() || a[0].is_zero())
    throw std::invalid_argument("series has no inverse: zero constant term");
  std::vector<Rational> out(cap + 1, Rational(0));
  Rational inv0 = a[0].inv();
  out[0] = inv0;
  for (int n = 1; n <= cap; ++n) {
    Rational acc(0);
    for (int k = 1; k <= n && k < static_cast<int>(a.size()); ++k)
      acc += a[k] * out[n - k];
    out[n] = -acc * inv0;
  }
  return out;
}

std::vector<Rational> series_log(const std::vector<Rational>& a, int cap) {
  if (a.empty() || a[0] != Rational(1))
    throw std::invalid_argument("series log needs constant term 1");
  // n a_n = sum_{k=1}^{n} k l_k a_{n-k}  =>  solve for l_n.
  std::vector<Rational> l(cap + 1, Rational(0));
  auto at = [&](int i) {
    return i < static_cast<int>(a.size()) ? a[i] : Rational(0);
  };
  for (int n = 1; n <= cap; ++n) {
    Rational acc = Rational(n) * at(n);
    for (int k = 1; k < n; ++k) acc -= Rational(k) * l[k] * at(n - k);
    l[n] = acc / Rational(n);
  }
  return l;
}

MultiplicativeSequence multiplicative_sequence(const CharacteristicSeries& q,
                                               int cap) {
  if (static_cast<int>(q.coeffs.size()) < cap)
    throw std::invalid_argument("characteristic series too short for cap " +
                                std::to_string(cap));
  std::vector<Rational> series(cap + 1, Rational(0));
  series[0] = Rational(1);
  for (int j = 1; j <= cap; ++j) series[j] = q.coeff(j);
  std::vector<Rational> logq = series_log(series, cap);

  // exponent = sum_j logq[j] * ps_j; sequence = exp(exponent).
  GradedPoly expo(cap);
  for (int j = 1; j <= cap; ++j)
    if (!logq[j].is_zero()) expo += newton_power_sum(j, cap).scaled(logq[j]);

  GradedPoly total = GradedPoly::one(cap);
  GradedPoly power = GradedPoly::one(cap);
  Rational fact(1);
  for (int k = 1; k <= cap; ++k) {
    power = poly_mul(power, expo);
    fact *= Rational(k);
    total += power.scaled(fact.inv());
  }

  MultiplicativeSequence seq;
  seq.cap = cap;
  seq.polys.reserve(cap + 1);
  for (int j = 0; j <= cap; ++j) seq.polys.push_back(total.weight_part(j));
  return seq;
}

CharacteristicSeries ahat_series(int cap) {
  // sinh(x/2)/(x/2) = sum_k z^k / (4^k (2k+1)!)  with z = x^2.
  std::vector<Rational> s(cap + 1, Rational(0));
  Int four_k(1);
  for (int k = 0; k <= cap; ++k) {
    s[k] = Rational(Int(1), four_k * factorial(2 * k + 1));
    four_k *= 4;
  }
  std::vector<Rational> q = series_inv(s, cap);
  CharacteristicSeries out;
  out.name = "ahat";
  for (int j = 1; j <= cap; ++j) out.coeffs.push_back(q[j]);
  return out;
}

CharacteristicSeries l_series(int cap) {
  // x/tanh(x) = cosh(x) / (sinh(x)/x): numerator sum z^k/(2k)!,
  // denominator sum z^k/(2k+1)!.
  std::vector<Rational> num(cap + 1, Rational(0)), den(cap + 1, Rational(0));
  for (int k = 0; k <= cap; ++k) {
    num[k] = Rational(Int(1), factorial(2 * k));
    den[k] = Rational(Int(1), factorial(2 * k + 1));
  }
  std::vector<Rational> q = series_mul(num, series_inv(den, cap), cap);
  CharacteristicSeries out;
  out.name = "l";
  for (int j = 1; j <= cap; ++j) out.coeffs.push_back(q[j]);
  return out;
}

MultiplicativeSequence ahat_class(int cap) {
  return multiplicative_sequence(ahat_series(cap), cap);
}

MultiplicativeSequence l_class(int cap) {
  return multiplicative_sequence(l_series(cap), cap);
}

MultiplicativeSequence wu_spin_class(int cap) {
  if (cap > 3) throw std::invalid_argument("insufficient g coefficients");
  CharacteristicSeries g;
  g.name = "wu";
  g.coeffs = {Rational(1, 2), Rational(11, 8), Rational(37, 16)};
  g.coeffs.resize(std::max(cap, 0));
  return multiplicative_sequence(g, cap);
}

}  // namespace charnum
