#pragma once

#include <string>
#include <vector>

#include "charnum/graded_poly.hpp"

namespace charnum {

// Even characteristic power series Q(x) = 1 + a_1 x^2 + a_2 x^4 + ...
// recorded through its coefficients a_j in the weight variable z = x^2.
struct CharacteristicSeries {
  std::string name;
  std::vector<Rational> coeffs;  // coeffs[j-1] = a_j; the constant term is 1

  Rational coeff(int j) const {
    if (j == 0) return Rational(1);
    if (j < 1 || j > static_cast<int>(coeffs.size())) return Rational(0);
    return coeffs[j - 1];
  }
};

// The multiplicative sequence {K_j} attached to a characteristic series:
// polys[j] is the weight-j polynomial in p_1..p_j.
struct MultiplicativeSequence {
  int cap = 6;
  std::vector<GradedPoly> polys;  // polys[0] == 1, indices 0..cap

  const GradedPoly& K(int j) const;
  // K_0 + K_1 + ... + K_cap as one graded polynomial.
  GradedPoly total() const;
};

// j-th power sum of the Pontryagin roots, written in p_1..p_j via the Newton
// identities (j >= 1).
GradedPoly newton_power_sum(int j, int cap);

// Builds the multiplicative sequence of a characteristic series through
// weight `cap`: exp of sum_j c_j * ps_j where log Q = sum c_j z^j.
// Requires series coefficients through a_cap; throws std::invalid_argument
// otherwise.
MultiplicativeSequence multiplicative_sequence(const CharacteristicSeries& q,
                                               int cap);

// Q(x) = (x/2) / sinh(x/2): the series of the A-hat genus.
CharacteristicSeries ahat_series(int cap);
// Q(x) = x / tanh(x): the series of the signature (L) genus.
CharacteristicSeries l_series(int cap);

MultiplicativeSequence ahat_class(int cap);
MultiplicativeSequence l_class(int cap);

// Multiplicative sequence of g(x) = 1 + x^2/2 + 11x^4/8 + 37x^6/16, defined
// only through weight 3; throws std::invalid_argument("insufficient g
// coefficients") for cap > 3.
MultiplicativeSequence wu_spin_class(int cap);

// Power-series helpers on coefficient vectors c[0..cap] (shared by the genus
// and modular-form layers).
std::vector<Rational> series_mul(const std::vector<Rational>& a,
                                 const std::vector<Rational>& b, int cap);
std::vector<Rational> series_inv(const std::vector<Rational>& a, int cap);
std::vector<Rational> series_log(const std::vector<Rational>& a, int cap);

}  // namespace charnum
