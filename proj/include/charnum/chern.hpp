#pragma once

#include <string>
#include <vector>

#include "charnum/genus.hpp"
#include "charnum/graded_poly.hpp"

namespace charnum {

// Chern character of a (possibly virtual) complex bundle over a manifold
// whose rational cohomology is generated by Pontryagin classes.  comps[j]
// holds the cohomological degree-4j piece as a polynomial in p_1..p_cap;
// the odd-degree pieces vanish for bundles built from a real tangent bundle.
struct ChernCharacter {
  int cap = 6;
  Rational rank;                 // degree-0 piece; may be negative (virtual)
  std::vector<GradedPoly> comps;  // comps[j] for j = 1..cap; comps[0] unused

  explicit ChernCharacter(int cap_ = 6)
      : cap(cap_), rank(0), comps(cap_ + 1, GradedPoly(cap_)) {}

  const GradedPoly& comp(int j) const;
  // rank + comps[1] + ... + comps[cap].
  GradedPoly total() const;
};

// Rank-r bundle with vanishing higher character (trivial / flat).
ChernCharacter trivial_character(const Rational& rank, int cap);

// ch of the complexified tangent bundle of a dim-dimensional manifold:
// rank dim, comps[j] = 2 * ps_j / (2j)!.
ChernCharacter ch_tangent(int dim, int cap);

ChernCharacter ch_sum(const ChernCharacter& a, const ChernCharacter& b);
ChernCharacter ch_diff(const ChernCharacter& a, const ChernCharacter& b);
ChernCharacter ch_scale(const Rational& c, const ChernCharacter& a);
ChernCharacter tensor(const ChernCharacter& a, const ChernCharacter& b);

// Adams operation psi^k: multiplies the degree-4j piece by k^(2j).
ChernCharacter adams(int k, const ChernCharacter& a);

// ch of the j-th exterior power, via the Newton recurrence
// j*lambda^j = sum_{m=1}^{j} (-1)^(m-1) psi^m tensor lambda^(j-m).
// Throws std::invalid_argument for j >= 2 on a virtual (negative-rank) input,
// where the recurrence no longer computes a bundle.
ChernCharacter exterior_power(int j, const ChernCharacter& a);

// ch of the k-th symmetric power, via
// k*S^k = sum_{m=1}^{k} psi^m tensor S^(k-m).
ChernCharacter symmetric_power(int k, const ChernCharacter& a);

// The degree-doubling substitution behind the twisted signature: multiplies
// the degree-4j piece by 4^j (formally ch(E)(2x)).
ChernCharacter ch2_scale(const ChernCharacter& a);

// <A-hat(M) * ch(E), [M]>.
Rational twisted_ahat(const PontryaginNumbers& nums, const ChernCharacter& e);
// <L(M) * ch2(E), [M]>.
Rational twisted_sig(const PontryaginNumbers& nums, const ChernCharacter& e);

// A twist expression T^i*L^j*S^k meaning tensor^i T_C (x) Lambda^j(T_C) (x)
// S^k(T_C).  Factors are '*'-separated, each of the form T, L, S, T^n, L^n,
// S^n; "1" or the empty string is the trivial twist.
struct Twist {
  int t = 0, l = 0, s = 0;
  std::string str() const;
};

// Parses the grammar above; throws std::invalid_argument on malformed input
// or a repeated factor letter.
Twist parse_twist(const std::string& expr);

// Builds ch of the twist bundle over a dim-dimensional manifold.
ChernCharacter twist_character(const Twist& tw, int dim, int cap);

}  // namespace charnum
