#pragma once

#include <map>
#include <string>

#include "charnum/partition.hpp"
#include "charnum/rational.hpp"

namespace charnum {

// Truncated polynomial in the Pontryagin generators p_1, p_2, ... with exact
// rational coefficients.  Monomials are indexed by partitions (p_{4,2} means
// p_4 * p_2), the weight of p_i is i, and every term of weight above `cap` is
// discarded.  Zero coefficients are never stored.
struct GradedPoly {
  int cap = 6;
  std::map<Partition, Rational> terms;

  GradedPoly() = default;
  explicit GradedPoly(int cap_) : cap(cap_) {}

  static GradedPoly zero(int cap) { return GradedPoly(cap); }
  static GradedPoly one(int cap) {
    GradedPoly g(cap);
    g.terms[Partition()] = Rational(1);
    return g;
  }
  static GradedPoly monomial(const Partition& mu, const Rational& c, int cap);
  // The generator p_i as a polynomial.
  static GradedPoly gen(int i, int cap) {
    return monomial(Partition{i}, Rational(1), cap);
  }

  bool is_zero() const { return terms.empty(); }
  Rational coeff(const Partition& mu) const;
  // Adds c * p_mu, dropping the term if it lands above the cap or cancels.
  GradedPoly& add_term(const Partition& mu, const Rational& c);

  // The weight-w homogeneous part.
  GradedPoly weight_part(int w) const;
  // Largest weight with a nonzero term (-1 for the zero polynomial).
  int top_weight() const;

  // Re-truncates to a new cap (new_cap may be smaller or larger).
  GradedPoly truncated(int new_cap) const;

  GradedPoly operator-() const;
  GradedPoly& operator+=(const GradedPoly& o);
  GradedPoly& operator-=(const GradedPoly& o);
  friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
  friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
  friend bool operator==(const GradedPoly& a, const GradedPoly& b) {
    return a.cap == b.cap && a.terms == b.terms;
  }

  GradedPoly scaled(const Rational& c) const;

  // Deterministic human-readable form, terms sorted by weight then partition:
  // "1 + 1/2*p1 - 3*p2,1".
  std::string str() const;
};

// Product of two graded polynomials sharing the same cap; throws
// std::invalid_argument on a cap mismatch.
GradedPoly poly_mul(const GradedPoly& a, const GradedPoly& b);

// a^k for k >= 0.
GradedPoly poly_pow(const GradedPoly& a, int k);

// A full set of Pontryagin numbers of a closed manifold: one exact rational
// per partition of dim/4 (zero values omitted).  Linear combinations model
// rational cobordism classes.
struct PontryaginNumbers {
  int dim = 24;
  std::map<Partition, Rational> numbers;

  explicit PontryaginNumbers(int dim_ = 24) : dim(dim_) {}

  Rational at(const Partition& mu) const;
  PontryaginNumbers& set(const Partition& mu, const Rational& v);

  // True when every number involving p_1 (any partition containing the part 1)
  // vanishes, the numerical shadow of a String structure in this degree.
  bool string_flavored() const;

  PontryaginNumbers scaled(const Rational& c) const;
  friend PontryaginNumbers operator+(const PontryaginNumbers& a,
                                     const PontryaginNumbers& b);
  friend PontryaginNumbers operator-(const PontryaginNumbers& a,
                                     const PontryaginNumbers& b);
  friend bool operator==(const PontryaginNumbers& a, const PontryaginNumbers& b);
};

// Evaluates <poly, [M]>: the sum over top-weight terms of coefficient times
// the matching Pontryagin number.  Requires poly.cap == nums.dim / 4; throws
// std::invalid_argument otherwise.
Rational pair(const GradedPoly& poly, const PontryaginNumbers& nums);

}  // namespace charnum
