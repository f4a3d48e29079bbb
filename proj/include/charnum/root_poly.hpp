#pragma once

#include <map>
#include <vector>

#include "charnum/graded_poly.hpp"
#include "charnum/rational.hpp"

namespace charnum {

// Polynomial in formal root variables x_1..x_n with exact rational
// coefficients, truncated above a total-degree cap.  Used to express
// characteristic classes through Chern/Pontryagin roots before reducing them
// to symmetric-function generators.
struct RootPoly {
  int nvars = 0;
  int cap = 0;
  // Exponent vector (length nvars) -> coefficient; zero coefficients omitted.
  std::map<std::vector<int>, Rational> terms;

  RootPoly() = default;
  RootPoly(int nvars_, int cap_) : nvars(nvars_), cap(cap_) {}

  static RootPoly zero(int nvars, int cap) { return RootPoly(nvars, cap); }
  static RootPoly one(int nvars, int cap);
  // The linear form sum_i coeffs[i] * x_i.
  static RootPoly linear(const std::vector<Rational>& coeffs, int cap);
  // Elementary symmetric polynomial e_j(x_1^2, ..., x_n^2): the image of the
  // Pontryagin generator p_j in root variables.
  static RootPoly e_of_squares(int j, int nvars, int cap);

  bool is_zero() const { return terms.empty(); }
  RootPoly& add_term(const std::vector<int>& expo, const Rational& c);
  RootPoly weight_part(int total_degree) const;

  RootPoly operator-() const;
  RootPoly& operator+=(const RootPoly& o);
  RootPoly& operator-=(const RootPoly& o);
  friend RootPoly operator+(RootPoly a, const RootPoly& b) { return a += b; }
  friend RootPoly operator-(RootPoly a, const RootPoly& b) { return a -= b; }
  friend bool operator==(const RootPoly& a, const RootPoly& b) {
    return a.nvars == b.nvars && a.cap == b.cap && a.terms == b.terms;
  }
  RootPoly scaled(const Rational& c) const;

  // Invariance under the hyperoctahedral group, checked on its generators:
  // every adjacent transposition x_i <-> x_{i+1} plus the sign flip
  // x_1 -> -x_1.
  bool is_hyperoctahedral_symmetric() const;
};

RootPoly root_mul(const RootPoly& a, const RootPoly& b);
RootPoly root_pow(const RootPoly& a, int k);

// Expands a graded polynomial in p_1..p_n to root variables via
// p_j = e_j(x_1^2, ..., x_n^2).  The root cap is 2 * poly.cap.
RootPoly to_roots(const GradedPoly& poly, int nvars);

// Rewrites a hyperoctahedral-invariant root polynomial as a polynomial in
// p_j = e_j(x^2), solving exactly degree by degree.  Throws
// std::invalid_argument("not symmetric") when the input fails the generator
// check.  The result cap is floor(cap / 2) in p-weight.
GradedPoly symmetric_reduce(const RootPoly& rp);

}  // namespace charnum
