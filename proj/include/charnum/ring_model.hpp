#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "charnum/graded_poly.hpp"
#include "charnum/linalg.hpp"

namespace charnum {

// Finite model of the rational cohomology ring of a closed manifold, enough
// to integrate characteristic classes: labeled generators with degrees,
// sparse structure constants, a fundamental functional on top degree, and the
// total Pontryagin class stored piece by piece.
struct RingModel {
  // Sparse ring element: basis index -> coefficient.
  using Element = std::map<int, Rational>;

  int dim = 0;
  std::vector<std::string> labels;                 // labels[0] == "1"
  std::vector<int> degrees;                        // degrees[0] == 0
  std::map<std::pair<int, int>, Element> products; // key (i, j) with 1 <= i <= j
  std::map<int, Rational> fundamental;             // on top-degree indices
  std::vector<Element> pont;                       // pont[0] == unit, size dim/4 + 1

  int size() const { return static_cast<int>(labels.size()); }
  int degree_of(int i) const { return degrees.at(i); }
  int find(const std::string& label) const;  // -1 when absent

  static Element unit() { return Element{{0, Rational(1)}}; }
  Element basis_element(int i) const { return Element{{i, Rational(1)}}; }

  // Product via structure constants; pairs whose degree sum exceeds dim, or
  // with no stored entry, multiply to zero.
  Element mul(const Element& a, const Element& b) const;
  Element mul_pow(const Element& a, int k) const;

  // <a, [X]>: fundamental functional on the top-degree part of a.
  Rational integrate(const Element& a) const;

  // Substitutes pont pieces for the p_i generators of a graded polynomial and
  // multiplies out in the ring.
  Element evaluate(const GradedPoly& poly) const;

  // All partition-indexed Pontryagin numbers (dim must be divisible by 4).
  PontryaginNumbers numbers() const;

  // Signature via the L-class: <L_{dim/4}, [X]>.
  Rational signature() const;

  // Validates basic shape (unit, degrees, pont size); throws on violation.
  void validate() const;
};

std::string element_str(const RingModel& m, const RingModel::Element& e);
RingModel::Element element_add(const RingModel::Element& a,
                               const RingModel::Element& b);
RingModel::Element element_scale(const RingModel::Element& a, const Rational& c);

// Symmetric integer/rational pair (A, b) subject to Wall's realization
// conditions for 3-connected 8-manifolds.
struct WallPair {
  std::vector<std::vector<long>> a;
  std::vector<long> b;
};

// The hyperbolic plane H and the E8 form, and the standard pair
// (diag(H, E8), (2,2,0,...,0)) used to build the 8-dimensional base N^8.
std::vector<std::vector<long>> h_form();
std::vector<std::vector<long>> e8_form();
WallPair wall_pair_h_e8();

// Exact signature of a symmetric rational matrix by congruence
// diagonalization (no floating point).
int signature_of_symmetric(const Matrix& m);
int signature_of_symmetric_int(const std::vector<std::vector<long>>& m);

// Single-point model of dimension 0.
RingModel point_model();

// Kervaire-Milnor almost-parallelizable generator M_0^{4n} (1 <= n <= 6):
// H^{4n} = Z{x}, intermediate Pontryagin classes zero, and top class
// p_n = denom(B_{2n} / 4n) * a_n * (2n-1)! * x with a_n = 2 for odd n.
RingModel kervaire_milnor_model(int n);

// The octonionic projective plane: Z[u]/u^3 with <u^2> = 1 and
// p = 1 + 6u + 39u^2.
RingModel op2_model();

// Tensor-product ring with product fundamental class and Whitney-product
// Pontryagin class.
RingModel product_model(const RingModel& x, const RingModel& y);

// Scales the single nonzero positive-weight Pontryagin piece by c (the
// number-level stand-in for a fractional generator).  Throws when the model
// has zero or several nonzero pieces.
RingModel scale_top_class(const RingModel& x, const Rational& c);

// 8-dimensional Wall model: H^4 basis per A, q_1 = b (so p_1 = 2b), top p_2
// solved from the signature theorem <(7 p_2 - p_1^2) / 45> = Sig(A).
// Optional generator labels for the degree-4 basis (defaults g1..gn).
// Throws std::invalid_argument("not realizable: ...") when a Wall condition
// fails.
RingModel wall_model(const WallPair& wp,
                     const std::vector<std::string>& gen_labels = {});

// The base manifold N^8 of the M_4 construction: wall_model on
// (diag(H, E8), (2,2,0,...)) with generators a1, a2, b1..b8.
RingModel n8_model();

// Number vectors of M_1 = (B_1 + B_2)/72 and M_2 = (-41 B_1 + 31 B_2)/72
// where B_1 = (M_0^8)^3 and B_2 = (half M_0^12)^2.  Throws when a resulting
// number fails integrality.
std::pair<PontryaginNumbers, PontryaginNumbers> m1_m2_numbers();

// Number vectors of the auxiliary basis B_1..B_4 of 24-dimensional products.
std::vector<PontryaginNumbers> b_basis_numbers();

// Whitney convolution of number vectors: the numbers of a product manifold
// computed combinatorially from the factors' numbers alone (oracle for
// product_model; both factors must have full partition tables, which holds
// for the models used here).
PontryaginNumbers whitney_numbers_oracle(const RingModel& x, const RingModel& y);

}  // namespace charnum
