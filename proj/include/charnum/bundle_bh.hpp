#pragma once

#include <array>
#include <utility>
#include <vector>

#include "charnum/graded_poly.hpp"
#include "charnum/ring_model.hpp"
#include "charnum/root_poly.hpp"

namespace charnum {

// Root data of a homogeneous fibration G/H: the roots of G complementary to
// those of H, one representative per +/- pair, written in the x-basis of the
// maximal torus.
struct RootSystemData {
  int n_torus = 0;
  std::vector<std::vector<Rational>> complementary_roots;
};

// The F4 / Spin(9) instance: eight representatives (x1 +- x2 +- x3 +- x4)/2.
RootSystemData f4_spin9_roots();

// Pontryagin class of the tangent bundle along the fiber: expands
// prod_j (1 + b_j^2) in root variables and reduces to p_1..p_cap.
GradedPoly fiber_pontryagin(const RootSystemData& rsd, int cap);

// Conversion between Spin classes q_1..q_4 and Pontryagin classes p_1..p_4
// (p1 = 2q1, p2 = 2q2 + q1^2, p3 = q3, p4 = 2q4 + q2^2 - 2q1q3).  The input
// partitions index q's (resp. p's); weight must be <= 4 and parts <= 4,
// otherwise std::invalid_argument.
GradedPoly spin_to_pont(const GradedPoly& q_expr);
GradedPoly pont_to_spin(const GradedPoly& p_expr);

// Solves for the two remaining pullback images from the Weyl-invariant
// relations: img_p3 = img_p1 * img_p2 / 6 and
// img_p4 = (-img_p2^2 + img_p1^2 * img_p2 / 2) / 12, in the target ring.
std::pair<RingModel::Element, RingModel::Element> pullback_solver(
    const RingModel::Element& img_p1, const RingModel::Element& img_p2,
    const RingModel& target);

// Extends a base ring model by a free degree-8 variable u with u^(max_pow+1)
// = 0: basis (base element) * u^k for k = 0..max_pow.  The fundamental class
// is left empty (assembly scaffolding, not a closed manifold).
RingModel u_extension(const RingModel& base, int max_pow);

// Full record of the M4 construction, kept for cross-checking: the extended
// ring H*(N^8)[u]/u^4, the pullback images, the total-class pieces before the
// u^3 = 0 relation, and the final 24-dimensional model.
struct M4Assembly {
  RingModel extended;
  RingModel::Element img_p1, img_p2, img_p3, img_p4;
  RingModel::Element img_q3, img_q4;
  std::vector<RingModel::Element> pieces;  // p_0(M4)..p_6(M4) in `extended`
  RingModel model;
};

// Assembles M4 = the OP^2-bundle over N^8 and runs every mandatory internal
// cross-check (p1 = 0, the q3/q4 images, the five pre-relation graded pieces,
// signature 8); throws std::runtime_error with diagnostics on any mismatch.
M4Assembly m4_assembly();
RingModel m4_model();

// Weyl-invariant comparison through weight 4: I_2, I_6, I_8 reduced to
// Pontryagin classes, and the graded spans of the polynomial algebras on
// {I_2, I_6, I_8} versus {p1, -6p3 + p1p2, 12p4 + p2^2 - p1^2 p2 / 2}.
struct WeylReport {
  GradedPoly i2, i6, i8;                 // cap 4
  std::array<int, 4> dim_invariants{};   // weights 1..4
  std::array<int, 4> dim_generators{};
  bool spans_equal = false;
};

WeylReport weyl_invariant_check();

}  // namespace charnum
