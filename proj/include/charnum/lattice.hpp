#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "charnum/graded_poly.hpp"
#include "charnum/linalg.hpp"

namespace charnum {

// Shared data of the rank-4 cobordism lattice: the four basis number vectors
// M1..M4, the matrix K with columns kappa(M_i), and its exact inverse.
// Built once (thread-safe static) since every piece is derived by the engine.
struct KappaData {
  std::array<PontryaginNumbers, 4> basis_numbers;
  Matrix k;      // 4x4, integer entries as Rationals
  Matrix k_inv;  // exact inverse
  Rational det;

  static const KappaData& instance();

  // Value of the functional <p_mu, .> on the four basis classes.
  std::array<Int, 4> functional(const Partition& mu) const;
  // Signature values on the basis.
  std::array<Int, 4> signature_vector() const;
  // Numbers of the combination sum_i x_i M_i.
  PontryaginNumbers combination(const std::array<Int, 4>& x) const;
};

// kappa(M) = (Ahat(M), Ahat(M,T)/24, Ahat(M,Lambda^2 T), Sig(M)/8).
// Requires dim 24 and a String-flavored number vector (all p1-partitions
// vanish); throws std::invalid_argument otherwise.
std::array<Rational, 4> kappa(const PontryaginNumbers& nums);

// Solution of nums = sum_i x_i . numbers(M_i), solved exactly on the
// functionals (p2^3, p2p4, p3^2, p6).  `integral` is false when the
// rational solution leaves the integer lattice.
struct Decomposition {
  std::array<Rational, 4> x;
  bool integral = false;
  std::string str() const;
};

Decomposition decompose(const PontryaginNumbers& nums);

// One p-adic congruence on lattice vectors: nu_p(functional . x) >= e.
struct SublatticeConstraint {
  std::array<Int, 4> functional;
  long p = 2;
  int e = 0;
};

// Minimal p-adic valuation of values . x over the sublattice cut out by the
// constraints at prime p, with an attaining witness; nullopt when the
// functional vanishes identically on the sublattice.
struct MinValuation {
  int valuation = 0;
  std::array<Int, 4> witness{};
};
std::optional<MinValuation> min_valuation_over_sublattice(
    long p, const std::array<Int, 4>& values,
    const std::vector<SublatticeConstraint>& constraints);

// gcd of values . x over all integer x satisfying every constraint,
// computed exactly prime by prime on congruence-kernel lattice generators.
Int gcd_over_sublattice(const std::array<Int, 4>& values,
                        const std::vector<SublatticeConstraint>& constraints);

// Brute-force oracle for the same quantity over the box |x_i| <= bound.
Int gcd_over_box(const std::array<Int, 4>& values,
                 const std::vector<SublatticeConstraint>& constraints,
                 int bound);

// Sig(M) - <nu12 u nu12, [M]> = Sig(M) - 25 . (p3^2 number), the modified
// signature with respect to the middle Spin Wu class 5p3.
Rational modified_signature(const PontryaginNumbers& nums);

struct TheoremCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct DivisibilityReport {
  std::vector<TheoremCheck> checks;
  bool all_pass() const;
  std::string str() const;
};

// which: "1.2", "1.4", "1.5", or "compound".
DivisibilityReport divisibility_theorem(const std::string& which);
DivisibilityReport divisibility_theorems();

// One row of the conjecture sweep: the twist T^i (x) Lambda^j (x) S^k over
// M1 with both twisted genera and their residues.
struct SweepRow {
  int i = 0, j = 0, k = 0;
  Int rank;
  Int ahat;
  Int ahat_mod;
  Int sig;
  Int sig_mod;
};

struct SweepTable {
  int max_total = 0;
  Int modulus;
  std::vector<SweepRow> rows;
  bool all_pass = false;  // every residue zero in both columns

  std::string tsv() const;
  std::string json() const;
};

// Evaluates Ahat(M1, twist) and Sig(M1, twist) for all i+j+k <= max_total;
// throws if any entry fails integrality.
SweepTable conjecture_sweep(int max_total, long modulus);

}  // namespace charnum
