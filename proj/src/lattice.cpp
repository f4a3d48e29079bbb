#include "charnum/lattice.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

#include "charnum/bundle_bh.hpp"
#include "charnum/chern.hpp"
#include "charnum/genus.hpp"
#include "charnum/ring_model.hpp"

namespace charnum {

namespace {

std::array<Rational, 4> kappa_unchecked(const PontryaginNumbers& nums) {
  ChernCharacter t = ch_tangent(24, 6);
  Rational a = pair(ahat_class(6).total(), nums);
  Rational at = twisted_ahat(nums, t);
  Rational al = twisted_ahat(nums, exterior_power(2, t));
  Rational sg = pair(l_class(6).total(), nums);
  return {a, at / Rational(24), al, sg / Rational(8)};
}

}  // namespace

const KappaData& KappaData::instance() {
  static const KappaData data = [] {
    KappaData d;
    auto [m1, m2] = m1_m2_numbers();
    d.basis_numbers[0] = m1;
    d.basis_numbers[1] = m2;
    d.basis_numbers[2] =
        product_model(kervaire_milnor_model(2), op2_model()).numbers();
    d.basis_numbers[3] = m4_model().numbers();
    d.k.assign(4, Vector(4, Rational(0)));
    for (int c = 0; c < 4; ++c) {
      auto col = kappa_unchecked(d.basis_numbers[c]);
      for (int r = 0; r < 4; ++r) {
        if (!col[r].is_integer())
          throw std::runtime_error("kappa matrix entry not integral: " +
                                   col[r].str());
        d.k[r][c] = col[r];
      }
    }
    d.det = matrix_det(d.k);
    auto inv = matrix_inverse(d.k);
    if (!inv) throw std::runtime_error("kappa matrix is singular");
    d.k_inv = *inv;
    return d;
  }();
  return data;
}

std::array<Int, 4> KappaData::functional(const Partition& mu) const {
  std::array<Int, 4> out;
  for (int i = 0; i < 4; ++i) {
    Rational v = basis_numbers[i].at(mu);
    out[i] = v.as_integer();
  }
  return out;
}

std::array<Int, 4> KappaData::signature_vector() const {
  GradedPoly l6 = l_class(6).total();
  std::array<Int, 4> out;
  for (int i = 0; i < 4; ++i) out[i] = pair(l6, basis_numbers[i]).as_integer();
  return out;
}

PontryaginNumbers KappaData::combination(const std::array<Int, 4>& x) const {
  PontryaginNumbers acc(24);
  for (int i = 0; i < 4; ++i)
    acc = acc + basis_numbers[i].scaled(Rational(x[i]));
  return acc;
}

std::array<Rational, 4> kappa(const PontryaginNumbers& nums) {
  if (nums.dim != 24)
    throw std::invalid_argument("kappa defined for dimension 24 only");
  if (!nums.string_flavored())
    throw std::invalid_argument(
        "kappa requires a String class: p1-numbers must vanish");
  return kappa_unchecked(nums);
}

std::string Decomposition::str() const {
  std::string s = integral ? "integral (" : "not in the integral lattice (";
  for (int i = 0; i < 4; ++i) {
    if (i) s += ", ";
    s += x[i].str();
  }
  return s + ")";
}

Decomposition decompose(const PontryaginNumbers& nums) {
  if (nums.dim != 24)
    throw std::invalid_argument("decompose defined for dimension 24 only");
  if (!nums.string_flavored())
    throw std::invalid_argument(
        "decompose requires a String class: p1-numbers must vanish");
  const KappaData& kd = KappaData::instance();
  std::vector<Partition> funcs = {Partition{2, 2, 2}, Partition{4, 2},
                                  Partition{3, 3}, Partition{6}};
  Matrix a(4, Vector(4, Rational(0)));
  Vector b(4, Rational(0));
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) a[r][c] = kd.basis_numbers[c].at(funcs[r]);
    b[r] = nums.at(funcs[r]);
  }
  auto x = solve_linear(a, b);
  if (!x) throw std::runtime_error("basis functional matrix is singular");
  Decomposition d;
  d.integral = true;
  for (int i = 0; i < 4; ++i) {
    d.x[i] = (*x)[i];
    if (!d.x[i].is_integer()) d.integral = false;
  }
  return d;
}

namespace {

using Gen = std::array<Int, 4>;

int val_or_max(long p, const Int& n) {
  return n == 0 ? INT_MAX : valuation(Int(p), n);
}

Int dot(const Gen& a, const std::array<Int, 4>& b) {
  Int s(0);
  for (int i = 0; i < 4; ++i) s += a[i] * b[i];
  return s;
}

// Generators of {x in L : nu_p(c . x) >= e} from generators of L, exact as a
// Z_p-module: eliminate against the generator with minimal valuation of c.g.
std::vector<Gen> constrain(std::vector<Gen> gens, const std::array<Int, 4>& c,
                           long p, int e) {
  std::vector<Int> vals;
  vals.reserve(gens.size());
  for (const Gen& g : gens) vals.push_back(dot(g, c));
  std::vector<std::size_t> order(gens.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return val_or_max(p, vals[i]) < val_or_max(p, vals[j]);
  });
  if (order.empty()) return gens;
  std::size_t i0 = order[0];
  int nu0 = val_or_max(p, vals[i0]);
  if (nu0 >= e) return gens;  // constraint already satisfied by the lattice
  Int pnu0(1);
  for (int i = 0; i < nu0; ++i) pnu0 *= p;
  Int u0 = vals[i0] / pnu0;
  std::vector<Gen> out;
  for (std::size_t oi = 1; oi < order.size(); ++oi) {
    std::size_t i = order[oi];
    if (vals[i] == 0) {
      out.push_back(gens[i]);
      continue;
    }
    int nui = valuation(Int(p), vals[i]);
    Int pnui(1);
    for (int k = 0; k < nui; ++k) pnui *= p;
    Int ui = vals[i] / pnui;
    Int shift = pnui / pnu0;  // p^(nui - nu0)
    Gen g;
    for (int k = 0; k < 4; ++k) g[k] = u0 * gens[i][k] - ui * shift * gens[i0][k];
    out.push_back(g);
  }
  Int scale(1);
  for (int k = 0; k < e - nu0; ++k) scale *= p;
  Gen g0;
  for (int k = 0; k < 4; ++k) g0[k] = scale * gens[i0][k];
  out.push_back(g0);
  return out;
}

}  // namespace

std::optional<MinValuation> min_valuation_over_sublattice(
    long p, const std::array<Int, 4>& values,
    const std::vector<SublatticeConstraint>& constraints) {
  if (p < 2) throw std::invalid_argument("prime must be >= 2");
  std::vector<Gen> gens = {{Int(1), Int(0), Int(0), Int(0)},
                           {Int(0), Int(1), Int(0), Int(0)},
                           {Int(0), Int(0), Int(1), Int(0)},
                           {Int(0), Int(0), Int(0), Int(1)}};
  for (const auto& c : constraints) {
    if (c.p != p) continue;
    gens = constrain(std::move(gens), c.functional, p, c.e);
  }
  std::optional<MinValuation> best;
  for (const Gen& g : gens) {
    Int s = dot(g, values);
    if (s == 0) continue;
    int v = valuation(Int(p), s);
    if (!best || v < best->valuation) best = MinValuation{v, g};
  }
  return best;
}

Int gcd_over_sublattice(const std::array<Int, 4>& values,
                        const std::vector<SublatticeConstraint>& constraints) {
  Int g0(0);
  for (const Int& v : values) g0 = gcd_int(g0, v);
  if (g0 == 0) return Int(0);
  std::vector<long> primes;
  for (const auto& c : constraints)
    if (std::find(primes.begin(), primes.end(), c.p) == primes.end())
      primes.push_back(c.p);
  std::sort(primes.begin(), primes.end());
  Int result = g0;
  for (long p : primes) {
    auto mv = min_valuation_over_sublattice(p, values, constraints);
    if (!mv) return Int(0);  // functional vanishes on the sublattice
    while (result % p == 0) result /= p;
    for (int i = 0; i < mv->valuation; ++i) result *= p;
  }
  return result;
}

Int gcd_over_box(const std::array<Int, 4>& values,
                 const std::vector<SublatticeConstraint>& constraints,
                 int bound) {
  Int g(0);
  std::array<long, 4> x{};
  for (x[0] = -bound; x[0] <= bound; ++x[0])
    for (x[1] = -bound; x[1] <= bound; ++x[1])
      for (x[2] = -bound; x[2] <= bound; ++x[2])
        for (x[3] = -bound; x[3] <= bound; ++x[3]) {
          bool ok = true;
          for (const auto& c : constraints) {
            Int s(0);
            for (int i = 0; i < 4; ++i) s += c.functional[i] * x[i];
            Int pe(1);
            for (int i = 0; i < c.e; ++i) pe *= c.p;
            if (s % pe != 0) {
              ok = false;
              break;
            }
          }
          if (!ok) continue;
          Int s(0);
          for (int i = 0; i < 4; ++i) s += values[i] * x[i];
          g = gcd_int(g, s);
        }
  return g;
}

Rational modified_signature(const PontryaginNumbers& nums) {
  if (nums.dim != 24)
    throw std::invalid_argument("modified signature defined for dimension 24 only");
  if (!nums.string_flavored())
    throw std::invalid_argument(
        "modified signature requires a String class: p1-numbers must vanish");
  Rational sig = pair(l_class(6).total(), nums);
  return sig - Rational(25) * nums.at(Partition{3, 3});
}

bool DivisibilityReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string DivisibilityReport::str() const {
  std::string s;
  for (const auto& c : checks)
    s += std::string(c.pass ? "PASS" : "FAIL") + "  " + c.name + ": " +
         c.detail + "\n";
  s += all_pass() ? "all checks passed\n" : "SOME CHECKS FAILED\n";
  return s;
}

namespace {

std::string vec_str(const std::array<Int, 4>& v) {
  std::string s = "(";
  for (int i = 0; i < 4; ++i) {
    if (i) s += ", ";
    s += v[i].get_str();
  }
  return s + ")";
}

DivisibilityReport theorem_1_2() {
  const KappaData& kd = KappaData::instance();
  std::array<Int, 4> sig = kd.signature_vector();
  std::array<Int, 4> p23 = kd.functional(Partition{2, 2, 2});
  std::array<Int, 4> p24 = kd.functional(Partition{4, 2});
  DivisibilityReport rep;

  Int free_gcd = gcd_over_sublattice(sig, {});
  rep.checks.push_back({"signature gcd, unconstrained", free_gcd == 8,
                        "gcd over the full lattice = " + free_gcd.get_str() +
                            " (expected 8)"});

  // Hypothesis w8 = 0, i.e. 4 | p2: nu_2(p2^3 . x) >= 6 and
  // nu_2(p2p4 . x) >= 2; claim 32 | Sig and 32 is attained.
  std::vector<SublatticeConstraint> cs = {{p23, 2, 6}, {p24, 2, 2}};
  Int con_gcd = gcd_over_sublattice(sig, cs);
  auto mv = min_valuation_over_sublattice(2, sig, cs);
  std::string detail = "gcd under 4 | p2 constraints = " + con_gcd.get_str() +
                       " (expected 32)";
  if (mv)
    detail += ", min nu_2 = " + std::to_string(mv->valuation) + " at x = " +
              vec_str(mv->witness);
  rep.checks.push_back({"32 | Sig when w8 = 0", con_gcd == 32, detail});
  return rep;
}

DivisibilityReport theorem_1_4() {
  const KappaData& kd = KappaData::instance();
  std::array<Int, 4> msig;
  for (int i = 0; i < 4; ++i)
    msig[i] = modified_signature(kd.basis_numbers[i]).as_integer();
  DivisibilityReport rep;
  Int g = gcd_over_sublattice(msig, {});
  rep.checks.push_back({"32 | modified signature, attained", g == 32,
                        "modified signatures " + vec_str(msig) + ", gcd = " +
                            g.get_str() + " (expected 32)"});
  Int opt = 67 * msig[2] + 3 * msig[3];
  rep.checks.push_back({"optimality: 67 M3 + 3 M4", opt == 32,
                        "modified signature of 67 M3 + 3 M4 = " + opt.get_str() +
                            " (expected 32)"});
  return rep;
}

DivisibilityReport theorem_1_5() {
  const KappaData& kd = KappaData::instance();
  std::array<Int, 4> p23 = kd.functional(Partition{2, 2, 2});
  std::array<Int, 4> p24 = kd.functional(Partition{4, 2});
  ChernCharacter l2 = exterior_power(2, ch_tangent(24, 6));
  std::array<Int, 4> sigl2;
  for (int i = 0; i < 4; ++i)
    sigl2[i] = twisted_sig(kd.basis_numbers[i], l2).as_integer();
  DivisibilityReport rep;
  Int free_gcd = gcd_over_sublattice(sigl2, {});
  rep.checks.push_back({"gcd of Sig(., L^2)", free_gcd == 96,
                        "Sig(., L^2) on basis = " + vec_str(sigl2) +
                            ", gcd over the full lattice = " +
                            free_gcd.get_str() + " (expected 96)"});
  for (int k = 1; k <= 2; ++k) {
    // Hypothesis 3^(k+1) | p2 at number level; claim 3^(3k-1) | Sig(., L^2).
    std::vector<SublatticeConstraint> cs = {{p23, 3, 3 * (k + 1)},
                                            {p24, 3, k + 1}};
    auto mv = min_valuation_over_sublattice(3, sigl2, cs);
    int target = 3 * k - 1;
    std::string detail = "Sig(., L^2) on basis = " + vec_str(sigl2) +
                         "; min nu_3 under 3^" + std::to_string(k + 1) +
                         " | p2 constraints = " +
                         (mv ? std::to_string(mv->valuation) : "inf") +
                         " (claim >= " + std::to_string(target) + ")";
    if (mv && mv->valuation < target)
      detail += ", witness x = " + vec_str(mv->witness);
    rep.checks.push_back({"3^" + std::to_string(target) +
                              " | Sig(., L^2) when 3^" + std::to_string(k + 1) +
                              " | p2",
                          mv && mv->valuation >= target, detail});
  }
  return rep;
}

DivisibilityReport theorem_compound() {
  const KappaData& kd = KappaData::instance();
  std::array<Int, 4> sig = kd.signature_vector();
  std::array<Int, 4> p23 = kd.functional(Partition{2, 2, 2});
  std::array<Int, 4> p24 = kd.functional(Partition{4, 2});
  // Claim: n | p2 implies n^3 / (2^2 3^5 5^3 41) | Sig, checked prime by
  // prime with exponent 1.
  const std::pair<long, int> denom[] = {{2, 2}, {3, 5}, {5, 3}, {41, 1}};
  DivisibilityReport rep;
  for (const auto& [p, d] : denom) {
    std::vector<SublatticeConstraint> cs = {{p23, p, 3}, {p24, p, 1}};
    auto mv = min_valuation_over_sublattice(p, sig, cs);
    int target = std::max(0, 3 - d);
    std::string detail =
        "min nu_" + std::to_string(p) + "(Sig . x) under p | p2 constraints = " +
        (mv ? std::to_string(mv->valuation) : "inf") + " (claim >= " +
        std::to_string(target) + ")";
    if (mv && mv->valuation < target)
      detail += ", witness x = " + vec_str(mv->witness);
    rep.checks.push_back(
        {"compound bound at p = " + std::to_string(p),
         mv && mv->valuation >= target, detail});
  }
  return rep;
}

}  // namespace

DivisibilityReport divisibility_theorem(const std::string& which) {
  if (which == "1.2") return theorem_1_2();
  if (which == "1.4") return theorem_1_4();
  if (which == "1.5") return theorem_1_5();
  if (which == "compound") return theorem_compound();
  throw std::invalid_argument("unknown theorem: " + which +
                              " (expected 1.2, 1.4, 1.5, or compound)");
}

DivisibilityReport divisibility_theorems() {
  DivisibilityReport rep;
  for (const char* w : {"1.2", "1.4", "1.5", "compound"}) {
    DivisibilityReport part = divisibility_theorem(w);
    rep.checks.insert(rep.checks.end(), part.checks.begin(), part.checks.end());
  }
  return rep;
}

namespace {
Int nonneg_mod(const Int& v, const Int& m) {
  Int r = v % m;
  if (r < 0) r += m;
  return r;
}
}  // namespace

SweepTable conjecture_sweep(int max_total, long modulus) {
  if (max_total < 0) throw std::invalid_argument("negative sweep bound");
  if (modulus <= 0) throw std::invalid_argument("modulus must be positive");
  const KappaData& kd = KappaData::instance();
  const PontryaginNumbers& m1 = kd.basis_numbers[0];
  const int cap = 6;
  ChernCharacter t = ch_tangent(24, cap);
  std::vector<ChernCharacter> tpow{trivial_character(Rational(1), cap)};
  for (int i = 1; i <= max_total; ++i) tpow.push_back(tensor(tpow[i - 1], t));
  std::vector<ChernCharacter> lam{trivial_character(Rational(1), cap)};
  std::vector<ChernCharacter> sym{trivial_character(Rational(1), cap)};
  for (int j = 1; j <= max_total; ++j) lam.push_back(exterior_power(j, t));
  for (int k = 1; k <= max_total; ++k) sym.push_back(symmetric_power(k, t));

  SweepTable table;
  table.max_total = max_total;
  table.modulus = Int(modulus);
  table.all_pass = true;
  for (int i = 0; i <= max_total; ++i)
    for (int j = 0; i + j <= max_total; ++j)
      for (int k = 0; i + j + k <= max_total; ++k) {
        ChernCharacter e = tensor(tensor(tpow[i], lam[j]), sym[k]);
        Rational a = twisted_ahat(m1, e);
        Rational s = twisted_sig(m1, e);
        if (!a.is_integer() || !s.is_integer())
          throw std::runtime_error(
              "sweep entry failed integrality at (i,j,k) = (" +
              std::to_string(i) + "," + std::to_string(j) + "," +
              std::to_string(k) + ")");
        SweepRow row;
        row.i = i;
        row.j = j;
        row.k = k;
        row.rank = e.rank.as_integer();
        row.ahat = a.as_integer();
        row.sig = s.as_integer();
        row.ahat_mod = nonneg_mod(row.ahat, table.modulus);
        row.sig_mod = nonneg_mod(row.sig, table.modulus);
        if (row.ahat_mod != 0 || row.sig_mod != 0) table.all_pass = false;
        table.rows.push_back(std::move(row));
      }
  return table;
}

std::string SweepTable::tsv() const {
  std::string s = "i\tj\tk\trank\tahat\tahat_mod\tsig\tsig_mod\n";
  for (const auto& r : rows) {
    s += std::to_string(r.i) + "\t" + std::to_string(r.j) + "\t" +
         std::to_string(r.k) + "\t" + r.rank.get_str() + "\t" +
         r.ahat.get_str() + "\t" + r.ahat_mod.get_str() + "\t" +
         r.sig.get_str() + "\t" + r.sig_mod.get_str() + "\n";
  }
  s += std::string("# all residues zero: ") + (all_pass ? "yes" : "NO") + "\n";
  return s;
}

std::string SweepTable::json() const {
  std::string s = "{\"max_total\": " + std::to_string(max_total) +
                  ", \"modulus\": " + modulus.get_str() + ", \"rows\": [";
  for (std::size_t n = 0; n < rows.size(); ++n) {
    const auto& r = rows[n];
    if (n) s += ", ";
    s += "{\"i\": " + std::to_string(r.i) + ", \"j\": " + std::to_string(r.j) +
         ", \"k\": " + std::to_string(r.k) + ", \"rank\": " + r.rank.get_str() +
         ", \"ahat\": " + r.ahat.get_str() +
         ", \"ahat_mod\": " + r.ahat_mod.get_str() +
         ", \"sig\": " + r.sig.get_str() +
         ", \"sig_mod\": " + r.sig_mod.get_str() + "}";
  }
  s += std::string("], \"all_pass\": ") + (all_pass ? "true" : "false") + "}";
  return s;
}

}  // namespace charnum
