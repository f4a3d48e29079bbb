#include "charnum/bundle_bh.hpp"

#include <functional>
#include <stdexcept>

#include "charnum/genus.hpp"
#include "charnum/linalg.hpp"

namespace charnum {

RootSystemData f4_spin9_roots() {
  RootSystemData rsd;
  rsd.n_torus = 4;
  Rational h(1, 2);
  for (int s2 : {1, -1})
    for (int s3 : {1, -1})
      for (int s4 : {1, -1})
        rsd.complementary_roots.push_back(
            {h, h * Rational(s2), h * Rational(s3), h * Rational(s4)});
  return rsd;
}

GradedPoly fiber_pontryagin(const RootSystemData& rsd, int cap) {
  int rcap = 2 * cap;
  RootPoly prod = RootPoly::one(rsd.n_torus, rcap);
  for (const auto& root : rsd.complementary_roots) {
    if (static_cast<int>(root.size()) != rsd.n_torus)
      throw std::invalid_argument("root vector length does not match torus rank");
    RootPoly b = RootPoly::linear(root, rcap);
    RootPoly factor = RootPoly::one(rsd.n_torus, rcap) + root_mul(b, b);
    prod = root_mul(prod, factor);
  }
  return symmetric_reduce(prod);
}

namespace {

// Images of q_1..q_4 in p's and of p_1..p_4 in q's, as cap-4 polynomials.
std::vector<GradedPoly> q_in_p() {
  int cap = 4;
  GradedPoly p1 = GradedPoly::gen(1, cap), p2 = GradedPoly::gen(2, cap),
             p3 = GradedPoly::gen(3, cap), p4 = GradedPoly::gen(4, cap);
  GradedPoly q1 = p1.scaled(Rational(1, 2));
  GradedPoly q2 = (p2 - poly_mul(p1, p1).scaled(Rational(1, 4))).scaled(Rational(1, 2));
  GradedPoly q3 = p3;
  GradedPoly q4 = (p4 - poly_mul(q2, q2) + poly_mul(q1, q3).scaled(Rational(2)))
                      .scaled(Rational(1, 2));
  return {GradedPoly::one(cap), q1, q2, q3, q4};
}

std::vector<GradedPoly> p_in_q() {
  int cap = 4;
  GradedPoly q1 = GradedPoly::gen(1, cap), q2 = GradedPoly::gen(2, cap),
             q3 = GradedPoly::gen(3, cap), q4 = GradedPoly::gen(4, cap);
  GradedPoly p1 = q1.scaled(Rational(2));
  GradedPoly p2 = q2.scaled(Rational(2)) + poly_mul(q1, q1);
  GradedPoly p3 = q3;
  GradedPoly p4 = q4.scaled(Rational(2)) + poly_mul(q2, q2) -
                  poly_mul(q1, q3).scaled(Rational(2));
  return {GradedPoly::one(cap), p1, p2, p3, p4};
}

GradedPoly substitute_generators(const GradedPoly& expr,
                                 const std::vector<GradedPoly>& images) {
  if (expr.top_weight() > 4)
    throw std::invalid_argument("spin/pont conversion supported through weight 4 only");
  GradedPoly out(4);
  for (const auto& [mu, c] : expr.terms) {
    GradedPoly term = GradedPoly::one(4).scaled(c);
    for (int part : mu.parts) {
      if (part > 4)
        throw std::invalid_argument(
            "spin/pont conversion supported through weight 4 only");
      term = poly_mul(term, images[part]);
    }
    out += term;
  }
  return out;
}

}  // namespace

GradedPoly spin_to_pont(const GradedPoly& q_expr) {
  return substitute_generators(q_expr, q_in_p());
}

GradedPoly pont_to_spin(const GradedPoly& p_expr) {
  return substitute_generators(p_expr, p_in_q());
}

std::pair<RingModel::Element, RingModel::Element> pullback_solver(
    const RingModel::Element& img_p1, const RingModel::Element& img_p2,
    const RingModel& target) {
  // From f~*(-6p3 + p1p2) = 0 and f~*(12p4 + p2^2 - p1^2 p2 / 2) = 0.
  RingModel::Element p3 =
      element_scale(target.mul(img_p1, img_p2), Rational(1, 6));
  RingModel::Element p2sq = target.mul(img_p2, img_p2);
  RingModel::Element p1sqp2 =
      target.mul(target.mul(img_p1, img_p1), img_p2);
  RingModel::Element p4 = element_scale(
      element_add(element_scale(p2sq, Rational(-1)),
                  element_scale(p1sqp2, Rational(1, 2))),
      Rational(1, 12));
  return {p3, p4};
}

RingModel u_extension(const RingModel& base, int max_pow) {
  int nb = base.size();
  RingModel m;
  m.dim = base.dim + 8 * max_pow;
  for (int k = 0; k <= max_pow; ++k) {
    std::string suffix = k == 0 ? "" : (k == 1 ? "u" : "u" + std::to_string(k));
    for (int i = 0; i < nb; ++i) {
      std::string lab;
      if (k == 0)
        lab = base.labels[i];
      else if (i == 0)
        lab = suffix;
      else
        lab = base.labels[i] + "*" + suffix;
      m.labels.push_back(lab);
      m.degrees.push_back(base.degree_of(i) + 8 * k);
    }
  }
  auto index = [nb](int i, int k) { return k * nb + i; };
  for (int k = 0; k <= max_pow; ++k)
    for (int i = 0; i < nb; ++i)
      for (int l = k; l <= max_pow; ++l)
        for (int j = 0; j < nb; ++j) {
          int b1 = index(i, k), b2 = index(j, l);
          if (b1 == 0 || b2 == 0 || b1 > b2) continue;
          RingModel::Element e;
          if (k + l <= max_pow) {
            auto prod = base.mul(base.basis_element(i), base.basis_element(j));
            for (const auto& [t, z] : prod) e[index(t, k + l)] = z;
          }
          m.products[{b1, b2}] = e;
        }
  // No fundamental class: scaffolding ring, not a closed manifold.
  m.pont = {RingModel::unit()};
  return m;
}

namespace {

RingModel::Element embed_base(const RingModel::Element& e) {
  return e;  // base indices coincide with k = 0 block indices
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error("M4 assembly cross-check failed: " + what);
}

std::string diff_note(const RingModel& ring, const RingModel::Element& got,
                      const RingModel::Element& want) {
  return "expected " + element_str(ring, want) + ", computed " +
         element_str(ring, got);
}

}  // namespace

M4Assembly m4_assembly() {
  RingModel n8 = n8_model();
  int nb = n8.size();
  M4Assembly out;
  out.extended = u_extension(n8, 3);
  const RingModel& ext = out.extended;
  auto idx = [nb](int i, int k) { return k * nb + i; };

  int a1 = n8.find("a1"), a2 = n8.find("a2"), w = n8.find("w");
  int u = idx(0, 1), u2 = idx(0, 2), u3 = idx(0, 3);

  // Classifying data: f~*(q1) = -(a1 + a2), f~*(q2) = 3u; convert to p's via
  // p1 = 2q1, p2 = 2q2 + q1^2 evaluated in the extended ring.
  RingModel::Element img_q1{{a1, Rational(-1)}, {a2, Rational(-1)}};
  RingModel::Element img_q2{{u, Rational(3)}};
  out.img_p1 = element_scale(img_q1, Rational(2));
  out.img_p2 =
      element_add(element_scale(img_q2, Rational(2)), ext.mul(img_q1, img_q1));

  auto [p3, p4] = pullback_solver(out.img_p1, out.img_p2, ext);
  out.img_p3 = p3;
  out.img_p4 = p4;

  // Lemma 4.8 cross-check: back-convert to Spin-class images.
  // q3 = p3; q4 = (p4 - q2^2 + 2 q1 q3) / 2.
  out.img_q3 = out.img_p3;
  out.img_q4 = element_scale(
      element_add(element_add(out.img_p4,
                              element_scale(ext.mul(img_q2, img_q2), Rational(-1))),
                  element_scale(ext.mul(img_q1, out.img_q3), Rational(2))),
      Rational(1, 2));
  {
    RingModel::Element want_q3{{idx(a1, 1), Rational(-2)}, {idx(a2, 1), Rational(-2)}};
    RingModel::Element want_q4{{u2, Rational(-6)}, {idx(w, 1), Rational(4)}};
    require(out.img_q3 == want_q3,
            "f~*(q3): " + diff_note(ext, out.img_q3, want_q3));
    require(out.img_q4 == want_q4,
            "f~*(q4): " + diff_note(ext, out.img_q4, want_q4));
  }

  // Fiber class in p_1..p_4, then substituted along the pullback images.
  GradedPoly fib = fiber_pontryagin(f4_spin9_roots(), 6);
  std::vector<RingModel::Element> imgs(5);
  imgs[1] = out.img_p1;
  imgs[2] = out.img_p2;
  imgs[3] = out.img_p3;
  imgs[4] = out.img_p4;
  std::vector<RingModel::Element> fib_pieces(7);
  for (const auto& [mu, c] : fib.terms) {
    RingModel::Element t = RingModel::unit();
    bool dead = false;
    for (int part : mu.parts) {
      if (part > 4) {
        dead = true;
        break;
      }
      t = ext.mul(t, imgs[part]);
    }
    if (dead) continue;
    int wt = mu.weight();
    fib_pieces[wt] = element_add(fib_pieces[wt], element_scale(t, c));
  }

  // p(M4) = pi*(p(N8)) . (fiber class), assembled weight by weight.
  out.pieces.assign(7, RingModel::Element{});
  for (int wt = 0; wt <= 6; ++wt) {
    RingModel::Element acc;
    for (int wb = 0; wb <= 2 && wb <= wt; ++wb) {
      if (wb >= static_cast<int>(n8.pont.size())) continue;
      acc = element_add(
          acc, ext.mul(embed_base(n8.pont[wb]), fib_pieces[wt - wb]));
    }
    out.pieces[wt] = acc;
  }

  // Mandatory cross-checks against Lemma 4.10, before the u^3 = 0 relation.
  {
    require(out.pieces[0] == RingModel::unit(), "degree-0 piece must be 1");
    require(out.pieces[1].empty(),
            "p1(M4) must vanish, computed " + element_str(ext, out.pieces[1]));
    RingModel::Element want2{{w, Rational(36)}, {u, Rational(-6)}};
    RingModel::Element want3{{idx(a1, 1), Rational(-10)}, {idx(a2, 1), Rational(-10)}};
    RingModel::Element want4{{idx(w, 1), Rational(-244)}, {u2, Rational(39)}};
    RingModel::Element want5{{idx(a1, 2), Rational(126)}, {idx(a2, 2), Rational(126)}};
    RingModel::Element want6{{idx(w, 2), Rational(1958)}, {u3, Rational(18)}};
    require(out.pieces[2] == want2, "p2: " + diff_note(ext, out.pieces[2], want2));
    require(out.pieces[3] == want3, "p3: " + diff_note(ext, out.pieces[3], want3));
    require(out.pieces[4] == want4, "p4: " + diff_note(ext, out.pieces[4], want4));
    require(out.pieces[5] == want5, "p5: " + diff_note(ext, out.pieces[5], want5));
    require(out.pieces[6] == want6, "p6: " + diff_note(ext, out.pieces[6], want6));
  }

  // Final model: quotient u^3 = 0, keep u-powers 0..2, fundamental
  // <x u^2, [M4]> = <x, [N8]>.
  RingModel m = u_extension(n8, 2);
  m.dim = 24;
  // Rebuild products with the degree cap 24 irrelevant (u^3 = 0 already cuts
  // everything above); entries landing on u^3 were dropped by u_extension.
  for (const auto& [i, f] : n8.fundamental) m.fundamental[idx(i, 2)] = f;
  m.pont.assign(7, RingModel::Element{});
  m.pont[0] = RingModel::unit();
  for (int wt = 1; wt <= 6; ++wt) {
    RingModel::Element e;
    for (const auto& [k, v] : out.pieces[wt])
      if (k < 3 * nb) e[k] = v;  // drop the u^3 block
    m.pont[wt] = e;
  }
  out.model = m;

  Rational sig = m.signature();
  require(sig == Rational(8),
          "signature must be 8, computed " + sig.str());
  return out;
}

RingModel m4_model() { return m4_assembly().model; }

namespace {

// Graded span dimension helper: rank of the set of weight-w products of
// generator powers, expressed over the monomial basis of weight w.
std::vector<GradedPoly> weight_products(const std::vector<GradedPoly>& gens,
                                        const std::vector<int>& weights, int w) {
  std::vector<GradedPoly> out;
  std::vector<int> expo(gens.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int rem) {
    if (i == gens.size()) {
      if (rem != 0) return;
      GradedPoly prod = GradedPoly::one(gens[0].cap);
      for (std::size_t j = 0; j < gens.size(); ++j)
        for (int k = 0; k < expo[j]; ++k) prod = poly_mul(prod, gens[j]);
      out.push_back(prod);
      return;
    }
    for (int e = 0; e * weights[i] <= rem; ++e) {
      expo[i] = e;
      rec(i + 1, rem - e * weights[i]);
    }
    expo[i] = 0;
  };
  rec(0, w);
  return out;
}

Matrix span_matrix(const std::vector<GradedPoly>& polys, int w) {
  std::vector<Partition> basis = partitions_of(w);
  Matrix m;
  for (const auto& poly : polys) {
    Vector row;
    row.reserve(basis.size());
    for (const auto& mu : basis) row.push_back(poly.coeff(mu));
    m.push_back(std::move(row));
  }
  return m;
}

}  // namespace

WeylReport weyl_invariant_check() {
  const int cap = 4;
  RootSystemData rsd = f4_spin9_roots();
  auto invariant = [&](int two_k) {
    RootPoly acc(rsd.n_torus, 2 * cap);
    for (int i = 0; i < rsd.n_torus; ++i) {
      std::vector<int> expo(rsd.n_torus, 0);
      expo[i] = two_k;
      acc.add_term(expo, Rational(1));
    }
    for (const auto& root : rsd.complementary_roots)
      acc += root_pow(RootPoly::linear(root, 2 * cap), two_k);
    return symmetric_reduce(acc).truncated(cap);
  };

  WeylReport rep;
  rep.i2 = invariant(2);
  rep.i6 = invariant(6);
  rep.i8 = invariant(8);

  GradedPoly p1 = GradedPoly::gen(1, cap), p2 = GradedPoly::gen(2, cap),
             p3 = GradedPoly::gen(3, cap), p4 = GradedPoly::gen(4, cap);
  GradedPoly g2 = p3.scaled(Rational(-6)) + poly_mul(p1, p2);
  GradedPoly g3 = p4.scaled(Rational(12)) + poly_mul(p2, p2) -
                  poly_mul(poly_mul(p1, p1), p2).scaled(Rational(1, 2));
  std::vector<GradedPoly> gens = {p1, g2, g3};
  std::vector<GradedPoly> invs = {rep.i2, rep.i6, rep.i8};
  std::vector<int> weights = {1, 3, 4};

  rep.spans_equal = true;
  for (int w = 1; w <= 4; ++w) {
    auto prod_g = weight_products(gens, weights, w);
    auto prod_i = weight_products(invs, weights, w);
    Matrix mg = span_matrix(prod_g, w);
    Matrix mi = span_matrix(prod_i, w);
    int rg = matrix_rank(mg);
    int ri = matrix_rank(mi);
    Matrix both = mg;
    both.insert(both.end(), mi.begin(), mi.end());
    int rb = matrix_rank(both);
    rep.dim_generators[w - 1] = rg;
    rep.dim_invariants[w - 1] = ri;
    if (!(rg == ri && rb == rg)) rep.spans_equal = false;
  }
  return rep;
}

}  // namespace charnum
