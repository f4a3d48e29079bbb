#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "charnum/chern.hpp"
#include "charnum/genus.hpp"
#include "charnum/ring_model.hpp"

using namespace charnum;

namespace {

bool characters_equal(const ChernCharacter& a, const ChernCharacter& b) {
  if (a.cap != b.cap || !(a.rank == b.rank)) return false;
  for (int j = 1; j <= a.cap; ++j)
    if (!(a.comp(j) == b.comp(j))) return false;
  return true;
}

}  // namespace

TEST_CASE("tangent character components") {
  ChernCharacter t = ch_tangent(24, 6);
  CHECK(t.rank == Rational(24));
  CHECK(t.comp(1) == GradedPoly::gen(1, 6));  // 2 ps_1 / 2! = p1
  GradedPoly want2(6);                         // 2 ps_2 / 4! = (p1^2 - 2 p2)/12
  want2.add_term(Partition{1, 1}, Rational(1, 12));
  want2.add_term(Partition{2}, Rational(-1, 6));
  CHECK(t.comp(2) == want2);
}

TEST_CASE("sum, scale, and tensor") {
  ChernCharacter t = ch_tangent(8, 2);
  ChernCharacter triv = trivial_character(Rational(3), 2);
  ChernCharacter s = ch_sum(t, triv);
  CHECK(s.rank == Rational(11));
  CHECK(s.comp(1) == t.comp(1));
  CHECK(characters_equal(ch_diff(s, triv), t));

  // tensoring with a trivial line is the identity
  CHECK(characters_equal(tensor(t, trivial_character(Rational(1), 2)), t));
  // tensor rank multiplies
  CHECK(tensor(t, t).rank == Rational(64));
  // tensor distributes over sum
  CHECK(characters_equal(tensor(ch_sum(t, triv), t),
                         ch_sum(tensor(t, t), tensor(triv, t))));
}

TEST_CASE("adams operations") {
  ChernCharacter t = ch_tangent(24, 6);
  CHECK(characters_equal(adams(1, t), t));
  ChernCharacter a2 = adams(2, t);
  CHECK(a2.rank == t.rank);
  CHECK(a2.comp(1) == t.comp(1).scaled(Rational(4)));
  CHECK(a2.comp(3) == t.comp(3).scaled(Rational(64)));
  // psi^k is a ring endomorphism: psi^2 (t tensor t) = psi^2 t tensor psi^2 t
  CHECK(characters_equal(adams(2, tensor(t, t)), tensor(a2, a2)));
}

TEST_CASE("exterior and symmetric powers") {
  ChernCharacter t = ch_tangent(24, 6);
  CHECK(characters_equal(exterior_power(0, t),
                         trivial_character(Rational(1), 6)));
  CHECK(characters_equal(exterior_power(1, t), t));
  CHECK(exterior_power(2, t).rank == Rational(276));   // C(24, 2)
  CHECK(exterior_power(3, t).rank == Rational(2024));  // C(24, 3)
  CHECK(symmetric_power(2, t).rank == Rational(300));  // C(25, 2)
  CHECK(symmetric_power(3, t).rank == Rational(2600)); // C(26, 3)

  // powers of a trivial bundle are trivial with binomial ranks
  ChernCharacter triv = trivial_character(Rational(5), 6);
  CHECK(characters_equal(exterior_power(3, triv),
                         trivial_character(Rational(10), 6)));
  CHECK(characters_equal(symmetric_power(3, triv),
                         trivial_character(Rational(35), 6)));

  // exterior powers of a genuinely virtual bundle are rejected
  ChernCharacter virt = ch_diff(trivial_character(Rational(1), 6), t);
  CHECK(virt.rank == Rational(-23));
  CHECK_THROWS_AS(exterior_power(2, virt), std::invalid_argument);
}

TEST_CASE("koszul complex identity") {
  // sum_{j=0..k} (-1)^j lambda^j(E) . S^{k-j}(E) = 0 for k >= 1.
  ChernCharacter t = ch_tangent(24, 6);
  for (int k = 1; k <= 4; ++k) {
    ChernCharacter acc = trivial_character(Rational(0), 6);
    for (int j = 0; j <= k; ++j) {
      ChernCharacter term =
          tensor(exterior_power(j, t), symmetric_power(k - j, t));
      acc = (j % 2 == 0) ? ch_sum(acc, term) : ch_diff(acc, term);
    }
    CHECK(acc.rank.is_zero());
    for (int j = 1; j <= 6; ++j) CHECK(acc.comp(j).is_zero());
  }
}

TEST_CASE("ch2 scaling and twisted genera") {
  ChernCharacter t = ch_tangent(24, 6);
  ChernCharacter t2 = ch2_scale(t);
  CHECK(t2.rank == t.rank);
  CHECK(t2.comp(2) == t.comp(2).scaled(Rational(16)));

  PontryaginNumbers n(24);
  n.set(Partition{6}, Rational(7));
  // trivial rank-1 twist reduces to the plain genus
  ChernCharacter one = trivial_character(Rational(1), 6);
  CHECK(twisted_ahat(n, one) == pair(ahat_class(6).total(), n));
  CHECK(twisted_sig(n, one) == pair(l_class(6).total(), n));

  // twisted genera are additive in the bundle
  ChernCharacter l2 = exterior_power(2, t);
  CHECK(twisted_ahat(n, ch_sum(t, l2)) ==
        twisted_ahat(n, t) + twisted_ahat(n, l2));
  CHECK(twisted_sig(n, ch_sum(t, l2)) ==
        twisted_sig(n, t) + twisted_sig(n, l2));

  // cap mismatch is rejected
  ChernCharacter small = trivial_character(Rational(1), 5);
  CHECK_THROWS_AS(twisted_ahat(n, small), std::invalid_argument);
  CHECK_THROWS_AS(twisted_sig(n, small), std::invalid_argument);
}

TEST_CASE("twist expression grammar") {
  Twist t = parse_twist("T^2*L*S^3");
  CHECK(t.t == 2);
  CHECK(t.l == 1);
  CHECK(t.s == 3);
  CHECK(t.str() == "T^2*L*S^3");
  Twist id = parse_twist("");
  CHECK((id.t == 0 && id.l == 0 && id.s == 0));
  Twist id2 = parse_twist("1");
  CHECK((id2.t == 0 && id2.l == 0 && id2.s == 0));
  CHECK(parse_twist("L^2").l == 2);
  CHECK(parse_twist("S").s == 1);
  CHECK_THROWS_AS(parse_twist("T*T"), std::invalid_argument);
  CHECK_THROWS_AS(parse_twist("Q^2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_twist("T^"), std::invalid_argument);
  CHECK_THROWS_AS(parse_twist("T^-1"), std::invalid_argument);
}

TEST_CASE("twist characters have the right ranks") {
  CHECK(twist_character(parse_twist("1"), 24, 6).rank == Rational(1));
  CHECK(twist_character(parse_twist("T"), 24, 6).rank == Rational(24));
  CHECK(twist_character(parse_twist("T^2"), 24, 6).rank == Rational(576));
  CHECK(twist_character(parse_twist("L^2"), 24, 6).rank == Rational(276));
  CHECK(twist_character(parse_twist("S^2"), 24, 6).rank == Rational(300));
  CHECK(twist_character(parse_twist("T*L^2*S^2"), 24, 6).rank ==
        Rational(24 * 276 * 300));
}

TEST_CASE("twisted signature of the L^2 twist on a known class") {
  // <L(M) ch2(Lambda^2 T), [M]> on the class with <p6> = 1 and nothing else:
  // cross-check against the same pairing assembled by hand.
  PontryaginNumbers n(24);
  n.set(Partition{6}, Rational(1));
  ChernCharacter e = twist_character(parse_twist("L^2"), 24, 6);
  GradedPoly total = l_class(6).total();
  GradedPoly ch2 = trivial_character(Rational(0), 6).comp(1);  // zero poly
  GradedPoly full = e.comp(6).scaled(Rational(4096));          // 4^6 scaling
  // assemble <L * ch2(E)> degree-6 part manually
  ChernCharacter e2 = ch2_scale(e);
  GradedPoly acc(6);
  acc += total.weight_part(6).scaled(e2.rank);
  for (int j = 1; j <= 6; ++j)
    acc += poly_mul(total.weight_part(6 - j), e2.comp(j)).weight_part(6);
  CHECK(pair(acc, n) == twisted_sig(n, e));
  CHECK(full == e2.comp(6));
  CHECK(ch2.is_zero());
}
