#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "charnum/genus.hpp"
#include "charnum/ring_model.hpp"

using namespace charnum;

TEST_CASE("kervaire-milnor generators") {
  const long tops[] = {48, 1440, 120960, 87091200, Long{0}, 0};
  (void)tops;
  RingModel m1 = kervaire_milnor_model(1);
  CHECK(m1.dim == 4);
  CHECK(m1.numbers().at(Partition{1}) == Rational(48));
  CHECK(m1.signature() == Rational(16));

  RingModel m2 = kervaire_milnor_model(2);
  CHECK(m2.numbers().at(Partition{2}) == Rational(1440));
  CHECK(m2.numbers().at(Partition{1, 1}).is_zero());
  CHECK(m2.signature() == Rational(224));

  RingModel m3 = kervaire_milnor_model(3);
  CHECK(m3.numbers().at(Partition{3}) == Rational(120960));
  CHECK(m3.signature() == Rational(7936));

  CHECK_THROWS_AS(kervaire_milnor_model(0), std::invalid_argument);
  CHECK_THROWS_AS(kervaire_milnor_model(7), std::invalid_argument);
}

TEST_CASE("octonionic projective plane") {
  RingModel op2 = op2_model();
  CHECK(op2.dim == 16);
  PontryaginNumbers n = op2.numbers();
  CHECK(n.at(Partition{2, 2}) == Rational(36));
  CHECK(n.at(Partition{4}) == Rational(39));
  CHECK(n.at(Partition{1, 1, 1, 1}).is_zero());
  CHECK(n.at(Partition{3, 1}).is_zero());
  CHECK(op2.signature() == Rational(1));
}

TEST_CASE("point model and products") {
  RingModel pt = point_model();
  CHECK(pt.dim == 0);

  RingModel km2 = kervaire_milnor_model(2);
  RingModel prod = product_model(km2, op2_model());
  CHECK(prod.dim == 24);
  CHECK(prod.signature() == km2.signature() * op2_model().signature());
  CHECK(prod.numbers() == whitney_numbers_oracle(km2, op2_model()));

  RingModel sq = product_model(km2, km2);
  CHECK(sq.dim == 16);
  CHECK(sq.numbers().at(Partition{2, 2}) == Rational(2 * 1440 * 1440));
  CHECK(sq.numbers() == whitney_numbers_oracle(km2, km2));
}

TEST_CASE("whitney oracle agrees on a triple product") {
  RingModel km2 = kervaire_milnor_model(2);
  RingModel b1 = product_model(product_model(km2, km2), km2);
  CHECK(b1.dim == 24);
  CHECK(b1.numbers() ==
        whitney_numbers_oracle(product_model(km2, km2), km2));
  // <p2^3> of (M0^8)^3 = 3! * 1440^3
  CHECK(b1.numbers().at(Partition{2, 2, 2}) ==
        Rational(Int(6) * Int(1440) * Int(1440) * Int(1440)));
}

TEST_CASE("scale_top_class") {
  RingModel half = scale_top_class(kervaire_milnor_model(3), Rational(1, 2));
  CHECK(half.numbers().at(Partition{3}) == Rational(60480));
  CHECK(half.signature() == Rational(3968));
  // op2 has two nonzero positive-weight pieces: rejected
  CHECK_THROWS_AS(scale_top_class(op2_model(), Rational(1, 2)),
                  std::invalid_argument);
}

TEST_CASE("symmetric signature computation") {
  CHECK(signature_of_symmetric_int(h_form()) == 0);
  CHECK(signature_of_symmetric_int(e8_form()) == 8);
  std::vector<std::vector<long>> diag = {{2, 0}, {0, -3}};
  CHECK(signature_of_symmetric_int(diag) == 0);
  std::vector<std::vector<long>> pos = {{1, 1}, {1, 2}};
  CHECK(signature_of_symmetric_int(pos) == 2);
}

TEST_CASE("wall model realizability conditions") {
  // diagonal parity violation: a_11 = 1 but b_1 = 0
  WallPair bad1{{{1}}, {0}};
  CHECK_THROWS_WITH(wall_model(bad1), doctest::Contains("not realizable"));
  // non-unimodular
  WallPair bad2{{{2}}, {0}};
  CHECK_THROWS_WITH(wall_model(bad2), doctest::Contains("not realizable"));
  // signature congruence violation: Sig = 1, b A b^T = 1 * 9 = 9;
  // 1 - 9 = -8 != 0 mod 224
  WallPair bad3{{{1}}, {3}};
  CHECK_THROWS_WITH(wall_model(bad3), doctest::Contains("not realizable"));
  // the standard pair works
  RingModel n8 = wall_model(wall_pair_h_e8());
  CHECK(n8.dim == 8);
  CHECK(n8.signature() == Rational(8));
}

TEST_CASE("n8 model") {
  RingModel n8 = n8_model();
  CHECK(n8.find("a1") == 1);
  CHECK(n8.find("a2") == 2);
  CHECK(n8.find("w") > 0);
  PontryaginNumbers n = n8.numbers();
  CHECK(n.at(Partition{1, 1}) == Rational(32));
  CHECK(n.at(Partition{2}) == Rational(56));
  CHECK(n8.signature() == Rational(8));
  // <a1 a2> = 1 and <a1^2> = 0 in the hyperbolic block
  int a1 = n8.find("a1"), a2 = n8.find("a2");
  CHECK(n8.integrate(n8.mul(n8.basis_element(a1), n8.basis_element(a2))) ==
        Rational(1));
  CHECK(n8.integrate(n8.mul(n8.basis_element(a1), n8.basis_element(a1))) ==
        Rational(0));
}

TEST_CASE("m1 and m2 number vectors") {
  auto [m1, m2] = m1_m2_numbers();
  CHECK(m1.at(Partition{6}) == Rational(92275200));
  CHECK(m1.at(Partition{4, 2}) == Rational(124416000));
  CHECK(m1.at(Partition{3, 3}) == Rational(101606400));
  CHECK(m1.at(Partition{2, 2, 2}) == Rational(248832000));
  CHECK(m2.at(Partition{6}) == Rational(-125452800));
  CHECK(m2.at(Partition{4, 2}) == Rational(-5101056000L));
  CHECK(m2.at(Partition{3, 3}) == Rational(3149798400L));
  CHECK(m2.at(Partition{2, 2, 2}) == Rational(-10202112000L));
  CHECK(m1.string_flavored());
  CHECK(m2.string_flavored());
}

TEST_CASE("auxiliary product basis") {
  auto b = b_basis_numbers();
  REQUIRE(b.size() == 4);
  // B1 = (M0^8)^3 and B2 = (half M0^12)^2 satisfy the defining combinations
  PontryaginNumbers m1_via_b = (b[0] + b[1]).scaled(Rational(1, 72));
  PontryaginNumbers m2_via_b =
      (b[0].scaled(Rational(-41)) + b[1].scaled(Rational(31)))
          .scaled(Rational(1, 72));
  auto [m1, m2] = m1_m2_numbers();
  CHECK(m1_via_b == m1);
  CHECK(m2_via_b == m2);
}

TEST_CASE("signature via L-class matches the bilinear-form signature") {
  for (const RingModel& m :
       {kervaire_milnor_model(1), kervaire_milnor_model(2), op2_model(),
        n8_model()}) {
    CHECK(m.signature() == pair(l_class(m.dim / 4).total(), m.numbers()));
  }
}

TEST_CASE("model validation") {
  RingModel broken = op2_model();
  broken.labels.clear();
  broken.degrees.clear();
  CHECK_THROWS_AS(broken.validate(), std::exception);
}
