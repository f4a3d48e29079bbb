#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "charnum/genus.hpp"
#include "charnum/graded_poly.hpp"
#include "charnum/root_poly.hpp"

using namespace charnum;

namespace {

GradedPoly from_table(
    int cap, std::initializer_list<std::pair<const char*, const char*>> t) {
  GradedPoly g(cap);
  for (const auto& [mu, c] : t)
    g.add_term(Partition::parse(mu), Rational::parse(c));
  return g;
}

}  // namespace

TEST_CASE("characteristic series coefficients") {
  CharacteristicSeries a = ahat_series(3);
  CHECK(a.coeff(0) == Rational(1));
  CHECK(a.coeff(1) == Rational(-1, 24));
  CHECK(a.coeff(2) == Rational(7, 5760));
  CHECK(a.coeff(3) == Rational(-31, 967680));
  CharacteristicSeries l = l_series(3);
  CHECK(l.coeff(1) == Rational(1, 3));
  CHECK(l.coeff(2) == Rational(-1, 45));
  CHECK(l.coeff(3) == Rational(2, 945));
}

TEST_CASE("newton power sums") {
  CHECK(newton_power_sum(1, 6) == from_table(6, {{"1", "1"}}));
  CHECK(newton_power_sum(2, 6) ==
        from_table(6, {{"1,1", "1"}, {"2", "-2"}}));
  CHECK(newton_power_sum(3, 6) ==
        from_table(6, {{"1,1,1", "1"}, {"2,1", "-3"}, {"3", "3"}}));
}

TEST_CASE("low-weight A-hat and L polynomials") {
  MultiplicativeSequence ah = ahat_class(3);
  CHECK(ah.K(0) == GradedPoly::one(3));
  CHECK(ah.K(1) == from_table(3, {{"1", "-1/24"}}));
  CHECK(ah.K(2) == from_table(3, {{"2", "-1/1440"}, {"1,1", "7/5760"}}));
  MultiplicativeSequence l = l_class(3);
  CHECK(l.K(1) == from_table(3, {{"1", "1/3"}}));
  CHECK(l.K(2) == from_table(3, {{"2", "7/45"}, {"1,1", "-1/45"}}));
  CHECK(l.K(3) == from_table(3, {{"3", "62/945"},
                                 {"2,1", "-13/945"},
                                 {"1,1,1", "2/945"}}));
}

TEST_CASE("weight-6 A-hat polynomial matches the frozen table") {
  GradedPoly want = from_table(
      6, {{"1,1,1,1,1,1", "1414477/2678117105664000"},
          {"2,1,1,1,1", "-1540453/669529276416000"},
          {"2,2,1,1", "76247/33476463820800"},
          {"2,2,2", "-4009/13948526592000"},
          {"3,1,1,1", "36221/20922789888000"},
          {"3,2,1", "-3491/1743565824000"},
          {"3,3", "703/2615348736000"},
          {"4,1,1", "-16759/13948526592000"},
          {"4,2", "5767/10461394944000"},
          {"5,1", "1219/1743565824000"},
          {"6", "-691/2615348736000"}});
  CHECK(ahat_class(6).K(6) == want);
}

TEST_CASE("weight-6 L polynomial matches the frozen table") {
  GradedPoly want = from_table(6, {{"1,1,1,1,1,1", "-1382/638512875"},
                                   {"2,1,1,1,1", "12842/638512875"},
                                   {"2,2,1,1", "-5527/127702575"},
                                   {"2,2,2", "2906/212837625"},
                                   {"3,1,1,1", "-33863/638512875"},
                                   {"3,2,1", "28967/212837625"},
                                   {"3,3", "-40247/638512875"},
                                   {"4,1,1", "40841/212837625"},
                                   {"4,2", "-159287/638512875"},
                                   {"5,1", "-167968/212837625"},
                                   {"6", "2828954/638512875"}});
  CHECK(l_class(6).K(6) == want);
}

TEST_CASE("multiplicative sequence agrees with the explicit root product") {
  // Independent derivation: expand prod_i Q(x_i) over three roots directly
  // and reduce, for both genera.  This exercises the exp/log machinery
  // against the defining product formula.
  const int cap = 3, nvars = 3, rcap = 2 * cap;
  for (const auto& series : {ahat_series(cap), l_series(cap)}) {
    RootPoly prod = RootPoly::one(nvars, rcap);
    for (int v = 0; v < nvars; ++v) {
      RootPoly qx = RootPoly::one(nvars, rcap);
      for (int j = 1; j <= cap; ++j) {
        std::vector<int> expo(nvars, 0);
        expo[v] = 2 * j;
        qx.add_term(expo, series.coeff(j));
      }
      prod = root_mul(prod, qx);
    }
    GradedPoly reduced = symmetric_reduce(prod);
    GradedPoly expected = (series.name == "ahat" ? ahat_class(cap)
                                                 : l_class(cap))
                              .total();
    CHECK(reduced == expected);
  }
}

TEST_CASE("series helpers") {
  // (1 + z)^-1 = 1 - z + z^2 - ...
  std::vector<Rational> one_plus = {Rational(1), Rational(1), Rational(0),
                                    Rational(0)};
  auto inv = series_inv(one_plus, 3);
  CHECK(inv[2] == Rational(1));
  CHECK(inv[3] == Rational(-1));
  auto prod = series_mul(one_plus, inv, 3);
  CHECK(prod[0] == Rational(1));
  CHECK(prod[1].is_zero());
  CHECK(prod[2].is_zero());
  // log(1 + z) = z - z^2/2 + z^3/3
  auto lg = series_log(one_plus, 3);
  CHECK(lg[1] == Rational(1));
  CHECK(lg[2] == Rational(-1, 2));
  CHECK(lg[3] == Rational(1, 3));
}

TEST_CASE("spin wu class") {
  MultiplicativeSequence nu = wu_spin_class(3);
  CHECK(nu.K(1) == from_table(3, {{"1", "1/2"}}));
  CHECK(nu.K(3).coeff(Partition{3}) == Rational(5));
  CHECK_THROWS_AS(wu_spin_class(4), std::invalid_argument);
  CHECK_THROWS_WITH(wu_spin_class(4),
                    doctest::Contains("insufficient g coefficients"));
}

TEST_CASE("multiplicative sequence requires enough coefficients") {
  CharacteristicSeries s{"too-short", {Rational(1, 2)}};
  CHECK_THROWS_AS(multiplicative_sequence(s, 2), std::invalid_argument);
}

TEST_CASE("root polynomial basics") {
  RootPoly e1 = RootPoly::e_of_squares(1, 2, 4);
  RootPoly want(2, 4);
  want.add_term({2, 0}, Rational(1));
  want.add_term({0, 2}, Rational(1));
  CHECK(e1 == want);
  RootPoly e2 = RootPoly::e_of_squares(2, 2, 4);
  RootPoly want2(2, 4);
  want2.add_term({2, 2}, Rational(1));
  CHECK(e2 == want2);
  CHECK(RootPoly::e_of_squares(3, 2, 8).is_zero());  // only two variables

  CHECK(e1.is_hyperoctahedral_symmetric());
  RootPoly x1 = RootPoly::linear({Rational(1), Rational(0)}, 4);
  CHECK_FALSE(x1.is_hyperoctahedral_symmetric());     // odd under sign flip
  RootPoly skew(2, 4);
  skew.add_term({2, 0}, Rational(1));                  // x1^2 alone
  CHECK_FALSE(skew.is_hyperoctahedral_symmetric());
  CHECK_THROWS_WITH(symmetric_reduce(x1), doctest::Contains("not symmetric"));
}

TEST_CASE("to_roots substitutes elementary symmetric squares") {
  GradedPoly p1 = GradedPoly::gen(1, 2);
  RootPoly r = to_roots(p1, 2);
  CHECK(r.cap == 4);
  CHECK(r == RootPoly::e_of_squares(1, 2, 4));
  // p3 vanishes on two variables
  CHECK(to_roots(GradedPoly::gen(3, 3), 2).is_zero());
}

TEST_CASE("symmetric reduction round-trips random polynomials") {
  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<long> num(-9, 9);
  const int cap = 3, nvars = 3;
  for (int t = 0; t < 20; ++t) {
    GradedPoly poly(cap);
    poly.add_term(Partition(), Rational(num(rng)));
    for (int w = 1; w <= cap; ++w)
      for (const auto& mu : partitions_of(w, nvars))
        poly.add_term(mu, Rational(num(rng), 4));
    CHECK(symmetric_reduce(to_roots(poly, nvars)) == poly);
  }
}
