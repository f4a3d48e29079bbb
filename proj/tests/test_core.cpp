#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "charnum/bernoulli.hpp"
#include "charnum/graded_poly.hpp"
#include "charnum/linalg.hpp"
#include "charnum/partition.hpp"
#include "charnum/rational.hpp"

using namespace charnum;

TEST_CASE("rational canonical form and parsing") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(-6, -4) == Rational(3, 2));
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational::parse("22/7").str() == "22/7");
  CHECK(Rational::parse("-10/5") == Rational(-2));
  CHECK(Rational::parse("-10/5").str() == "-2");
  CHECK(Rational::parse("0/9").str() == "0");
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational arithmetic is exact") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK((-a).str() == "-1/3");
  CHECK(a.pow(3) == Rational(1, 27));
  CHECK(a.pow(0) == Rational(1));
  CHECK(Rational(-2, 3).pow(-2) == Rational(9, 4));
  CHECK(a.inv() == Rational(3));
  CHECK_THROWS_AS(Rational(0).inv(), std::domain_error);
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
  CHECK(Rational(7, 2).abs() == Rational(7, 2));
  CHECK(Rational(-7, 2).abs() == Rational(7, 2));
  CHECK(Rational(5).as_integer() == 5);
  CHECK_THROWS_AS(Rational(5, 2).as_integer(), std::domain_error);
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1) < Rational(0));
}

TEST_CASE("integer helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
  CHECK(factorial(20) == Int("2432902008176640000"));
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(-3, 2) == 6);    // (-1)^2 C(4, 2)
  CHECK(binomial(-1, 5) == -1);   // (-1)^5 C(5, 5)
  CHECK(binomial(-24, 2) == 300); // C(25, 2)
  CHECK(valuation(Int(2), Int(48)) == 4);
  CHECK(valuation(Int(3), Int(48)) == 1);
  CHECK(valuation(Int(5), Int(48)) == 0);
  CHECK(valuation(Int(2), Int(-8)) == 3);
  CHECK_THROWS_AS(valuation(Int(2), Int(0)), std::invalid_argument);
  CHECK_THROWS_AS(valuation(Int(1), Int(4)), std::invalid_argument);
  CHECK(gcd_int(Int(12), Int(-18)) == 6);
  CHECK(gcd_int(Int(0), Int(0)) == 0);
  CHECK(gcd_int(Int(0), Int(7)) == 7);
}

TEST_CASE("partition basics") {
  Partition mu{4, 2};
  CHECK(mu.weight() == 6);
  CHECK(mu.str() == "4,2");
  CHECK(Partition::parse("4,2") == mu);
  CHECK(Partition::parse("") == Partition());
  CHECK(Partition{2, 4} == mu);  // sorted on construction
  CHECK(mu.count(2) == 1);
  CHECK(mu.count(3) == 0);
  CHECK(Partition{2, 2, 1}.count(2) == 2);
  CHECK(mu.merged(Partition{3}) == Partition{4, 3, 2});
  CHECK(Partition() < Partition{1});
  CHECK(Partition{2, 1} < Partition{3});  // same weight, lex order on parts
  CHECK_THROWS_AS(Partition::parse("0,1"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("a"), std::invalid_argument);
}

TEST_CASE("partition enumeration") {
  CHECK(partitions_of(0).size() == 1);
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(6).size() == 11);
  CHECK(partitions_of(6, 2).size() == 4);  // 2+2+2, 2+2+1+1, 2+1^4, 1^6
  auto all = partitions_of(5);
  CHECK(std::is_sorted(all.begin(), all.end()));
  for (const auto& mu : all) CHECK(mu.weight() == 5);
}

TEST_CASE("graded polynomial arithmetic") {
  GradedPoly p1 = GradedPoly::gen(1, 6);
  GradedPoly p2 = GradedPoly::gen(2, 6);
  GradedPoly s = p1 + p2.scaled(Rational(3));
  CHECK(s.coeff(Partition{1}) == Rational(1));
  CHECK(s.coeff(Partition{2}) == Rational(3));
  CHECK(s.coeff(Partition{3}).is_zero());
  GradedPoly prod = poly_mul(p1, p2);
  CHECK(prod.coeff(Partition{2, 1}) == Rational(1));
  CHECK(poly_pow(p1, 7).is_zero());  // weight 7 above cap 6
  CHECK(poly_pow(p1, 6).coeff(Partition{1, 1, 1, 1, 1, 1}) == Rational(1));
  GradedPoly other_cap(4);
  CHECK_THROWS_AS(poly_mul(p1, other_cap), std::invalid_argument);
  CHECK((p1 - p1).is_zero());
  CHECK(GradedPoly::one(6).str() == "1");
}

TEST_CASE("graded polynomial truncation is coherent with products") {
  GradedPoly a(12), b(12);
  a.add_term(Partition(), Rational(1));
  a.add_term(Partition{1}, Rational(2, 3));
  a.add_term(Partition{3, 2}, Rational(-5));
  b.add_term(Partition{2}, Rational(7, 2));
  b.add_term(Partition{4}, Rational(1, 5));
  b.add_term(Partition{1, 1}, Rational(-1, 4));
  GradedPoly full = poly_mul(a, b).truncated(6);
  GradedPoly trunc = poly_mul(a.truncated(6), b.truncated(6));
  CHECK(full == trunc);
}

TEST_CASE("weight parts and top weight") {
  GradedPoly g(6);
  g.add_term(Partition{2, 1}, Rational(5));
  g.add_term(Partition{1}, Rational(-1));
  CHECK(g.top_weight() == 3);
  CHECK(g.weight_part(3).coeff(Partition{2, 1}) == Rational(5));
  CHECK(g.weight_part(2).is_zero());
  CHECK(GradedPoly(6).top_weight() == -1);
}

TEST_CASE("pontryagin numbers and pairing") {
  PontryaginNumbers n(24);
  n.set(Partition{6}, Rational(10));
  n.set(Partition{4, 2}, Rational(-3));
  CHECK(n.at(Partition{6}) == Rational(10));
  CHECK(n.at(Partition{3, 3}).is_zero());
  CHECK_THROWS_AS(n.set(Partition{2}, Rational(1)), std::invalid_argument);
  CHECK(n.string_flavored());
  PontryaginNumbers m(24);
  m.set(Partition{5, 1}, Rational(1));
  CHECK_FALSE(m.string_flavored());

  GradedPoly poly(6);
  poly.add_term(Partition{6}, Rational(2));
  poly.add_term(Partition{4, 2}, Rational(1, 3));
  poly.add_term(Partition{1}, Rational(99));  // below top weight: ignored
  CHECK(pair(poly, n) == Rational(19));       // 2*10 + (1/3)*(-3)

  GradedPoly wrong_cap(5);
  CHECK_THROWS_AS(pair(wrong_cap, n), std::invalid_argument);

  // bilinearity
  PontryaginNumbers sum = n + m.scaled(Rational(4));
  CHECK(pair(poly, sum) == pair(poly, n) + pair(poly, m) * Rational(4));
}

TEST_CASE("linear algebra over the rationals") {
  Matrix a = {{Rational(2), Rational(1)}, {Rational(1), Rational(3)}};
  CHECK(matrix_det(a) == Rational(5));
  CHECK(matrix_rank(a) == 2);
  auto inv = matrix_inverse(a);
  REQUIRE(inv.has_value());
  CHECK((*inv)[0][0] == Rational(3, 5));
  CHECK((*inv)[0][1] == Rational(-1, 5));
  Vector b = {Rational(4), Rational(7)};
  auto x = solve_linear(a, b);
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rational(1));
  CHECK((*x)[1] == Rational(2));

  Matrix sing = {{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
  CHECK(matrix_det(sing).is_zero());
  CHECK(matrix_rank(sing) == 1);
  CHECK_FALSE(matrix_inverse(sing).has_value());
  CHECK_FALSE(solve_linear(sing, Vector{Rational(1), Rational(0)}).has_value());
}

TEST_CASE("random inverse round-trip") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> d(-6, 6);
  for (int t = 0; t < 10; ++t) {
    Matrix a(4, Vector(4, Rational(0)));
    for (auto& row : a)
      for (auto& v : row) v = Rational(d(rng));
    if (matrix_det(a).is_zero()) continue;
    auto inv = matrix_inverse(a);
    REQUIRE(inv.has_value());
    for (int j = 0; j < 4; ++j) {
      Vector col(4);
      for (int i = 0; i < 4; ++i) col[i] = (*inv)[i][j];
      Vector e = matrix_apply(a, col);
      for (int i = 0; i < 4; ++i) CHECK(e[i] == Rational(i == j ? 1 : 0));
    }
  }
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(4) == Rational(-1, 30));
  CHECK(bernoulli(6) == Rational(1, 42));
  CHECK(bernoulli(8) == Rational(-1, 30));
  CHECK(bernoulli(10) == Rational(5, 66));
  CHECK(bernoulli(12) == Rational(-691, 2730));
  CHECK(bernoulli(14) == Rational(7, 6));
  CHECK(bernoulli(16) == Rational(-3617, 510));
  CHECK(bernoulli(18) == Rational(43867, 798));
  CHECK(bernoulli(20) == Rational(-174611, 330));
  CHECK_THROWS_AS(bernoulli(3), std::invalid_argument);
  CHECK_THROWS_AS(bernoulli(0), std::invalid_argument);
  CHECK_THROWS_AS(bernoulli(-2), std::invalid_argument);
}
