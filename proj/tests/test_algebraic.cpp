#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "bilim/algebraic.hpp"
#include "bilim/upoly.hpp"

using namespace bilim;

namespace {

UniPoly poly(std::initializer_list<int> ascending) {
  std::vector<Rational> c;
  for (int v : ascending) c.emplace_back(v);
  return UniPoly(c);
}

// Positive square root of a nonnegative integer, as an algebraic number.
AlgNum sqrt_of(int n) {
  auto roots = apoly_real_roots(APoly::from_upoly(poly({-n, 0, 1})));
  REQUIRE(roots.size() == (n == 0 ? 1u : 2u));
  return roots.back();
}

Rational rand_rat(std::mt19937& rng) {
  int num = static_cast<int>(rng() % 41) - 20;
  int den = 1 + static_cast<int>(rng() % 12);
  return Rational(num, den);
}

}  // namespace

TEST_CASE("roots of t^2 - 2") {
  auto roots = apoly_real_roots(APoly::from_upoly(poly({-2, 0, 1})));
  REQUIRE(roots.size() == 2);
  CHECK(alg_sign(roots[0]) == -1);
  CHECK(alg_sign(roots[1]) == 1);
  CHECK(alg_compare(roots[0], roots[1]) < 0);
  // No real roots of t^2 + 1; a double root collapses to one isolation.
  CHECK(apoly_real_roots(APoly::from_upoly(poly({1, 0, 1}))).empty());
  auto dbl = apoly_real_roots(APoly::from_upoly(poly({1, -2, 1})));
  REQUIRE(dbl.size() == 1);
  CHECK(alg_compare(dbl[0], AlgNum(Rational(1))) == 0);
  CHECK(dbl[0].is_rational());
}

TEST_CASE("arithmetic on sqrt(2)") {
  AlgNum r2 = sqrt_of(2);
  CHECK(alg_compare(r2 * r2, AlgNum(Rational(2))) == 0);
  CHECK(alg_is_zero(r2 + (-r2)));
  CHECK(alg_is_zero(r2 * r2 - AlgNum(Rational(2))));
  AlgNum quarter = r2 / AlgNum(Rational(4));
  CHECK(alg_compare(quarter * quarter, AlgNum(Rational(1, 8))) == 0);
  CHECK(alg_compare(quarter, AlgNum(Rational(0))) > 0);
  CHECK(alg_compare(r2.inv() * r2, AlgNum(Rational(1))) == 0);
  CHECK(alg_compare(r2.pow(4), AlgNum(Rational(4))) == 0);
  CHECK(alg_compare((-r2).abs(), r2) == 0);
  CHECK_THROWS_AS(AlgNum(Rational(1)) / (r2 * r2 - AlgNum(Rational(2))),
                  std::domain_error);
}

TEST_CASE("signs and comparisons") {
  AlgNum r2 = sqrt_of(2);
  CHECK(alg_sign(r2 - AlgNum(Rational(1))) == 1);
  CHECK(alg_sign(AlgNum(Rational(-3, 7))) == -1);
  CHECK(alg_sign(r2 - AlgNum(Rational(3, 2))) == -1);
  CHECK(alg_compare(AlgNum(Rational(1, 3)), AlgNum(Rational(333, 1000))) > 0);
  CHECK(alg_is_zero(AlgNum(Rational(0))));
  Rational tiny(mpq_class(mpz_class(1), mpz_class("10000000000000000000000000000000000000000")));
  CHECK_FALSE(alg_is_zero(AlgNum(tiny)));
}

TEST_CASE("hair-width sign decisions fall back to the symbolic test") {
  AlgNum r2 = sqrt_of(2);
  // p = floor(sqrt(2) * 10^40): p/10^40 < sqrt(2) < (p+1)/10^40.
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, 40);
  mpz_class p;
  mpz_class two_scale2 = 2 * scale * scale;
  mpz_sqrt(p.get_mpz_t(), two_scale2.get_mpz_t());
  Rational below(mpq_class(p, scale));
  Rational above(mpq_class(p + 1, scale));
  CHECK(alg_sign(r2 - AlgNum(below)) == 1);
  CHECK(alg_sign(r2 - AlgNum(above)) == -1);
  CHECK_FALSE(alg_is_zero(r2 - AlgNum(below)));
}

TEST_CASE("mixed towers: sqrt(2) + sqrt(3)") {
  AlgNum r2 = sqrt_of(2);
  AlgNum r3 = sqrt_of(3);
  AlgNum r6 = sqrt_of(6);
  AlgNum s = r2 + r3;
  // (sqrt2 + sqrt3)^2 = 5 + 2 sqrt6.
  CHECK(alg_is_zero(s * s - AlgNum(Rational(5)) - AlgNum(Rational(2)) * r6));
  CHECK(alg_compare(s, AlgNum(Rational(3))) > 0);
  CHECK(alg_compare(s, AlgNum(Rational(4))) < 0);
  RealAlgebraic ra = to_real_algebraic(s);
  CHECK(ra.defining == poly({1, 0, -10, 0, 1}));
  CHECK(ra.isolating.contains(Rational(314, 100)) ==
        (ra.isolating.lo <= Rational(314, 100) &&
         Rational(314, 100) <= ra.isolating.hi));
}

TEST_CASE("minimal polynomials strip parasite factors") {
  AlgNum r2 = sqrt_of(2);
  AlgNum quarter = r2 / AlgNum(Rational(4));
  RealAlgebraic ra = to_real_algebraic(quarter);
  CHECK(ra.defining == poly({-1, 0, 8}));
  CHECK(ra.isolating.contains(Rational(35, 99)));
  RealAlgebraic rq = to_real_algebraic(AlgNum(Rational(3, 4)));
  CHECK(rq.defining == poly({-3, 4}));
  CHECK(rq.isolating.is_point());
  // A tower element whose value is rational demotes on conversion.
  RealAlgebraic rr = to_real_algebraic(r2 * r2 / AlgNum(Rational(2)));
  CHECK(rr.defining == poly({-1, 1}));
}

TEST_CASE("rational extraction") {
  AlgNum r2 = sqrt_of(2);
  CHECK(!alg_to_rational(r2).has_value());
  auto v = alg_to_rational(r2 * r2);
  REQUIRE(v.has_value());
  CHECK(*v == Rational(2));
  auto w = alg_to_rational((r2 + AlgNum(Rational(1))) * (r2 - AlgNum(Rational(1))));
  REQUIRE(w.has_value());
  CHECK(*w == Rational(1));
}

TEST_CASE("decimal output") {
  AlgNum r2 = sqrt_of(2);
  CHECK(to_decimal(r2 / AlgNum(Rational(4)), 8) == "0.35355339");
  CHECK(to_decimal(AlgNum(Rational(1, 3)), 5) == "0.33333");
  CHECK(to_decimal(AlgNum(Rational(2, 3)), 5) == "0.66667");
  // Ties round to even, trailing zeros are kept.
  CHECK(to_decimal(AlgNum(Rational(1, 8)), 2) == "0.12");
  CHECK(to_decimal(AlgNum(Rational(3, 8)), 2) == "0.38");
  CHECK(to_decimal(AlgNum(Rational(-1, 8)), 2) == "-0.12");
  CHECK(to_decimal(AlgNum(Rational(-7, 2)), 0) == "-4");
  CHECK(to_decimal(AlgNum(Rational(5, 2)), 0) == "2");
  CHECK(to_decimal(AlgNum(Rational(1, 2)), 1) == "0.5");
  CHECK(to_decimal(AlgNum(Rational(100)), 3) == "100.000");
  CHECK(to_decimal(r2, 3) == "1.414");
  CHECK(to_decimal(-r2, 3) == "-1.414");
  CHECK_THROWS_AS(to_decimal(r2, -1), std::invalid_argument);
}

TEST_CASE("roots over an algebraic coefficient field") {
  AlgNum r2 = sqrt_of(2);
  // Y^2 - 1/sqrt(2): roots +-2^(-1/4); exercises denominator clearing.
  APoly p({-r2.inv(), AlgNum(Rational(0)), AlgNum(Rational(1))});
  auto roots = apoly_real_roots(p);
  REQUIRE(roots.size() == 2);
  CHECK(alg_compare(roots[0], roots[1]) < 0);
  for (const AlgNum& r : roots) {
    CHECK(alg_compare(r.pow(4), AlgNum(Rational(1, 2))) == 0);
    CHECK(alg_is_zero(r * r - r2.inv()));
  }
  // Y^2 - sqrt(2) Y = Y (Y - sqrt(2)): one rational root, one matching the
  // depth-1 sqrt(2) across towers.
  APoly q({AlgNum(Rational(0)), -r2, AlgNum(Rational(1))});
  auto qs = apoly_real_roots(q);
  REQUIRE(qs.size() == 2);
  CHECK(alg_is_zero(qs[0]));
  CHECK(qs[0].is_rational());
  CHECK(alg_compare(qs[1], r2) == 0);
}

TEST_CASE("linear polynomials solve without extensions") {
  AlgNum r2 = sqrt_of(2);
  APoly p({-r2, r2 + r2});  // (2 sqrt2) Y - sqrt2, root 1/2
  auto roots = apoly_real_roots(p);
  REQUIRE(roots.size() == 1);
  CHECK(roots[0].is_rational());
  CHECK(roots[0].rational_value() == Rational(1, 2));
  CHECK_THROWS_AS(apoly_real_roots(APoly({r2 * r2 - AlgNum(Rational(2))})),
                  std::invalid_argument);
}

TEST_CASE("enclosures agree across precisions") {
  std::mt19937 rng(424242);
  AlgNum r2 = sqrt_of(2);
  AlgNum r3 = sqrt_of(3);
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 2, 200);
  Rational w200(mpq_class(mpz_class(1), big));
  for (int i = 0; i < 1000; ++i) {
    AlgNum x = AlgNum(rand_rat(rng)) + AlgNum(rand_rat(rng)) * r2 +
               AlgNum(rand_rat(rng)) * r3;
    IntervalQ coarse = alg_enclosure(x, Rational(1, 1024));
    IntervalQ fine = alg_enclosure(x, w200);
    CHECK(fine.width() <= w200);
    CHECK(!coarse.disjoint(fine));
    int s = alg_sign(x);
    if (s > 0) CHECK(fine.hi.sign() > 0);
    if (s < 0) CHECK(fine.lo.sign() < 0);
    if (s == 0) CHECK(fine.contains_zero());
  }
}

TEST_CASE("field axioms under towers") {
  std::mt19937 rng(77);
  AlgNum r2 = sqrt_of(2);
  AlgNum r3 = sqrt_of(3);
  for (int i = 0; i < 40; ++i) {
    AlgNum a = AlgNum(rand_rat(rng)) + AlgNum(rand_rat(rng)) * r2;
    AlgNum b = AlgNum(rand_rat(rng)) * r3 + AlgNum(rand_rat(rng));
    CHECK(alg_compare((a + b) - b, a) == 0);
    CHECK(alg_sign(a) == -alg_sign(-a));
    int sq = alg_sign(a * a);
    CHECK((sq == 0 || sq == 1));
  }
}

TEST_CASE("tower values with rational content collapse on compare") {
  AlgNum r2 = sqrt_of(2);
  AlgNum r3 = sqrt_of(3);
  AlgNum one = (r2 * r2) / AlgNum(Rational(2));
  CHECK(alg_compare(one, AlgNum(Rational(1))) == 0);
  AlgNum five = (r2 + r3) * (r2 + r3) - AlgNum(Rational(2)) * sqrt_of(6);
  CHECK(alg_compare(five, AlgNum(Rational(5))) == 0);
  CHECK(alg_is_zero(five - AlgNum(Rational(5))));
}
