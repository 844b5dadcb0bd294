#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "bilim/interval.hpp"
#include "bilim/rational.hpp"
#include "bilim/upoly.hpp"

using namespace bilim;

namespace {

UniPoly poly(std::initializer_list<long long> ascending) {
  std::vector<Rational> c;
  for (long long v : ascending) c.emplace_back(v);
  return UniPoly(std::move(c));
}

Rational rand_rational(std::mt19937& rng, int num_range, int den_range) {
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(1, den_range);
  return Rational(num(rng), den(rng));
}

UniPoly rand_poly(std::mt19937& rng, int max_deg, int num_range, int den_range) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  int d = deg(rng);
  std::vector<Rational> c;
  for (int i = 0; i <= d; ++i) c.push_back(rand_rational(rng, num_range, den_range));
  return UniPoly(std::move(c));
}

// Number of real roots of a monic square-free polynomial, via eigenvalues of
// its companion matrix. Returns -1 when roots are too close or too close to
// the real axis to classify reliably.
int companion_real_root_count(const UniPoly& p) {
  int d = p.degree();
  if (d <= 0) return 0;
  UniPoly m = p.monic();
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(d, d);
  for (int i = 0; i < d; ++i) c(i, d - 1) = -m.coeff(i).to_double();
  for (int i = 1; i < d; ++i) c(i, i - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> es(c);
  if (es.info() != Eigen::Success) return -1;
  std::vector<std::complex<double>> roots;
  for (int i = 0; i < d; ++i) roots.push_back(es.eigenvalues()[i]);
  int real = 0;
  for (const auto& r : roots) {
    double im = std::abs(r.imag());
    double scale = 1.0 + std::abs(r.real());
    if (im < 1e-9 * scale)
      ++real;
    else if (im < 1e-3 * scale)
      return -1;  // ambiguous
  }
  for (size_t i = 0; i < roots.size(); ++i)
    for (size_t j = i + 1; j < roots.size(); ++j)
      if (std::abs(roots[i] - roots[j]) < 1e-4) return -1;  // clustered
  return real;
}

}  // namespace

TEST_CASE("rational basics") {
  Rational a(3, 6);
  CHECK(a.num() == 1);
  CHECK(a.den() == 2);
  CHECK(Rational(-4, -8) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(2, -4).den() == 2);
  CHECK(Rational::from_string("22/7") == Rational(22, 7));
  CHECK(Rational::from_string("-5") == Rational(-5));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) * Rational(3, 7) == Rational(1, 7));
  CHECK(Rational(1, 3) / Rational(2, 3) == Rational(1, 2));
  CHECK(Rational(-7, 2).abs() == Rational(7, 2));
  CHECK(Rational(-7, 2).sign() == -1);
  CHECK(Rational(0).sign() == 0);
  CHECK(Rational(5, 2).floor() == 2);
  CHECK(Rational(5, 2).ceil() == 3);
  CHECK(Rational(-5, 2).floor() == -3);
  CHECK(Rational(-5, 2).ceil() == -2);
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(1, 2) < Rational(2, 3));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational field axioms on random triples") {
  std::mt19937 rng(20240811);
  for (int iter = 0; iter < 500; ++iter) {
    Rational a = rand_rational(rng, 50, 20);
    Rational b = rand_rational(rng, 50, 20);
    Rational c = rand_rational(rng, 50, 20);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a + Rational(0) == a);
    CHECK(a * Rational(1) == a);
    CHECK(a - a == Rational(0));
    if (!a.is_zero()) CHECK(a * a.inv() == Rational(1));
  }
}

TEST_CASE("interval arithmetic") {
  IntervalQ a(Rational(1), Rational(2));
  IntervalQ b(Rational(-1), Rational(3));
  IntervalQ s = a + b;
  CHECK(s.lo == Rational(0));
  CHECK(s.hi == Rational(5));
  IntervalQ p = a * b;
  CHECK(p.lo == Rational(-2));
  CHECK(p.hi == Rational(6));
  CHECK(b.contains_zero());
  CHECK_FALSE(a.contains_zero());
  CHECK(a.sign() == 1);
  CHECK(b.sign() == 0);
  CHECK((-a).sign() == -1);
  CHECK_THROWS_AS(a / b, std::domain_error);
  IntervalQ q = b / a;
  CHECK(q.contains(Rational(-1)));
  CHECK(q.contains(Rational(3)));
  CHECK(IntervalQ::point(Rational(7)).is_point());
  CHECK_THROWS_AS(IntervalQ(Rational(2), Rational(1)), std::invalid_argument);
}

TEST_CASE("upoly basics") {
  UniPoly z = UniPoly::zero();
  CHECK(z.is_zero());
  CHECK(z.degree() == kDegNegInf);
  CHECK(z.degree() != -1);

  UniPoly p = poly({1, 0, -3, 2});  // 2t^3 - 3t^2 + 1
  CHECK(p.degree() == 3);
  CHECK(p.lc() == Rational(2));
  CHECK(p.coeff(0) == Rational(1));
  CHECK(p.coeff(7) == Rational(0));
  CHECK(p.eval(Rational(2)) == Rational(5));
  CHECK(p.derivative() == poly({0, -6, 6}));
  CHECK(poly({1, 1}) * poly({-1, 1}) == poly({-1, 0, 1}));
  CHECK(p + (-p) == UniPoly::zero());
  CHECK(poly({1, 1}).pow(2) == poly({1, 2, 1}));

  // Interval evaluation encloses point evaluation.
  IntervalQ box(Rational(-1), Rational(2));
  IntervalQ enc = p.eval(box);
  for (int k = -4; k <= 8; ++k) {
    Rational x(k, 4);
    CHECK(enc.contains(p.eval(x)));
  }
}

TEST_CASE("upoly division") {
  UniPoly a = poly({-1, 0, 0, 1});  // t^3 - 1
  UniPoly b = poly({-1, 1});        // t - 1
  UniPoly q, r;
  UniPoly::divmod(a, b, q, r);
  CHECK(r.is_zero());
  CHECK(q == poly({1, 1, 1}));
  CHECK(UniPoly::div_exact(a, b) == q);
  CHECK_THROWS_AS(UniPoly::div_exact(poly({1, 0, 1}), b), std::domain_error);
  UniPoly::divmod(poly({1, 0, 1}), b, q, r);
  CHECK(q == poly({1, 1}));
  CHECK(r == poly({2}));
  CHECK_THROWS_AS(UniPoly::divmod(a, UniPoly::zero(), q, r), std::domain_error);
}

TEST_CASE("taylor shift, argument scaling, reversal") {
  UniPoly p = poly({0, 0, 1});  // t^2
  CHECK(p.taylor_shift(Rational(1)) == poly({1, 2, 1}));        // (t+1)^2
  CHECK(p.scale_arg(Rational(3)) == poly({0, 0, 9}));           // (3t)^2
  CHECK(poly({1, 2, 3}).reverse() == poly({3, 2, 1}));
  UniPoly q = poly({2, -1, 5});
  CHECK(q.taylor_shift(Rational(1, 2)).eval(Rational(0)) == q.eval(Rational(1, 2)));
}

TEST_CASE("gcd examples") {
  CHECK(upoly_gcd(poly({-1, 0, 1}), poly({-1, 1})) == poly({-1, 1}));
  CHECK(upoly_gcd(poly({1, 0, 1}), poly({-1, 1})) == UniPoly::one());
  CHECK(upoly_gcd(poly({0, -1, 0, 1}), poly({-1, 0, 1})) == poly({-1, 0, 1}));
  CHECK(upoly_gcd(UniPoly::zero(), UniPoly::zero()).is_zero());
  CHECK(upoly_gcd(poly({0, 2}), UniPoly::zero()) == poly({0, 1}));
}

TEST_CASE("gcd divides both inputs on random pairs") {
  std::mt19937 rng(987654);
  for (int iter = 0; iter < 1000; ++iter) {
    UniPoly p = rand_poly(rng, 6, 8, 4);
    UniPoly q = rand_poly(rng, 6, 8, 4);
    // Plant a common factor in half the cases.
    if (iter % 2 == 0) {
      UniPoly c = rand_poly(rng, 2, 5, 2);
      if (!c.is_zero() && c.degree() > 0) {
        p = p * c;
        q = q * c;
      }
    }
    UniPoly g = upoly_gcd(p, q);
    if (g.is_zero()) {
      CHECK(p.is_zero());
      CHECK(q.is_zero());
      continue;
    }
    CHECK(g.lc() == Rational(1));
    if (!p.is_zero()) CHECK((UniPoly::div_exact(p, g) * g) == p);
    if (!q.is_zero()) CHECK((UniPoly::div_exact(q, g) * g) == q);
    // Cofactors are coprime, so g is the greatest common divisor.
    if (!p.is_zero() && !q.is_zero() && g.degree() > 0) {
      UniPoly gg = upoly_gcd(UniPoly::div_exact(p, g), UniPoly::div_exact(q, g));
      CHECK(gg == UniPoly::one());
    }
  }
}

TEST_CASE("squarefree part examples") {
  CHECK(squarefree_part(poly({1, -2, 1})) == poly({-1, 1}));     // (t-1)^2
  CHECK(squarefree_part(poly({1, 0, 1})) == poly({1, 0, 1}));    // t^2+1
  CHECK(squarefree_part(poly({0, 0, -1, 1})) == poly({0, -1, 1}));  // t^3-t^2
  CHECK(squarefree_part(poly({7})) == UniPoly::one());
  CHECK_THROWS_AS(squarefree_part(UniPoly::zero()), std::invalid_argument);
}

TEST_CASE("resultant examples") {
  CHECK(resultant(poly({-2, 0, 1}), poly({-1, 1})) == Rational(-1));
  CHECK(resultant(poly({-3, 1}), poly({-3, 1})) == Rational(0));
  CHECK(resultant(poly({0, 0, 1}), poly({-3, 1})) == Rational(9));
  // res(p, q) = lc(q)^deg p * prod p(root of q): res(t^2-2, t^2-1) = p(1)p(-1) = 1.
  CHECK(resultant(poly({-2, 0, 1}), poly({-1, 0, 1})) == Rational(1));
  CHECK(resultant(poly({5}), poly({1, 2, 3})) == Rational(25));
}

TEST_CASE("resultant is zero iff inputs share a complex root") {
  std::mt19937 rng(13579);
  for (int iter = 0; iter < 200; ++iter) {
    UniPoly p = rand_poly(rng, 4, 6, 3);
    UniPoly q = rand_poly(rng, 4, 6, 3);
    if (p.is_zero() || q.is_zero() || p.degree() == 0 || q.degree() == 0) continue;
    UniPoly g = upoly_gcd(p, q);
    if (g.degree() > 0)
      CHECK(resultant(p, q) == Rational(0));
    else
      CHECK(resultant(p, q) != Rational(0));
  }
}

TEST_CASE("count_real_roots examples") {
  CHECK(count_real_roots(poly({-2, 0, 1})) == 2);
  CHECK(count_real_roots(poly({1, 0, 1})) == 0);
  CHECK(count_real_roots(poly({1, -3, 0, 1}),
                         IntervalQ(Rational(0), Rational(2))) == 2);
  CHECK(count_real_roots(poly({1, -3, 0, 1})) == 3);
  CHECK(count_real_roots(poly({0, 1})) == 1);
  // Root endpoints are nudged inward: open interval (0, 1) holds no root of t(t-1).
  CHECK(count_real_roots(poly({0, -1, 1}), IntervalQ(Rational(0), Rational(1))) == 0);
  CHECK(count_real_roots(poly({0, -1, 1}), IntervalQ(Rational(-1), Rational(2))) == 2);
}

TEST_CASE("count_real_roots agrees with companion-matrix oracle") {
  std::mt19937 rng(424242);
  int checked = 0;
  while (checked < 120) {
    UniPoly p = rand_poly(rng, 8, 9, 3);
    if (p.is_zero() || p.degree() < 1) continue;
    UniPoly sf = squarefree_part(p);
    if (sf.degree() < 1) continue;
    int oracle = companion_real_root_count(sf);
    if (oracle < 0) continue;  // not well separated
    CHECK(count_real_roots(sf) == oracle);
    ++checked;
  }
}

TEST_CASE("isolate_real_roots examples") {
  auto iv = isolate_real_roots(poly({-2, 0, 1}));
  REQUIRE(iv.size() == 2);
  CHECK(iv[0].lo > Rational(-2));
  CHECK(iv[0].hi < Rational(-1));
  CHECK(iv[1].lo > Rational(1));
  CHECK(iv[1].hi < Rational(2));

  CHECK(isolate_real_roots(poly({1, 0, 1})).empty());

  auto iv2 = isolate_real_roots(poly({0, -1, 1}));  // t(t-1)
  REQUIRE(iv2.size() == 2);
  CHECK(iv2[0].contains(Rational(0)));
  CHECK(iv2[1].contains(Rational(1)));
  CHECK_FALSE(iv2[0].contains(Rational(1)));
  CHECK_FALSE(iv2[1].contains(Rational(0)));

  CHECK(isolate_real_roots(poly({3})).empty());
  CHECK_THROWS_AS(isolate_real_roots(UniPoly::zero()), std::invalid_argument);
}

TEST_CASE("isolation intervals are disjoint and refinable") {
  std::mt19937 rng(777);
  int done = 0;
  while (done < 60) {
    UniPoly p = rand_poly(rng, 7, 10, 3);
    if (p.is_zero() || p.degree() < 1) continue;
    auto ivs = isolate_real_roots(p);
    UniPoly sf = squarefree_part(p);
    CHECK(static_cast<int>(ivs.size()) == count_real_roots(sf));
    for (size_t i = 0; i + 1 < ivs.size(); ++i) {
      CHECK(ivs[i].hi < ivs[i + 1].lo);  // strictly disjoint, sorted
    }
    SturmChain ch = SturmChain::build(sf);
    Rational target(1, 1000000);
    for (auto iv : ivs) {
      // Exactly one root inside.
      if (iv.is_point()) {
        CHECK(sf.eval(iv.lo).is_zero());
      } else {
        CHECK_FALSE(sf.eval(iv.lo).is_zero());
        CHECK_FALSE(sf.eval(iv.hi).is_zero());
        CHECK(ch.count_halfopen(iv.lo, iv.hi) == 1);
      }
      // Bisection refinement drives the width below any positive target.
      IntervalQ cur = iv;
      for (int step = 0; step < 200 && cur.width() >= target; ++step)
        cur = refine_root_interval(ch, cur);
      CHECK(cur.width() < target);
      CHECK(cur.lo >= iv.lo);
      CHECK(cur.hi <= iv.hi);
    }
    ++done;
  }
}

TEST_CASE("sturm chain counts match isolation on planted rational roots") {
  // prod (t - k/2) for k in {-3, 0, 1, 5} has four rational roots.
  UniPoly p = UniPoly::one();
  std::vector<Rational> roots = {Rational(-3, 2), Rational(0), Rational(1, 2), Rational(5, 2)};
  for (const auto& r : roots)
    p = p * UniPoly(std::vector<Rational>{-r, Rational(1)});
  auto ivs = isolate_real_roots(p);
  REQUIRE(ivs.size() == roots.size());
  for (size_t i = 0; i < roots.size(); ++i) CHECK(ivs[i].contains(roots[i]));
  CHECK(count_real_roots(p) == 4);
  CHECK(count_real_roots(p, IntervalQ(Rational(-1), Rational(1))) == 2);
}
