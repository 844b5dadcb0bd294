#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "bilim/factor.hpp"
#include "bilim/upoly.hpp"

using namespace bilim;

namespace {

UniPoly poly(std::initializer_list<int> ascending) {
  std::vector<Rational> c;
  for (int v : ascending) c.emplace_back(v);
  return UniPoly(c);
}

bool same_set(std::vector<UniPoly> got, std::vector<UniPoly> want) {
  auto key = [](const UniPoly& p) { return p.to_string(); };
  std::vector<std::string> a, b;
  for (const auto& p : got) a.push_back(key(p));
  for (const auto& p : want) b.push_back(key(p));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

UniPoly product(const std::vector<UniPoly>& fs) {
  UniPoly r = UniPoly::one();
  for (const auto& f : fs) r = r * f;
  return r;
}

}  // namespace

TEST_CASE("small examples") {
  CHECK(same_set(irreducible_factors(poly({-2, 0, 1})), {poly({-2, 0, 1})}));
  CHECK(same_set(irreducible_factors(poly({-1, 0, 1})),
                 {poly({-1, 1}), poly({1, 1})}));
  CHECK(same_set(irreducible_factors(poly({1, 1, 1})), {poly({1, 1, 1})}));
  // t^4 - 10 t^2 + 1, minimal polynomial of sqrt(2) + sqrt(3).
  CHECK(same_set(irreducible_factors(poly({1, 0, -10, 0, 1})),
                 {poly({1, 0, -10, 0, 1})}));
  // (t^2 - 2)(t^3 - 3)(t - 5)
  UniPoly p = poly({-2, 0, 1}) * poly({-3, 0, 0, 1}) * poly({-5, 1});
  CHECK(same_set(irreducible_factors(p),
                 {poly({-2, 0, 1}), poly({-3, 0, 0, 1}), poly({-5, 1})}));
  // Repeated factors collapse to the square-free part.
  CHECK(same_set(irreducible_factors(poly({1, 1}) * poly({1, 1})),
                 {poly({1, 1})}));
  CHECK(irreducible_factors(poly({7})).empty());
  CHECK_THROWS_AS(irreducible_factors(UniPoly::zero()), std::invalid_argument);
}

TEST_CASE("non-monic and rational inputs") {
  // 8 t^2 - 1 = (weird scaling) stays irreducible.
  CHECK(same_set(irreducible_factors(poly({-1, 0, 8})), {poly({-1, 0, 8})}));
  // 4 t^2 - 1 = (2t - 1)(2t + 1).
  CHECK(same_set(irreducible_factors(poly({-1, 0, 4})),
                 {poly({-1, 2}), poly({1, 2})}));
  // Rational coefficients are cleared first: t^2/6 - 1/6 .
  UniPoly q({Rational(-1, 6), Rational(0), Rational(1, 6)});
  CHECK(same_set(irreducible_factors(q), {poly({-1, 1}), poly({1, 1})}));
  // 6 t^2 + t - 2 = (2t - 1)(3t + 2).
  CHECK(same_set(irreducible_factors(poly({-2, 1, 6})),
                 {poly({-1, 2}), poly({2, 3})}));
}

TEST_CASE("cyclotomic-style products") {
  // t^6 - 1 = (t-1)(t+1)(t^2+t+1)(t^2-t+1)
  CHECK(same_set(irreducible_factors(poly({-1, 0, 0, 0, 0, 0, 1})),
                 {poly({-1, 1}), poly({1, 1}), poly({1, 1, 1}),
                  poly({1, -1, 1})}));
  // t^4 + 1 is irreducible over Q though reducible mod every prime.
  CHECK(same_set(irreducible_factors(poly({1, 0, 0, 0, 1})),
                 {poly({1, 0, 0, 0, 1})}));
  // t^4 + 4 = (t^2 - 2t + 2)(t^2 + 2t + 2).
  CHECK(same_set(irreducible_factors(poly({4, 0, 0, 0, 1})),
                 {poly({2, -2, 1}), poly({2, 2, 1})}));
}

TEST_CASE("random products reassemble") {
  std::mt19937 rng(20260819);
  std::vector<UniPoly> pool = {
      poly({-2, 0, 1}),  poly({-3, 0, 1}),   poly({1, 1, 1}),
      poly({-1, 3}),     poly({5, 2}),       poly({-3, 0, 0, 1}),
      poly({1, 0, -10, 0, 1}), poly({2, -2, 1}), poly({-7, 1}),
      poly({3, 1, 2})};
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<UniPoly> chosen;
    std::vector<size_t> used;
    int k = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < k; ++i) {
      size_t j = rng() % pool.size();
      if (std::find(used.begin(), used.end(), j) != used.end()) continue;
      used.push_back(j);
      chosen.push_back(pool[j]);
    }
    UniPoly prod = product(chosen);
    auto got = irreducible_factors(prod);
    CHECK(same_set(got, chosen));
    // Each factor divides the input and the product matches the square-free
    // part up to a constant.
    UniPoly rebuilt = product(got);
    CHECK(rebuilt.monic() == squarefree_part(prod));
  }
}
