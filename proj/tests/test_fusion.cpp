#include <algorithm>

#include "doctest.h"
#include "fibkit/fusion.hpp"

using namespace fibkit;

namespace {

bool contains_prefix(const std::vector<std::string>& v, const std::string& prefix) {
  return std::any_of(v.begin(), v.end(), [&](const std::string& s) { return s.rfind(prefix, 0) == 0; });
}

}  // namespace

TEST_CASE("fibonacci rule") {
  const FusionRing f = fib_rule();
  CHECK(f.rank() == 2);
  CHECK(f.product(1, 1) == std::vector<int>{1, 1});
  CHECK(f.product(0, 1) == std::vector<int>{0, 1});
  CHECK(f.dual(1) == 1);
  CHECK(verify_axioms(f).empty());
}

TEST_CASE("verify_axioms reports broken associativity") {
  // x² = 1 + 2x is still associative: a ring generated by one element.
  FusionRing f = fib_rule();
  f.set_N(1, 1, 1, 2);
  CHECK_FALSE(contains_prefix(verify_axioms(f), "associativity"));

  // (x1·x2)·x2 = 2x1 + 2x1x2 but x1·(x2·x2) = x1 + x1x2
  FusionRing g = fib_power(2);
  g.set_N(1, 2, 3, 2);
  const auto bad = verify_axioms(g);
  CHECK(contains_prefix(bad, "associativity (x1,x2,x2,x1): 2 != 1"));
}

TEST_CASE("verify_axioms reports broken rigidity and unit") {
  FusionRing f = fib_rule();
  f.set_N(1, 1, 0, 0);
  CHECK(contains_prefix(verify_axioms(f), "rigidity"));
  FusionRing g = fib_rule();
  g.set_N(0, 1, 0, 1);
  CHECK(contains_prefix(verify_axioms(g), "left unit"));
}

TEST_CASE("deligne product") {
  const FusionRing ff = deligne_product(fib_rule(), fib_rule());
  CHECK(ff.rank() == 4);
  CHECK(ff.unit() == 0);
  const auto x1 = ff.index_of("x⊠1");
  const auto y1 = ff.index_of("1⊠x");
  const auto xx = ff.index_of("x⊠x");
  auto p = ff.product(x1, y1);
  CHECK(p == std::vector<int>{0, 0, 0, 1});
  CHECK(p[xx] == 1);
  CHECK(ff.product(xx, xx) == std::vector<int>{1, 1, 1, 1});
  CHECK(verify_axioms(ff).empty());

  const FusionRing mixed = deligne_product(fib_rule(), group_ring({3}));
  CHECK(mixed.rank() == 6);
  CHECK(verify_axioms(mixed).empty());
  CHECK(mixed.dual(mixed.index_of("x⊠1")) == mixed.index_of("x⊠2"));
}

TEST_CASE("fib powers") {
  CHECK(fib_power(1) == fib_rule());
  CHECK(fib_power(2).rank() == 4);
  const FusionRing f3 = fib_power(3);
  CHECK(f3.label(7) == "x1x2x3");
  CHECK(f3.label(5) == "x1x3");
  // x1x2x3 · x1 = x2x3 + x1x2x3
  std::vector<int> expect(8, 0);
  expect[6] = 1;
  expect[7] = 1;
  CHECK(f3.product(7, 1) == expect);

  for (int ell = 1; ell <= 4; ++ell) {
    const FusionRing r = fib_power(ell);
    CHECK(verify_axioms(r).empty());
    // unit coefficient of e·f is δ_{e,f} (all monomials self-dual)
    for (std::size_t e = 0; e < r.rank(); ++e)
      for (std::size_t f = 0; f < r.rank(); ++f) CHECK(r.N(e, f, 0) == (e == f ? 1 : 0));
  }
}

TEST_CASE("group rings and isomorphism search") {
  const FusionRing z2 = group_ring({2});
  CHECK(verify_axioms(z2).empty());
  CHECK(z2.is_invertible(1));
  const FusionRing v4 = group_ring({2, 2});
  const FusionRing z4 = group_ring({4});
  CHECK(verify_axioms(v4).empty());
  CHECK(verify_axioms(z4).empty());
  CHECK(find_isomorphism(v4, z4).empty());
  CHECK_FALSE(find_isomorphism(v4, v4).empty());

  // Fib ⊠ Fib with the factors swapped is isomorphic to fib_power(2)
  const auto map = find_isomorphism(deligne_product(fib_rule(), fib_rule()), fib_power(2));
  REQUIRE(map.size() == 4);
  CHECK(map[0] == 0);
  CHECK_FALSE(fib_rule().is_invertible(1));
}

TEST_CASE("deligne product of valid rings stays valid") {
  const std::vector<FusionRing> rings{fib_rule(), group_ring({2}), group_ring({3}), fib_power(2)};
  for (const auto& a : rings)
    for (const auto& b : rings)
      if (a.rank() * b.rank() <= 12) CHECK(verify_axioms(deligne_product(a, b)).empty());
}
