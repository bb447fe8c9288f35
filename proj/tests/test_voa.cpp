#include <algorithm>

#include "doctest.h"
#include "fibkit/fibcat.hpp"
#include "fibkit/voa.hpp"

using namespace fibkit;

namespace {

std::vector<int> product(const VoaModel& m, const std::string& a, const std::string& b) {
  return m.fusion.product(m.index(a), m.index(b));
}

std::vector<int> basis(const VoaModel& m, std::initializer_list<std::string> labels) {
  std::vector<int> v(m.fusion.rank(), 0);
  for (const auto& l : labels) v[m.index(l)] += 1;
  return v;
}

}  // namespace

TEST_CASE("minimal model M(2,5)") {
  const VoaModel m = minimal_model(2, 5);
  CHECK(m.c == Rational(-22, 5));
  CHECK(m.fusion.labels() == std::vector<std::string>{"(1,1)", "(1,2)"});
  CHECK(m.weight("(1,1)") == 0);
  CHECK(m.weight("(1,2)") == Rational(-1, 5));
  CHECK(product(m, "(1,2)", "(1,2)") == std::vector<int>{1, 1});
  CHECK(!find_isomorphism(m.fusion, fib_rule()).empty());
  CHECK(verify_axioms(m.fusion).empty());
}

TEST_CASE("minimal model M(3,5)") {
  const VoaModel m = minimal_model(3, 5);
  CHECK(m.c == Rational(-3, 5));
  const std::string one = "(1,1)", y = "(1,2)", z = "(1,3)", x = "(1,4)";
  CHECK(m.fusion.labels() == std::vector<std::string>{one, y, z, x});
  CHECK(m.weight(one) == 0);
  CHECK(m.weight(x) == Rational(3, 4));
  CHECK(m.weight(y) == Rational(-1, 20));
  CHECK(m.weight(z) == Rational(1, 5));

  CHECK(product(m, x, x) == basis(m, {one}));
  CHECK(product(m, x, y) == basis(m, {z}));
  CHECK(product(m, y, y) == basis(m, {one, z}));
  CHECK(product(m, z, x) == basis(m, {y}));
  CHECK(product(m, z, y) == basis(m, {x, y}));
  CHECK(product(m, z, z) == basis(m, {one, z}));
  CHECK(verify_axioms(m.fusion).empty());
}

TEST_CASE("minimal model M(3,10) and Kac symmetry") {
  const VoaModel m = minimal_model(3, 10);
  CHECK(m.c == Rational(-44, 5));
  CHECK(minimal_weight(3, 10, 2, 1) == 2);
  CHECK(kac_canonical(3, 10, 2, 1) == std::make_pair(1, 9));
  CHECK(m.weight("(1,9)") == 2);
  CHECK(verify_axioms(m.fusion).empty());

  for (auto [p, q] : {std::pair{2, 5}, {3, 4}, {3, 5}, {2, 7}, {4, 5}, {3, 10}, {5, 7}}) {
    const VoaModel mm = minimal_model(p, q);
    CHECK(verify_axioms(mm.fusion).empty());
    CHECK(mm.fusion.rank() == static_cast<std::size_t>((p - 1) * (q - 1) / 2));
    for (int r = 1; r < p; ++r)
      for (int s = 1; s < q; ++s) CHECK(minimal_weight(p, q, r, s) == minimal_weight(p, q, p - r, q - s));
  }
  // the Ising model
  const VoaModel ising = minimal_model(3, 4);
  CHECK(ising.c == Rational(1, 2));
  CHECK(ising.weight("(1,2)") == Rational(1, 16));
  CHECK(ising.weight("(1,3)") == Rational(1, 2));

  CHECK_THROWS_AS(minimal_model(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(minimal_model(5, 3), std::invalid_argument);
  CHECK_THROWS_AS(minimal_model(1, 2), std::invalid_argument);
}

TEST_CASE("affine A1") {
  const VoaModel a8 = affine_a1(8);
  CHECK(a8.c == Rational(12, 5));
  CHECK(a8.weight("4") == Rational(3, 5));
  CHECK(product(a8, "8", "3") == basis(a8, {"5"}));
  CHECK(a8.fusion.is_invertible(a8.index("8")));
  const VoaModel a1 = affine_a1(1);
  CHECK(!find_isomorphism(a1.fusion, group_ring({2})).empty());
  for (int k = 1; k <= 8; ++k) CHECK(verify_axioms(affine_a1(k).fusion).empty());
  CHECK_THROWS_AS(affine_a1(0), std::invalid_argument);
}

TEST_CASE("central charges") {
  CHECK(affine_central_charge("G2", 1) == Rational(14, 5));
  CHECK(affine_central_charge("F4", 1) == Rational(26, 5));
  CHECK(affine_central_charge("E8", 1) == 8);
  CHECK(affine_central_charge("A1", 8) == affine_a1(8).c);
  CHECK(lie_entry("A2").dual_coxeter == 3);
  CHECK_THROWS_AS(affine_central_charge("B7", 1), std::invalid_argument);
  CHECK(8 * minimal_central_charge(3, 5) + 7 * minimal_central_charge(2, 5) == Rational(-178, 5));
}

TEST_CASE("monodromy charge") {
  const VoaModel a8 = affine_a1(8);
  const auto J = a8.index("8");
  CHECK(monodromy_charge(a8, J, a8.index("1")) == Rational(1, 2));
  CHECK(monodromy_charge(a8, J, a8.index("2")) == 0);
  CHECK(monodromy_charge(a8, J, 0) == 0);
  CHECK_THROWS_AS(monodromy_charge(a8, a8.index("2"), 0), MathError);

  for (int k = 1; k <= 8; ++k) {
    const VoaModel m = affine_a1(k);
    const std::size_t Jk = static_cast<std::size_t>(k);
    // h_J + h_1 − h_J
    CHECK(monodromy_charge(m, Jk, 0) == 0);
    for (int i = 0; i <= k; ++i) CHECK(monodromy_charge(m, Jk, i) == frac(ratio(i, 2)));
    for (std::size_t a = 0; a < m.fusion.rank(); ++a)
      for (std::size_t b = 0; b < m.fusion.rank(); ++b) {
        const auto ab = m.fusion.product(a, b);
        for (std::size_t t = 0; t < ab.size(); ++t) {
          if (ab[t] == 0) continue;
          CHECK(monodromy_charge(m, Jk, t) == frac(monodromy_charge(m, Jk, a) + monodromy_charge(m, Jk, b)));
        }
      }
  }
}

TEST_CASE("simple current extension of A1,8") {
  const VoaModel a8 = affine_a1(8);
  const ExtensionReport r = simple_current_extension(a8, {0, 8});
  CHECK(r.currents_integral);
  REQUIRE(r.orbits.size() == 5);
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<bool> local;
  for (const auto& o : r.orbits) {
    orbits.push_back(o.members);
    local.push_back(o.local);
  }
  CHECK(orbits == std::vector<std::vector<std::size_t>>{{0, 8}, {1, 7}, {2, 6}, {3, 5}, {4}});
  CHECK(local == std::vector<bool>{true, false, true, false, true});
  CHECK(r.orbits[4].endomorphisms == 2);
  for (int i = 0; i < 4; ++i) CHECK(r.orbits[i].endomorphisms == 1);
  CHECK(r.local_spectrum == std::vector<Rational>{0, Rational(1, 5), Rational(3, 5), Rational(3, 5)});

  const FibTypeMatch fib = fib_type_match(r, 2);
  CHECK(fib.exponents == std::vector<int>{7});
  CHECK_THROWS_AS(fib_type_match(r, 1), MathError);

  CHECK_THROWS_AS(simple_current_extension(a8, {8}), std::invalid_argument);
  CHECK_THROWS_AS(simple_current_extension(a8, {0, 2}), std::invalid_argument);
  CHECK_FALSE(simple_current_extension(affine_a1(2), {0, 2}).currents_integral);
}

TEST_CASE("G2,1 as an extension of A1,3 x A1,1") {
  const VoaModel base = model_product(affine_a1(3), affine_a1(1));
  CHECK(base.c == Rational(14, 5));
  const auto J = base.index("3⊠1");
  CHECK(base.weights[J] == 1);
  const ExtensionReport r = simple_current_extension(base, {0, J});
  CHECK(r.currents_integral);
  CHECK(r.orbits.size() == 4);
  std::vector<std::vector<std::size_t>> local;
  for (const auto& o : r.orbits)
    if (o.local) local.push_back(o.members);
  CHECK(local == std::vector<std::vector<std::size_t>>{{base.index("0⊠0"), J}, {base.index("1⊠1"), base.index("2⊠0")}});
  CHECK(r.local_spectrum == std::vector<Rational>{0, Rational(2, 5)});
  CHECK(fib_type_match(r, 1).exponents == std::vector<int>{3});
}

TEST_CASE("Fibonacci-type identification") {
  CHECK(fib_type_match(catalog_model("m25")).exponents == std::vector<int>{1});
  CHECK(fib_type_match(catalog_model("g21")).exponents == std::vector<int>{3});
  CHECK(fib_type_match(catalog_model("f41")).exponents == std::vector<int>{7});
  CHECK(fib_type_match(catalog_model("m25")).ell == 1);
  CHECK_THROWS_WITH_AS(fib_type_match(catalog_model("m35")), "not Fibonacci type", MathError);
  CHECK_THROWS_AS(fib_type_match(catalog_model("a1_3")), MathError);
  // Yang-Lee squared is of Fib^2 type
  const VoaModel yl2 = model_product(minimal_model(2, 5), minimal_model(2, 5));
  CHECK(fib_type_match(yl2).exponents == std::vector<int>{1});
}

TEST_CASE("pointed categories") {
  const PointedData z2 = pointed_ops(QuadraticForm{{2}, {Cyclotomic(1), Cyclotomic::zeta(4, 1)}, {1, -1}});
  CHECK(z2.twists[1] == Cyclotomic::zeta(4, 3));
  CHECK(z2.sigma[1][1] == Cyclotomic(-1));
  CHECK(z2.nondegenerate);
  CHECK(z2.xi_squared == Cyclotomic::zeta(4, 3));
  CHECK(z2.central_charge_mod_4 == 3);

  const PointedData triv = pointed_ops(QuadraticForm{{}, {Cyclotomic(1)}, {1}});
  CHECK(triv.nondegenerate);
  CHECK(triv.twists.size() == 1);
  CHECK(triv.twists[0].is_one());

  const PointedData deg = pointed_ops(QuadraticForm{{2, 2}, std::vector<Cyclotomic>(4, Cyclotomic(1)), {1, 1, 1, 1}});
  CHECK_FALSE(deg.nondegenerate);
  CHECK(deg.kernel.size() == 4);

  // q(1) = ζ8 on Z/2 is not a quadratic form: σ(1,1)² ≠ σ(0,1)
  CHECK_THROWS_AS(pointed_ops(QuadraticForm{{2}, {Cyclotomic(1), Cyclotomic::zeta(8, 1)}, {1, 1}}), MathError);
  CHECK_THROWS_AS(pointed_ops(QuadraticForm{{3}, {Cyclotomic(1), Cyclotomic::zeta(3, 1), Cyclotomic(1)}, {1, 1, 1}}),
                  MathError);
  CHECK_THROWS_AS(pointed_ops(QuadraticForm{{2}, {Cyclotomic(1), Cyclotomic(-1)}, {-1, 1}}), MathError);

  // Z/3 with q(a) = ζ3^{a²}
  const PointedData z3 = pointed_ops(
      QuadraticForm{{3}, {Cyclotomic(1), Cyclotomic::zeta(3, 1), Cyclotomic::zeta(3, 1)}, {1, 1, 1}});
  CHECK(z3.nondegenerate);
}

TEST_CASE("M(3,5) factorization") {
  const M35Report r = m35_factorization();
  CHECK(r.fusion_isomorphic);
  CHECK(r.pointed_twist_congruence);
  CHECK(r.product_twist_congruence);
  CHECK(r.fib_weight_congruence);
  CHECK(r.fib_exponents == std::vector<int>{9});
  CHECK(r.c_pointed_mod_4 == 3);
  CHECK(frac(r.c_fib / 4) == frac(Rational(2, 5) / 4));
}

TEST_CASE("catalog") {
  for (const auto& c : catalog_checks()) {
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK(c.holds);
  }
  CHECK(catalog_checks().size() == 15);
  CHECK(catalog_model("m310").c == Rational(-44, 5));
  CHECK(catalog_model("e81").c == 8);
  CHECK(catalog_model("a1_8").fusion.rank() == 9);
  CHECK_THROWS_AS(catalog_model("a1_x"), std::invalid_argument);
  CHECK_THROWS_AS(catalog_model("nope"), std::invalid_argument);
  for (const char* n : {"m25", "m35", "m310", "g21", "f41", "e81", "a1_5"}) CHECK(verify_axioms(catalog_model(n).fusion).empty());
}
