#include <cmath>
#include <random>

#include "doctest.h"
#include "fibkit/cyclo.hpp"

using fibkit::Cyclotomic;
using fibkit::Rational;

namespace {

Cyclotomic random_element(std::mt19937& rng, long order) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  std::vector<Rational> c(fibkit::euler_phi(order));
  for (auto& x : c) x = Rational(num(rng), den(rng));
  return Cyclotomic::from_coeffs(order, c);
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(fibkit::cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
  CHECK(fibkit::cyclotomic_polynomial(5) == std::vector<long>{1, 1, 1, 1, 1});
  CHECK(fibkit::cyclotomic_polynomial(10) == std::vector<long>{1, -1, 1, -1, 1});
  CHECK(fibkit::cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
  CHECK(fibkit::cyclotomic_polynomial(60).size() == 17);
  CHECK(fibkit::euler_phi(60) == 16);
}

TEST_CASE("zeta relations") {
  const Cyclotomic i = Cyclotomic::zeta(4, 1);
  CHECK(i * i == Cyclotomic(-1));

  const Cyclotomic s = Cyclotomic::zeta(5, 1) + Cyclotomic::zeta(5, 2) + Cyclotomic::zeta(5, 3) + Cyclotomic::zeta(5, 4);
  CHECK(s == Cyclotomic(-1));

  const Cyclotomic u = Cyclotomic::zeta(10, 1);
  CHECK((u.pow(4) - u.pow(3) + u.pow(2) - u + Cyclotomic(1)).is_zero());

  CHECK(Cyclotomic::zeta(7, 0).is_one());
  CHECK(Cyclotomic::zeta(60, 6) == Cyclotomic::zeta(10, 1));
  CHECK(Cyclotomic::zeta(10, -1) == Cyclotomic::zeta(10, 9));
}

TEST_CASE("field operations") {
  CHECK(Cyclotomic::zeta(10, 1).inverse() == Cyclotomic::zeta(10, 9));
  CHECK(Cyclotomic::zeta(10, 3).conj() == Cyclotomic::zeta(10, 7));

  const Cyclotomic x = Cyclotomic(1) - Cyclotomic::zeta(5, 1);
  CHECK((x.inverse() * x).is_one());
  // (1 - ζ5)⁻¹ = (4 + 3ζ + 2ζ² + ζ³)/5, from Euclid on Φ5 by hand.
  CHECK(x.inverse() == Cyclotomic::from_coeffs(5, {Rational(4, 5), Rational(3, 5), Rational(2, 5), Rational(1, 5)}));

  CHECK_THROWS_WITH_AS(Cyclotomic(0, 12).inverse(), "division by zero", fibkit::MathError);
}

TEST_CASE("approximation under the standard embedding") {
  auto z = Cyclotomic::zeta(10, 1).approx();
  CHECK(z.real() == doctest::Approx(std::cos(M_PI / 5)));
  CHECK(z.imag() == doctest::Approx(std::sin(M_PI / 5)));
  auto phi = (Cyclotomic::zeta(10, 1) + Cyclotomic::zeta(10, 9)).approx();
  CHECK(phi.real() == doctest::Approx(1.6180339887));
  CHECK(std::abs(phi.imag()) < 1e-12);
  CHECK(Cyclotomic().approx() == std::complex<double>(0.0, 0.0));
}

TEST_CASE("sqrt_fib_dim") {
  for (long m : {1L, 3L, 7L, 9L}) {
    const Cyclotomic u = Cyclotomic::zeta(10, m);
    const Cyclotomic a = u + u.inverse();
    const Cyclotomic y = fibkit::sqrt_fib_dim(u);
    CHECK(y * y == Cyclotomic(3) - a);
    CHECK((y * y).conj() == y * y);
    CHECK(y.approx().real() > 0);
    CHECK(std::abs(y.approx().imag()) < 1e-12);
  }
  CHECK(fibkit::sqrt_fib_dim(Cyclotomic::zeta(10, 3)).approx().real() == doctest::Approx(std::sqrt(2 + 1.6180339887)));
  CHECK(fibkit::sqrt_fib_dim(Cyclotomic::zeta(10, 1)).approx().real() == doctest::Approx(std::sqrt(3 - 1.6180339887)));
  CHECK_THROWS_AS(fibkit::sqrt_fib_dim(Cyclotomic::zeta(10, 2)), fibkit::MathError);
  CHECK_THROWS_AS(fibkit::sqrt_fib_dim(Cyclotomic::zeta(5, 1)), fibkit::MathError);
}

TEST_CASE("gauss sum square root") {
  const Cyclotomic s5 = fibkit::gauss_sqrt(5);
  CHECK(s5 * s5 == Cyclotomic(5));
  CHECK(fibkit::gauss_sqrt(13) * fibkit::gauss_sqrt(13) == Cyclotomic(13));
}

TEST_CASE("embedding and restriction") {
  const Cyclotomic x = Cyclotomic::zeta(10, 3) * Cyclotomic(Rational(2, 3)) + Cyclotomic(1);
  const Cyclotomic up = x.embed(60);
  CHECK(up.order() == 60);
  CHECK(up == x);
  auto back = up.restrict_to(10);
  REQUIRE(back.has_value());
  CHECK(back->order() == 10);
  CHECK(back->coeffs() == x.coeffs());
  CHECK_FALSE(Cyclotomic::zeta(4, 1).embed(20).restrict_to(5).has_value());
  CHECK(Cyclotomic(Rational(7, 2), 60).minimal().order() == 1);
}

TEST_CASE("root of unity helpers") {
  CHECK(Cyclotomic::root_of_unity(Rational(3, 4)) == Cyclotomic::zeta(4, 3));
  CHECK(Cyclotomic::root_of_unity(Rational(-1, 5)) == Cyclotomic::zeta(5, 4));
  CHECK(Cyclotomic::root_of_unity(Rational(2)).is_one());
  CHECK(fibkit::root_of_unity_exponent(Cyclotomic::zeta(60, 17), 60) == 17);
  CHECK(fibkit::root_of_unity_exponent(Cyclotomic(2), 60) == -1);
  CHECK(fibkit::frac(Rational(-1, 5)) == Rational(4, 5));
  CHECK(fibkit::frac(Rational(7, 5)) == Rational(2, 5));
}

TEST_CASE("field axioms on random elements of Q(zeta_60)") {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 40; ++trial) {
    const Cyclotomic a = random_element(rng, 60);
    const Cyclotomic b = random_element(rng, 60);
    const Cyclotomic c = random_element(rng, 60);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a + b) - b == a);
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    CHECK((a * b).conj() == a.conj() * b.conj());
  }
}

TEST_CASE("mixed orders embed into the lcm") {
  const Cyclotomic s = Cyclotomic::zeta(4, 1) + Cyclotomic::zeta(10, 1);
  CHECK(s.order() == 20);
  CHECK(s - Cyclotomic::zeta(10, 1) == Cyclotomic::zeta(4, 1));
}
