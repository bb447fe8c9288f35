#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace fibkit {

using Rational = mpq_class;

/// Raised for arithmetic that has no answer (inverse of zero, bad root of unity, ...).
class MathError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

long euler_phi(long n);

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<long>& cyclotomic_polynomial(long n);

/// An exact element of Q(ζ_n).
///
/// The value is stored as the residue of a rational polynomial in ζ_n modulo
/// Φ_n, so `coeffs().size() == euler_phi(order())` and two values of the same
/// order are equal exactly when their coefficient vectors are. Binary
/// operations on values of different orders first embed both into
/// Q(ζ_lcm). Values are immutable once built.
class Cyclotomic {
 public:
  /// Zero in Q(ζ_1) = Q.
  Cyclotomic();
  Cyclotomic(long value);  // NOLINT(google-explicit-constructor)
  Cyclotomic(Rational value, long order = 1);  // NOLINT(google-explicit-constructor)

  /// Builds from an already-reduced coefficient vector.
  static Cyclotomic from_coeffs(long order, std::vector<Rational> coeffs);

  /// ζ_n^k.
  static Cyclotomic zeta(long n, long k = 1);

  /// e^{2πi t} for rational t, living in Q(ζ_den(t)).
  static Cyclotomic root_of_unity(const Rational& turns);

  long order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Rational value; throws if the element is not rational.
  Rational to_rational() const;

  /// Same value viewed in Q(ζ_target); target must be a multiple of order().
  Cyclotomic embed(long target) const;

  /// The same value in Q(ζ_target) if it lies in that subfield; target must
  /// divide order().
  std::optional<Cyclotomic> restrict_to(long target) const;
  /// The value in its smallest field Q(ζ_d), d | order().
  Cyclotomic minimal() const;

  /// Galois automorphism ζ ↦ ζ^k, gcd(k, n) = 1.
  Cyclotomic galois(long k) const;
  /// Complex conjugation, ζ ↦ ζ^{-1}.
  Cyclotomic conj() const;
  Cyclotomic inverse() const;
  Cyclotomic pow(long e) const;

  /// Value under ζ_n ↦ e^{2πi/n}. Display and sign choices only.
  std::complex<double> approx() const;

  std::string to_string() const;

  friend Cyclotomic operator+(const Cyclotomic& x, const Cyclotomic& y);
  friend Cyclotomic operator-(const Cyclotomic& x, const Cyclotomic& y);
  friend Cyclotomic operator*(const Cyclotomic& x, const Cyclotomic& y);
  friend Cyclotomic operator/(const Cyclotomic& x, const Cyclotomic& y);
  friend Cyclotomic operator-(const Cyclotomic& x);
  friend bool operator==(const Cyclotomic& x, const Cyclotomic& y);

  Cyclotomic& operator+=(const Cyclotomic& y) { return *this = *this + y; }
  Cyclotomic& operator-=(const Cyclotomic& y) { return *this = *this - y; }
  Cyclotomic& operator*=(const Cyclotomic& y) { return *this = *this * y; }

 private:
  long order_;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x);

/// If x = ζ_n^k for some k in [0, n), returns k; otherwise -1.
long root_of_unity_exponent(const Cyclotomic& x, long n);

/// √p in Q(ζ_p) for a prime p ≡ 1 (mod 4), as the quadratic Gauss sum.
Cyclotomic gauss_sqrt(long p);

/// √(3 − a) for a = u + u⁻¹, as ε·i·(u − u⁻¹) with ε making the value
/// positive under the standard embedding. u must be a primitive 10th root of
/// unity.
Cyclotomic sqrt_fib_dim(const Cyclotomic& u);

/// n/d in lowest terms (mpq_class does not canonicalize on construction).
Rational ratio(long n, long d);

/// Reduces a rational to its representative in [0, 1).
Rational frac(const Rational& q);

}  // namespace fibkit
