#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "fibkit/cyclo.hpp"
#include "fibkit/fusion.hpp"

namespace fibkit {

/// Fusion-level data of a rational VOA: central charge, the conformal weight
/// of each irreducible module, and the fusion ring on those modules (same
/// index order as `weights`).
struct VoaModel {
  std::string name;
  Rational c;
  std::vector<Rational> weights;
  FusionRing fusion;

  std::size_t index(const std::string& label) const { return fusion.index_of(label); }
  const Rational& weight(const std::string& label) const { return weights.at(index(label)); }
};

/// Tensor product of VOAs: Deligne product of fusion rings, additive c and h.
VoaModel model_product(const VoaModel& a, const VoaModel& b);

// ---------------------------------------------------------------- minimal models

Rational minimal_central_charge(int p, int q);
Rational minimal_weight(int p, int q, int r, int s);
/// Representative of (r,s) ~ (p−r, q−s) with r minimal, then s minimal.
std::pair<int, int> kac_canonical(int p, int q, int r, int s);
/// M(p,q) with labels "(r,s)" in lexicographic order of canonical pairs.
/// Throws std::invalid_argument unless 1 < p < q and gcd(p,q) = 1.
VoaModel minimal_model(int p, int q);

// ---------------------------------------------------------------- affine A1

/// A1 at level k, labels "0".."k" (twice the spin).
VoaModel affine_a1(int k);

struct SimpleLie {
  std::string name;
  int dimension;
  int dual_coxeter;
};

const std::vector<SimpleLie>& lie_catalog();
/// Throws std::invalid_argument("unknown algebra ...").
const SimpleLie& lie_entry(const std::string& name);
/// k·dim g / (k + h∨).
Rational affine_central_charge(const std::string& name, int k);

// ---------------------------------------------------------------- simple currents

/// h_J + h_M − h_{J·M} mod 1. Throws MathError if J is not invertible.
Rational monodromy_charge(const VoaModel& model, std::size_t J, std::size_t M);

struct ExtensionOrbit {
  std::vector<std::size_t> members;
  bool local = false;
  /// dim Hom(M, A·M) = Σ_{s∈S} N(s, M, M) for a representative M.
  int endomorphisms = 1;
  /// Conformal weight of the representative mod 1.
  Rational weight_mod_1;
};

struct ExtensionReport {
  std::string model;
  std::vector<std::size_t> currents;
  /// Every current has integer conformal weight.
  bool currents_integral = false;
  Rational c;
  std::vector<ExtensionOrbit> orbits;
  /// Weights mod 1 of the local modules, each orbit repeated `endomorphisms`
  /// times, sorted.
  std::vector<Rational> local_spectrum;
};

/// Orbits of the group S of simple currents on the labels, with locality and
/// splitting data. Throws std::invalid_argument if S is not a group of
/// invertible labels under fusion.
ExtensionReport simple_current_extension(const VoaModel& model, const std::vector<std::size_t>& currents);

// ---------------------------------------------------------------- Fibonacci type

struct FibTypeMatch {
  int ell = 0;
  std::vector<int> exponents;
};

/// For a model whose fusion ring is isomorphic to fib_power(ℓ). Throws
/// MathError("not Fibonacci type") otherwise.
FibTypeMatch fib_type_match(const VoaModel& model);
/// For the local part of an extension with 2^ℓ local modules.
FibTypeMatch fib_type_match(const ExtensionReport& extension, int ell);

// ---------------------------------------------------------------- pointed categories

/// A quadratic form on a finite abelian group, elements in group_ring order.
struct QuadraticForm {
  std::vector<int> orders;
  std::vector<Cyclotomic> q;
  std::vector<int> d;
};

struct PointedData {
  std::vector<std::vector<Cyclotomic>> sigma;
  std::vector<std::size_t> kernel;
  bool nondegenerate = false;
  std::vector<Cyclotomic> twists;
  Cyclotomic tau_plus;
  Cyclotomic tau_minus;
  Cyclotomic xi_squared;
  /// c mod 4 read from ξ² = e^{πic/2}, in [0, 4).
  Rational central_charge_mod_4;
};

/// Throws MathError if q is not even, σ is not bilinear or d is not a
/// homomorphism to ±1.
PointedData pointed_ops(const QuadraticForm& form);

// ---------------------------------------------------------------- M(3,5)

struct M35Report {
  /// M(3,5) label -> label of Fib ⊠ Z/2.
  std::vector<std::pair<std::string, std::string>> label_map;
  bool fusion_isomorphic = false;
  /// h_z ≡ −m/5 for the Fibonacci factor exponent.
  bool fib_weight_congruence = false;
  /// e^{2πi h_x} equals the pointed twist θ(1) = −i.
  bool pointed_twist_congruence = false;
  /// h_y ≡ h_z + h_x.
  bool product_twist_congruence = false;
  Rational c_pointed_mod_4;
  Rational c_fib;
  std::vector<int> fib_exponents;
};

M35Report m35_factorization();

// ---------------------------------------------------------------- catalog

/// Named models: m25, m35, m310, g21, f41, e81, a1_<k>.
VoaModel catalog_model(const std::string& name);
std::vector<std::string> catalog_names();

struct CatalogCheck {
  std::string name;
  std::string detail;
  bool holds = false;
};

/// Central-charge bookkeeping of the conformal embeddings and cosets, and
/// the weight congruences of the A1,28 decomposition.
std::vector<CatalogCheck> catalog_checks();

}  // namespace fibkit
