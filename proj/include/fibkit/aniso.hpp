#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fibkit/cyclo.hpp"
#include "fibkit/nim.hpp"

namespace fibkit {

/// f_0 = 0, f_1 = 1, f_s = f_{s-1} + f_{s-2}.
long fib_number(int s);

/// An element of Z≥0[Fib^ℓ]; coeffs[mask] is the coefficient of the
/// square-free monomial with that bitmask (x1 = bit 0), as in fib_power.
struct AlgebraClass {
  int ell = 0;
  std::vector<long> coeffs;

  bool is_trivial() const;
  /// "1 + x1x2 + 2*x1x2x3"
  std::string to_string() const;
  friend bool operator==(const AlgebraClass&, const AlgebraClass&) = default;
};

/// u_i = ζ10^{m_i}, m_i in {1, 3, 7, 9}.
using TwistParams = std::vector<int>;

/// Throws std::invalid_argument unless every entry is coprime to 10.
void check_params(const TwistParams& params);
TwistParams parse_params(const std::string& text);

/// Product over parts P of 1 + Σ_{s≥1} f_{s-1}·(degree-s monomials in P).
AlgebraClass candidate_class(int ell, const SetPartition& partition);
/// Product over parts P of Σ_{s≥1} f_s·(degree-s monomials in P).
AlgebraClass companion_class(int ell, const SetPartition& partition);

/// Σ_ε coeff(ε)·d^{|ε|}.
Cyclotomic class_dimension(const AlgebraClass& cls, const Cyclotomic& d);

/// For a single part of size k and d a root of d² = d + 1:
/// dim candidate = (1 + d²)^{k-1} and dim companion = d·(1 + d²)^{k-1}.
bool dimension_identity(int k, const Cyclotomic& d);

/// Π_{i in ε} ζ10^{-2 m_i}.
Cyclotomic monomial_twist(unsigned mask, const TwistParams& params);

struct RibbonCheck {
  bool ribbon = true;
  /// First monomial (in mask order) with nonzero coefficient and twist ≠ 1.
  std::optional<unsigned> witness;
};

RibbonCheck is_ribbon_class(const AlgebraClass& cls, const TwistParams& params);

struct ScanEntry {
  SetPartition partition;
  AlgebraClass cls;
  RibbonCheck check;
};

struct ScanReport {
  TwistParams params;
  /// One entry per set partition, in all_partitions order.
  std::vector<ScanEntry> entries;

  std::vector<const ScanEntry*> ribbon_candidates() const;
  /// Ribbon candidates other than the trivial class.
  std::vector<const ScanEntry*> nontrivial_ribbon() const;
};

/// Ribbon test of every candidate class; ℓ = params.size() ≤ 6.
ScanReport scan_partitions(const TwistParams& params, int jobs = 1);

}  // namespace fibkit
