#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace fibkit {

/// A fusion rule: a finite basis whose integer span is a unital ring with
/// non-negative structure constants and a duality involution.
///
/// Structure constants are dense: `N(i, j, k)` is the multiplicity of basis
/// element k in i·j.
class FusionRing {
 public:
  FusionRing() = default;
  FusionRing(std::vector<std::string> labels, std::size_t unit, std::vector<std::size_t> dual,
             std::vector<int> structure);

  std::size_t rank() const { return labels_.size(); }
  std::size_t unit() const { return unit_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::size_t dual(std::size_t i) const { return dual_.at(i); }
  const std::vector<std::size_t>& duals() const { return dual_; }
  const std::vector<int>& structure() const { return n_; }

  int N(std::size_t i, std::size_t j, std::size_t k) const { return n_[(i * rank() + j) * rank() + k]; }
  void set_N(std::size_t i, std::size_t j, std::size_t k, int value) { n_[(i * rank() + j) * rank() + k] = value; }

  /// Coefficient vector of i·j.
  std::vector<int> product(std::size_t i, std::size_t j) const;
  /// Product of two elements of the integer span, given as coefficient vectors.
  std::vector<int> multiply(const std::vector<int>& x, const std::vector<int>& y) const;

  /// Index of a label; throws std::out_of_range if absent.
  std::size_t index_of(const std::string& label) const;

  /// True when i·j is a single basis element for every j.
  bool is_invertible(std::size_t i) const;

  friend bool operator==(const FusionRing&, const FusionRing&) = default;

 private:
  std::vector<std::string> labels_;
  std::size_t unit_ = 0;
  std::vector<std::size_t> dual_;
  std::vector<int> n_;
};

/// Every failed axiom instance, as readable text such as
/// "associativity (x,x,x,x): 5 != 3". Empty means the ring is valid.
std::vector<std::string> verify_axioms(const FusionRing& ring);

/// {1, x} with x² = 1 + x.
FusionRing fib_rule();

/// Labels are "a⊠b"; basis order is lexicographic in (R-index, S-index).
FusionRing deligne_product(const FusionRing& r, const FusionRing& s);

/// Fib^ℓ. Basis element with index e is the monomial Π x_i^{bit i-1 of e},
/// so the order is binary counting with x1 as the lowest bit. For ℓ = 1 this
/// is fib_rule().
FusionRing fib_power(int ell);

/// Label of the square-free monomial with the given bitmask: "1", "x1x3", ...
std::string monomial_label(unsigned mask);

/// Group ring of Z/n1 × Z/n2 × ..., elements in mixed-radix order (first factor
/// slowest), labels "(a,b,...)" or just "a" for a single factor.
FusionRing group_ring(const std::vector<int>& cyclic_orders);

/// A label bijection that maps r's structure constants onto s's, with units
/// matched; empty if the rings are not isomorphic. Brute force, rank <= 9.
std::vector<std::size_t> find_isomorphism(const FusionRing& r, const FusionRing& s);

}  // namespace fibkit
