#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fibkit/fusion.hpp"

namespace fibkit {

using IntMatrix = std::vector<std::vector<int>>;

/// A NIM-representation: the ring acts on the span of `basis` by non-negative
/// integer matrices. `action[r][n][m]` is the multiplicity of node n in r·m,
/// so matrices compose as X_r X_s = Σ_t N(r,s,t) X_t.
struct NimRep {
  FusionRing ring;
  std::string ring_name;
  std::vector<std::string> basis;
  std::vector<IntMatrix> action;

  std::size_t rank() const { return basis.size(); }
  const IntMatrix& matrix(std::size_t r) const { return action.at(r); }
};

/// A set partition of {1..ell} in canonical form: parts sorted internally and
/// ordered by least element.
struct SetPartition {
  int ell = 0;
  std::vector<std::vector<int>> parts;

  /// Validates and canonicalizes; throws std::invalid_argument if `parts` is
  /// not a partition of {1..ell}.
  static SetPartition make(int ell, std::vector<std::vector<int>> parts);
  /// Parses "1,2|3" (parts separated by '|').
  static SetPartition parse(int ell, const std::string& text);

  std::string to_string() const;
  friend bool operator==(const SetPartition&, const SetPartition&) = default;
};

/// All set partitions of {1..ell}, in lexicographic order of restricted
/// growth strings.
std::vector<SetPartition> all_partitions(int ell);
long bell_number(int n);

/// Exhaustive check of the unit, module-law and rigidity conditions.
std::vector<std::string> verify(const NimRep& rep);

/// The ring acting on itself.
NimRep regular_rep(const FusionRing& ring, const std::string& ring_name);

NimRep disjoint_union(const NimRep& a, const NimRep& b);
/// Relabels nodes: node i of `rep` becomes node perm[i].
NimRep permute(const NimRep& rep, const std::vector<std::size_t>& perm);

/// Connected components of the union of all action supports, ordered by their
/// smallest node.
std::vector<NimRep> decompose_connected(const NimRep& rep);

/// Number of colours ℓ of a rep of fib_power(ℓ); throws otherwise.
int fib_colours(const NimRep& rep);

/// Γ(m)_i = (x_i·m, m). Throws MathError("not a Fib NIM-rep") on entries > 1.
std::vector<int> gamma(const NimRep& rep, std::size_t node);
/// Every edge joins nodes with comparable Γ values.
bool gamma_monotone(const NimRep& rep);
/// Some node has Γ = 0.
bool has_minimal_node(const NimRep& rep);

/// Fib^λ: the tensor product over parts of the rank-2 rep where every x_i in
/// the part acts by [[0,1],[1,1]]. Node names spell m/n per part.
NimRep from_partition(int ell, const SetPartition& partition);

/// One indecomposable rep per set partition, in all_partitions order.
std::vector<NimRep> classify(int ell);

/// Invariant of the isomorphism class: the lexicographically least encoding
/// over node orders compatible with sorted per-node invariants.
std::vector<int> canonical_form(const NimRep& rep);
bool isomorphic(const NimRep& a, const NimRep& b);

struct BruteOptions {
  /// Bound on matrix entries for generators whose square is not in span{1, r}.
  int entry_bound = 2;
  int jobs = 1;
};

/// Independent enumeration of all indecomposable NIM-reps of rank <=
/// max_rank, up to isomorphism, sorted by (rank, canonical form). The ring
/// must be self-dual elementwise.
std::vector<NimRep> brute_enumerate(const FusionRing& ring, const std::string& ring_name, int max_rank,
                                    const BruteOptions& options = {});

/// Graphviz text; colour i is drawn in a fixed style (see dot_style).
std::string to_dot(const NimRep& rep);
/// Style attributes for colour i (1-based): solid, dashed, dotted, bold, ...
std::string dot_style(int colour);

}  // namespace fibkit
