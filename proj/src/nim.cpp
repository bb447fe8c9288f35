#include "fibkit/nim.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "fibkit/cyclo.hpp"

namespace fibkit {

namespace {

IntMatrix zeros(std::size_t n) { return IntMatrix(n, std::vector<int>(n, 0)); }

IntMatrix identity(std::size_t n) {
  IntMatrix m = zeros(n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix c = zeros(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

IntMatrix transpose(const IntMatrix& a) {
  const std::size_t n = a.size();
  IntMatrix t = zeros(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[j][i] = a[i][j];
  return t;
}

// Σ_t N(r,s,t) X_t; nullopt if some needed X_t is missing.
std::optional<IntMatrix> combination(const FusionRing& ring, std::size_t r, std::size_t s,
                                     const std::vector<std::optional<IntMatrix>>& xs, std::size_t n) {
  IntMatrix out = zeros(n);
  for (std::size_t t = 0; t < ring.rank(); ++t) {
    const int c = ring.N(r, s, t);
    if (c == 0) continue;
    if (!xs[t]) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out[i][j] += c * (*xs[t])[i][j];
  }
  return out;
}

struct Canonical {
  std::vector<int> code;
  std::vector<std::size_t> perm;  // old node -> new node
};

// Least encoding of the matrices over node orders that sort the per-node
// invariants (diagonals and column sums of every matrix).
Canonical canonicalize(const std::vector<IntMatrix>& mats, std::size_t n) {
  std::vector<std::vector<int>> inv(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (const auto& m : mats) {
      int col = 0;
      for (std::size_t u = 0; u < n; ++u) col += m[u][v];
      inv[v].push_back(m[v][v]);
      inv[v].push_back(col);
    }
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return inv[a] < inv[b]; });
  std::vector<std::pair<std::size_t, std::size_t>> cells;  // [begin, end) in order
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i + 1;
    while (j < n && inv[order[j]] == inv[order[i]]) ++j;
    cells.emplace_back(i, j);
    i = j;
  }
  for (auto [b, e] : cells) std::sort(order.begin() + b, order.begin() + e);

  Canonical best;
  std::vector<int> code;
  std::function<void(std::size_t)> rec = [&](std::size_t ci) {
    if (ci == cells.size()) {
      // order[newpos] = old node
      code.clear();
      code.push_back(static_cast<int>(n));
      for (const auto& m : mats)
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) code.push_back(m[order[a]][order[b]]);
      if (best.code.empty() || code < best.code) {
        best.code = code;
        best.perm.assign(n, 0);
        for (std::size_t p = 0; p < n; ++p) best.perm[order[p]] = p;
      }
      return;
    }
    auto [b, e] = cells[ci];
    std::sort(order.begin() + b, order.begin() + e);
    do {
      rec(ci + 1);
    } while (std::next_permutation(order.begin() + b, order.begin() + e));
  };
  rec(0);
  if (n == 0) best.code = {0};
  return best;
}

bool connected(const std::vector<IntMatrix>& mats, std::size_t n) {
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (const auto& m : mats)
      for (std::size_t u = 0; u < n; ++u)
        if ((m[u][v] != 0 || m[v][u] != 0) && !seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

}  // namespace

// ---------------------------------------------------------------- partitions

SetPartition SetPartition::make(int ell, std::vector<std::vector<int>> parts) {
  if (ell < 1) throw std::invalid_argument("set partition: ell must be >= 1");
  std::vector<int> seen(ell + 1, 0);
  for (auto& p : parts) {
    if (p.empty()) throw std::invalid_argument("set partition: empty part");
    std::sort(p.begin(), p.end());
    for (int i : p) {
      if (i < 1 || i > ell) throw std::invalid_argument("set partition: element out of range");
      if (seen[i]++) throw std::invalid_argument("set partition: parts overlap");
    }
  }
  for (int i = 1; i <= ell; ++i) {
    if (!seen[i]) throw std::invalid_argument("set partition: parts do not cover 1.." + std::to_string(ell));
  }
  std::sort(parts.begin(), parts.end());
  return SetPartition{ell, std::move(parts)};
}

SetPartition SetPartition::parse(int ell, const std::string& text) {
  std::vector<std::vector<int>> parts;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, '|')) {
    std::vector<int> p;
    std::stringstream ps(part);
    std::string item;
    while (std::getline(ps, item, ',')) {
      if (item.empty()) continue;
      try {
        p.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw std::invalid_argument("set partition: bad element '" + item + "'");
      }
    }
    parts.push_back(std::move(p));
  }
  return make(ell, std::move(parts));
}

std::string SetPartition::to_string() const {
  std::string out = "{";
  for (std::size_t p = 0; p < parts.size(); ++p) {
    out += p ? ",{" : "{";
    for (std::size_t i = 0; i < parts[p].size(); ++i) out += (i ? "," : "") + std::to_string(parts[p][i]);
    out += "}";
  }
  return out + "}";
}

std::vector<SetPartition> all_partitions(int ell) {
  if (ell < 1) throw std::invalid_argument("all_partitions: ell must be >= 1");
  std::vector<SetPartition> out;
  std::vector<int> rgs(ell, 0);
  std::function<void(int, int)> rec = [&](int pos, int maxv) {
    if (pos == ell) {
      std::vector<std::vector<int>> parts(maxv + 1);
      for (int i = 0; i < ell; ++i) parts[rgs[i]].push_back(i + 1);
      out.push_back(SetPartition::make(ell, std::move(parts)));
      return;
    }
    for (int v = 0; v <= maxv + 1; ++v) {
      rgs[pos] = v;
      rec(pos + 1, std::max(maxv, v));
    }
  };
  rgs[0] = 0;
  rec(1, 0);
  return out;
}

long bell_number(int n) {
  // Bell triangle
  std::vector<long> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<long> next{row.back()};
    for (long v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

// ---------------------------------------------------------------- reps

std::vector<std::string> verify(const NimRep& rep) {
  std::vector<std::string> bad;
  const FusionRing& ring = rep.ring;
  const std::size_t n = rep.rank();
  if (rep.action.size() != ring.rank()) return {"shape: one matrix per ring basis element required"};
  for (std::size_t r = 0; r < ring.rank(); ++r) {
    if (rep.action[r].size() != n) return {"shape: matrix for " + ring.label(r) + " has wrong size"};
    for (const auto& row : rep.action[r]) {
      if (row.size() != n) return {"shape: matrix for " + ring.label(r) + " is not square"};
      for (int v : row)
        if (v < 0) bad.push_back("non-negativity (" + ring.label(r) + ")");
    }
  }
  if (rep.action[ring.unit()] != identity(n)) bad.push_back("unit acts by a non-identity matrix");
  std::vector<std::optional<IntMatrix>> xs(rep.action.begin(), rep.action.end());
  for (std::size_t r = 0; r < ring.rank(); ++r) {
    for (std::size_t s = 0; s < ring.rank(); ++s) {
      if (mul(rep.action[r], rep.action[s]) != *combination(ring, r, s, xs, n)) {
        bad.push_back("module law (" + ring.label(r) + "," + ring.label(s) + ")");
      }
    }
    if (rep.action[ring.dual(r)] != transpose(rep.action[r])) bad.push_back("rigidity (" + ring.label(r) + ")");
  }
  return bad;
}

NimRep regular_rep(const FusionRing& ring, const std::string& ring_name) {
  NimRep rep{ring, ring_name, ring.labels(), {}};
  const std::size_t n = ring.rank();
  for (std::size_t r = 0; r < n; ++r) {
    IntMatrix m = zeros(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) m[b][a] = ring.N(r, a, b);
    rep.action.push_back(std::move(m));
  }
  return rep;
}

NimRep disjoint_union(const NimRep& a, const NimRep& b) {
  if (!(a.ring == b.ring)) throw std::invalid_argument("disjoint_union: reps of different rings");
  NimRep out{a.ring, a.ring_name, a.basis, {}};
  const std::size_t na = a.rank();
  const std::size_t n = na + b.rank();
  for (const auto& name : b.basis) out.basis.push_back(name + "'");
  for (std::size_t r = 0; r < a.ring.rank(); ++r) {
    IntMatrix m = zeros(n);
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t j = 0; j < na; ++j) m[i][j] = a.action[r][i][j];
    for (std::size_t i = 0; i < b.rank(); ++i)
      for (std::size_t j = 0; j < b.rank(); ++j) m[na + i][na + j] = b.action[r][i][j];
    out.action.push_back(std::move(m));
  }
  return out;
}

NimRep permute(const NimRep& rep, const std::vector<std::size_t>& perm) {
  const std::size_t n = rep.rank();
  if (perm.size() != n) throw std::invalid_argument("permute: permutation has wrong length");
  NimRep out{rep.ring, rep.ring_name, std::vector<std::string>(n), {}};
  for (std::size_t i = 0; i < n; ++i) out.basis[perm[i]] = rep.basis[i];
  for (const auto& m : rep.action) {
    IntMatrix p = zeros(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) p[perm[i]][perm[j]] = m[i][j];
    out.action.push_back(std::move(p));
  }
  return out;
}

std::vector<NimRep> decompose_connected(const NimRep& rep) {
  const std::size_t n = rep.rank();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  for (const auto& m : rep.action)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (m[i][j] != 0) parent[find(i)] = find(j);
  std::map<std::size_t, std::vector<std::size_t>> by_root;
  std::vector<std::size_t> roots;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t r = find(v);
    if (!by_root.count(r)) roots.push_back(r);
    by_root[r].push_back(v);
  }
  std::vector<NimRep> out;
  for (std::size_t r : roots) {
    const auto& nodes = by_root[r];
    NimRep c{rep.ring, rep.ring_name, {}, {}};
    for (std::size_t v : nodes) c.basis.push_back(rep.basis[v]);
    for (const auto& m : rep.action) {
      IntMatrix sub = zeros(nodes.size());
      for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = 0; j < nodes.size(); ++j) sub[i][j] = m[nodes[i]][nodes[j]];
      c.action.push_back(std::move(sub));
    }
    out.push_back(std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------- Fib^ℓ

int fib_colours(const NimRep& rep) {
  const std::size_t r = rep.ring.rank();
  int ell = 0;
  while ((std::size_t{1} << ell) < r) ++ell;
  if ((std::size_t{1} << ell) != r || ell < 1 || !(rep.ring == fib_power(ell))) {
    throw std::invalid_argument("ring is not a Fibonacci power");
  }
  return ell;
}

std::vector<int> gamma(const NimRep& rep, std::size_t node) {
  const int ell = fib_colours(rep);
  std::vector<int> g(ell);
  for (int i = 0; i < ell; ++i) {
    const int d = rep.action[std::size_t{1} << i].at(node).at(node);
    if (d > 1) throw MathError("not a Fib NIM-rep");
    g[i] = d;
  }
  return g;
}

bool gamma_monotone(const NimRep& rep) {
  const int ell = fib_colours(rep);
  const std::size_t n = rep.rank();
  std::vector<std::vector<int>> g(n);
  for (std::size_t v = 0; v < n; ++v) g[v] = gamma(rep, v);
  auto leq = [&](const std::vector<int>& a, const std::vector<int>& b) {
    for (int i = 0; i < ell; ++i)
      if (a[i] > b[i]) return false;
    return true;
  };
  for (int i = 0; i < ell; ++i) {
    const IntMatrix& x = rep.action[std::size_t{1} << i];
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (a != b && x[a][b] != 0 && !leq(g[a], g[b]) && !leq(g[b], g[a])) return false;
  }
  return true;
}

bool has_minimal_node(const NimRep& rep) {
  for (std::size_t v = 0; v < rep.rank(); ++v) {
    const auto g = gamma(rep, v);
    if (std::all_of(g.begin(), g.end(), [](int d) { return d == 0; })) return true;
  }
  return false;
}

NimRep from_partition(int ell, const SetPartition& partition) {
  const SetPartition lam = SetPartition::make(ell, partition.parts);
  if (partition.ell != ell) throw std::invalid_argument("from_partition: partition is for a different ell");
  const std::size_t k = lam.parts.size();
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::size_t> part_of(ell + 1);
  for (std::size_t p = 0; p < k; ++p)
    for (int i : lam.parts[p]) part_of[i] = p;

  const FusionRing ring = fib_power(ell);
  NimRep rep{ring, "fib^" + std::to_string(ell), {}, {}};
  for (std::size_t b = 0; b < n; ++b) {
    std::string name;
    for (std::size_t p = 0; p < k; ++p) name += (b >> p) & 1 ? 'n' : 'm';
    rep.basis.push_back(name);
  }
  // generator x_i flips factor part_of[i]: m -> n, n -> m + n
  std::vector<IntMatrix> gens;
  for (int i = 1; i <= ell; ++i) {
    const std::size_t p = part_of[i];
    IntMatrix x = zeros(n);
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t flipped = b ^ (std::size_t{1} << p);
      x[flipped][b] = 1;
      if ((b >> p) & 1) x[b][b] = 1;
    }
    gens.push_back(std::move(x));
  }
  for (std::size_t mask = 0; mask < ring.rank(); ++mask) {
    IntMatrix m = identity(n);
    for (int i = 0; i < ell; ++i)
      if (mask & (std::size_t{1} << i)) m = mul(m, gens[i]);
    rep.action.push_back(std::move(m));
  }
  return rep;
}

std::vector<NimRep> classify(int ell) {
  std::vector<NimRep> out;
  for (const auto& p : all_partitions(ell)) out.push_back(from_partition(ell, p));
  return out;
}

std::vector<int> canonical_form(const NimRep& rep) { return canonicalize(rep.action, rep.rank()).code; }

bool isomorphic(const NimRep& a, const NimRep& b) {
  return a.ring == b.ring && a.rank() == b.rank() && canonical_form(a) == canonical_form(b);
}

// ---------------------------------------------------------------- oracle

namespace {

// Symmetric non-negative matrices for a self-dual basis element r. When
// r² = c0·1 + c1·r the row sums of squares are pinned to c0 + c1·X_ii and the
// square relation is checked in full; otherwise entries are bounded only.
std::vector<IntMatrix> generator_candidates(const FusionRing& ring, std::size_t r, std::size_t n, int entry_bound) {
  const std::size_t unit = ring.unit();
  const int c0 = ring.N(r, r, unit);
  const int c1 = ring.N(r, r, r);
  int others = 0;
  for (std::size_t t = 0; t < ring.rank(); ++t)
    if (t != unit && t != r) others += ring.N(r, r, t);
  const bool exact = others == 0;
  int dmax = entry_bound;
  int emax = entry_bound;
  if (exact) {
    dmax = 0;
    while ((dmax + 1) * (dmax + 1) <= c0 + c1 * (dmax + 1)) ++dmax;
    emax = 0;
    while ((emax + 1) * (emax + 1) <= c0 + c1 * dmax) ++emax;
  }

  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) cells.emplace_back(i, j);

  std::vector<IntMatrix> out;
  IntMatrix x = zeros(n);
  std::vector<int> row_sq(n, 0);
  auto cap = [&](std::size_t row, bool diag_known) { return c0 + c1 * (diag_known ? x[row][row] : dmax); };

  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == cells.size()) {
      if (exact) {
        IntMatrix sq = mul(x, x);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            if (sq[i][j] != (i == j ? c0 : 0) + c1 * x[i][j]) return;
      }
      out.push_back(x);
      return;
    }
    auto [i, j] = cells[idx];
    const int hi = i == j ? dmax : emax;
    for (int v = 0; v <= hi; ++v) {
      x[i][j] = x[j][i] = v;
      const int add = v * v;
      row_sq[i] += add;
      if (i != j) row_sq[j] += add;
      bool ok = true;
      if (exact) {
        ok = row_sq[i] <= cap(i, true) && (i == j || row_sq[j] <= cap(j, false));
        // row i is complete after its last cell
        if (ok && j == n - 1) ok = row_sq[i] == cap(i, true);
      }
      if (ok) rec(idx + 1);
      row_sq[i] -= add;
      if (i != j) row_sq[j] -= add;
    }
    x[i][j] = x[j][i] = 0;
  };
  rec(0);
  return out;
}

struct Plan {
  // For each non-unit element: forced by a product of two earlier elements,
  // or free (branch over candidates).
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> recipe;
  std::vector<std::size_t> free_elements;
};

Plan make_plan(const FusionRing& ring) {
  Plan plan;
  plan.recipe.resize(ring.rank());
  for (std::size_t t = 0; t < ring.rank(); ++t) {
    if (t == ring.unit()) continue;
    bool forced = false;
    for (std::size_t r = 0; r < t && !forced; ++r) {
      if (r == ring.unit()) continue;
      for (std::size_t s = 0; s < t && !forced; ++s) {
        if (s == ring.unit()) continue;
        bool single = true;
        for (std::size_t k = 0; k < ring.rank() && single; ++k) single = ring.N(r, s, k) == (k == t ? 1 : 0);
        if (single) {
          plan.recipe[t] = std::make_pair(r, s);
          forced = true;
        }
      }
    }
    if (!forced) plan.free_elements.push_back(t);
  }
  return plan;
}

class Search {
 public:
  Search(const FusionRing& ring, std::size_t n, const Plan& plan) : ring_(ring), n_(n), plan_(plan) {}

  // Checks every relation that became decidable when element t was assigned.
  bool consistent(const std::vector<std::optional<IntMatrix>>& xs, std::size_t t) const {
    if (xs[t] != transpose(*xs[t])) return false;
    for (std::size_t r = 0; r <= t; ++r) {
      if (!xs[r]) continue;
      for (std::size_t s = 0; s <= t; ++s) {
        if (!xs[s]) continue;
        std::size_t top = std::max(r, s);
        bool ready = true;
        for (std::size_t k = 0; k < ring_.rank(); ++k) {
          if (ring_.N(r, s, k) == 0) continue;
          if (!xs[k]) ready = false;
          top = std::max(top, k);
        }
        if (!ready || top != t) continue;
        if (mul(*xs[r], *xs[s]) != *combination(ring_, r, s, xs, n_)) return false;
      }
    }
    return true;
  }

  // Assigns elements t, t+1, ... and reports each complete assignment.
  void extend(std::vector<std::optional<IntMatrix>>& xs, std::size_t t,
              const std::vector<std::vector<IntMatrix>>& candidates,
              const std::function<void(const std::vector<std::optional<IntMatrix>>&)>& leaf) const {
    if (t == ring_.rank()) {
      leaf(xs);
      return;
    }
    if (t == ring_.unit()) {
      extend(xs, t + 1, candidates, leaf);
      return;
    }
    if (plan_.recipe[t]) {
      auto [r, s] = *plan_.recipe[t];
      xs[t] = mul(*xs[r], *xs[s]);
      if (consistent(xs, t)) extend(xs, t + 1, candidates, leaf);
      xs[t].reset();
      return;
    }
    for (const auto& c : candidates[t]) {
      xs[t] = c;
      if (consistent(xs, t)) extend(xs, t + 1, candidates, leaf);
    }
    xs[t].reset();
  }

 private:
  const FusionRing& ring_;
  std::size_t n_;
  const Plan& plan_;
};

}  // namespace

std::vector<NimRep> brute_enumerate(const FusionRing& ring, const std::string& ring_name, int max_rank,
                                    const BruteOptions& options) {
  if (max_rank < 1) throw std::invalid_argument("brute_enumerate: max_rank must be >= 1");
  if (max_rank > 8) throw std::invalid_argument("oracle limit");
  for (std::size_t i = 0; i < ring.rank(); ++i) {
    if (ring.dual(i) != i) throw std::invalid_argument("brute_enumerate: ring must be self-dual elementwise");
  }
  const Plan plan = make_plan(ring);
  std::map<std::pair<std::size_t, std::vector<int>>, NimRep> found;
  std::mutex found_mu;

  for (std::size_t n = 1; n <= static_cast<std::size_t>(max_rank); ++n) {
    std::vector<std::vector<IntMatrix>> candidates(ring.rank());
    bool empty = false;
    for (std::size_t t : plan.free_elements) {
      candidates[t] = generator_candidates(ring, t, n, options.entry_bound);
      if (candidates[t].empty()) empty = true;
    }
    if (empty) continue;

    // Every rep is isomorphic to one whose first free matrix is a canonical
    // orbit representative, so only those are used for the first element.
    std::vector<std::vector<IntMatrix>> seeded = candidates;
    if (!plan.free_elements.empty()) {
      const std::size_t f = plan.free_elements.front();
      std::map<std::vector<int>, IntMatrix> reps;
      for (const auto& x : candidates[f]) {
        Canonical c = canonicalize({x}, n);
        if (reps.count(c.code)) continue;
        IntMatrix p = zeros(n);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) p[c.perm[i]][c.perm[j]] = x[i][j];
        reps.emplace(c.code, std::move(p));
      }
      seeded[f].clear();
      for (auto& [code, m] : reps) seeded[f].push_back(m);
    }

    // Tasks split the tree at the first free element (and the second, if any).
    std::vector<std::pair<std::size_t, std::size_t>> tasks;
    const std::size_t f1 = plan.free_elements.empty() ? 0 : plan.free_elements[0];
    const bool two = plan.free_elements.size() > 1;
    const std::size_t f2 = two ? plan.free_elements[1] : 0;
    const std::size_t n1 = plan.free_elements.empty() ? 1 : seeded[f1].size();
    for (std::size_t a = 0; a < n1; ++a) {
      if (two)
        for (std::size_t b = 0; b < seeded[f2].size(); ++b) tasks.emplace_back(a, b);
      else
        tasks.emplace_back(a, 0);
    }

    const Search search(ring, n, plan);
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      std::map<std::pair<std::size_t, std::vector<int>>, NimRep> local;
      for (std::size_t k = next++; k < tasks.size(); k = next++) {
        auto task_candidates = seeded;
        if (!plan.free_elements.empty()) task_candidates[f1] = {seeded[f1][tasks[k].first]};
        if (two) task_candidates[f2] = {seeded[f2][tasks[k].second]};
        std::vector<std::optional<IntMatrix>> xs(ring.rank());
        xs[ring.unit()] = identity(n);
        search.extend(xs, 0, task_candidates, [&](const std::vector<std::optional<IntMatrix>>& full) {
          std::vector<IntMatrix> mats;
          for (const auto& m : full) mats.push_back(*m);
          if (!connected(mats, n)) return;
          Canonical c = canonicalize(mats, n);
          auto key = std::make_pair(n, c.code);
          if (local.count(key)) return;
          NimRep rep{ring, ring_name, {}, {}};
          for (std::size_t i = 0; i < n; ++i) rep.basis.push_back("v" + std::to_string(i));
          rep.action = std::move(mats);
          local.emplace(std::move(key), permute(rep, c.perm));
        });
      }
      std::lock_guard<std::mutex> lock(found_mu);
      for (auto& [k, v] : local) found.emplace(k, std::move(v));
    };
    const int jobs = std::max(1, options.jobs);
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
  }

  std::vector<NimRep> out;
  for (auto& [k, v] : found) {
    const std::size_t n = v.action.front().size();
    v.basis.clear();
    for (std::size_t i = 0; i < n; ++i) v.basis.push_back("v" + std::to_string(i));
    out.push_back(std::move(v));
  }
  return out;
}

// ---------------------------------------------------------------- DOT

std::string dot_style(int colour) {
  static const char* styles[] = {"solid", "dashed", "dotted", "bold"};
  static const char* colours[] = {"black", "blue", "red", "darkgreen", "orange", "purple"};
  const int i = colour - 1;
  return std::string("style=") + styles[i % 4] + ", color=" + colours[i % 6];
}

std::string to_dot(const NimRep& rep) {
  const int ell = fib_colours(rep);
  std::ostringstream os;
  os << "graph nim {\n";
  os << "  // " << rep.ring_name << ", " << rep.rank() << " nodes\n";
  os << "  node [shape=circle];\n";
  for (const auto& b : rep.basis) os << "  \"" << b << "\";\n";
  for (int i = 1; i <= ell; ++i) {
    const IntMatrix& x = rep.action[std::size_t{1} << (i - 1)];
    for (std::size_t a = 0; a < rep.rank(); ++a) {
      for (std::size_t b = a; b < rep.rank(); ++b) {
        const int mult = x[b][a];
        if (mult == 0) continue;
        os << "  \"" << rep.basis[a] << "\" -- \"" << rep.basis[b] << "\" [" << dot_style(i) << ", label=\"x"
           << i;
        if (mult > 1) os << " (" << mult << ")";
        os << "\"];\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace fibkit
