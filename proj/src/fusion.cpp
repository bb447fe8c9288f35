#include "fibkit/fusion.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fibkit {

FusionRing::FusionRing(std::vector<std::string> labels, std::size_t unit, std::vector<std::size_t> dual,
                       std::vector<int> structure)
    : labels_(std::move(labels)), unit_(unit), dual_(std::move(dual)), n_(std::move(structure)) {
  const std::size_t r = labels_.size();
  if (r == 0) throw std::invalid_argument("FusionRing: empty basis");
  if (unit_ >= r) throw std::invalid_argument("FusionRing: unit index out of range");
  if (dual_.size() != r) throw std::invalid_argument("FusionRing: dual must have one entry per label");
  for (auto d : dual_) {
    if (d >= r) throw std::invalid_argument("FusionRing: dual index out of range");
  }
  if (n_.size() != r * r * r) throw std::invalid_argument("FusionRing: structure constants must be rank^3");
}

std::vector<int> FusionRing::product(std::size_t i, std::size_t j) const {
  std::vector<int> out(rank());
  for (std::size_t k = 0; k < rank(); ++k) out[k] = N(i, j, k);
  return out;
}

std::vector<int> FusionRing::multiply(const std::vector<int>& x, const std::vector<int>& y) const {
  std::vector<int> out(rank(), 0);
  for (std::size_t i = 0; i < rank(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < rank(); ++j) {
      if (y[j] == 0) continue;
      for (std::size_t k = 0; k < rank(); ++k) out[k] += x[i] * y[j] * N(i, j, k);
    }
  }
  return out;
}

std::size_t FusionRing::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw std::out_of_range("unknown label: " + label);
  return static_cast<std::size_t>(it - labels_.begin());
}

bool FusionRing::is_invertible(std::size_t i) const {
  for (std::size_t j = 0; j < rank(); ++j) {
    int total = 0;
    for (std::size_t k = 0; k < rank(); ++k) total += N(i, j, k);
    if (total != 1) return false;
  }
  return true;
}

std::vector<std::string> verify_axioms(const FusionRing& ring) {
  std::vector<std::string> bad;
  const std::size_t r = ring.rank();
  const std::size_t e = ring.unit();
  const auto& L = ring.labels();
  auto say = [&](const std::string& s) { bad.push_back(s); };

  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k)
        if (ring.N(i, j, k) < 0) say("non-negativity (" + L[i] + "," + L[j] + "," + L[k] + ")");

  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t k = 0; k < r; ++k) {
      const int delta = j == k ? 1 : 0;
      if (ring.N(e, j, k) != delta) say("left unit (" + L[j] + "," + L[k] + ")");
      if (ring.N(j, e, k) != delta) say("right unit (" + L[j] + "," + L[k] + ")");
    }
  }

  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t k = 0; k < r; ++k) {
        for (std::size_t l = 0; l < r; ++l) {
          long lhs = 0;
          long rhs = 0;
          for (std::size_t m = 0; m < r; ++m) {
            lhs += static_cast<long>(ring.N(i, j, m)) * ring.N(m, k, l);
            rhs += static_cast<long>(ring.N(j, k, m)) * ring.N(i, m, l);
          }
          if (lhs != rhs) {
            std::ostringstream os;
            os << "associativity (" << L[i] << "," << L[j] << "," << L[k] << "," << L[l] << "): " << lhs
               << " != " << rhs;
            say(os.str());
          }
        }
      }
    }
  }

  for (std::size_t i = 0; i < r; ++i) {
    if (ring.dual(ring.dual(i)) != i) say("involution (" + L[i] + ")");
  }
  if (ring.dual(e) != e) say("dual of unit");

  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k)
        if (ring.N(i, j, k) != ring.N(ring.dual(i), k, j))
          say("rigidity (" + L[i] + "," + L[j] + "," + L[k] + ")");
  return bad;
}

FusionRing fib_rule() {
  std::vector<int> n(8, 0);
  FusionRing f({"1", "x"}, 0, {0, 1}, n);
  f.set_N(0, 0, 0, 1);
  f.set_N(0, 1, 1, 1);
  f.set_N(1, 0, 1, 1);
  f.set_N(1, 1, 0, 1);
  f.set_N(1, 1, 1, 1);
  return f;
}

FusionRing deligne_product(const FusionRing& r, const FusionRing& s) {
  const std::size_t a = r.rank();
  const std::size_t b = s.rank();
  const std::size_t n = a * b;
  std::vector<std::string> labels;
  std::vector<std::size_t> dual;
  labels.reserve(n);
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) {
      labels.push_back(r.label(i) + "⊠" + s.label(j));
      dual.push_back(r.dual(i) * b + s.dual(j));
    }
  }
  std::vector<int> nn(n * n * n, 0);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t t = 0; t < n; ++t)
        nn[(p * n + q) * n + t] = r.N(p / b, q / b, t / b) * s.N(p % b, q % b, t % b);
  return FusionRing(std::move(labels), r.unit() * b + s.unit(), std::move(dual), std::move(nn));
}

std::string monomial_label(unsigned mask) {
  if (mask == 0) return "1";
  std::string out;
  for (unsigned i = 0; i < 32; ++i) {
    if (mask & (1u << i)) out += "x" + std::to_string(i + 1);
  }
  return out;
}

FusionRing fib_power(int ell) {
  if (ell < 1) throw std::invalid_argument("fib_power: ell must be >= 1");
  if (ell > 8) throw std::invalid_argument("fib_power: ell > 8 is too large for dense storage");
  if (ell == 1) return fib_rule();
  // x_ell ⊠ ... ⊠ x_1 puts x1 in the last (fastest) factor.
  FusionRing acc = fib_rule();
  for (int i = 1; i < ell; ++i) acc = deligne_product(fib_rule(), acc);
  std::vector<std::string> labels;
  for (unsigned m = 0; m < acc.rank(); ++m) labels.push_back(monomial_label(m));
  return FusionRing(std::move(labels), acc.unit(), acc.duals(), acc.structure());
}

FusionRing group_ring(const std::vector<int>& orders) {
  std::size_t n = 1;
  for (int o : orders) {
    if (o < 1) throw std::invalid_argument("group_ring: cyclic orders must be positive");
    n *= static_cast<std::size_t>(o);
  }
  auto digits = [&](std::size_t idx) {
    std::vector<int> d(orders.size());
    for (std::size_t f = orders.size(); f-- > 0;) {
      d[f] = static_cast<int>(idx % orders[f]);
      idx /= orders[f];
    }
    return d;
  };
  auto index = [&](const std::vector<int>& d) {
    std::size_t idx = 0;
    for (std::size_t f = 0; f < orders.size(); ++f) idx = idx * orders[f] + d[f];
    return idx;
  };
  std::vector<std::string> labels;
  std::vector<std::size_t> dual;
  for (std::size_t i = 0; i < n; ++i) {
    auto d = digits(i);
    std::string lab;
    if (orders.size() == 1) {
      lab = std::to_string(d[0]);
    } else {
      lab = "(";
      for (std::size_t f = 0; f < d.size(); ++f) lab += (f ? "," : "") + std::to_string(d[f]);
      lab += ")";
    }
    labels.push_back(lab);
    for (std::size_t f = 0; f < d.size(); ++f) d[f] = (orders[f] - d[f]) % orders[f];
    dual.push_back(index(d));
  }
  std::vector<int> nn(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto a = digits(i);
      auto b = digits(j);
      for (std::size_t f = 0; f < a.size(); ++f) a[f] = (a[f] + b[f]) % orders[f];
      nn[(i * n + j) * n + index(a)] = 1;
    }
  }
  return FusionRing(std::move(labels), 0, std::move(dual), std::move(nn));
}

std::vector<std::size_t> find_isomorphism(const FusionRing& r, const FusionRing& s) {
  const std::size_t n = r.rank();
  if (n != s.rank()) return {};
  if (n > 9) throw std::invalid_argument("find_isomorphism: rank > 9 not supported");
  // others[i] of r maps to images[i] of s; units are pinned.
  std::vector<std::size_t> rest_r;
  std::vector<std::size_t> rest_s;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != r.unit()) rest_r.push_back(i);
    if (i != s.unit()) rest_s.push_back(i);
  }
  std::vector<std::size_t> map(n);
  std::sort(rest_s.begin(), rest_s.end());
  do {
    map[r.unit()] = s.unit();
    for (std::size_t i = 0; i < rest_r.size(); ++i) map[rest_r[i]] = rest_s[i];
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j)
        for (std::size_t k = 0; k < n && ok; ++k)
          ok = r.N(i, j, k) == s.N(map[i], map[j], map[k]);
    if (ok) return map;
  } while (std::next_permutation(rest_s.begin(), rest_s.end()));
  return {};
}

}  // namespace fibkit
