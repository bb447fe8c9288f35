#include "fibkit/voa.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "fibkit/fibcat.hpp"

namespace fibkit {

namespace {

FusionRing self_dual_ring(std::vector<std::string> labels, const std::vector<int>& n) {
  std::vector<std::size_t> dual(labels.size());
  std::iota(dual.begin(), dual.end(), 0);
  return FusionRing(std::move(labels), 0, std::move(dual), n);
}

std::string pair_label(int r, int s) { return "(" + std::to_string(r) + "," + std::to_string(s) + ")"; }

}  // namespace

VoaModel model_product(const VoaModel& a, const VoaModel& b) {
  VoaModel out{a.name + " x " + b.name, a.c + b.c, {}, deligne_product(a.fusion, b.fusion)};
  for (const auto& ha : a.weights)
    for (const auto& hb : b.weights) out.weights.push_back(ha + hb);
  return out;
}

// ---------------------------------------------------------------- minimal models

Rational minimal_central_charge(int p, int q) {
  return Rational(1) - ratio(6L * (p - q) * (p - q), static_cast<long>(p) * q);
}

Rational minimal_weight(int p, int q, int r, int s) {
  const long t = static_cast<long>(q) * r - static_cast<long>(p) * s;
  return ratio(t * t - static_cast<long>(p - q) * (p - q), 4L * p * q);
}

std::pair<int, int> kac_canonical(int p, int q, int r, int s) {
  return std::min(std::make_pair(r, s), std::make_pair(p - r, q - s));
}

VoaModel minimal_model(int p, int q) {
  if (p <= 1 || q <= p || std::gcd(p, q) != 1) {
    throw std::invalid_argument("minimal model needs coprime 1 < p < q, got (" + std::to_string(p) + "," +
                                std::to_string(q) + ")");
  }
  std::set<std::pair<int, int>> canon;
  for (int r = 1; r < p; ++r)
    for (int s = 1; s < q; ++s) canon.insert(kac_canonical(p, q, r, s));
  std::vector<std::pair<int, int>> labels(canon.begin(), canon.end());
  std::map<std::pair<int, int>, std::size_t> idx;
  for (std::size_t i = 0; i < labels.size(); ++i) idx[labels[i]] = i;

  const std::size_t n = labels.size();
  std::vector<int> N(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto [r1, s1] = labels[i];
      auto [r2, s2] = labels[j];
      // both indices step by two
      for (int r = std::abs(r1 - r2) + 1; r <= std::min(r1 + r2 - 1, 2 * p - r1 - r2 - 1); r += 2) {
        for (int s = std::abs(s1 - s2) + 1; s <= std::min(s1 + s2 - 1, 2 * q - s1 - s2 - 1); s += 2) {
          N[(i * n + j) * n + idx.at(kac_canonical(p, q, r, s))] += 1;
        }
      }
    }
  }
  VoaModel m;
  m.name = "M(" + std::to_string(p) + "," + std::to_string(q) + ")";
  m.c = minimal_central_charge(p, q);
  std::vector<std::string> names;
  for (auto [r, s] : labels) {
    names.push_back(pair_label(r, s));
    m.weights.push_back(minimal_weight(p, q, r, s));
  }
  m.fusion = self_dual_ring(std::move(names), N);
  return m;
}

// ---------------------------------------------------------------- affine A1

VoaModel affine_a1(int k) {
  if (k < 1) throw std::invalid_argument("affine A1 needs level k >= 1");
  const std::size_t n = static_cast<std::size_t>(k) + 1;
  std::vector<int> N(n * n * n, 0);
  for (int i = 0; i <= k; ++i)
    for (int j = 0; j <= k; ++j)
      for (int m = std::abs(i - j); m <= std::min(i + j, 2 * k - i - j); m += 2) N[(i * n + j) * n + m] = 1;
  VoaModel model;
  model.name = "A1," + std::to_string(k);
  model.c = ratio(3 * k, k + 2);
  std::vector<std::string> names;
  for (int i = 0; i <= k; ++i) {
    names.push_back(std::to_string(i));
    model.weights.push_back(ratio(i * (i + 2), 4 * (k + 2)));
  }
  model.fusion = self_dual_ring(std::move(names), N);
  return model;
}

const std::vector<SimpleLie>& lie_catalog() {
  static const std::vector<SimpleLie> rows = {
      {"A1", 3, 2}, {"A2", 8, 3}, {"G2", 14, 4}, {"F4", 52, 9}, {"E8", 248, 30},
  };
  return rows;
}

const SimpleLie& lie_entry(const std::string& name) {
  for (const auto& row : lie_catalog())
    if (row.name == name) return row;
  throw std::invalid_argument("unknown algebra " + name);
}

Rational affine_central_charge(const std::string& name, int k) {
  if (k < 1) throw std::invalid_argument("level must be >= 1");
  const SimpleLie& g = lie_entry(name);
  return ratio(k * g.dimension, k + g.dual_coxeter);
}

// ---------------------------------------------------------------- simple currents

namespace {

// The label J·M for invertible J.
std::size_t act(const FusionRing& ring, std::size_t J, std::size_t M) {
  for (std::size_t t = 0; t < ring.rank(); ++t)
    if (ring.N(J, M, t) != 0) return t;
  throw MathError("empty fusion product");
}

}  // namespace

Rational monodromy_charge(const VoaModel& model, std::size_t J, std::size_t M) {
  if (!model.fusion.is_invertible(J)) throw MathError(model.fusion.label(J) + " is not invertible");
  const std::size_t t = act(model.fusion, J, M);
  return frac(model.weights.at(J) + model.weights.at(M) - model.weights.at(t));
}

ExtensionReport simple_current_extension(const VoaModel& model, const std::vector<std::size_t>& currents) {
  const FusionRing& ring = model.fusion;
  std::set<std::size_t> S(currents.begin(), currents.end());
  if (!S.count(ring.unit())) throw std::invalid_argument("current group must contain the unit");
  for (std::size_t s : S) {
    if (s >= ring.rank()) throw std::invalid_argument("current index out of range");
    if (!ring.is_invertible(s)) throw std::invalid_argument(ring.label(s) + " is not a simple current");
  }
  for (std::size_t s : S)
    for (std::size_t t : S)
      if (!S.count(act(ring, s, t))) throw std::invalid_argument("currents are not a group under fusion");

  ExtensionReport rep;
  rep.model = model.name;
  rep.currents.assign(S.begin(), S.end());
  rep.c = model.c;
  rep.currents_integral = std::all_of(S.begin(), S.end(), [&](std::size_t s) { return frac(model.weights[s]) == 0; });

  std::vector<char> seen(ring.rank(), 0);
  for (std::size_t m = 0; m < ring.rank(); ++m) {
    if (seen[m]) continue;
    ExtensionOrbit orbit;
    std::set<std::size_t> members;
    for (std::size_t s : S) members.insert(act(ring, s, m));
    orbit.members.assign(members.begin(), members.end());
    for (std::size_t x : members) seen[x] = 1;
    orbit.local = std::all_of(S.begin(), S.end(), [&](std::size_t s) { return monodromy_charge(model, s, m) == 0; });
    orbit.endomorphisms = 0;
    for (std::size_t s : S) orbit.endomorphisms += ring.N(s, m, m);
    orbit.weight_mod_1 = frac(model.weights[m]);
    if (orbit.local)
      for (int i = 0; i < orbit.endomorphisms; ++i) rep.local_spectrum.push_back(orbit.weight_mod_1);
    rep.orbits.push_back(std::move(orbit));
  }
  std::sort(rep.local_spectrum.begin(), rep.local_spectrum.end());
  return rep;
}

// ---------------------------------------------------------------- Fibonacci type

FibTypeMatch fib_type_match(const VoaModel& model) {
  const std::size_t r = model.fusion.rank();
  for (int ell = 1; ell <= 3; ++ell) {
    if ((std::size_t{1} << ell) != r) continue;
    if (find_isomorphism(model.fusion, fib_power(ell)).empty()) break;
    return FibTypeMatch{ell, fib_parameter_from_c(model.c, ell, model.weights)};
  }
  throw MathError("not Fibonacci type");
}

FibTypeMatch fib_type_match(const ExtensionReport& extension, int ell) {
  if (ell < 1 || extension.local_spectrum.size() != (std::size_t{1} << ell)) throw MathError("not Fibonacci type");
  return FibTypeMatch{ell, fib_parameter_from_c(extension.c, ell, extension.local_spectrum)};
}

// ---------------------------------------------------------------- pointed categories

PointedData pointed_ops(const QuadraticForm& form) {
  const FusionRing group = form.orders.empty() ? FusionRing({"0"}, 0, {0}, {1}) : group_ring(form.orders);
  const std::size_t n = group.rank();
  if (form.q.size() != n || form.d.size() != n) throw std::invalid_argument("quadratic form: wrong number of values");
  auto add = [&](std::size_t a, std::size_t b) { return act(group, a, b); };

  PointedData out;
  for (std::size_t a = 0; a < n; ++a) {
    if (!(form.q[group.dual(a)] == form.q[a])) throw MathError("quadratic form: q(-a) != q(a)");
    if (form.d[a] != 1 && form.d[a] != -1) throw MathError("quadratic form: d must take values +-1");
    for (std::size_t b = 0; b < n; ++b)
      if (form.d[add(a, b)] != form.d[a] * form.d[b]) throw MathError("quadratic form: d is not a homomorphism");
  }
  out.sigma.assign(n, std::vector<Cyclotomic>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      out.sigma[a][b] = form.q[add(a, b)] / (form.q[a] * form.q[b]);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (!(out.sigma[add(a, b)][c] == out.sigma[a][c] * out.sigma[b][c])) {
          throw MathError("quadratic form: sigma is not bilinear");
        }
  for (std::size_t a = 0; a < n; ++a) {
    bool trivial = true;
    for (std::size_t b = 0; b < n && trivial; ++b) trivial = out.sigma[a][b].is_one();
    if (trivial) out.kernel.push_back(a);
  }
  out.nondegenerate = out.kernel.size() == 1;
  for (std::size_t a = 0; a < n; ++a) {
    out.twists.push_back(Cyclotomic(form.d[a]) * form.q[a]);
    // d(a)² = 1
    out.tau_plus += out.twists.back();
    out.tau_minus += out.twists.back().inverse();
  }
  if (out.nondegenerate) {
    out.xi_squared = out.tau_plus / out.tau_minus;
    for (long N : {4L, 8L, 12L, 20L, 24L, 40L, 60L, 120L}) {
      const long k = root_of_unity_exponent(out.xi_squared, N);
      if (k >= 0) {
        out.central_charge_mod_4 = ratio(4 * k, N);
        break;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------- M(3,5)

M35Report m35_factorization() {
  const VoaModel m35 = minimal_model(3, 5);
  const FusionRing target = deligne_product(fib_rule(), group_ring({2}));
  M35Report rep;
  // 1 = (1,1), y = (1,2), z = (1,3), x = (1,4)
  rep.label_map = {{"(1,1)", "1⊠0"}, {"(1,3)", "x⊠0"}, {"(1,4)", "1⊠1"}, {"(1,2)", "x⊠1"}};
  std::vector<std::size_t> map(m35.fusion.rank());
  for (const auto& [from, to] : rep.label_map) map[m35.index(from)] = target.index_of(to);
  rep.fusion_isomorphic = m35.fusion.rank() == target.rank();
  for (std::size_t i = 0; i < map.size() && rep.fusion_isomorphic; ++i)
    for (std::size_t j = 0; j < map.size(); ++j)
      for (std::size_t k = 0; k < map.size(); ++k)
        if (m35.fusion.N(i, j, k) != target.N(map[i], map[j], map[k])) rep.fusion_isomorphic = false;

  const Rational hz = m35.weight("(1,3)");
  const Rational hx = m35.weight("(1,4)");
  const Rational hy = m35.weight("(1,2)");

  const PointedData pt = pointed_ops(QuadraticForm{{2}, {Cyclotomic(1), Cyclotomic::zeta(4, 1)}, {1, -1}});
  rep.pointed_twist_congruence = Cyclotomic::root_of_unity(hx) == pt.twists[1];
  rep.product_twist_congruence = frac(hy) == frac(hz + hx);
  rep.c_pointed_mod_4 = pt.central_charge_mod_4;
  rep.c_fib = m35.c - pt.central_charge_mod_4;
  rep.fib_exponents = fib_parameter_from_c(rep.c_fib, 1, {Rational(0), hz});
  rep.fib_weight_congruence =
      rep.fib_exponents.size() == 1 && frac(hz) == frac(ratio(-rep.fib_exponents.front(), 5));
  return rep;
}

// ---------------------------------------------------------------- catalog

namespace {

VoaModel fib_model(const std::string& name, const Rational& c, const Rational& h) {
  return VoaModel{name, c, {Rational(0), h}, fib_rule()};
}

}  // namespace

std::vector<std::string> catalog_names() { return {"m25", "m35", "m310", "g21", "f41", "e81", "a1_<k>"}; }

VoaModel catalog_model(const std::string& name) {
  if (name == "m25") return minimal_model(2, 5);
  if (name == "m35") return minimal_model(3, 5);
  if (name == "m310") return minimal_model(3, 10);
  // fusion and weights of the level-1 exceptional models are catalog data
  if (name == "g21") return fib_model("G2,1", affine_central_charge("G2", 1), Rational(2, 5));
  if (name == "f41") return fib_model("F4,1", affine_central_charge("F4", 1), Rational(3, 5));
  if (name == "e81") return VoaModel{"E8,1", affine_central_charge("E8", 1), {Rational(0)}, FusionRing({"0"}, 0, {0}, {1})};
  if (name.rfind("a1_", 0) == 0) {
    try {
      std::size_t used = 0;
      const int k = std::stoi(name.substr(3), &used);
      if (used == name.size() - 3) return affine_a1(k);
    } catch (const std::logic_error&) {
    }
  }
  throw std::invalid_argument("unknown model " + name);
}

std::vector<CatalogCheck> catalog_checks() {
  std::vector<CatalogCheck> out;
  auto c_of = [](const std::string& g, int k) { return affine_central_charge(g, k); };
  auto eq = [&](const std::string& name, const Rational& lhs, const Rational& rhs) {
    out.push_back({name, lhs.get_str() + " = " + rhs.get_str(), lhs == rhs});
  };
  eq("c(G2,1) = c(A1,28)", c_of("G2", 1), c_of("A1", 28));
  eq("c(F4,1) = c(A2,2) + c(A2,1)", c_of("F4", 1), c_of("A2", 2) + c_of("A2", 1));
  eq("c(E8,1) = c(G2,1) + c(F4,1)", c_of("E8", 1), c_of("G2", 1) + c_of("F4", 1));
  eq("c(E8,1) - 2 c(G2,1) = c(A1,8)", c_of("E8", 1) - 2 * c_of("G2", 1), c_of("A1", 8));
  eq("c(F4,1) - c(G2,1) = c(A1,8)", c_of("F4", 1) - c_of("G2", 1), c_of("A1", 8));
  eq("c(3,10) = 2 c(2,5)", minimal_central_charge(3, 10), 2 * minimal_central_charge(2, 5));
  eq("8 c(3,5) + 7 c(2,5) = -178/5", 8 * minimal_central_charge(3, 5) + 7 * minimal_central_charge(2, 5),
     Rational(-178, 5));

  const VoaModel a128 = affine_a1(28);
  for (int i : {0, 10, 18, 28}) {
    const Rational h = a128.weights[i];
    out.push_back({"A1,28 vacuum summand L(" + std::to_string(i) + ")", "h = " + h.get_str(), frac(h) == 0});
  }
  for (int i : {6, 12, 16, 22}) {
    const Rational h = a128.weights[i];
    out.push_back(
        {"A1,28 module summand L(" + std::to_string(i) + ")", "h = " + h.get_str(), frac(h) == Rational(2, 5)});
  }
  return out;
}

}  // namespace fibkit
