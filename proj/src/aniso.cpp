#include "fibkit/aniso.hpp"

#include <atomic>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "fibkit/fusion.hpp"

namespace fibkit {

long fib_number(int s) {
  if (s < 0) throw std::invalid_argument("fib_number: negative index");
  long a = 0;
  long b = 1;
  for (int i = 0; i < s; ++i) {
    const long t = a + b;
    a = b;
    b = t;
  }
  return a;
}

bool AlgebraClass::is_trivial() const {
  for (std::size_t e = 1; e < coeffs.size(); ++e)
    if (coeffs[e] != 0) return false;
  return !coeffs.empty() && coeffs[0] == 1;
}

std::string AlgebraClass::to_string() const {
  std::string out;
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    if (coeffs[e] == 0) continue;
    if (!out.empty()) out += " + ";
    if (e == 0) {
      out += std::to_string(coeffs[e]);
    } else {
      if (coeffs[e] != 1) out += std::to_string(coeffs[e]) + "*";
      out += monomial_label(static_cast<unsigned>(e));
    }
  }
  return out.empty() ? "0" : out;
}

void check_params(const TwistParams& params) {
  if (params.empty()) throw std::invalid_argument("twist parameters: at least one exponent required");
  for (int m : params) {
    if (std::gcd(m, 10) != 1) throw std::invalid_argument("twist parameters: " + std::to_string(m) + " is not coprime to 10");
  }
}

TwistParams parse_params(const std::string& text) {
  TwistParams out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("twist parameters: bad entry '" + item + "'");
    }
    if (used != item.size()) throw std::invalid_argument("twist parameters: bad entry '" + item + "'");
    out.push_back(v);
  }
  check_params(out);
  return out;
}

namespace {

// Product over parts of Σ_{S ⊆ P} weight(|S|)·x^S, as coefficients by mask.
AlgebraClass part_product(int ell, const SetPartition& partition, long (*weight)(int)) {
  const SetPartition lam = SetPartition::make(ell, partition.parts);
  const FusionRing ring = fib_power(ell);
  std::vector<int> acc(ring.rank(), 0);
  acc[0] = 1;
  for (const auto& part : lam.parts) {
    std::vector<int> factor(ring.rank(), 0);
    const unsigned k = static_cast<unsigned>(part.size());
    for (unsigned sub = 0; sub < (1u << k); ++sub) {
      unsigned mask = 0;
      for (unsigned j = 0; j < k; ++j)
        if (sub & (1u << j)) mask |= 1u << (part[j] - 1);
      factor[mask] = static_cast<int>(weight(__builtin_popcount(sub)));
    }
    // distinct parts use disjoint variables, so the ring product is the
    // plain monomial product
    acc = ring.multiply(acc, factor);
  }
  return AlgebraClass{ell, std::vector<long>(acc.begin(), acc.end())};
}

long candidate_weight(int s) { return s == 0 ? 1 : fib_number(s - 1); }
long companion_weight(int s) { return s == 0 ? 0 : fib_number(s); }

}  // namespace

AlgebraClass candidate_class(int ell, const SetPartition& partition) {
  return part_product(ell, partition, candidate_weight);
}

AlgebraClass companion_class(int ell, const SetPartition& partition) {
  return part_product(ell, partition, companion_weight);
}

Cyclotomic class_dimension(const AlgebraClass& cls, const Cyclotomic& d) {
  Cyclotomic sum;
  for (std::size_t e = 0; e < cls.coeffs.size(); ++e) {
    if (cls.coeffs[e] == 0) continue;
    sum += Cyclotomic(Rational(cls.coeffs[e])) * d.pow(__builtin_popcount(static_cast<unsigned>(e)));
  }
  return sum;
}

bool dimension_identity(int k, const Cyclotomic& d) {
  std::vector<int> all(k);
  std::iota(all.begin(), all.end(), 1);
  const SetPartition one = SetPartition::make(k, {all});
  const Cyclotomic dim = (Cyclotomic(1) + d * d).pow(k - 1);
  return class_dimension(candidate_class(k, one), d) == dim && class_dimension(companion_class(k, one), d) == d * dim;
}

Cyclotomic monomial_twist(unsigned mask, const TwistParams& params) {
  long exponent = 0;
  for (std::size_t i = 0; i < params.size(); ++i)
    if (mask & (1u << i)) exponent -= 2L * params[i];
  if (mask >> params.size()) throw std::invalid_argument("monomial_twist: monomial uses more variables than parameters");
  return Cyclotomic::zeta(10, exponent);
}

RibbonCheck is_ribbon_class(const AlgebraClass& cls, const TwistParams& params) {
  if (static_cast<std::size_t>(cls.ell) != params.size()) {
    throw std::invalid_argument("is_ribbon_class: class and parameters have different lengths");
  }
  for (std::size_t e = 0; e < cls.coeffs.size(); ++e) {
    if (cls.coeffs[e] == 0) continue;
    if (!monomial_twist(static_cast<unsigned>(e), params).is_one()) return RibbonCheck{false, static_cast<unsigned>(e)};
  }
  return RibbonCheck{};
}

std::vector<const ScanEntry*> ScanReport::ribbon_candidates() const {
  std::vector<const ScanEntry*> out;
  for (const auto& e : entries)
    if (e.check.ribbon) out.push_back(&e);
  return out;
}

std::vector<const ScanEntry*> ScanReport::nontrivial_ribbon() const {
  std::vector<const ScanEntry*> out;
  for (const auto& e : entries)
    if (e.check.ribbon && !e.cls.is_trivial()) out.push_back(&e);
  return out;
}

ScanReport scan_partitions(const TwistParams& params, int jobs) {
  check_params(params);
  const int ell = static_cast<int>(params.size());
  if (ell > 6) throw std::invalid_argument("scan_partitions: at most 6 factors");
  const auto parts = all_partitions(ell);
  ScanReport report{params, std::vector<ScanEntry>(parts.size())};
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < parts.size(); i = next++) {
      AlgebraClass cls = candidate_class(ell, parts[i]);
      RibbonCheck check = is_ribbon_class(cls, params);
      report.entries[i] = ScanEntry{parts[i], std::move(cls), check};
    }
  };
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return report;
}

}  // namespace fibkit
