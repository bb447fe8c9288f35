#include "fibkit/cyclo.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>

namespace fibkit {

namespace {

using Poly = std::vector<Rational>;

// Reduction data for one order n: Φ_n and the residues of ζ^k, 0 <= k < n.
struct FieldTables {
  long order = 1;
  long degree = 1;
  std::vector<long> phi;
  std::vector<std::vector<mpz_class>> power_residue;
};

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of p modulo a monic integer polynomial m.
Poly poly_mod_monic(Poly p, const std::vector<long>& m) {
  const std::size_t deg = m.size() - 1;
  trim(p);
  while (p.size() > deg) {
    const std::size_t shift = p.size() - 1 - deg;
    const Rational lead = p.back();
    for (std::size_t i = 0; i <= deg; ++i) p[shift + i] -= lead * m[i];
    trim(p);
  }
  p.resize(deg, Rational(0));
  return p;
}

std::shared_ptr<const FieldTables> build_tables(long n) {
  auto t = std::make_shared<FieldTables>();
  t->order = n;
  t->phi = cyclotomic_polynomial(n);
  t->degree = static_cast<long>(t->phi.size()) - 1;
  t->power_residue.reserve(n);
  std::vector<mpz_class> cur(t->degree, 0);
  cur[0] = 1;
  for (long k = 0; k < n; ++k) {
    t->power_residue.push_back(cur);
    // multiply by ζ: shift up, then fold the top coefficient with Φ_n
    mpz_class top = cur.back();
    for (long i = t->degree - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (long i = 0; i < t->degree; ++i) cur[i] -= top * t->phi[i];
  }
  return t;
}

const FieldTables& tables(long n) {
  static std::mutex mu;
  static std::map<long, std::shared_ptr<const FieldTables>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_tables(n)).first;
  return *it->second;
}

// Folds a cyclic buffer indexed by exponents mod n into canonical coefficients.
std::vector<Rational> reduce_cyclic(const std::vector<Rational>& buf, const FieldTables& t) {
  std::vector<Rational> out(t.degree, Rational(0));
  for (long k = 0; k < t.order; ++k) {
    if (buf[k] == 0) continue;
    const auto& res = t.power_residue[k];
    for (long i = 0; i < t.degree; ++i) {
      if (res[i] != 0) out[i] += buf[k] * res[i];
    }
  }
  return out;
}

long lcm(long a, long b) { return std::lcm(a, b); }

long mod(long k, long n) {
  long r = k % n;
  return r < 0 ? r + n : r;
}

int legendre(long a, long p) {
  a = mod(a, p);
  if (a == 0) return 0;
  long r = 1;
  long base = a;
  long e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) r = (r * base) % p;
    base = (base * base) % p;
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

}  // namespace

long euler_phi(long n) {
  if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<long>& cyclotomic_polynomial(long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  static std::mutex mu;
  static std::map<long, std::vector<long>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  // Φ_n = (x^n - 1) / Π_{d | n, d < n} Φ_d, exact division by monic factors.
  std::vector<long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const std::vector<long>& den = cyclotomic_polynomial(d);
    const std::size_t dd = den.size() - 1;
    std::vector<long> quot(num.size() - dd, 0);
    for (std::size_t i = num.size() - 1; i + 1 > dd; --i) {
      const long c = num[i];
      quot[i - dd] = c;
      for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
      if (i == dd) break;
    }
    num = std::move(quot);
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(num)).first->second;
}

Cyclotomic::Cyclotomic() : Cyclotomic(Rational(0), 1) {}

Cyclotomic::Cyclotomic(long value) : Cyclotomic(Rational(value), 1) {}

Cyclotomic::Cyclotomic(Rational value, long order) : order_(order) {
  if (order < 1) throw std::invalid_argument("Cyclotomic: order must be positive");
  coeffs_.assign(euler_phi(order), Rational(0));
  value.canonicalize();
  coeffs_[0] = std::move(value);
}

Cyclotomic Cyclotomic::from_coeffs(long order, std::vector<Rational> coeffs) {
  if (order < 1) throw std::invalid_argument("Cyclotomic: order must be positive");
  if (static_cast<long>(coeffs.size()) != euler_phi(order)) {
    throw std::invalid_argument("Cyclotomic: coefficient count must equal phi(order)");
  }
  Cyclotomic out;
  out.order_ = order;
  for (auto& c : coeffs) c.canonicalize();
  out.coeffs_ = std::move(coeffs);
  return out;
}

Cyclotomic Cyclotomic::zeta(long n, long k) {
  if (n < 1) throw std::invalid_argument("zeta: n must be positive");
  const FieldTables& t = tables(n);
  const auto& res = t.power_residue[mod(k, n)];
  std::vector<Rational> c(res.begin(), res.end());
  return from_coeffs(n, std::move(c));
}

Cyclotomic Cyclotomic::root_of_unity(const Rational& turns) {
  Rational t = turns;
  t.canonicalize();
  const long den = t.get_den().get_si();
  const mpz_class num = t.get_num() % t.get_den();
  return zeta(den, num.get_si());
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_one() const { return is_rational() && coeffs_[0] == 1; }

Rational Cyclotomic::to_rational() const {
  if (!is_rational()) throw MathError("not a rational number: " + to_string());
  return coeffs_[0];
}

Cyclotomic Cyclotomic::embed(long target) const {
  if (target % order_ != 0) {
    throw std::invalid_argument("embed: target order must be a multiple of the current order");
  }
  if (target == order_) return *this;
  const long step = target / order_;
  const FieldTables& t = tables(target);
  std::vector<Rational> buf(target, Rational(0));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) buf[j * step] = coeffs_[j];
  return from_coeffs(target, reduce_cyclic(buf, t));
}

std::optional<Cyclotomic> Cyclotomic::restrict_to(long target) const {
  if (target < 1 || order_ % target != 0) {
    throw std::invalid_argument("restrict_to: target order must divide the current order");
  }
  if (target == order_) return *this;
  // Solve Σ_j c_j · embed(ζ_target^j) = *this for rational c_j.
  const long k = euler_phi(target);
  const long rows = static_cast<long>(coeffs_.size());
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(k + 1, Rational(0)));
  for (long j = 0; j < k; ++j) {
    const Cyclotomic b = zeta(target, j).embed(order_);
    for (long i = 0; i < rows; ++i) m[i][j] = b.coeffs_[i];
  }
  for (long i = 0; i < rows; ++i) m[i][k] = coeffs_[i];
  long pivot_row = 0;
  std::vector<long> pivot_col;
  for (long col = 0; col < k && pivot_row < rows; ++col) {
    long sel = -1;
    for (long i = pivot_row; i < rows; ++i) {
      if (m[i][col] != 0) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(m[sel], m[pivot_row]);
    const Rational p = m[pivot_row][col];
    for (long c = col; c <= k; ++c) m[pivot_row][c] /= p;
    for (long i = 0; i < rows; ++i) {
      if (i == pivot_row || m[i][col] == 0) continue;
      const Rational f = m[i][col];
      for (long c = col; c <= k; ++c) m[i][c] -= f * m[pivot_row][c];
    }
    pivot_col.push_back(col);
    ++pivot_row;
  }
  for (long i = pivot_row; i < rows; ++i) {
    if (m[i][k] != 0) return std::nullopt;
  }
  std::vector<Rational> out(k, Rational(0));
  for (std::size_t r = 0; r < pivot_col.size(); ++r) out[pivot_col[r]] = m[r][k];
  return from_coeffs(target, std::move(out));
}

Cyclotomic Cyclotomic::minimal() const {
  for (long d = 1; d < order_; ++d) {
    if (order_ % d != 0) continue;
    if (auto r = restrict_to(d)) return *r;
  }
  return *this;
}

Cyclotomic Cyclotomic::galois(long k) const {
  if (std::gcd(mod(k, order_), order_) != 1 && order_ > 1) {
    throw std::invalid_argument("galois: exponent must be coprime to the order");
  }
  const FieldTables& t = tables(order_);
  std::vector<Rational> buf(order_, Rational(0));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    buf[mod(static_cast<long>(j) * k, order_)] += coeffs_[j];
  }
  return from_coeffs(order_, reduce_cyclic(buf, t));
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw MathError("division by zero");
  // Extended Euclid in Q[x]: s·a + t·Φ_n = g with g a nonzero constant.
  const auto& phi_int = cyclotomic_polynomial(order_);
  Poly r0(phi_int.begin(), phi_int.end());
  Poly r1 = coeffs_;
  trim(r1);
  Poly s0{};
  Poly s1{Rational(1)};
  while (!r1.empty()) {
    Poly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1, Rational(0));
    Poly rem = r0;
    trim(rem);
    while (rem.size() >= r1.size() && !rem.empty()) {
      const std::size_t shift = rem.size() - r1.size();
      const Rational c = rem.back() / r1.back();
      q[shift] += c;
      for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
      trim(rem);
    }
    Poly qs(q.size() + s1.size(), Rational(0));
    for (std::size_t i = 0; i < q.size(); ++i) {
      for (std::size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
    }
    Poly s2 = s0;
    if (s2.size() < qs.size()) s2.resize(qs.size(), Rational(0));
    for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) throw MathError("inverse: element is a zero divisor");
  const Rational g = r0[0];
  for (auto& c : s0) c /= g;
  if (s0.empty()) s0.push_back(Rational(0));
  return from_coeffs(order_, poly_mod_monic(std::move(s0), phi_int));
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic result(Rational(1), order_);
  Cyclotomic base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

std::complex<double> Cyclotomic::approx() const {
  std::complex<double> z{0.0, 0.0};
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(order_);
    z += coeffs_[j].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return z;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const Rational& c = coeffs_[j];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    if (j == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "z" << order_;
    if (j > 1) os << "^" << j;
  }
  if (first) os << "0";
  return os.str();
}

Cyclotomic operator+(const Cyclotomic& x, const Cyclotomic& y) {
  const long n = lcm(x.order_, y.order_);
  Cyclotomic a = x.embed(n);
  const Cyclotomic b = y.embed(n);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
  return a;
}

Cyclotomic operator-(const Cyclotomic& x) {
  Cyclotomic a = x;
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

Cyclotomic operator-(const Cyclotomic& x, const Cyclotomic& y) { return x + (-y); }

Cyclotomic operator*(const Cyclotomic& x, const Cyclotomic& y) {
  const long n = lcm(x.order_, y.order_);
  const Cyclotomic a = x.embed(n);
  const Cyclotomic b = y.embed(n);
  const FieldTables& t = tables(n);
  std::vector<Rational> buf(n, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      buf[(i + j) % n] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Cyclotomic::from_coeffs(n, reduce_cyclic(buf, t));
}

Cyclotomic operator/(const Cyclotomic& x, const Cyclotomic& y) { return x * y.inverse(); }

bool operator==(const Cyclotomic& x, const Cyclotomic& y) {
  if (x.order_ == y.order_) return x.coeffs_ == y.coeffs_;
  const long n = lcm(x.order_, y.order_);
  return x.embed(n).coeffs_ == y.embed(n).coeffs_;
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x) { return os << x.to_string(); }

long root_of_unity_exponent(const Cyclotomic& x, long n) {
  for (long k = 0; k < n; ++k) {
    if (x == Cyclotomic::zeta(n, k)) return k;
  }
  return -1;
}

Cyclotomic gauss_sqrt(long p) {
  if (p < 5 || p % 4 != 1) throw std::invalid_argument("gauss_sqrt: need a prime p = 1 mod 4");
  for (long d = 2; d * d <= p; ++d) {
    if (p % d == 0) throw std::invalid_argument("gauss_sqrt: p must be prime");
  }
  Cyclotomic sum(Rational(0), p);
  for (long k = 1; k < p; ++k) sum += Cyclotomic(legendre(k, p)) * Cyclotomic::zeta(p, k);
  return sum;
}

Cyclotomic sqrt_fib_dim(const Cyclotomic& u) {
  const Cyclotomic one(1);
  if (!(u.pow(10) == one) || u.pow(5) == one || u.pow(2) == one) {
    throw MathError("sqrt_fib_dim: u must be a primitive 10th root of unity");
  }
  Cyclotomic y = Cyclotomic::zeta(4, 1) * (u - u.inverse());
  if (y.approx().real() < 0) y = -y;
  return y;
}

Rational ratio(long n, long d) {
  if (d == 0) throw MathError("division by zero");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Rational frac(const Rational& q) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  Rational r = q - Rational(fl);
  r.canonicalize();
  return r;
}

}  // namespace fibkit
