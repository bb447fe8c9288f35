#include "fibkit/fibcat.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace fibkit {

Mat2 mat_identity() { return Mat2{{{Cyclotomic(1), Cyclotomic(0)}, {Cyclotomic(0), Cyclotomic(1)}}}; }

Mat2 mat_mul(const Mat2& x, const Mat2& y) {
  Mat2 z;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) z[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
  return z;
}

Mat2 mat_scale(const Cyclotomic& s, const Mat2& x) {
  Mat2 z;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) z[i][j] = s * x[i][j];
  return z;
}

Cyclotomic mat_det(const Mat2& x) { return x[0][0] * x[1][1] - x[0][1] * x[1][0]; }

Mat2 mat_inverse(const Mat2& x) {
  const Cyclotomic det = mat_det(x);
  if (det.is_zero()) throw MathError("singular matrix");
  const Cyclotomic r = det.inverse();
  return Mat2{{{r * x[1][1], -(r * x[0][1])}, {-(r * x[1][0]), r * x[0][0]}}};
}

std::optional<Cyclotomic> scalar_ratio(const Mat2& x, const Mat2& y) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      if (y[i][j].is_zero()) continue;
      const Cyclotomic lambda = x[i][j] / y[i][j];
      if (mat_scale(lambda, y) == x) return lambda;
      return std::nullopt;
    }
  return std::nullopt;
}

int FibBraiding::exponent() const { return static_cast<int>(root_of_unity_exponent(u, 10)); }

std::string to_string(TConvention c) { return c == TConvention::inverse_square ? "u^-2" : "u^2"; }

// ---------------------------------------------------------------- pentagon

namespace {

struct Equation {
  std::string name;
  std::function<bool(const Cyclotomic&, const Cyclotomic&, const Cyclotomic&, const Cyclotomic&,
                     const Cyclotomic&)>
      holds;
};

using C = Cyclotomic;

const std::vector<Equation>& pentagon_equations() {
  static const std::vector<Equation> eqs = {
      // Hom(X⁴, 1)
      {"αa² + bc = α²", [](const C& al, const C& a, const C& b, const C& c, const C&) { return al * a * a + b * c == al * al; }},
      {"αab + bd = 0", [](const C& al, const C& a, const C& b, const C&, const C& d) { return (al * a * b + b * d).is_zero(); }},
      {"αcb + d² = 1", [](const C& al, const C&, const C& b, const C& c, const C& d) { return (al * c * b + d * d).is_one(); }},
      {"αca + dc = 0", [](const C& al, const C& a, const C&, const C& c, const C& d) { return (al * c * a + d * c).is_zero(); }},
      // Hom(X⁴, X)
      {"a³ + bc = a²", [](const C&, const C& a, const C& b, const C& c, const C&) { return a * a * a + b * c == a * a; }},
      {"a²b + bd = b", [](const C&, const C& a, const C& b, const C&, const C& d) { return a * a * b + b * d == b; }},
      {"ca² + cd = c", [](const C&, const C& a, const C&, const C& c, const C& d) { return c * a * a + c * d == c; }},
      {"abc + d² = 0", [](const C&, const C& a, const C& b, const C& c, const C& d) { return (a * b * c + d * d).is_zero(); }},
      {"αab = ab", [](const C& al, const C& a, const C& b, const C&, const C&) { return al * a * b == a * b; }},
      {"αcb = d", [](const C& al, const C&, const C& b, const C& c, const C& d) { return al * c * b == d; }},
      {"αca = ca", [](const C& al, const C& a, const C&, const C& c, const C&) { return al * c * a == c * a; }},
      {"α²d = cb", [](const C& al, const C&, const C& b, const C& c, const C& d) { return al * al * d == c * b; }},
  };
  return eqs;
}

}  // namespace

const std::vector<std::string>& pentagon_equation_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : pentagon_equations()) out.push_back(e.name);
    return out;
  }();
  return names;
}

std::vector<std::string> verify_pentagon(const FibAssociator& assoc) {
  std::vector<std::string> bad;
  for (const auto& e : pentagon_equations()) {
    if (!e.holds(assoc.alpha, assoc.a(), assoc.b(), assoc.c(), assoc.d())) bad.push_back(e.name);
  }
  return bad;
}

std::vector<FibAssociator> solve_pentagon() {
  // b = 0 would force d² = 1 and d² = 0 together, so b ≠ 0 and the gauge
  // can set b = 1. a = 0 gives c = 0 from "αcb = d"/"α²d = cb", making A
  // singular, so "αab = ab" forces α = 1. Then d = −a, c = −a and
  // "a²b + bd = b" leaves a² − a − 1 = 0.
  const Cyclotomic s5 = gauss_sqrt(5);
  std::vector<Cyclotomic> roots = {(Cyclotomic(1) + s5) / Cyclotomic(2), (Cyclotomic(1) - s5) / Cyclotomic(2)};
  std::sort(roots.begin(), roots.end(),
            [](const Cyclotomic& x, const Cyclotomic& y) { return x.approx().real() > y.approx().real(); });
  std::vector<FibAssociator> out;
  for (const auto& a : roots) {
    if (!(a * a - a).is_one()) throw MathError("pentagon: root check failed");
    FibAssociator s{Cyclotomic(1), Mat2{{{a, Cyclotomic(1)}, {-a, -a}}}};
    if (!verify_pentagon(s).empty()) throw MathError("pentagon: solution check failed");
    out.push_back(std::move(s));
  }
  return out;
}

FibAssociator gauge_conjugate(const FibAssociator& assoc, const Cyclotomic& f, const Cyclotomic& g) {
  if (f.is_zero() || g.is_zero()) throw MathError("zero gauge");
  const Mat2 G{{{f, Cyclotomic(0)}, {Cyclotomic(0), g * g}}};
  return FibAssociator{assoc.alpha, mat_mul(mat_inverse(G), mat_mul(assoc.A, G))};
}

// ---------------------------------------------------------------- hexagon

std::vector<FibBraiding> solve_braidings(const FibAssociator& assoc) {
  std::vector<FibBraiding> out;
  for (long k = 0; k < 10; ++k) {
    const Cyclotomic u = Cyclotomic::zeta(10, k);
    if ((u * u - assoc.a() * u + Cyclotomic(1)).is_zero()) out.push_back(FibBraiding{u, u * u});
  }
  return out;
}

std::vector<std::string> verify_hexagon(const FibAssociator& assoc, const FibBraiding& braid) {
  const Cyclotomic& a = assoc.a();
  const Cyclotomic& u = braid.u;
  const Cyclotomic& w = braid.w;
  std::vector<std::string> bad;
  if (!(u * u == w)) bad.push_back("u² = w");
  if (!(u * u * a == u * a * a - a)) bad.push_back("u²a = ua² − a");
  if (!(w * u == u * a - a)) bad.push_back("wu = ua − a");
  if (!(-(w * w) == a - u)) bad.push_back("−w² = a − u");
  return bad;
}

// ---------------------------------------------------------------- modular data

namespace {

Mat2 diag(const Cyclotomic& x, const Cyclotomic& y) { return Mat2{{{x, Cyclotomic(0)}, {Cyclotomic(0), y}}}; }

Cyclotomic t_entry(const Cyclotomic& u, TConvention c) { return c == TConvention::inverse_square ? u.pow(-2) : u.pow(2); }

std::optional<Cyclotomic> sl2_residual(const Mat2& S, const Cyclotomic& prefactor, const Cyclotomic& t) {
  const Mat2 ts = mat_mul(mat_scale(prefactor, diag(Cyclotomic(1), t)), S);
  return scalar_ratio(mat_mul(ts, mat_mul(ts, ts)), mat_mul(S, S));
}

}  // namespace

FibModularData modular_data(const FibAssociator& assoc, const FibBraiding& braid, TConvention convention) {
  const int m = braid.exponent();
  if (m < 0 || m % 2 == 0 || m == 5) throw MathError("braiding parameter is not a primitive 10th root of unity");
  if (!verify_hexagon(assoc, braid).empty()) throw MathError("braiding does not satisfy the hexagon equations");

  FibModularData md;
  md.m = m;
  md.u = braid.u;
  md.a = braid.u + braid.u.inverse();
  if (!(md.a == assoc.a())) throw MathError("braiding belongs to a different associator");
  md.rho = braid.u.pow(-2);
  // coevaluation scalar read off the associator: the X-channel entry is 1/dim
  md.gamma = assoc.d().inverse();
  md.dimX = md.gamma;
  md.DimC = Cyclotomic(1) + md.dimX * md.dimX;
  // double braiding acts by u⁴ on the 1-channel and u² on the X-channel
  md.double_braiding_trace = braid.u.pow(4) + braid.u.pow(2) * md.dimX;
  md.tau_plus = Cyclotomic(1) + md.rho * md.dimX * md.dimX;
  md.tau_minus = Cyclotomic(1) + md.rho.inverse() * md.dimX * md.dimX;
  md.xi_squared = md.tau_plus / md.tau_minus;

  const Cyclotomic y = sqrt_fib_dim(braid.u);
  const Cyclotomic inv_y = y.inverse();
  md.S = Mat2{{{inv_y, inv_y * md.dimX}, {inv_y * md.dimX, inv_y * md.double_braiding_trace}}};

  // the sixth root of u whose cube is ξ⁻¹, ξ = τ₊/√Dim
  const Cyclotomic xi_inv = (md.tau_plus / y).inverse();
  for (long k = 0; k < 6; ++k) {
    const Cyclotomic r = Cyclotomic::zeta(60, m + 10 * k);
    if (r.pow(3) == xi_inv) {
      md.t_prefactor = r.embed(60);
      break;
    }
  }
  if (md.t_prefactor.is_zero()) throw MathError("no sixth root of u cubes to the inverse central charge");
  md.convention = convention;
  md.T = mat_scale(md.t_prefactor, diag(Cyclotomic(1), t_entry(braid.u, convention)));
  for (auto& row : md.S)
    for (auto& e : row) e = e.embed(60);
  for (auto& row : md.T)
    for (auto& e : row) e = e.embed(60);
  return md;
}

FibModularData modular_data(int m, TConvention convention) {
  if (m != 1 && m != 3 && m != 7 && m != 9) throw std::invalid_argument("m must be one of 1, 3, 7, 9");
  const Cyclotomic u = Cyclotomic::zeta(10, m);
  const Cyclotomic a = u + u.inverse();
  for (const auto& assoc : solve_pentagon()) {
    if (assoc.a() == a) return modular_data(assoc, FibBraiding{u, u * u}, convention);
  }
  throw MathError("no associator matches u");
}

Sl2Report verify_sl2(const FibModularData& data) {
  Sl2Report r;
  const Mat2 s2 = mat_mul(data.S, data.S);
  r.s4_identity = mat_mul(s2, s2) == mat_identity();
  r.residual_inverse_square = sl2_residual(data.S, data.t_prefactor, t_entry(data.u, TConvention::inverse_square));
  r.residual_square = sl2_residual(data.S, data.t_prefactor, t_entry(data.u, TConvention::square));
  const Cyclotomic naive = Cyclotomic::zeta(60, data.m);
  r.naive_residual_inverse_square = sl2_residual(data.S, naive, t_entry(data.u, TConvention::inverse_square));
  r.naive_residual_square = sl2_residual(data.S, naive, t_entry(data.u, TConvention::square));
  if (r.residual_inverse_square && r.residual_inverse_square->is_one()) {
    r.selected = TConvention::inverse_square;
  } else if (r.residual_square && r.residual_square->is_one()) {
    r.selected = TConvention::square;
  }
  if (!r.selected) {
    auto show = [](const std::optional<Cyclotomic>& x) { return x ? x->to_string() : std::string("not scalar"); };
    throw MathError("(TS)^3 = S^2 fails under both conventions: u^-2 -> " + show(r.residual_inverse_square) +
                    ", u^2 -> " + show(r.residual_square));
  }
  return r;
}

FusionRing verlinde_ring(const FibModularData& data) {
  const Mat2 sinv = mat_inverse(data.S);
  std::vector<int> n(8, 0);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        Cyclotomic sum;
        for (int r = 0; r < 2; ++r) sum += data.S[i][r] * data.S[j][r] * sinv[r][k] / data.S[0][r];
        if (!sum.is_rational()) throw MathError("Verlinde coefficient is not rational");
        const Rational q = sum.to_rational();
        if (q.get_den() != 1 || q < 0) throw MathError("Verlinde coefficient is not a non-negative integer");
        n[(i * 2 + j) * 2 + k] = static_cast<int>(q.get_num().get_si());
      }
  return FusionRing({"1", "x"}, 0, {0, 1}, n);
}

bool verlinde_check(const FibModularData& data) {
  try {
    return verlinde_ring(data) == fib_rule();
  } catch (const MathError&) {
    return false;
  }
}

std::vector<int> fib_parameter_from_c(const Rational& c, int ell, const std::vector<Rational>& weights_mod_1) {
  if (ell < 1) throw std::invalid_argument("ell must be >= 1");
  std::vector<Rational> target;
  for (const auto& w : weights_mod_1) target.push_back(frac(w));
  std::sort(target.begin(), target.end());
  // e^{πic/2} = e^{2πi·c/4}
  const Cyclotomic central = Cyclotomic::root_of_unity(Rational(c / 4));
  std::vector<int> out;
  for (int m : {1, 3, 7, 9}) {
    if (!(Cyclotomic::zeta(10, -static_cast<long>(ell) * m) == central)) continue;
    std::vector<Rational> weights;
    for (unsigned eps = 0; eps < (1u << ell); ++eps) {
      weights.push_back(frac(ratio(-m * __builtin_popcount(eps), 5)));
    }
    std::sort(weights.begin(), weights.end());
    if (weights == target) out.push_back(m);
  }
  return out;
}

}  // namespace fibkit
