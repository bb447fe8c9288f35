#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fibkit/cyclo.hpp"
#include "fibkit/fusion.hpp"

namespace fibkit {

using Mat2 = std::array<std::array<Cyclotomic, 2>, 2>;

Mat2 mat_identity();
Mat2 mat_mul(const Mat2& x, const Mat2& y);
Mat2 mat_scale(const Cyclotomic& s, const Mat2& x);
Mat2 mat_inverse(const Mat2& x);
Cyclotomic mat_det(const Mat2& x);
/// λ with x = λ·y, if one exists (y nonzero).
std::optional<Cyclotomic> scalar_ratio(const Mat2& x, const Mat2& y);

/// Associativity data for Fib: α on Hom(X³, 1) and A = [[a,b],[c,d]] on
/// Hom(X³, X) in the basis (through 1, through X).
struct FibAssociator {
  Cyclotomic alpha;
  Mat2 A;

  const Cyclotomic& a() const { return A[0][0]; }
  const Cyclotomic& b() const { return A[0][1]; }
  const Cyclotomic& c() const { return A[1][0]; }
  const Cyclotomic& d() const { return A[1][1]; }
};

struct FibBraiding {
  Cyclotomic u;
  Cyclotomic w;

  /// m with u = ζ10^m, or -1.
  int exponent() const;
};

/// Which diagonal entry of T sits on X: the twist u^-2 or the displayed u^2.
enum class TConvention { inverse_square, square };

std::string to_string(TConvention c);

struct FibModularData {
  int m = 0;
  Cyclotomic u;
  Cyclotomic a;
  Cyclotomic rho;
  Cyclotomic gamma;
  Cyclotomic dimX;
  Cyclotomic DimC;
  Cyclotomic double_braiding_trace;
  Cyclotomic tau_plus;
  Cyclotomic tau_minus;
  Cyclotomic xi_squared;
  /// Sixth root of u in front of T.
  Cyclotomic t_prefactor;
  TConvention convention = TConvention::inverse_square;
  Mat2 S;
  Mat2 T;
};

/// The gauge classes of solutions of the twelve pentagon equations, in the
/// normal form α = 1, b = 1. Ordered by decreasing real a.
std::vector<FibAssociator> solve_pentagon();

/// Names of the pentagon equations that fail, e.g. "αcb + d² = 1".
std::vector<std::string> verify_pentagon(const FibAssociator& assoc);
/// All twelve equation names in a fixed order.
const std::vector<std::string>& pentagon_equation_names();

/// A ↦ G⁻¹AG with G = diag(f, g²). Throws MathError for a zero gauge.
FibAssociator gauge_conjugate(const FibAssociator& assoc, const Cyclotomic& f, const Cyclotomic& g);

/// The roots u of u² = au − 1 among the 10th roots of unity, w = u².
std::vector<FibBraiding> solve_braidings(const FibAssociator& assoc);
std::vector<std::string> verify_hexagon(const FibAssociator& assoc, const FibBraiding& braid);

/// Modular data of the category with braiding parameter u.
FibModularData modular_data(const FibAssociator& assoc, const FibBraiding& braid,
                            TConvention convention = TConvention::inverse_square);
/// Shortcut for u = ζ10^m, m in {1, 3, 7, 9}.
FibModularData modular_data(int m, TConvention convention = TConvention::inverse_square);

struct Sl2Report {
  bool s4_identity = false;
  /// λ in (TS)³ = λ·S² for each convention, when (TS)³ is proportional to S².
  std::optional<Cyclotomic> residual_inverse_square;
  std::optional<Cyclotomic> residual_square;
  /// Same with the prefactor ζ60^m instead of the chosen sixth root.
  std::optional<Cyclotomic> naive_residual_inverse_square;
  std::optional<Cyclotomic> naive_residual_square;
  std::optional<TConvention> selected;
};

/// Checks S⁴ = 1 and (TS)³ = S² under both diagonal conventions. Throws
/// MathError listing the residuals if neither convention works.
Sl2Report verify_sl2(const FibModularData& data);

/// N_ijk = Σ_r S_ir S_jr (S⁻¹)_rk / S_0r, as a fusion ring on {1, x}.
/// Throws MathError if a coefficient is not a non-negative integer.
FusionRing verlinde_ring(const FibModularData& data);
bool verlinde_check(const FibModularData& data);

/// Exponents m in {1,3,7,9} with ζ10^{-ℓm} = e^{πic/2} and twist weights
/// {−(m/5)|ε| mod 1} equal to `weights_mod_1` as multisets.
std::vector<int> fib_parameter_from_c(const Rational& c, int ell, const std::vector<Rational>& weights_mod_1);

}  // namespace fibkit
