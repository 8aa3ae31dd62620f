#pragma once

#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rsing/poly2.hpp"

namespace rsing {

/// Affine viewport: the unit square [-1,1]^2 maps to (cx + sx*window*u, cy + sy*window*v).
struct Frame {
  double cx = 0, cy = 0, sx = 1, sy = 1;
};

struct FamilySpec {
  std::string provenance;
  /// F_t in plain (x, y) coordinates.
  std::function<RealPoly2(double)> at;
  std::function<Frame(double)> frame;
  std::optional<int> expected_nodes;
  /// Number of points where the traced curve meets the window boundary, when known.
  std::optional<int> expected_boundary;
  /// Multiplicity of the singularity at t = 0.
  int multiplicity = 0;
  /// Pairs (alpha, beta) of complex conjugate tangents x + (alpha +- i beta) y = 0.
  std::vector<std::pair<double, double>> tangents;
  double default_t = 0.1;
  double t_max = 1.0;
  double window = 1.35;
};

/// Branch w^ = sum a_n w^n (n > 1) tangent to w = 0.
struct SmoothBranchData {
  std::map<int, std::complex<double>> coeffs;
};

/// prod_i (|w^ - sum a_in w^n|^2 - t^2).
FamilySpec family_smooth_conjugate(const std::vector<SmoothBranchData>& branches, double alpha, double beta);

/// First index at which the two coefficient lists differ (missing entries count as 0).
int first_difference(const SmoothBranchData& a, const SmoothBranchData& b);

struct ChebyshevLike {
  /// Coefficients, lowest degree first; monic of degree p.
  std::vector<double> coeffs;
  /// Critical points ascending, and the values there.
  std::vector<double> critical_points;
  std::vector<double> critical_values;
};

/// Monic degree-p polynomial with zero root sum whose critical values alternate between
/// -2c and +2c, the rightmost being -2c.
ChebyshevLike chebyshev_like(int p, double c);

struct PairCoefficients {
  double tau = 0;
  /// b_0 .. b_{p-2}
  std::vector<double> b;
  std::vector<double> critical_points;
  double residual = 0;
};

/// Solves for b_0..b_{p-2} so that (1 + tau s)^{-(p+q)/2} (s^p + sum b_i s^i) has its p-1
/// critical values exactly at +-2|a|, continuing from the Chebyshev-like solution at tau = 0.
PairCoefficients solve_pair_coefficients(int p, int q, double abs_a, double tau);

/// (w w^ - t^2)^p + sum_i t^{(p-i)(p+q)/p} b_i(t) (w w^ - t^2)^i - a w^^{p+q} - conj(a) w^{p+q}.
FamilySpec family_one_puiseux_pair(int p, int q, std::complex<double> a, double alpha = 0, double beta = 1);

/// The t = 0 member written out directly: (w w^)^p - a w^^{p+q} - conj(a) w^{p+q}.
RealPoly2 one_pair_germ(int p, int q, std::complex<double> a, double alpha, double beta);

/// a x + b y
struct LinearForm {
  double a = 0, b = 0;
};
/// A x^2 + B x y + C y^2, positive definite
struct QuadraticForm {
  double A = 0, B = 0, C = 0;
};

/// prod_j (l_j - c_j sqrt t) * prod_i (q_i - b_i t). Empty shifts select defaults.
FamilySpec family_semiquasi_pp(const std::vector<LinearForm>& lines, const std::vector<QuadraticForm>& quadrics,
                               const std::vector<double>& b, std::vector<double> shifts = {});

/// Parts are multiplied with t replaced by t sqrt(gamma_i) in part i.
FamilySpec family_ellipse_composition(const std::vector<FamilySpec>& parts, const std::vector<double>& gamma);

/// (y - t x^2)^2 - prod_{k=1}^n (x - k t)^2
FamilySpec family_demo_l16(int n);

/// A fixed polynomial (no parameter), viewed in the square of half-width `half_width` around
/// the origin; no expected node count.
FamilySpec family_from_polynomial(const RealPoly2& p, double half_width);

}  // namespace rsing
