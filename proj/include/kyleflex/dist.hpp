#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>

namespace kyleflex {

using Eigen::VectorXd;

// ---------------------------------------------------------------------------
// One-dimensional laws
// ---------------------------------------------------------------------------

/// Finite discrete law with strictly increasing atoms v_1 < ... < v_N.
struct DiscreteDist {
  VectorXd atoms;
  VectorXd probs;

  DiscreteDist(VectorXd atoms_, VectorXd probs_);

  int size() const { return static_cast<int>(atoms.size()); }
  double mean() const { return atoms.dot(probs); }
  double variance() const;
};

/// Continuous law tabulated on a strictly increasing node grid.
/// density holds nonnegative values at the nodes; cdf is the cumulative
/// trapezoid of density, so cdf[i+1]-cdf[i] equals the panel trapezoid
/// exactly and cdf.back() == 1.
struct GridDist {
  VectorXd nodes;
  VectorXd density;
  VectorXd cdf;

  // normalize=true rescales density so the trapezoidal integral is exactly 1.
  GridDist(VectorXd nodes_, VectorXd density_, bool normalize = false);

  int size() const { return static_cast<int>(nodes.size()); }
  double mean() const;
  double variance() const;
  double density_at(double v) const;  // linear interpolation, 0 outside
  double cdf_at(double v) const;
};

struct NormalLaw {
  double mean = 0.0;
  double std = 1.0;

  NormalLaw() = default;
  NormalLaw(double mean_, double std_);
};

// ---------------------------------------------------------------------------
// Standard-normal special functions
// ---------------------------------------------------------------------------

double normal_pdf(double x);
double normal_cdf(double x);

/// Inverse of normal_cdf on (0,1); rational initial guess polished with two
/// Newton steps. Throws std::domain_error outside (0,1).
double normal_quantile(double u);

// ---------------------------------------------------------------------------
// Quadrature over a standard normal variable
// ---------------------------------------------------------------------------

/// Nodes/weights in standard-normal units: sum_i w_i f(x_i) ~ E[f(X)], X~N(0,1).
struct QuadratureRule {
  VectorXd nodes;
  VectorXd weights;
  std::string kind;
};

/// Gauss-Hermite rule transformed to N(0,1) (Golub-Welsch on the
/// probabilists' Jacobi matrix; weights sum to 1 exactly up to rounding).
QuadratureRule gauss_hermite_rule(int n);

/// phi-weighted composite trapezoid on [-half_width, half_width].
QuadratureRule trapezoid_rule(int n = 4001, double half_width = 8.0);

/// Composite Gauss-Legendre panels on [-half_width, half_width] with panel
/// edges inserted at the given breakpoints and geometric refinement around
/// them. Robust for integrands with narrow features (small-lambda kernels).
QuadratureRule panel_gauss_rule(const std::vector<double>& breakpoints,
                                double half_width = 10.0,
                                int points_per_panel = 32);

/// sum_i w_i f(law.mean + law.std * x_i). Throws std::runtime_error with the
/// node index if f evaluates non-finite.
double gaussian_expectation(const std::function<double(double)>& f,
                            const NormalLaw& law, const QuadratureRule& rule);

/// Closed form of int_a^b G^{-1}(u) du for G = N(mean, std^2):
///   std*(phi(Phi^{-1}(a)) - phi(Phi^{-1}(b))) + mean*(b-a),
/// with the endpoint limits phi(Phi^{-1}(0)) = phi(Phi^{-1}(1)) = 0.
double partial_quantile_integral(double a, double b, const NormalLaw& law);

// Trapezoid weights for integration over an arbitrary strictly increasing
// node grid (shared by GridDist consumers).
VectorXd trapezoid_weights(const VectorXd& nodes);

}  // namespace kyleflex
