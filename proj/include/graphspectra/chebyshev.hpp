#pragma once

#include <Eigen/Dense>
#include <vector>

#include "graphspectra/graph.hpp"
#include "graphspectra/kernels.hpp"

namespace graphspectra {

/// Truncated shifted-Chebyshev expansion of a spectral kernel on
/// [0, lambda_max]. coeffs holds d_0..d_M; the represented polynomial is
/// d_0/2 + sum_{p>=1} d_p C_p((lambda - b)/b) with b = lambda_max/2.
struct ChebyshevFilter {
  Eigen::VectorXd coeffs;
  double lambda_max = 0.0;

  int order() const { return static_cast<int>(coeffs.size()) - 1; }
  double half_width() const { return 0.5 * lambda_max; }
};

/// Expansion coefficients by trapezoidal quadrature of
/// (2/pi) integral_0^pi cos(p t) K(b(cos t + 1)) dt with quad_points
/// samples (default 8*order+1, required >= 8*order). order >= 1.
ChebyshevFilter cheb_coeffs(const ContinuousKernel& kernel, int order,
                            double lambda_max, int quad_points = -1);

/// Evaluates the truncated expansion at lambda (three-term recurrence).
/// lambda must lie in [0, lambda_max] up to a relative 1e-12 slack.
double cheb_eval(const ChebyshevFilter& filter, double lambda);

/// Applies the filter polynomial of the Laplacian to a signal using the
/// shifted recurrence; never forms a dense operator.
Eigen::VectorXd cheb_apply(const Laplacian& op, const ChebyshevFilter& filter,
                           const Eigen::VectorXd& f);

/// Applies several filters sharing one domain in a single recurrence
/// sweep; column j of the result is filter j applied to f.
Eigen::MatrixXd cheb_apply_many(const Laplacian& op,
                                const std::vector<ChebyshevFilter>& filters,
                                const Eigen::VectorXd& f);

/// Coefficients for every band of a system. lambda_max <= 0 takes the
/// system domain.
std::vector<ChebyshevFilter> cheb_filters(const KernelSystem& system,
                                          int order, double lambda_max = -1.0);

}  // namespace graphspectra
