#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "graphspectra/spectrum.hpp"
#include "graphspectra/warp.hpp"

namespace graphspectra {

/// Real spectral kernel on [0, lambda_max]; evaluates to 0 outside the
/// domain (with a relative 1e-12 slack at the right end for roundoff).
class ContinuousKernel {
 public:
  ContinuousKernel() = default;
  ContinuousKernel(std::function<double(double)> fn, double lambda_max,
                   std::string label = {});

  double operator()(double lambda) const;
  double lambda_max() const { return lambda_max_; }
  const std::string& label() const { return label_; }

 private:
  std::function<double(double)> fn_;
  double lambda_max_ = 0.0;
  std::string label_;
};

/// Construction record carried by a system for metadata export.
struct SystemDesign {
  std::string family;  // "bspline", "umt", "warped", "merged", "custom"
  int bands = 0;
  int degree = -1;                           // B-spline degree
  double gamma = 0.0, a = 0.0, delta = 0.0;  // uniform Meyer-type geometry
  std::vector<std::pair<double, double>> warp_knots;
};

/// Ordered bank of spectral kernels sharing one domain. `tight` records
/// that the construction guarantees sum_j K_j^2 = 1.
struct KernelSystem {
  std::vector<ContinuousKernel> kernels;
  double lambda_max = 0.0;
  bool tight = false;
  SystemDesign design;

  int bands() const { return static_cast<int>(kernels.size()); }
  const ContinuousKernel& kernel(int j) const { return kernels.at(j); }
};

/// Centered cardinal B-spline of the given degree, the (degree+1)-fold
/// self-convolution of the unit box. Degree must lie in [0, 25].
double bspline(int degree, double x);

/// Meyer auxiliary polynomial x^4(35 - 84x + 70x^2 - 20x^3), clamped to 0
/// below x=0 and 1 above x=1.
double meyer_aux(double x);

/// Parseval system of `bands` square-root B-spline kernels on
/// [0, lambda_max]: interior kernels are integer shifts on the knot axis
/// lambda (bands-1) / lambda_max, end kernels fold the out-of-range
/// shifts under the square root. Degree >= 2.
KernelSystem bspline_system(int bands, int degree, double lambda_max);

struct UmtGeometry {
  double a = 0.0;
  double delta = 0.0;
  double gamma = 0.0;
};

/// Transition geometry of the uniform Meyer-type system:
/// a = lambda_max / (J*gamma - J - gamma + 3), delta = (gamma - 1) a.
UmtGeometry umt_geometry(int bands, double lambda_max, double gamma);

/// Uniform Meyer-type Parseval system: flat ends, sine/cosine crossfades
/// through the Meyer auxiliary polynomial, uniform translates inside.
/// Requires bands >= 2 and gamma > 1.
KernelSystem umt_system(int bands, double lambda_max, double gamma = 2.73);

struct GammaSolveOptions {
  double gamma_lo = 1.0;
  double gamma_hi = 5.0;
  double gamma_step = 1e-2;
  double quad_step = 1e-4;
  double lambda_max = 2.0;
  int bands = 5;
};

/// Grid search for the aspect ratio that equalizes interior band
/// integrals: minimizes |integral of the rising transition - a| over the
/// gamma grid. The result is independent of lambda_max and band count.
double solve_gamma(const GammaSolveOptions& options = {});

/// Composes every kernel with the warp: K_j' = K_j (T(lambda)).
/// Tightness is preserved. Domain endpoints of warp and system must agree.
KernelSystem warp_system(const KernelSystem& system, const WarpFunction& warp);

struct FrameBounds {
  double b1 = 0.0;  // min over the grid of G(lambda)
  double b2 = 0.0;  // max over the grid of G(lambda)
  double max_deviation_from_one = 0.0;
};

/// Evaluates G(lambda) = sum_j K_j(lambda)^2 on a uniform grid
/// (grid_points >= 1000) and reports the frame bounds.
FrameBounds frame_analysis(const KernelSystem& system, int grid_points = 10000);

/// Kernel values on an arbitrary grid, one row per band.
Eigen::MatrixXd sample_grid(const KernelSystem& system,
                            const Eigen::VectorXd& grid);

/// Kernel system sampled at the eigenvalues of a spectrum.
struct SampledSystem {
  Eigen::MatrixXd values;  // bands x N
  double lambda_max = 0.0;

  int bands() const { return static_cast<int>(values.rows()); }
  int size() const { return static_cast<int>(values.cols()); }
};

SampledSystem sample_system(const KernelSystem& system, const Spectrum& spec);

}  // namespace graphspectra
