#pragma once

#include <vector>

#include "graphspectra/interpolate.hpp"

namespace graphspectra {

struct Spectrum;
struct EnsembleEsd;
struct KernelSystem;

/// Nondecreasing continuous map of [0, lambda_max] onto itself, stored as
/// a monotone piecewise cubic through its knots. Warping a kernel system
/// through such a map preserves Parseval tightness pointwise.
class WarpFunction {
 public:
  WarpFunction() = default;
  WarpFunction(CubicHermite curve, double lambda_max);

  double operator()(double lambda) const;
  double lambda_max() const { return lambda_max_; }
  const CubicHermite& curve() const { return curve_; }

  /// Leftmost preimage of y under the warp (bisection on the monotone
  /// curve). y outside [0, lambda_max] clamps.
  double preimage(double y) const;

 private:
  CubicHermite curve_;
  double lambda_max_ = 0.0;
};

/// Monotone cubic through the given knots (Fritsch-Carlson slopes).
/// Requires strictly increasing x and nondecreasing y spanning
/// [0, lambda_max] on both axes; first/last knots are the domain ends.
WarpFunction monotone_cubic(std::vector<double> x, std::vector<double> y);

WarpFunction identity_warp(double lambda_max);

/// Warp whose knot ordinates are cumulative ensemble spectral energy,
/// placed at the distinct eigenvalues (multiplicities share the group
/// mean of their cumulative sums). Takes a direct-mode ESD.
WarpFunction energy_warp_exact(const EnsembleEsd& esd, const Spectrum& spec);

/// Eigendecomposition-free variant: knots at the estimation-system band
/// abscissas with cumulative banded energies as ordinates. Takes a
/// banded-mode ESD.
WarpFunction energy_warp_approx(const EnsembleEsd& esd);

/// Warp through (eigenvalue, rescaled rank); adapts a system to the
/// spectral distribution alone.
WarpFunction spectrum_warp(const Spectrum& spec);

/// Two-slope piecewise-linear warp sending lambda_pivot to
/// lambda_max * n_lower / n_total, box-smoothed around the pivot on a
/// dense grid, endpoints re-pinned, then refit as a monotone cubic.
/// smooth_width <= 0 selects the default 0.4 * lambda_pivot.
WarpFunction pivot_warp(double lambda_pivot, int n_lower, int n_total,
                        double lambda_max, double smooth_width = -1.0,
                        int grid_points = 8193);

}  // namespace graphspectra
