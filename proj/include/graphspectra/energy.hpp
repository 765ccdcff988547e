#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "graphspectra/graph.hpp"
#include "graphspectra/interpolate.hpp"
#include "graphspectra/kernels.hpp"
#include "graphspectra/spectrum.hpp"

namespace graphspectra {

/// A set of graph signals, one per column, with per-signal labels.
struct SignalSet {
  Eigen::MatrixXd signals;  // N x count
  std::vector<std::string> labels;
  bool normalized = false;

  int size() const { return static_cast<int>(signals.rows()); }
  int count() const { return static_cast<int>(signals.cols()); }
};

/// Low-frequency removal used before energy estimation. The direct rule
/// removes the projections onto the first 1 + m_{lambda_1} eigenvectors;
/// null_only removes only the null eigenvector (the rule available
/// without an eigendecomposition).
enum class DemeanMode { direct_rule, null_only };

/// Removes the low-frequency components of each signal and rescales it to
/// unit norm. Throws errc::degenerate_signal if a residual vanishes.
SignalSet demean_normalize(const SignalSet& set, const Spectrum& spec,
                           DemeanMode mode = DemeanMode::direct_rule);

/// Ensemble energy spectral density. Direct form: mean squared GFT
/// coefficients over the set, one value per eigenvalue index. Banded
/// form: mean squared band-filter output norms, one value per band, with
/// the band abscissas of the estimation system.
struct EnsembleEsd {
  enum class Kind { direct, banded } kind = Kind::direct;
  Eigen::VectorXd values;
  Eigen::VectorXd abscissas;  // eigenvalues (direct) or band abscissas
  double lambda_max = 0.0;
};

/// Exact per-eigenvalue ESD; demeans and normalizes internally when the
/// set is not already normalized.
EnsembleEsd esd_direct(const SignalSet& set, const Spectrum& spec,
                       DemeanMode mode = DemeanMode::direct_rule);

struct BandedEsdOptions {
  int bands = 100;   // estimation-system band count
  int degree = 3;    // B-spline degree of the estimation system
  enum class Mode { exact, chebyshev } mode = Mode::exact;
  int cheb_order = 80;
};

/// Banded ESD through a uniform B-spline estimation system. Exact mode
/// filters through the sampled spectrum (and uses the direct demean
/// rule); chebyshev mode runs matrix-free with null-only demeaning and a
/// lambda_max estimate.
EnsembleEsd esd_banded(const SignalSet& set, const Laplacian& op,
                       const BandedEsdOptions& options = {},
                       const Spectrum* spec = nullptr);

/// Smooth estimate of the spectral energy distribution: shape-preserving
/// cubic through (0, 0) and the banded points. Useful for plotting and
/// for sampling at arbitrary lambda.
CubicHermite esd_interpolate(const EnsembleEsd& banded);

/// Squared L2 norm of a kernel over its domain (composite Simpson with
/// `intervals` subintervals, intervals >= 16, even).
double kernel_l2_norm_sq(const ContinuousKernel& kernel, int intervals = 4096);

/// Cumulative-norm abscissas of a system: omega_i = lambda_max * (sum of
/// squared L2 norms of bands 1..i) / (total over all bands).
std::vector<double> band_abscissas(const KernelSystem& system,
                                   int intervals = 4096);

}  // namespace graphspectra
