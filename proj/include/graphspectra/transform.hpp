#pragma once

#include <Eigen/Dense>
#include <vector>

#include "graphspectra/chebyshev.hpp"
#include "graphspectra/energy.hpp"
#include "graphspectra/kernels.hpp"
#include "graphspectra/spectrum.hpp"

namespace graphspectra {

/// Filter-bank coefficients of one signal: row j holds the output of band
/// j at every vertex.
struct Coefficients {
  enum class Mode { direct, chebyshev } mode = Mode::direct;
  Eigen::MatrixXd values;  // bands x N
  int cheb_order = 0;

  int bands() const { return static_cast<int>(values.rows()); }
  int size() const { return static_cast<int>(values.cols()); }
};

/// One dictionary atom: band kernel modulated onto a center vertex.
struct Atom {
  int band = 0;
  int center = 0;
  Eigen::VectorXd values;
};

/// psi_{j,m}[n] = sum_l k_j(lambda_l) chi_l[m] chi_l[n].
Atom atom(const SampledSystem& system, const Spectrum& spec, int band,
          int center);

/// Exact analysis through the sampled spectrum: c_j = k_j(L) f.
Coefficients decompose_direct(const Eigen::VectorXd& f,
                              const SampledSystem& system,
                              const Spectrum& spec);

/// Synthesis by the adjoint. For a Parseval (tight, bound one) system
/// this inverts decompose_direct exactly; throws errc::not_parseval when
/// the sampled system is not a Parseval frame.
Eigen::VectorXd reconstruct(const Coefficients& coeffs,
                            const SampledSystem& system, const Spectrum& spec);

/// Matrix-free analysis: every band applied by Chebyshev recurrence.
Coefficients decompose_cheb(const Eigen::VectorXd& f, const Laplacian& op,
                            const std::vector<ChebyshevFilter>& filters);

/// Fraction of coefficient energy captured per band (sums to one).
Eigen::VectorXd band_energies(const Coefficients& coeffs);

/// Mean per-band energy fraction over a signal set (each signal demeaned
/// and normalized first when the set is raw).
Eigen::VectorXd ensemble_band_energies(const SignalSet& set,
                                       const SampledSystem& system,
                                       const Spectrum& spec,
                                       DemeanMode mode = DemeanMode::direct_rule);

/// Signal-adapted system: every prototype band composed with the warp.
KernelSystem build_signal_adapted(const KernelSystem& prototype,
                                  const WarpFunction& warp);

/// Coarse system from contiguous groups of bands; each merged kernel is
/// the square root of the summed squared member kernels, so tightness is
/// preserved. group_sizes must sum to the band count.
KernelSystem merge_bands(const KernelSystem& system,
                         const std::vector<int>& group_sizes);

/// Contiguous grouping of a fine system driven by its banded energies:
/// a fixed low-band group, a tail capturing at most tail_fraction of the
/// energy, and n_mid groups splitting the middle at energy quantiles.
std::vector<int> coarse_band_partition(const Eigen::VectorXd& band_energy,
                                       int n_lower, int n_mid,
                                       double tail_fraction);

}  // namespace graphspectra
