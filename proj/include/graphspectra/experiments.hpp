#pragma once

#include <cstdint>
#include <vector>

#include "graphspectra/energy.hpp"
#include "graphspectra/graph.hpp"
#include "graphspectra/kernels.hpp"
#include "graphspectra/signal_model.hpp"
#include "graphspectra/spectrum.hpp"
#include "graphspectra/transform.hpp"
#include "graphspectra/warp.hpp"

namespace graphspectra {

/// Desk-scale stand-in graph for the road-network experiments: seeded
/// random geometric graph, radius grown until connected.
struct StandinOptions {
  int n = 500;
  double radius = 0.0;     // <= 0: automatic, near the connectivity threshold
  std::uint64_t seed = 11;  // default realization has a well-spread low spectrum
};

Graph standin_graph(const StandinOptions& options = {});

/// Root-mean-square distance between two warps on a uniform grid.
double warp_distance_l2(const WarpFunction& s, const WarpFunction& t,
                        int grid_points = 2001);

/// Sup-norm distance between two warps on a uniform grid.
double warp_distance_sup(const WarpFunction& s, const WarpFunction& t,
                         int grid_points = 2001);

/// Right edge of the support of the first band (grid scan with bisection
/// refinement).
double first_band_edge(const KernelSystem& system, int grid_points = 16384);

/// Energy-adaptation pipeline for one signal set: ESD (direct and
/// banded), both energy warps, and the warped Meyer-type systems.
struct AdaptedDesign {
  EnsembleEsd esd;
  EnsembleEsd banded;
  WarpFunction warp_exact;
  WarpFunction warp_approx;
  KernelSystem adapted_exact;
  KernelSystem adapted_approx;
};

struct AdaptOptions {
  int bands = 7;        // adapted system band count
  int estimate_bands = 100;
  double gamma = 2.73;
  BandedEsdOptions::Mode banded_mode = BandedEsdOptions::Mode::exact;
  int cheb_order = 80;
};

AdaptedDesign adapt_to_signals(const Laplacian& op, const Spectrum& spec,
                               const SignalSet& set,
                               const AdaptOptions& options = {});

/// Noise robustness sweep: distances from the noisy-ensemble energy warp
/// to the clean energy warp and to the spectrum warp, per SNR.
struct NoiseSweepPoint {
  double snr_db = 0.0;
  double dist_to_energy_warp = 0.0;    // RMS
  double dist_to_spectrum_warp = 0.0;  // RMS
  double sup_to_midpoint = 0.0;        // sup distance to the warp average
};

struct NoiseSweepResult {
  std::vector<NoiseSweepPoint> points;  // ascending SNR
  bool distances_nonincreasing = false;
};

NoiseSweepResult noise_sweep(const Laplacian& op, const Spectrum& spec,
                             const SignalSet& clean,
                             const std::vector<double>& snr_db,
                             std::uint64_t noise_seed,
                             const AdaptOptions& options = {});

}  // namespace graphspectra
