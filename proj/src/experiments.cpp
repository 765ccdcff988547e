#include "graphspectra/experiments.hpp"

#include <algorithm>
#include <cmath>

#include "graphspectra/rng.hpp"

namespace graphspectra {

Graph standin_graph(const StandinOptions& options) {
  double radius = options.radius;
  if (radius <= 0.0) {
    // Slightly above the connectivity threshold sqrt(ln n / (pi n)): sparse
    // enough for a road-like spectrum, dense enough to avoid near-cut
    // bottlenecks that concentrate diffused energy on single eigenvectors.
    const double n = static_cast<double>(options.n);
    radius = 1.35 * std::sqrt(std::log(n) / (3.14159265358979323846 * n));
  }
  return random_geometric_graph(options.n, radius, options.seed);
}

double warp_distance_l2(const WarpFunction& s, const WarpFunction& t,
                        int grid_points) {
  if (grid_points < 2) fail(errc::invalid_parameters, "grid too small");
  const double lmax = std::max(s.lambda_max(), t.lambda_max());
  double acc = 0.0;
  for (int i = 0; i < grid_points; ++i) {
    const double lambda =
        lmax * static_cast<double>(i) / static_cast<double>(grid_points - 1);
    const double d = s(lambda) - t(lambda);
    acc += d * d;
  }
  return std::sqrt(acc / static_cast<double>(grid_points));
}

double warp_distance_sup(const WarpFunction& s, const WarpFunction& t,
                         int grid_points) {
  if (grid_points < 2) fail(errc::invalid_parameters, "grid too small");
  const double lmax = std::max(s.lambda_max(), t.lambda_max());
  double sup = 0.0;
  for (int i = 0; i < grid_points; ++i) {
    const double lambda =
        lmax * static_cast<double>(i) / static_cast<double>(grid_points - 1);
    sup = std::max(sup, std::abs(s(lambda) - t(lambda)));
  }
  return sup;
}

double first_band_edge(const KernelSystem& system, int grid_points) {
  if (system.bands() == 0) fail(errc::invalid_parameters, "empty system");
  const ContinuousKernel& k = system.kernels.front();
  const double lmax = system.lambda_max;
  const double threshold = 1e-12;
  int last_nonzero = -1;
  for (int i = grid_points - 1; i >= 0; --i) {
    const double lambda =
        lmax * static_cast<double>(i) / static_cast<double>(grid_points - 1);
    if (std::abs(k(lambda)) > threshold) {
      last_nonzero = i;
      break;
    }
  }
  if (last_nonzero < 0) return 0.0;
  if (last_nonzero == grid_points - 1) return lmax;
  double lo = lmax * static_cast<double>(last_nonzero) /
              static_cast<double>(grid_points - 1);
  double hi = lmax * static_cast<double>(last_nonzero + 1) /
              static_cast<double>(grid_points - 1);
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (std::abs(k(mid)) > threshold) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

AdaptedDesign adapt_to_signals(const Laplacian& op, const Spectrum& spec,
                               const SignalSet& set,
                               const AdaptOptions& options) {
  AdaptedDesign design;
  design.esd = esd_direct(set, spec);

  BandedEsdOptions banded_options;
  banded_options.bands = options.estimate_bands;
  banded_options.mode = options.banded_mode;
  banded_options.cheb_order = options.cheb_order;
  design.banded = esd_banded(set, op, banded_options, &spec);

  design.warp_exact = energy_warp_exact(design.esd, spec);
  design.warp_approx = energy_warp_approx(design.banded);

  const KernelSystem proto_exact =
      umt_system(options.bands, spec.lambda_max(), options.gamma);
  design.adapted_exact = build_signal_adapted(proto_exact, design.warp_exact);

  const KernelSystem proto_approx =
      umt_system(options.bands, design.banded.lambda_max, options.gamma);
  design.adapted_approx =
      build_signal_adapted(proto_approx, design.warp_approx);
  return design;
}

NoiseSweepResult noise_sweep(const Laplacian& op, const Spectrum& spec,
                             const SignalSet& clean,
                             const std::vector<double>& snr_db,
                             std::uint64_t noise_seed,
                             const AdaptOptions& options) {
  if (snr_db.empty()) fail(errc::invalid_parameters, "empty SNR list");

  BandedEsdOptions banded_options;
  banded_options.bands = options.estimate_bands;
  banded_options.mode = options.banded_mode;
  banded_options.cheb_order = options.cheb_order;

  const WarpFunction t_signal =
      energy_warp_approx(esd_banded(clean, op, banded_options, &spec));
  const WarpFunction t_spectrum = spectrum_warp(spec);
  const double lmax = spec.lambda_max();

  std::vector<double> sorted = snr_db;
  std::sort(sorted.begin(), sorted.end());

  NoiseSweepResult result;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const SignalSet noisy =
        add_noise(clean, sorted[i], mix_seed(noise_seed, i));
    const WarpFunction t_noisy =
        energy_warp_approx(esd_banded(noisy, op, banded_options, &spec));

    NoiseSweepPoint point;
    point.snr_db = sorted[i];
    point.dist_to_energy_warp = warp_distance_l2(t_noisy, t_signal);
    point.dist_to_spectrum_warp = warp_distance_l2(t_noisy, t_spectrum);
    double sup = 0.0;
    for (int g = 0; g < 2001; ++g) {
      const double lambda = lmax * static_cast<double>(g) / 2000.0;
      const double mid = 0.5 * (t_signal(lambda) + t_spectrum(lambda));
      sup = std::max(sup, std::abs(t_noisy(lambda) - mid));
    }
    point.sup_to_midpoint = sup;
    result.points.push_back(point);
  }

  result.distances_nonincreasing = true;
  for (std::size_t i = 1; i < result.points.size(); ++i) {
    if (result.points[i].dist_to_energy_warp >
        result.points[i - 1].dist_to_energy_warp + 1e-12) {
      result.distances_nonincreasing = false;
      break;
    }
  }
  return result;
}

}  // namespace graphspectra
