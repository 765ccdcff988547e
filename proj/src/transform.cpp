#include "graphspectra/transform.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace graphspectra {

namespace {

void check_sampled(const SampledSystem& system, const Spectrum& spec) {
  if (system.size() != spec.size()) {
    fail(errc::dimension_mismatch, "sampled system does not match spectrum");
  }
}

void check_parseval(const SampledSystem& system) {
  const Eigen::VectorXd g = system.values.array().square().colwise().sum();
  for (Eigen::Index l = 0; l < g.size(); ++l) {
    if (std::abs(g(l) - 1.0) > 1e-6) {
      fail(errc::not_parseval,
           "sampled system is not a Parseval frame at eigenvalue index " +
               std::to_string(l));
    }
  }
}

}  // namespace

Atom atom(const SampledSystem& system, const Spectrum& spec, int band,
          int center) {
  check_sampled(system, spec);
  if (band < 0 || band >= system.bands()) {
    fail(errc::index_out_of_range, "band index out of range");
  }
  if (center < 0 || center >= spec.size()) {
    fail(errc::index_out_of_range, "center vertex out of range");
  }
  Atom a;
  a.band = band;
  a.center = center;
  const Eigen::VectorXd weights =
      system.values.row(band).transpose().cwiseProduct(
          spec.eigenvectors.row(center).transpose());
  a.values = spec.eigenvectors * weights;
  return a;
}

Coefficients decompose_direct(const Eigen::VectorXd& f,
                              const SampledSystem& system,
                              const Spectrum& spec) {
  check_sampled(system, spec);
  if (f.size() != spec.size()) {
    fail(errc::dimension_mismatch, "signal does not match spectrum");
  }
  const Eigen::VectorXd hat = spec.gft(f);
  Coefficients c;
  c.mode = Coefficients::Mode::direct;
  c.values.resize(system.bands(), spec.size());
  for (int j = 0; j < system.bands(); ++j) {
    c.values.row(j) =
        (spec.eigenvectors *
         system.values.row(j).transpose().cwiseProduct(hat))
            .transpose();
  }
  return c;
}

Eigen::VectorXd reconstruct(const Coefficients& coeffs,
                            const SampledSystem& system, const Spectrum& spec) {
  check_sampled(system, spec);
  if (coeffs.bands() != system.bands() || coeffs.size() != spec.size()) {
    fail(errc::dimension_mismatch, "coefficients do not match the system");
  }
  check_parseval(system);
  Eigen::VectorXd hat = Eigen::VectorXd::Zero(spec.size());
  for (int j = 0; j < system.bands(); ++j) {
    const Eigen::VectorXd c_hat =
        spec.gft(coeffs.values.row(j).transpose());
    hat += system.values.row(j).transpose().cwiseProduct(c_hat);
  }
  return spec.eigenvectors * hat;
}

Coefficients decompose_cheb(const Eigen::VectorXd& f, const Laplacian& op,
                            const std::vector<ChebyshevFilter>& filters) {
  Coefficients c;
  c.mode = Coefficients::Mode::chebyshev;
  c.cheb_order = filters.empty() ? 0 : filters.front().order();
  c.values = cheb_apply_many(op, filters, f).transpose();
  return c;
}

Eigen::VectorXd band_energies(const Coefficients& coeffs) {
  const Eigen::VectorXd per_band =
      coeffs.values.array().square().rowwise().sum();
  const double total = per_band.sum();
  if (total <= 0.0) fail(errc::zero_signal, "coefficients carry no energy");
  return per_band / total;
}

Eigen::VectorXd ensemble_band_energies(const SignalSet& set,
                                       const SampledSystem& system,
                                       const Spectrum& spec, DemeanMode mode) {
  const SignalSet ready =
      set.normalized ? set : demean_normalize(set, spec, mode);
  Eigen::VectorXd mean = Eigen::VectorXd::Zero(system.bands());
  for (int s = 0; s < ready.count(); ++s) {
    mean += band_energies(decompose_direct(ready.signals.col(s), system, spec));
  }
  return mean / static_cast<double>(ready.count());
}

KernelSystem build_signal_adapted(const KernelSystem& prototype,
                                  const WarpFunction& warp) {
  return warp_system(prototype, warp);
}

KernelSystem merge_bands(const KernelSystem& system,
                         const std::vector<int>& group_sizes) {
  const int bands = system.bands();
  int total = 0;
  for (int size : group_sizes) {
    if (size < 1) fail(errc::invalid_parameters, "empty merge group");
    total += size;
  }
  if (total != bands) {
    fail(errc::invalid_parameters,
         "merge groups cover " + std::to_string(total) + " of " +
             std::to_string(bands) + " bands");
  }

  KernelSystem out;
  out.lambda_max = system.lambda_max;
  out.tight = system.tight;
  out.design = system.design;
  out.design.family = system.design.family.empty()
                          ? std::string("merged")
                          : "merged-" + system.design.family;
  out.design.bands = static_cast<int>(group_sizes.size());
  int first = 0;
  for (std::size_t g = 0; g < group_sizes.size(); ++g) {
    std::vector<ContinuousKernel> members(
        system.kernels.begin() + first,
        system.kernels.begin() + first + group_sizes[g]);
    first += group_sizes[g];
    out.kernels.emplace_back(
        [members](double lambda) {
          double acc = 0.0;
          for (const ContinuousKernel& k : members) {
            const double v = k(lambda);
            acc += v * v;
          }
          return std::sqrt(acc);
        },
        system.lambda_max, "m" + std::to_string(g + 1));
  }
  return out;
}

std::vector<int> coarse_band_partition(const Eigen::VectorXd& band_energy,
                                       int n_lower, int n_mid,
                                       double tail_fraction) {
  const int bands = static_cast<int>(band_energy.size());
  if (n_lower < 1 || n_mid < 1 || tail_fraction < 0.0 || tail_fraction >= 1.0) {
    fail(errc::invalid_parameters, "bad coarse partition parameters");
  }
  if (n_lower + n_mid + 1 > bands) {
    fail(errc::invalid_parameters, "not enough bands to partition");
  }
  const double total = band_energy.sum();
  if (total <= 0.0) fail(errc::invalid_parameters, "bands carry no energy");

  // Tail: the longest suffix holding at most tail_fraction of the energy,
  // at least one band, leaving room for the middle groups.
  int tail = 0;
  double tail_acc = 0.0;
  for (int i = bands - 1; i > n_lower; --i) {
    if (tail_acc + band_energy(i) > tail_fraction * total) break;
    tail_acc += band_energy(i);
    ++tail;
  }
  tail = std::max(tail, 1);
  tail = std::min(tail, bands - n_lower - n_mid);

  const int mid_first = n_lower;
  const int mid_count = bands - n_lower - tail;
  const double mid_total =
      band_energy.segment(mid_first, mid_count).sum();

  std::vector<int> sizes{n_lower};
  double acc = 0.0;
  int used = 0;
  for (int g = 1; g <= n_mid; ++g) {
    const double target = mid_total * static_cast<double>(g) /
                          static_cast<double>(n_mid);
    int size = 0;
    while (used + size < mid_count &&
           (acc + band_energy(mid_first + used + size) <= target ||
            size == 0)) {
      acc += band_energy(mid_first + used + size);
      ++size;
      if (mid_count - used - size <= n_mid - g) break;
    }
    if (g == n_mid) size = mid_count - used;  // sweep up the remainder
    sizes.push_back(size);
    used += size;
  }
  sizes.push_back(tail);
  return sizes;
}

}  // namespace graphspectra
