#include "graphspectra/energy.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "detail_parallel.hpp"
#include "graphspectra/chebyshev.hpp"

namespace graphspectra {

namespace {

int removed_component_count(const Spectrum& spec, DemeanMode mode) {
  const int null_mult = spec.groups.front().multiplicity;
  return mode == DemeanMode::direct_rule ? null_mult + 1 : null_mult;
}

/// Analytically known null eigenvector of the Laplacian, unit norm.
Eigen::VectorXd null_vector(const Laplacian& op) {
  const int n = op.size();
  Eigen::VectorXd u(n);
  if (op.kind() == LaplacianKind::combinatorial) {
    u.setConstant(1.0);
  } else {
    u = op.degrees().array().sqrt();
  }
  u.normalize();
  return u;
}

}  // namespace

SignalSet demean_normalize(const SignalSet& set, const Spectrum& spec,
                           DemeanMode mode) {
  if (set.size() != spec.size()) {
    fail(errc::dimension_mismatch, "signals do not match the spectrum size");
  }
  if (set.count() == 0) fail(errc::invalid_parameters, "empty signal set");
  const int remove = removed_component_count(spec, mode);
  if (remove >= set.size()) {
    fail(errc::degenerate_signal, "demeaning would remove every component");
  }

  SignalSet out = set;
  out.normalized = true;
  const Eigen::MatrixXd& basis = spec.eigenvectors;
  for (int s = 0; s < set.count(); ++s) {
    Eigen::VectorXd f = set.signals.col(s);
    const double orig_norm = f.norm();
    if (orig_norm == 0.0) {
      fail(errc::zero_signal, "signal " + std::to_string(s) + " is zero");
    }
    for (int r = 0; r < remove; ++r) {
      f -= basis.col(r).dot(f) * basis.col(r);
    }
    const double norm = f.norm();
    if (norm <= 1e-12 * orig_norm) {
      fail(errc::degenerate_signal,
           "signal " + std::to_string(s) + " vanishes after demeaning");
    }
    out.signals.col(s) = f / norm;
  }
  return out;
}

EnsembleEsd esd_direct(const SignalSet& set, const Spectrum& spec,
                       DemeanMode mode) {
  const SignalSet ready =
      set.normalized ? set : demean_normalize(set, spec, mode);
  const int n = spec.size();

  Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
  for (int s = 0; s < ready.count(); ++s) {
    const Eigen::VectorXd hat = spec.gft(ready.signals.col(s));
    e += hat.array().square().matrix();
  }
  e /= static_cast<double>(ready.count());
  if (!set.normalized) {
    // The removed projections leave roundoff dust; report exact zeros.
    for (int r = 0; r < removed_component_count(spec, mode); ++r) e(r) = 0.0;
  }

  EnsembleEsd esd;
  esd.kind = EnsembleEsd::Kind::direct;
  esd.values = std::move(e);
  esd.abscissas = spec.eigenvalues;
  esd.lambda_max = spec.lambda_max();
  return esd;
}

EnsembleEsd esd_banded(const SignalSet& set, const Laplacian& op,
                       const BandedEsdOptions& options, const Spectrum* spec) {
  if (options.bands < 2) fail(errc::invalid_parameters, "need >= 2 bands");
  if (set.count() == 0) fail(errc::invalid_parameters, "empty signal set");
  if (set.size() != op.size()) {
    fail(errc::dimension_mismatch, "signals do not match the operator size");
  }

  EnsembleEsd esd;
  esd.kind = EnsembleEsd::Kind::banded;

  if (options.mode == BandedEsdOptions::Mode::exact) {
    Spectrum local;
    if (!spec) local = full_spectrum(op);
    const Spectrum& sp = spec ? *spec : local;
    const KernelSystem estimation =
        bspline_system(options.bands, options.degree, sp.lambda_max());
    const SampledSystem sampled = sample_system(estimation, sp);
    const EnsembleEsd direct = esd_direct(set, sp);
    esd.values = sampled.values.array().square().matrix() * direct.values;
    esd.lambda_max = sp.lambda_max();
    const auto omegas = band_abscissas(estimation);
    esd.abscissas = Eigen::Map<const Eigen::VectorXd>(
        omegas.data(), static_cast<Eigen::Index>(omegas.size()));
    return esd;
  }

  // Matrix-free branch: estimated domain end, null-only demeaning.
  // Band energies are quadratic forms <f, K_i^2(L) f>, so the expansion
  // targets the squared kernels (plain splines, no square-root kinks) and
  // contracts their coefficients with Chebyshev moments of each signal.
  const double lmax = estimate_lambda_max(op);
  const KernelSystem estimation =
      bspline_system(options.bands, options.degree, lmax);
  std::vector<ChebyshevFilter> filters;
  filters.reserve(estimation.kernels.size());
  for (const ContinuousKernel& kernel : estimation.kernels) {
    ContinuousKernel squared(
        [kernel](double x) {
          const double v = kernel(x);
          return v * v;
        },
        lmax);
    filters.push_back(cheb_coeffs(squared, options.cheb_order, lmax));
  }
  const Eigen::VectorXd u = null_vector(op);
  const double b = 0.5 * lmax;

  const int n_signals = set.count();
  const int cap = detail::thread_cap();
  std::vector<Eigen::VectorXd> partial(
      static_cast<std::size_t>(std::max(1, std::min(cap, n_signals))),
      Eigen::VectorXd::Zero(options.bands));
  detail::parallel_chunks(
      n_signals, cap, [&](int chunk, int begin, int end) {
        for (int s = begin; s < end; ++s) {
          Eigen::VectorXd f = set.signals.col(s);
          const double orig_norm = f.norm();
          if (orig_norm == 0.0) fail(errc::zero_signal, "zero signal in set");
          f -= u.dot(f) * u;
          const double norm = f.norm();
          if (norm <= 1e-12 * orig_norm) {
            fail(errc::degenerate_signal, "signal vanishes after demeaning");
          }
          f /= norm;

          Eigen::VectorXd moments(options.cheb_order + 1);
          Eigen::VectorXd t_prev = f;
          Eigen::VectorXd t_cur = (op.apply(f) - b * f) / b;
          moments(0) = f.dot(t_prev);
          moments(1) = f.dot(t_cur);
          for (int k = 2; k <= options.cheb_order; ++k) {
            Eigen::VectorXd t_next =
                2.0 * (op.apply(t_cur) - b * t_cur) / b - t_prev;
            moments(k) = f.dot(t_next);
            t_prev = std::move(t_cur);
            t_cur = std::move(t_next);
          }
          for (int i = 0; i < options.bands; ++i) {
            const Eigen::VectorXd& c = filters[static_cast<std::size_t>(i)].coeffs;
            partial[chunk](i) +=
                0.5 * c(0) * moments(0) + c.tail(options.cheb_order).dot(moments.tail(options.cheb_order));
          }
        }
      });
  Eigen::VectorXd a = Eigen::VectorXd::Zero(options.bands);
  for (const Eigen::VectorXd& part : partial) a += part;
  a /= static_cast<double>(n_signals);
  a = a.cwiseMax(0.0);

  esd.values = std::move(a);
  esd.lambda_max = lmax;
  const auto omegas = band_abscissas(estimation);
  esd.abscissas = Eigen::Map<const Eigen::VectorXd>(
      omegas.data(), static_cast<Eigen::Index>(omegas.size()));
  return esd;
}

CubicHermite esd_interpolate(const EnsembleEsd& banded) {
  if (banded.kind != EnsembleEsd::Kind::banded) {
    fail(errc::invalid_parameters, "interpolation needs a banded ESD");
  }
  std::vector<double> x{0.0}, y{0.0};
  for (Eigen::Index i = 0; i < banded.values.size(); ++i) {
    x.push_back(banded.abscissas(i));
    y.push_back(banded.values(i));
  }
  return pchip(std::move(x), std::move(y));
}

double kernel_l2_norm_sq(const ContinuousKernel& kernel, int intervals) {
  if (intervals < 16 || intervals % 2 != 0) {
    fail(errc::invalid_parameters, "Simpson rule needs an even count >= 16");
  }
  const double lmax = kernel.lambda_max();
  const double h = lmax / static_cast<double>(intervals);
  auto sq = [&kernel](double t) {
    const double v = kernel(t);
    return v * v;
  };
  double acc = sq(0.0) + sq(lmax);
  for (int i = 1; i < intervals; ++i) {
    acc += sq(h * static_cast<double>(i)) * (i % 2 ? 4.0 : 2.0);
  }
  return acc * h / 3.0;
}

std::vector<double> band_abscissas(const KernelSystem& system, int intervals) {
  const int bands = system.bands();
  if (bands == 0) fail(errc::invalid_parameters, "empty system");
  std::vector<double> norms(bands);
  double total = 0.0;
  for (int j = 0; j < bands; ++j) {
    norms[j] = kernel_l2_norm_sq(system.kernels[j], intervals);
    total += norms[j];
  }
  if (total <= 0.0) fail(errc::invalid_parameters, "system has no energy");
  std::vector<double> omegas(bands);
  double acc = 0.0;
  for (int j = 0; j < bands; ++j) {
    acc += norms[j];
    omegas[j] = system.lambda_max * acc / total;
  }
  return omegas;
}

}  // namespace graphspectra
