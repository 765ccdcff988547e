#include "graphspectra/warp.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>

#include "graphspectra/energy.hpp"
#include "graphspectra/errors.hpp"
#include "graphspectra/kernels.hpp"
#include "graphspectra/spectrum.hpp"

namespace graphspectra {

namespace {

double warp_slack(double lambda_max) {
  return 1e-9 * std::max(lambda_max, 1.0);
}

}  // namespace

WarpFunction::WarpFunction(CubicHermite curve, double lambda_max)
    : curve_(std::move(curve)), lambda_max_(lambda_max) {
  const auto& x = curve_.knots_x();
  const auto& y = curve_.knots_y();
  const double slack = warp_slack(lambda_max_);
  if (!(lambda_max_ > 0.0)) fail(errc::invalid_warp, "warp domain empty");
  if (std::abs(x.front()) > slack || std::abs(y.front()) > slack ||
      std::abs(x.back() - lambda_max_) > slack ||
      std::abs(y.back() - lambda_max_) > slack) {
    fail(errc::invalid_warp, "warp must fix 0 and lambda_max");
  }
  for (std::size_t i = 1; i < y.size(); ++i) {
    if (y[i] < y[i - 1] - slack) {
      fail(errc::non_monotone_input, "warp ordinates must not decrease");
    }
  }
}

double WarpFunction::operator()(double lambda) const {
  const double v = curve_(std::clamp(lambda, 0.0, lambda_max_));
  return std::clamp(v, 0.0, lambda_max_);
}

double WarpFunction::preimage(double y) const {
  y = std::clamp(y, 0.0, lambda_max_);
  double lo = 0.0, hi = lambda_max_;
  if ((*this)(lo) >= y) return lo;
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    if ((*this)(mid) < y) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

WarpFunction monotone_cubic(std::vector<double> x, std::vector<double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    fail(errc::invalid_parameters, "warp needs matching knot arrays, >= 2");
  }
  const double lmax = x.back();
  if (!(lmax > 0.0)) fail(errc::invalid_warp, "warp domain empty");
  const double slack = warp_slack(lmax);
  // Snap roundoff-sized endpoint deviations onto the exact pins.
  if (std::abs(x.front()) <= slack) x.front() = 0.0;
  if (std::abs(y.front()) <= slack) y.front() = 0.0;
  if (std::abs(y.back() - lmax) <= slack) y.back() = lmax;
  for (double& v : y) v = std::clamp(v, 0.0, lmax);
  for (std::size_t i = 1; i < y.size(); ++i) {
    if (y[i] < y[i - 1]) {
      if (y[i - 1] - y[i] > slack) {
        fail(errc::non_monotone_input, "warp ordinates must not decrease");
      }
      y[i] = y[i - 1];
    }
  }
  auto m = shape_preserving_slopes(x, y);
  return WarpFunction(CubicHermite(std::move(x), std::move(y), std::move(m)),
                      lmax);
}

WarpFunction identity_warp(double lambda_max) {
  if (!(lambda_max > 0.0)) fail(errc::invalid_warp, "warp domain empty");
  return monotone_cubic({0.0, lambda_max}, {0.0, lambda_max});
}

WarpFunction energy_warp_exact(const EnsembleEsd& esd, const Spectrum& spec) {
  if (esd.kind != EnsembleEsd::Kind::direct) {
    fail(errc::invalid_parameters, "exact energy warp needs a direct ESD");
  }
  const int n = spec.size();
  if (esd.values.size() != n) {
    fail(errc::dimension_mismatch, "ESD length does not match spectrum");
  }
  const double total = esd.values.sum();
  if (std::abs(total - 1.0) > 1e-6) {
    fail(errc::invalid_parameters, "direct ESD must sum to one");
  }
  const double lmax = spec.lambda_max();
  const double slack = warp_slack(lmax);

  Eigen::VectorXd cum(n);
  double acc = 0.0;
  for (int l = 0; l < n; ++l) {
    acc += esd.values(l);
    cum(l) = acc;
  }

  std::vector<double> x{0.0}, y{0.0};
  for (const EigenGroup& g : spec.groups) {
    if (g.value <= slack) continue;          // pinned at the origin
    if (g.value >= lmax - slack) continue;   // pinned at the domain end
    double alpha = 0.0;
    for (int r = g.first_index; r < g.first_index + g.multiplicity; ++r) {
      alpha += cum(r);
    }
    alpha *= lmax / static_cast<double>(g.multiplicity);
    x.push_back(g.value);
    y.push_back(std::min(alpha, lmax));
  }
  x.push_back(lmax);
  y.push_back(lmax);
  return monotone_cubic(std::move(x), std::move(y));
}

WarpFunction energy_warp_approx(const EnsembleEsd& esd) {
  if (esd.kind != EnsembleEsd::Kind::banded) {
    fail(errc::invalid_parameters, "approx energy warp needs a banded ESD");
  }
  const Eigen::Index bands = esd.values.size();
  if (bands < 2 || esd.abscissas.size() != bands) {
    fail(errc::invalid_parameters, "banded ESD needs >= 2 matching bands");
  }
  const double lmax = esd.lambda_max;
  const double slack = warp_slack(lmax);

  std::vector<double> x{0.0}, y{0.0};
  double acc = 0.0;
  for (Eigen::Index i = 0; i + 1 < bands; ++i) {
    if (esd.values(i) < -slack) {
      fail(errc::non_monotone_esd, "banded ESD has a negative band energy");
    }
    acc += std::max(esd.values(i), 0.0);
    const double omega = esd.abscissas(i);
    if (omega <= x.back() || omega >= lmax - slack) continue;
    x.push_back(omega);
    y.push_back(std::min(lmax * acc, lmax));
  }
  x.push_back(lmax);
  y.push_back(lmax);
  return monotone_cubic(std::move(x), std::move(y));
}

WarpFunction spectrum_warp(const Spectrum& spec) {
  const int n = spec.size();
  if (n < 2) fail(errc::invalid_parameters, "spectrum too small to warp");
  const double lmax = spec.lambda_max();
  const double slack = warp_slack(lmax);

  std::vector<double> x{0.0}, y{0.0};
  for (const EigenGroup& g : spec.groups) {
    if (g.value <= slack) continue;
    if (g.value >= lmax - slack) continue;
    const double mean_rank =
        static_cast<double>(g.first_index) +
        0.5 * static_cast<double>(g.multiplicity - 1);
    x.push_back(g.value);
    y.push_back(lmax * mean_rank / static_cast<double>(n - 1));
  }
  x.push_back(lmax);
  y.push_back(lmax);
  return monotone_cubic(std::move(x), std::move(y));
}

WarpFunction pivot_warp(double lambda_pivot, int n_lower, int n_total,
                        double lambda_max, double smooth_width,
                        int grid_points) {
  if (!(lambda_max > 0.0)) fail(errc::invalid_warp, "warp domain empty");
  if (!(lambda_pivot > 0.0) || !(lambda_pivot < lambda_max)) {
    fail(errc::invalid_pivot, "pivot must lie strictly inside (0, lambda_max)");
  }
  if (n_lower <= 0 || n_lower >= n_total) {
    fail(errc::invalid_pivot, "band split must satisfy 0 < n_lower < n_total");
  }
  if (grid_points < 1025) {
    fail(errc::invalid_parameters, "pivot smoothing needs >= 1025 grid points");
  }
  if (smooth_width <= 0.0) smooth_width = 0.4 * lambda_pivot;

  const double y_piv =
      lambda_max * static_cast<double>(n_lower) / static_cast<double>(n_total);
  const double m1 = y_piv / lambda_pivot;
  const double m2 = (lambda_max - y_piv) / (lambda_max - lambda_pivot);
  // Two-slope curve with linear extension beyond the domain, so the box
  // average stays exact away from the pivot.
  auto piecewise = [&](double t) {
    return t <= lambda_pivot ? m1 * t : y_piv + m2 * (t - lambda_pivot);
  };

  const double h =
      lambda_max / static_cast<double>(grid_points - 1);
  const int radius = std::max(1, static_cast<int>(std::llround(
                                     0.5 * smooth_width / h)));
  std::vector<double> grid(grid_points), smooth(grid_points);
  for (int i = 0; i < grid_points; ++i) {
    grid[i] = h * static_cast<double>(i);
    double acc = 0.0;
    for (int k = -radius; k <= radius; ++k) {
      acc += piecewise(grid[i] + h * static_cast<double>(k));
    }
    smooth[i] = acc / static_cast<double>(2 * radius + 1);
  }
  smooth.front() = 0.0;
  smooth.back() = lambda_max;
  for (int i = 1; i < grid_points; ++i) {
    smooth[i] = std::clamp(smooth[i], smooth[i - 1], lambda_max);
  }

  const int stride = std::max(1, grid_points / 512);
  std::vector<double> x, y;
  for (int i = 0; i < grid_points; i += stride) {
    x.push_back(grid[i]);
    y.push_back(smooth[i]);
  }
  if (x.back() != lambda_max) {
    x.push_back(lambda_max);
    y.push_back(lambda_max);
  }
  return monotone_cubic(std::move(x), std::move(y));
}

}  // namespace graphspectra
