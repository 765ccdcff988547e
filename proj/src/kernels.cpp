#include "graphspectra/kernels.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace graphspectra {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

double domain_slack(double lambda_max) {
  return 1e-12 * std::max(lambda_max, 1.0);
}

}  // namespace

ContinuousKernel::ContinuousKernel(std::function<double(double)> fn,
                                   double lambda_max, std::string label)
    : fn_(std::move(fn)), lambda_max_(lambda_max), label_(std::move(label)) {
  if (!fn_) fail(errc::invalid_parameters, "kernel needs an evaluator");
  if (!(lambda_max_ > 0.0)) {
    fail(errc::invalid_parameters, "kernel domain must have positive length");
  }
}

double ContinuousKernel::operator()(double lambda) const {
  const double slack = domain_slack(lambda_max_);
  if (lambda < 0.0) return lambda >= -slack ? fn_(0.0) : 0.0;
  if (lambda > lambda_max_) {
    return lambda <= lambda_max_ + slack ? fn_(lambda_max_) : 0.0;
  }
  return fn_(lambda);
}

double bspline(int degree, double x) {
  if (degree < 0) fail(errc::invalid_parameters, "negative B-spline degree");
  if (degree > 25) {
    fail(errc::degree_too_large,
         "B-spline degree " + std::to_string(degree) +
             " exceeds the numerically safe cap 25");
  }
  const int n = degree;
  const double half = 0.5 * static_cast<double>(n + 1);
  if (x <= -half || x >= half) return 0.0;

  if (n == 0) return 1.0;  // inside (-1/2, 1/2)

  // (n+1)-fold box convolution in closed form:
  // (1/n!) sum_k (-1)^k C(n+1, k) (x + (n+1)/2 - k)_+^n
  double sum = 0.0;
  double binom = 1.0;  // C(n+1, 0)
  double factorial = 1.0;
  for (int k = 1; k <= n; ++k) factorial *= static_cast<double>(k);
  for (int k = 0; k <= n + 1; ++k) {
    const double u = x + half - static_cast<double>(k);
    if (u > 0.0) {
      const double term = binom * std::pow(u, n);
      sum += (k % 2 == 0) ? term : -term;
    }
    binom *= static_cast<double>(n + 1 - k) / static_cast<double>(k + 1);
  }
  return std::max(sum / factorial, 0.0);
}

double meyer_aux(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double x2 = x * x;
  return x2 * x2 * (35.0 + x * (-84.0 + x * (70.0 - 20.0 * x)));
}

KernelSystem bspline_system(int bands, int degree, double lambda_max) {
  if (bands < 2) fail(errc::invalid_parameters, "need at least two bands");
  if (degree < 2) {
    fail(errc::invalid_parameters,
         "spline band systems need degree >= 2 for usable overlap");
  }
  if (degree > 25) fail(errc::degree_too_large, "B-spline degree above 25");
  if (!(lambda_max > 0.0)) fail(errc::invalid_parameters, "lambda_max <= 0");

  const int n = degree;
  const int shift_margin = n / 2 - 1;
  const double scale = static_cast<double>(bands - 1) / lambda_max;

  KernelSystem sys;
  sys.lambda_max = lambda_max;
  sys.tight = true;
  sys.design.family = "bspline";
  sys.design.bands = bands;
  sys.design.degree = degree;

  for (int j = 1; j <= bands; ++j) {
    std::function<double(double)> fn;
    if (j == 1) {
      fn = [n, scale, shift_margin](double lambda) {
        const double t = lambda * scale;
        double g = 0.0;
        for (int l = -shift_margin; l <= 1; ++l) {
          g += bspline(n, t - static_cast<double>(l - 1));
        }
        return std::sqrt(std::max(g, 0.0));
      };
    } else if (j == bands) {
      const int hi = bands + shift_margin + 1;
      const int lo = bands;
      fn = [n, scale, lo, hi](double lambda) {
        const double t = lambda * scale;
        double g = 0.0;
        for (int l = lo; l <= hi; ++l) {
          g += bspline(n, t - static_cast<double>(l - 1));
        }
        return std::sqrt(std::max(g, 0.0));
      };
    } else {
      const double center = static_cast<double>(j - 1);
      fn = [n, scale, center](double lambda) {
        return std::sqrt(std::max(bspline(n, lambda * scale - center), 0.0));
      };
    }
    sys.kernels.emplace_back(std::move(fn), lambda_max,
                             "b" + std::to_string(j));
  }
  return sys;
}

UmtGeometry umt_geometry(int bands, double lambda_max, double gamma) {
  if (bands < 2) fail(errc::invalid_parameters, "need at least two bands");
  if (!(gamma > 1.0)) fail(errc::invalid_parameters, "gamma must exceed 1");
  if (!(lambda_max > 0.0)) fail(errc::invalid_parameters, "lambda_max <= 0");
  UmtGeometry g;
  g.gamma = gamma;
  g.a = lambda_max /
        (static_cast<double>(bands) * gamma - static_cast<double>(bands) -
         gamma + 3.0);
  g.delta = (gamma - 1.0) * g.a;
  return g;
}

namespace {

// Rising and falling Meyer crossfades for the uniform system. With the
// auxiliary polynomial clamped, each expression extends continuously to
// the flat regions on either side of its transition window.
double umt_rise(double lambda, double shift, const UmtGeometry& g) {
  const double t = ((lambda - shift) / g.a - 1.0) / (g.gamma - 1.0);
  return std::sin(0.5 * kPi * meyer_aux(t));
}

double umt_fall(double lambda, double shift, const UmtGeometry& g) {
  const double t = ((lambda - shift) / g.a - 1.0) / (g.gamma - 1.0);
  if (t >= 1.0) return 0.0;  // cos(pi/2) is not an exact zero
  return std::cos(0.5 * kPi * meyer_aux(t));
}

}  // namespace

KernelSystem umt_system(int bands, double lambda_max, double gamma) {
  const UmtGeometry g = umt_geometry(bands, lambda_max, gamma);

  KernelSystem sys;
  sys.lambda_max = lambda_max;
  sys.tight = true;
  sys.design.family = "umt";
  sys.design.bands = bands;
  sys.design.gamma = g.gamma;
  sys.design.a = g.a;
  sys.design.delta = g.delta;

  for (int j = 1; j <= bands; ++j) {
    std::function<double(double)> fn;
    if (j == 1) {
      fn = [g](double lambda) { return umt_fall(lambda, 0.0, g); };
    } else if (j == bands) {
      const double lambda_ii = g.gamma * g.a + (bands - 2) * g.delta;
      const double rise_shift = (bands - 2) * g.delta;
      fn = [g, lambda_ii, rise_shift](double lambda) {
        return lambda <= lambda_ii ? umt_rise(lambda, rise_shift, g) : 1.0;
      };
    } else {
      const double lambda_ii = g.gamma * g.a + (j - 2) * g.delta;
      const double rise_shift = (j - 2) * g.delta;
      const double fall_shift = (j - 1) * g.delta;
      fn = [g, lambda_ii, rise_shift, fall_shift](double lambda) {
        return lambda <= lambda_ii ? umt_rise(lambda, rise_shift, g)
                                   : umt_fall(lambda, fall_shift, g);
      };
    }
    sys.kernels.emplace_back(std::move(fn), lambda_max,
                             "u" + std::to_string(j));
  }
  return sys;
}

double solve_gamma(const GammaSolveOptions& options) {
  if (!(options.gamma_lo >= 1.0) || !(options.gamma_hi > options.gamma_lo) ||
      !(options.gamma_step > 0.0) || !(options.quad_step > 0.0)) {
    fail(errc::invalid_parameters, "bad gamma search parameters");
  }
  double best_gamma = 0.0;
  double best_q = std::numeric_limits<double>::infinity();
  const int steps = static_cast<int>(
      std::floor((options.gamma_hi - options.gamma_lo) / options.gamma_step +
                 1e-9));
  for (int s = 0; s <= steps; ++s) {
    const double gamma = options.gamma_lo + s * options.gamma_step;
    if (gamma - 1.0 < 0.5 * options.gamma_step) continue;
    const UmtGeometry g = umt_geometry(options.bands, options.lambda_max,
                                       gamma);
    const double width = g.delta;
    const int cells =
        std::max(2, static_cast<int>(std::llround(width / options.quad_step)));
    const double h = width / cells;
    // Trapezoid over [a, gamma a]; the rising transition is 0 at a.
    double integral = 0.5 * (umt_rise(g.a, 0.0, g) +
                             umt_rise(g.a + width, 0.0, g));
    for (int i = 1; i < cells; ++i) {
      integral += umt_rise(g.a + i * h, 0.0, g);
    }
    integral *= h;
    const double q = std::abs(integral - g.a);
    if (q < best_q) {
      best_q = q;
      best_gamma = gamma;
    }
  }
  if (best_gamma == 0.0) fail(errc::no_convergence, "gamma search found nothing");
  return best_gamma;
}

KernelSystem warp_system(const KernelSystem& system, const WarpFunction& warp) {
  if (system.bands() == 0) fail(errc::invalid_parameters, "empty system");
  const double lmax = system.lambda_max;
  if (std::abs(warp.lambda_max() - lmax) > domain_slack(lmax)) {
    fail(errc::domain_mismatch, "warp and system domains differ");
  }
  KernelSystem out;
  out.lambda_max = lmax;
  out.tight = system.tight;
  out.design = system.design;
  out.design.family = system.design.family.empty()
                          ? std::string("warped")
                          : "warped-" + system.design.family;
  const auto& kx = warp.curve().knots_x();
  const auto& ky = warp.curve().knots_y();
  out.design.warp_knots.clear();
  for (std::size_t i = 0; i < kx.size(); ++i) {
    out.design.warp_knots.emplace_back(kx[i], ky[i]);
  }
  for (const ContinuousKernel& k : system.kernels) {
    out.kernels.emplace_back(
        [k, warp](double lambda) { return k(warp(lambda)); }, lmax,
        k.label().empty() ? std::string() : k.label() + "'");
  }
  return out;
}

FrameBounds frame_analysis(const KernelSystem& system, int grid_points) {
  if (grid_points < 1000) {
    fail(errc::invalid_parameters, "frame analysis needs >= 1000 grid points");
  }
  if (system.bands() == 0) fail(errc::invalid_parameters, "empty system");
  FrameBounds bounds;
  bounds.b1 = std::numeric_limits<double>::infinity();
  bounds.b2 = -std::numeric_limits<double>::infinity();
  const double lmax = system.lambda_max;
  for (int i = 0; i < grid_points; ++i) {
    const double lambda = lmax * static_cast<double>(i) /
                          static_cast<double>(grid_points - 1);
    double g = 0.0;
    for (const ContinuousKernel& k : system.kernels) {
      const double v = k(lambda);
      g += v * v;
    }
    bounds.b1 = std::min(bounds.b1, g);
    bounds.b2 = std::max(bounds.b2, g);
    bounds.max_deviation_from_one =
        std::max(bounds.max_deviation_from_one, std::abs(g - 1.0));
  }
  return bounds;
}

Eigen::MatrixXd sample_grid(const KernelSystem& system,
                            const Eigen::VectorXd& grid) {
  Eigen::MatrixXd values(system.bands(), grid.size());
  for (int j = 0; j < system.bands(); ++j) {
    for (Eigen::Index i = 0; i < grid.size(); ++i) {
      values(j, i) = system.kernels[j](grid(i));
    }
  }
  return values;
}

SampledSystem sample_system(const KernelSystem& system, const Spectrum& spec) {
  if (spec.size() == 0) fail(errc::invalid_parameters, "empty spectrum");
  if (spec.lambda_max() >
      system.lambda_max + domain_slack(system.lambda_max)) {
    fail(errc::domain_mismatch,
         "spectrum extends past the kernel domain end");
  }
  SampledSystem sampled;
  sampled.lambda_max = system.lambda_max;
  sampled.values = sample_grid(system, spec.eigenvalues);
  return sampled;
}

}  // namespace graphspectra
