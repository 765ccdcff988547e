#include "graphspectra/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace graphspectra {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

}  // namespace

ChebyshevFilter cheb_coeffs(const ContinuousKernel& kernel, int order,
                            double lambda_max, int quad_points) {
  if (order < 1) fail(errc::invalid_order, "expansion order must be >= 1");
  if (!(lambda_max > 0.0)) fail(errc::invalid_parameters, "lambda_max <= 0");
  if (quad_points < 0) quad_points = 8 * order + 1;
  if (quad_points < 8 * order) {
    fail(errc::invalid_parameters,
         "quadrature needs at least 8x the expansion order in points");
  }

  const double b = 0.5 * lambda_max;
  const int cells = quad_points - 1;
  const double h = kPi / cells;

  // Sample the kernel once along the Chebyshev angle.
  std::vector<double> samples(quad_points);
  for (int q = 0; q < quad_points; ++q) {
    samples[q] = kernel(b * (std::cos(q * h) + 1.0));
  }

  ChebyshevFilter filter;
  filter.lambda_max = lambda_max;
  filter.coeffs.resize(order + 1);
  for (int p = 0; p <= order; ++p) {
    double acc = 0.5 * (samples[0] * 1.0 +
                        samples[cells] * std::cos(kPi * p));
    for (int q = 1; q < cells; ++q) {
      acc += samples[q] * std::cos(p * q * h);
    }
    filter.coeffs(p) = (2.0 / kPi) * acc * h;
  }
  return filter;
}

double cheb_eval(const ChebyshevFilter& filter, double lambda) {
  const double lmax = filter.lambda_max;
  const double slack = 1e-12 * std::max(lmax, 1.0);
  if (lambda < -slack || lambda > lmax + slack) {
    fail(errc::out_of_domain,
         "evaluation point " + std::to_string(lambda) +
             " outside [0, " + std::to_string(lmax) + "]");
  }
  const double b = filter.half_width();
  const double x = (std::clamp(lambda, 0.0, lmax) - b) / b;
  double prev = 1.0;       // C_0
  double cur = x;          // C_1
  double acc = 0.5 * filter.coeffs(0);
  for (int p = 1; p <= filter.order(); ++p) {
    acc += filter.coeffs(p) * cur;
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return acc;
}

Eigen::VectorXd cheb_apply(const Laplacian& op, const ChebyshevFilter& filter,
                           const Eigen::VectorXd& f) {
  return cheb_apply_many(op, {filter}, f).col(0);
}

Eigen::MatrixXd cheb_apply_many(const Laplacian& op,
                                const std::vector<ChebyshevFilter>& filters,
                                const Eigen::VectorXd& f) {
  if (filters.empty()) fail(errc::invalid_parameters, "no filters given");
  const double lmax = filters.front().lambda_max;
  int max_order = 0;
  for (const ChebyshevFilter& filt : filters) {
    if (std::abs(filt.lambda_max - lmax) > 1e-12 * std::max(lmax, 1.0)) {
      fail(errc::domain_mismatch, "filters must share one domain");
    }
    max_order = std::max(max_order, filt.order());
  }
  if (f.size() != op.size()) {
    fail(errc::dimension_mismatch, "signal length does not match operator");
  }

  const double b = 0.5 * lmax;
  const Eigen::Index n = f.size();
  const std::size_t j_count = filters.size();

  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, j_count);
  // Shifted recurrence: T0 = f, T1 = (L - bI) f / b,
  // Tp = (2/b)(L - bI) T_{p-1} - T_{p-2}.
  Eigen::VectorXd t_prev = f;
  Eigen::VectorXd t_cur = (op.apply(f) - b * f) / b;
  for (std::size_t j = 0; j < j_count; ++j) {
    out.col(j) = 0.5 * filters[j].coeffs(0) * t_prev;
    if (filters[j].order() >= 1) out.col(j) += filters[j].coeffs(1) * t_cur;
  }
  for (int p = 2; p <= max_order; ++p) {
    Eigen::VectorXd t_next =
        (2.0 / b) * (op.apply(t_cur) - b * t_cur) - t_prev;
    t_prev = t_cur;
    t_cur = t_next;
    for (std::size_t j = 0; j < j_count; ++j) {
      if (filters[j].order() >= p) out.col(j) += filters[j].coeffs(p) * t_cur;
    }
  }
  return out;
}

std::vector<ChebyshevFilter> cheb_filters(const KernelSystem& system,
                                          int order, double lambda_max) {
  if (lambda_max <= 0.0) lambda_max = system.lambda_max;
  std::vector<ChebyshevFilter> filters;
  filters.reserve(system.bands());
  for (const ContinuousKernel& k : system.kernels) {
    filters.push_back(cheb_coeffs(k, order, lambda_max));
  }
  return filters;
}

}  // namespace graphspectra
