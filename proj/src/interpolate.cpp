#include "graphspectra/interpolate.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "graphspectra/errors.hpp"

namespace graphspectra {

CubicHermite::CubicHermite(std::vector<double> x, std::vector<double> y,
                           std::vector<double> slopes)
    : x_(std::move(x)), y_(std::move(y)), m_(std::move(slopes)) {
  if (x_.size() < 2 || x_.size() != y_.size() || x_.size() != m_.size()) {
    fail(errc::invalid_parameters, "cubic needs matching knot arrays, >= 2");
  }
  for (std::size_t i = 1; i < x_.size(); ++i) {
    if (x_[i] == x_[i - 1]) {
      fail(errc::duplicate_abscissa, "repeated interpolation abscissa");
    }
    if (x_[i] < x_[i - 1]) {
      fail(errc::non_monotone_input, "interpolation abscissas must increase");
    }
  }
}

double CubicHermite::operator()(double t) const {
  if (t <= x_.front()) return y_.front();
  if (t >= x_.back()) return y_.back();
  const auto it = std::upper_bound(x_.begin(), x_.end(), t);
  const std::size_t i = static_cast<std::size_t>(it - x_.begin()) - 1;
  const double h = x_[i + 1] - x_[i];
  const double s = (t - x_[i]) / h;
  const double s2 = s * s;
  const double s3 = s2 * s;
  const double h00 = 2.0 * s3 - 3.0 * s2 + 1.0;
  const double h10 = s3 - 2.0 * s2 + s;
  const double h01 = -2.0 * s3 + 3.0 * s2;
  const double h11 = s3 - s2;
  return h00 * y_[i] + h * h10 * m_[i] + h01 * y_[i + 1] + h * h11 * m_[i + 1];
}

std::vector<double> shape_preserving_slopes(const std::vector<double>& x,
                                            const std::vector<double>& y) {
  const std::size_t n = x.size();
  if (n < 2 || y.size() != n) {
    fail(errc::invalid_parameters, "slope fit needs matching arrays, >= 2");
  }
  std::vector<double> delta(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double h = x[i + 1] - x[i];
    if (h <= 0.0) {
      fail(h == 0.0 ? errc::duplicate_abscissa : errc::non_monotone_input,
           "interpolation abscissas must strictly increase");
    }
    delta[i] = (y[i + 1] - y[i]) / h;
  }

  std::vector<double> m(n);
  m[0] = delta[0];
  m[n - 1] = delta[n - 2];
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (delta[i - 1] * delta[i] <= 0.0) {
      m[i] = 0.0;  // local extremum or adjacent flat: keep shape
    } else {
      m[i] = 0.5 * (delta[i - 1] + delta[i]);
    }
  }

  // Fritsch-Carlson limiting pass, interval by interval.
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (delta[i] == 0.0) {
      m[i] = 0.0;
      m[i + 1] = 0.0;
      continue;
    }
    const double alpha = m[i] / delta[i];
    const double beta = m[i + 1] / delta[i];
    if (alpha < 0.0) m[i] = 0.0;
    if (beta < 0.0) m[i + 1] = 0.0;
    const double a = m[i] / delta[i];
    const double b = m[i + 1] / delta[i];
    const double r = a * a + b * b;
    if (r > 9.0) {
      const double tau = 3.0 / std::sqrt(r);
      m[i] = tau * a * delta[i];
      m[i + 1] = tau * b * delta[i];
    }
  }
  return m;
}

CubicHermite pchip(std::vector<double> x, std::vector<double> y) {
  auto m = shape_preserving_slopes(x, y);
  return CubicHermite(std::move(x), std::move(y), std::move(m));
}

}  // namespace graphspectra
