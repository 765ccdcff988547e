#pragma once

#include <vector>

namespace graphspectra {

/// Piecewise cubic Hermite interpolant with precomputed knot slopes.
/// Evaluation outside the knot range clamps to the end values.
class CubicHermite {
 public:
  CubicHermite() = default;
  CubicHermite(std::vector<double> x, std::vector<double> y,
               std::vector<double> slopes);

  double operator()(double t) const;

  const std::vector<double>& knots_x() const { return x_; }
  const std::vector<double>& knots_y() const { return y_; }
  const std::vector<double>& slopes() const { return m_; }

 private:
  std::vector<double> x_, y_, m_;
};

/// Shape-preserving knot slopes (Fritsch-Carlson two-pass limiting):
/// secant-mean initialization, zero slope at local extrema and across flat
/// intervals, then the circle-of-radius-3 projection per interval. For
/// monotone data the resulting cubic is monotone.
std::vector<double> shape_preserving_slopes(const std::vector<double>& x,
                                            const std::vector<double>& y);

/// Convenience: shape-preserving cubic through (x, y). Requires strictly
/// increasing x (throws errc::duplicate_abscissa / non_monotone_input).
CubicHermite pchip(std::vector<double> x, std::vector<double> y);

}  // namespace graphspectra
