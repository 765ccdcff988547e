#include <cmath>
#include <vector>

#include "doctest.h"
#include "graphspectra/energy.hpp"
#include "graphspectra/experiments.hpp"
#include "graphspectra/rng.hpp"
#include "graphspectra/warp.hpp"
#include "support/oracles.hpp"

using namespace graphspectra;

namespace {

bool nondecreasing_on_grid(const WarpFunction& t, int grid = 4001) {
  double prev = t(0.0);
  for (int i = 1; i < grid; ++i) {
    const double v = t(t.lambda_max() * i / static_cast<double>(grid - 1));
    if (v < prev - 1e-12) return false;
    prev = v;
  }
  return true;
}

}  // namespace

TEST_CASE("monotone cubic interpolates its knots and stays monotone") {
  const std::vector<double> x{0.0, 0.4, 1.1, 1.9, 3.0};
  const std::vector<double> y{0.0, 0.9, 1.0, 2.6, 3.0};
  const WarpFunction t = monotone_cubic(x, y);
  for (std::size_t i = 0; i < x.size(); ++i) {
    CHECK(t(x[i]) == doctest::Approx(y[i]).epsilon(1e-14));
  }
  CHECK(nondecreasing_on_grid(t));
}

TEST_CASE("plateaus do not overshoot") {
  const WarpFunction t =
      monotone_cubic({0.0, 1.0, 2.0, 3.0}, {0.0, 0.1, 0.1, 3.0});
  // Fritsch-Carlson zeroes both slopes across a flat interval, so the
  // plateau value is carried exactly.
  CHECK(t(1.5) == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(t(1.999) == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(nondecreasing_on_grid(t));

  // Leftmost preimage of the plateau value, up to roundoff wiggle of the
  // cubic just left of the junction.
  CHECK(t.preimage(0.1) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(t.preimage(0.1) < 1.5);
}

TEST_CASE("random monotone data stays monotone after fitting") {
  auto rng = make_engine(99);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> x{0.0}, y{0.0};
    for (int k = 0; k < 8; ++k) {
      x.push_back(x.back() + 0.01 + uniform01(rng));
      y.push_back(y.back() + (uniform01(rng) < 0.3 ? 0.0 : uniform01(rng)));
    }
    const double lmax = x.back();
    for (auto& v : y) v *= lmax / (y.back() > 0 ? y.back() : 1.0);
    y.back() = lmax;
    const WarpFunction t = monotone_cubic(x, y);
    CHECK(nondecreasing_on_grid(t));
    CHECK(t(0.0) == 0.0);
    CHECK(t(lmax) == doctest::Approx(lmax).epsilon(1e-12));
  }
}

TEST_CASE("warp input validation") {
  CHECK_THROWS_AS(monotone_cubic({0.0, 1.0, 2.0}, {0.0, 0.5, 1.9}), Error);
  CHECK_THROWS_AS(monotone_cubic({0.1, 1.0, 2.0}, {0.0, 0.5, 2.0}), Error);
  CHECK_THROWS_AS(monotone_cubic({0.0, 1.0, 2.0}, {0.0, 1.5, 1.0}), Error);
  CHECK_THROWS_AS(monotone_cubic({0.0, 1.0, 1.0, 2.0}, {0.0, 0.5, 0.6, 2.0}),
                  Error);
  // A dip within roundoff is repaired, not rejected.
  CHECK_NOTHROW(monotone_cubic({0.0, 1.0, 1.5, 2.0}, {0.0, 0.5, 0.5 - 1e-13, 2.0}));
}

TEST_CASE("identity warp and clamping") {
  const WarpFunction id = identity_warp(2.5);
  for (double x = 0.0; x <= 2.5; x += 0.03) {
    CHECK(id(x) == doctest::Approx(x).epsilon(1e-13));
    CHECK(id.preimage(x) == doctest::Approx(x).epsilon(1e-9));
  }
  CHECK(id(-1.0) == 0.0);
  CHECK(id(9.0) == 2.5);
  CHECK(id.preimage(-3.0) == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("exact energy warp places cumulative-energy knots") {
  const Laplacian op(oracles::path3(), LaplacianKind::combinatorial);
  const Spectrum spec = full_spectrum(op);

  EnsembleEsd esd;
  esd.kind = EnsembleEsd::Kind::direct;
  esd.values = Eigen::Vector3d(0.0, 0.25, 0.75);
  esd.abscissas = spec.eigenvalues;
  esd.lambda_max = spec.lambda_max();

  const WarpFunction t = energy_warp_exact(esd, spec);
  // Knot at the interior eigenvalue: lambda_max * cumulative energy.
  CHECK(t(1.0) == doctest::Approx(3.0 * 0.25).epsilon(1e-13));
  CHECK(t(0.0) == 0.0);
  CHECK(t(3.0) == doctest::Approx(3.0).epsilon(1e-13));
  CHECK(nondecreasing_on_grid(t));

  // Energies must sum to one.
  EnsembleEsd bad = esd;
  bad.values(2) = 0.5;
  CHECK_THROWS_AS(energy_warp_exact(bad, spec), Error);

  // Banded input is the wrong kind here.
  EnsembleEsd banded = esd;
  banded.kind = EnsembleEsd::Kind::banded;
  CHECK_THROWS_AS(energy_warp_exact(banded, spec), Error);
}

TEST_CASE("exact energy warp averages repeated eigenvalues") {
  const Laplacian op(oracles::star4(), LaplacianKind::combinatorial);
  const Spectrum spec = full_spectrum(op);
  REQUIRE(spec.groups.size() == 3);  // 0, 1 (twice), 4

  EnsembleEsd esd;
  esd.kind = EnsembleEsd::Kind::direct;
  esd.values = Eigen::Vector4d(0.0, 0.3, 0.3, 0.4);
  esd.abscissas = spec.eigenvalues;
  esd.lambda_max = spec.lambda_max();

  const WarpFunction t = energy_warp_exact(esd, spec);
  // cum = (0, 0.3, 0.6, 1); the repeated eigenvalue takes the group mean
  // (0.3 + 0.6)/2 scaled by lambda_max.
  CHECK(t(1.0) == doctest::Approx(4.0 * 0.45).epsilon(1e-13));
}

TEST_CASE("approximate energy warp uses band abscissas") {
  EnsembleEsd esd;
  esd.kind = EnsembleEsd::Kind::banded;
  esd.values = Eigen::Vector3d(0.2, 0.3, 0.5);
  esd.abscissas = Eigen::Vector3d(0.5, 1.0, 1.5);
  esd.lambda_max = 2.0;

  const WarpFunction t = energy_warp_approx(esd);
  CHECK(t(0.5) == doctest::Approx(2.0 * 0.2).epsilon(1e-13));
  CHECK(t(1.0) == doctest::Approx(2.0 * 0.5).epsilon(1e-13));
  CHECK(t(0.0) == 0.0);
  CHECK(t(2.0) == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(nondecreasing_on_grid(t));

  EnsembleEsd bad = esd;
  bad.values(1) = -0.1;
  CHECK_THROWS_AS(energy_warp_approx(bad), Error);

  EnsembleEsd direct = esd;
  direct.kind = EnsembleEsd::Kind::direct;
  CHECK_THROWS_AS(energy_warp_approx(direct), Error);
}

TEST_CASE("spectrum warp rescales eigenvalue ranks") {
  const Laplacian p3(oracles::path3(), LaplacianKind::combinatorial);
  const Spectrum sp3 = full_spectrum(p3);
  const WarpFunction t3 = spectrum_warp(sp3);
  CHECK(t3(1.0) == doctest::Approx(3.0 * 1.0 / 2.0).epsilon(1e-13));
  CHECK(t3(0.0) == 0.0);
  CHECK(t3(3.0) == doctest::Approx(3.0).epsilon(1e-13));

  // Repeated eigenvalues use the mean rank of the group.
  const Laplacian s4(oracles::star4(), LaplacianKind::combinatorial);
  const Spectrum ss4 = full_spectrum(s4);
  const WarpFunction t4 = spectrum_warp(ss4);
  CHECK(t4(1.0) == doctest::Approx(4.0 * 1.5 / 3.0).epsilon(1e-13));
  CHECK(nondecreasing_on_grid(t4));
}

TEST_CASE("pivot warp matches the box-smoothed two-slope closed form") {
  const double pivot = 0.5, lmax = 2.0, width = 0.2;
  const int n_lower = 20, n_total = 100;
  const int grid = 8193;
  const WarpFunction t =
      pivot_warp(pivot, n_lower, n_total, lmax, width, grid);

  const double y_p = lmax * n_lower / static_cast<double>(n_total);
  const double m1 = y_p / pivot;
  const double m2 = (lmax - y_p) / (lmax - pivot);
  const double h = lmax / (grid - 1);
  const long radius = std::lround(0.5 * width / h);
  const double w_eff = (2 * radius + 1) * h;

  auto closed_form = [&](double x) {
    if (x <= pivot - 0.5 * w_eff) return m1 * x;
    if (x >= pivot + 0.5 * w_eff) return y_p + m2 * (x - pivot);
    const double u = x - pivot + 0.5 * w_eff;
    return m1 * x + 0.5 * (m2 - m1) / w_eff * u * u;
  };

  double worst = 0.0;
  for (int i = 0; i <= 1000; ++i) {
    const double x = lmax * i / 1000.0;
    worst = std::max(worst, std::abs(t(x) - closed_form(x)));
  }
  CHECK(worst <= 1e-5);
  CHECK(t(0.0) == 0.0);
  CHECK(t(lmax) == doctest::Approx(lmax).epsilon(1e-12));
  CHECK(nondecreasing_on_grid(t));
}

TEST_CASE("pivot warp validation") {
  CHECK_THROWS_AS(pivot_warp(0.0, 20, 100, 2.0), Error);
  CHECK_THROWS_AS(pivot_warp(2.0, 20, 100, 2.0), Error);
  CHECK_THROWS_AS(pivot_warp(0.5, 0, 100, 2.0), Error);
  CHECK_THROWS_AS(pivot_warp(0.5, 100, 100, 2.0), Error);
  CHECK_THROWS_AS(pivot_warp(0.5, 20, 100, 2.0, -1.0, 100), Error);
  CHECK_NOTHROW(pivot_warp(0.5, 20, 100, 2.0));
}

TEST_CASE("warp distances") {
  const WarpFunction id = identity_warp(2.0);
  CHECK(warp_distance_l2(id, id) == 0.0);
  CHECK(warp_distance_sup(id, id) == 0.0);

  const WarpFunction t =
      monotone_cubic({0.0, 1.0, 2.0}, {0.0, 1.5, 2.0});
  const double l2 = warp_distance_l2(id, t);
  const double sup = warp_distance_sup(id, t);
  CHECK(sup >= l2);
  CHECK(sup == doctest::Approx(0.5).epsilon(1e-2));
  CHECK(l2 > 0.1);
}

TEST_CASE("first band edge") {
  // The edge is the outermost threshold crossing; with the quartic
  // contact of the falling transition it sits a hair inside the support.
  const KernelSystem umt = umt_system(5, 2.0, 2.73);
  const UmtGeometry g = umt_geometry(5, 2.0, 2.73);
  const double edge = first_band_edge(umt);
  CHECK(edge <= g.gamma * g.a + 1e-12);
  CHECK(edge >= g.gamma * g.a - 1e-3);

  // Square-root B-spline first band: support ends where the folded spline
  // mass runs out, (degree+1)/2 knot units from the origin.
  const KernelSystem bs = bspline_system(7, 3, 2.0);
  CHECK(first_band_edge(bs) == doctest::Approx(2.0 * 2.0 / 6.0).epsilon(1e-6));
}
