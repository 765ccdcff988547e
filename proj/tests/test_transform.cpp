#include <cmath>

#include "doctest.h"
#include "graphspectra/rng.hpp"
#include "graphspectra/transform.hpp"
#include "graphspectra/warp.hpp"
#include "support/oracles.hpp"

using namespace graphspectra;

namespace {

struct Fixture {
  Graph graph = random_geometric_graph(50, -1.0, 9);
  Laplacian op{graph, LaplacianKind::combinatorial};
  Spectrum spec = full_spectrum(op);

  Eigen::VectorXd noise_signal(std::uint64_t seed) const {
    auto rng = make_engine(seed);
    Eigen::VectorXd f(spec.size());
    for (int i = 0; i < f.size(); ++i) f(i) = uniform01(rng) - 0.5;
    return f;
  }
};

}  // namespace

TEST_CASE("atoms are kernel-modulated impulses") {
  Fixture fx;
  const KernelSystem sys = umt_system(4, fx.spec.lambda_max());
  const SampledSystem sampled = sample_system(sys, fx.spec);

  const Atom a = atom(sampled, fx.spec, 2, 17);
  CHECK(a.band == 2);
  CHECK(a.center == 17);
  REQUIRE(a.values.size() == fx.spec.size());

  // Oracle: filter a delta at the center.
  Eigen::VectorXd delta = Eigen::VectorXd::Zero(fx.spec.size());
  delta(17) = 1.0;
  Eigen::VectorXd hat = fx.spec.gft(delta);
  for (int l = 0; l < fx.spec.size(); ++l) hat(l) *= sampled.values(2, l);
  const Eigen::VectorXd expected = fx.spec.eigenvectors * hat;
  CHECK((a.values - expected).norm() <= 1e-12);

  CHECK_THROWS_AS(atom(sampled, fx.spec, 4, 0), Error);
  CHECK_THROWS_AS(atom(sampled, fx.spec, -1, 0), Error);
  CHECK_THROWS_AS(atom(sampled, fx.spec, 0, fx.spec.size()), Error);
}

TEST_CASE("analysis rows are filtered signals and atoms give coefficients") {
  Fixture fx;
  const KernelSystem sys = umt_system(5, fx.spec.lambda_max());
  const SampledSystem sampled = sample_system(sys, fx.spec);
  const Eigen::VectorXd f = fx.noise_signal(2);

  const Coefficients c = decompose_direct(f, sampled, fx.spec);
  CHECK(c.mode == Coefficients::Mode::direct);
  REQUIRE(c.bands() == 5);
  REQUIRE(c.size() == fx.spec.size());

  // c_j[m] = <f, atom(j, m)>.
  for (int j : {0, 2, 4}) {
    for (int m : {0, 11, 49}) {
      const Atom a = atom(sampled, fx.spec, j, m);
      CHECK(c.values(j, m) == doctest::Approx(a.values.dot(f)).epsilon(1e-10));
    }
  }
}

TEST_CASE("Parseval systems reconstruct perfectly") {
  Fixture fx;
  const double lmax = fx.spec.lambda_max();

  for (const KernelSystem& sys :
       {umt_system(7, lmax), bspline_system(9, 3, lmax)}) {
    const SampledSystem sampled = sample_system(sys, fx.spec);
    for (std::uint64_t seed : {4u, 5u}) {
      const Eigen::VectorXd f = fx.noise_signal(seed);
      const Coefficients c = decompose_direct(f, sampled, fx.spec);
      const Eigen::VectorXd back = reconstruct(c, sampled, fx.spec);
      CHECK((back - f).norm() <= 1e-8 * f.norm());

      // Parseval energy identity.
      CHECK(c.values.squaredNorm() ==
            doctest::Approx(f.squaredNorm()).epsilon(1e-10));
    }
  }
}

TEST_CASE("reconstruction rejects a non-Parseval system") {
  Fixture fx;
  const KernelSystem sys = umt_system(4, fx.spec.lambda_max());
  SampledSystem sampled = sample_system(sys, fx.spec);
  const Eigen::VectorXd f = fx.noise_signal(6);
  const Coefficients c = decompose_direct(f, sampled, fx.spec);

  sampled.values.row(1) *= 0.5;
  try {
    reconstruct(c, sampled, fx.spec);
    FAIL("expected not_parseval");
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_parseval);
  }
}

TEST_CASE("matrix-free analysis converges to the direct one") {
  Fixture fx;
  const KernelSystem sys = umt_system(5, fx.spec.lambda_max());
  const SampledSystem sampled = sample_system(sys, fx.spec);
  const Eigen::VectorXd f = fx.noise_signal(8);

  const Coefficients direct = decompose_direct(f, sampled, fx.spec);
  const auto filters = cheb_filters(sys, 200);
  const Coefficients cheb = decompose_cheb(f, fx.op, filters);
  CHECK(cheb.mode == Coefficients::Mode::chebyshev);
  CHECK(cheb.cheb_order == 200);
  REQUIRE(cheb.bands() == 5);

  for (int j = 0; j < 5; ++j) {
    const double rel = (cheb.values.row(j) - direct.values.row(j)).norm() /
                       direct.values.row(j).norm();
    CHECK(rel <= 1e-2);
  }
}

TEST_CASE("band energy fractions") {
  Fixture fx;
  const KernelSystem sys = umt_system(6, fx.spec.lambda_max());
  const SampledSystem sampled = sample_system(sys, fx.spec);
  const Eigen::VectorXd f = fx.noise_signal(12);

  const Coefficients c = decompose_direct(f, sampled, fx.spec);
  const Eigen::VectorXd frac = band_energies(c);
  REQUIRE(frac.size() == 6);
  CHECK(frac.sum() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(frac.minCoeff() >= 0.0);

  Coefficients zero = c;
  zero.values.setZero();
  CHECK_THROWS_AS(band_energies(zero), Error);

  // An eigenvector's energy lands in the bands covering its eigenvalue.
  const Eigen::VectorXd chi = fx.spec.eigenvectors.col(20);
  const Eigen::VectorXd ef =
      band_energies(decompose_direct(chi, sampled, fx.spec));
  const double lam = fx.spec.eigenvalues(20);
  double covered = 0.0;
  for (int j = 0; j < 6; ++j) {
    if (sys.kernels[j](lam) > 1e-8) covered += ef(j);
  }
  CHECK(covered == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("ensemble band energies average the per-signal fractions") {
  Fixture fx;
  const KernelSystem sys = umt_system(6, fx.spec.lambda_max());
  const SampledSystem sampled = sample_system(sys, fx.spec);

  SignalSet set;
  set.signals = Eigen::MatrixXd(fx.spec.size(), 3);
  for (int s = 0; s < 3; ++s) {
    set.signals.col(s) = fx.noise_signal(100 + s);
  }
  set.labels = {"a", "b", "c"};

  const Eigen::VectorXd mean = ensemble_band_energies(set, sampled, fx.spec);
  CHECK(mean.sum() == doctest::Approx(1.0).epsilon(1e-10));

  const SignalSet cleaned = demean_normalize(set, fx.spec);
  Eigen::VectorXd manual = Eigen::VectorXd::Zero(6);
  for (int s = 0; s < 3; ++s) {
    manual += band_energies(
        decompose_direct(cleaned.signals.col(s), sampled, fx.spec));
  }
  manual /= 3.0;
  CHECK((mean - manual).norm() <= 1e-12);
}

TEST_CASE("merging bands keeps the partition") {
  const KernelSystem sys = bspline_system(10, 3, 2.0);
  const KernelSystem merged = merge_bands(sys, {3, 2, 2, 2, 1});
  CHECK(merged.tight);
  REQUIRE(merged.bands() == 5);
  CHECK(merged.design.family == "merged-bspline");

  double worst = 0.0;
  for (int i = 0; i < 2000; ++i) {
    const double lambda = 2.0 * i / 1999.0;
    double g = 0.0;
    for (const auto& k : merged.kernels) g += k(lambda) * k(lambda);
    worst = std::max(worst, std::abs(g - 1.0));
    // Each merged kernel is the root of its members' squared sum.
    double sq = 0.0;
    for (int j = 0; j < 3; ++j) {
      sq += sys.kernels[j](lambda) * sys.kernels[j](lambda);
    }
    CHECK(std::abs(merged.kernels[0](lambda) - std::sqrt(sq)) <= 1e-12);
  }
  CHECK(worst <= 1e-9);

  CHECK_THROWS_AS(merge_bands(sys, {5, 5, 1}), Error);
  CHECK_THROWS_AS(merge_bands(sys, {10, 0}), Error);
  CHECK_THROWS_AS(merge_bands(sys, {}), Error);
}

TEST_CASE("coarse partitions from band energies") {
  // Concentrated low end, long faint tail.
  Eigen::VectorXd energy(12);
  energy << 0.4, 0.3, 0.1, 0.05, 0.05, 0.04, 0.02, 0.02, 0.01, 0.005, 0.004,
      0.001;

  const std::vector<int> sizes = coarse_band_partition(energy, 2, 3, 0.02);
  REQUIRE(sizes.size() == 5);  // low group + 3 middle + tail
  int total = 0;
  for (int s : sizes) {
    CHECK(s >= 1);
    total += s;
  }
  CHECK(total == 12);
  CHECK(sizes.front() == 2);
  // The faint suffix 0.005+0.004+0.001 = 0.01 <= 2% of the energy.
  CHECK(sizes.back() >= 3);

  CHECK_THROWS_AS(coarse_band_partition(energy, 0, 3, 0.02), Error);
  CHECK_THROWS_AS(coarse_band_partition(energy, 11, 3, 0.02), Error);
  CHECK_THROWS_AS(coarse_band_partition(energy, 2, 3, -0.5), Error);
}

TEST_CASE("signal-adapted construction is warping") {
  const KernelSystem proto = umt_system(7, 2.0);
  const WarpFunction warp =
      monotone_cubic({0.0, 0.5, 2.0}, {0.0, 1.2, 2.0});
  const KernelSystem adapted = build_signal_adapted(proto, warp);
  CHECK(adapted.tight);
  for (int i = 0; i < 500; ++i) {
    const double lambda = 2.0 * i / 499.0;
    CHECK(adapted.kernels[3](lambda) ==
          doctest::Approx(proto.kernels[3](warp(lambda))).epsilon(1e-13));
  }
}
