#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <utility>
#include <vector>

#include "graphspectra/energy.hpp"
#include "graphspectra/graph.hpp"

namespace graphspectra {

/// Random spike indicator: round(density * N) distinct vertices set to
/// one. density must lie in (0, 1].
Eigen::VectorXd spike(double density, int n_vertices, std::uint64_t seed);

/// Diffuses a seed pattern by n applications of the adjacency operator.
/// smoothness must lie in [0, 16].
Eigen::VectorXd smooth_signal(const Graph& graph, int smoothness,
                              const Eigen::VectorXd& p);

/// Ensemble description: (spike density, smoothness) pairs, each realized
/// `realizations` times from per-signal derived seeds.
struct SignalSpec {
  std::vector<std::pair<double, int>> pairs;
  int realizations = 10;
  std::uint64_t seed = 1;
};

/// Builds the labeled ensemble; label format "eta<density>_n<smoothness>_r<k>".
SignalSet make_sets(const Graph& graph, const SignalSpec& spec);

/// Adds white Gaussian noise at the given per-signal SNR (dB), defined
/// through the sample standard deviation of each signal. snr_db = +inf
/// returns the set unchanged.
SignalSet add_noise(const SignalSet& set, double snr_db, std::uint64_t seed);

}  // namespace graphspectra
