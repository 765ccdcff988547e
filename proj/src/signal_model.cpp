#include "graphspectra/signal_model.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "graphspectra/rng.hpp"

namespace graphspectra {

Eigen::VectorXd spike(double density, int n_vertices, std::uint64_t seed) {
  if (!(density > 0.0) || density > 1.0) {
    fail(errc::invalid_density, "spike density must lie in (0, 1]");
  }
  if (n_vertices < 1) fail(errc::invalid_parameters, "empty vertex set");
  const int count = static_cast<int>(
      std::llround(density * static_cast<double>(n_vertices)));
  if (count < 1) {
    fail(errc::zero_signal, "spike density rounds to zero vertices");
  }

  auto rng = make_engine(seed);
  std::vector<int> index(n_vertices);
  for (int i = 0; i < n_vertices; ++i) index[i] = i;
  Eigen::VectorXd p = Eigen::VectorXd::Zero(n_vertices);
  for (int k = 0; k < count; ++k) {
    const int pick =
        k + static_cast<int>(uniform_index(rng, n_vertices - k));
    std::swap(index[k], index[pick]);
    p(index[k]) = 1.0;
  }
  return p;
}

Eigen::VectorXd smooth_signal(const Graph& graph, int smoothness,
                              const Eigen::VectorXd& p) {
  if (smoothness < 0 || smoothness > 16) {
    fail(errc::invalid_parameters, "smoothness must lie in [0, 16]");
  }
  if (p.size() != graph.n_vertices()) {
    fail(errc::dimension_mismatch, "seed pattern does not match the graph");
  }
  Eigen::VectorXd x = p;
  for (int it = 0; it < smoothness; ++it) x = graph.adjacency() * x;
  return x;
}

SignalSet make_sets(const Graph& graph, const SignalSpec& spec) {
  if (spec.pairs.empty() || spec.realizations < 1) {
    fail(errc::invalid_parameters, "signal spec is empty");
  }
  const int n = graph.n_vertices();
  const int total = static_cast<int>(spec.pairs.size()) * spec.realizations;

  SignalSet set;
  set.signals.resize(n, total);
  set.labels.reserve(total);

  int column = 0;
  std::uint64_t stream = 0;
  for (const auto& [density, smoothness] : spec.pairs) {
    for (int r = 1; r <= spec.realizations; ++r, ++column, ++stream) {
      const std::uint64_t signal_seed = mix_seed(spec.seed, stream);
      const Eigen::VectorXd x =
          smooth_signal(graph, smoothness, spike(density, n, signal_seed));
      if (x.norm() == 0.0) {
        fail(errc::degenerate_signal, "generated signal is zero");
      }
      set.signals.col(column) = x;
      char label[64];
      std::snprintf(label, sizeof(label), "eta%g_n%d_r%d", density,
                    smoothness, r);
      set.labels.emplace_back(label);
    }
  }
  return set;
}

SignalSet add_noise(const SignalSet& set, double snr_db, std::uint64_t seed) {
  if (set.count() == 0) fail(errc::invalid_parameters, "empty signal set");
  if (std::isinf(snr_db) && snr_db > 0.0) return set;

  SignalSet out = set;
  out.normalized = false;
  const int n = set.size();
  for (int s = 0; s < set.count(); ++s) {
    const Eigen::VectorXd& x = set.signals.col(s);
    const double mean = x.mean();
    const double sigma_x =
        std::sqrt((x.array() - mean).square().sum() / static_cast<double>(n));
    if (sigma_x == 0.0) {
      fail(errc::degenerate_signal,
           "signal " + std::to_string(s) + " has zero variance");
    }
    const double sigma_e = sigma_x * std::pow(10.0, -snr_db / 20.0);
    auto rng = make_engine(mix_seed(seed, static_cast<std::uint64_t>(s)));
    GaussianSource gauss(rng);
    for (int i = 0; i < n; ++i) {
      out.signals(i, s) += sigma_e * gauss();
    }
  }
  return out;
}

}  // namespace graphspectra
