#include "graphspectra/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "graphspectra/rng.hpp"

namespace graphspectra {

namespace {

void validate_edges(int n, const std::vector<Edge>& edges) {
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : edges) {
    if (e.i < 0 || e.i >= n || e.j < 0 || e.j >= n) {
      fail(errc::index_out_of_range,
           "edge (" + std::to_string(e.i) + ", " + std::to_string(e.j) +
               ") outside vertex range [0, " + std::to_string(n) + ")");
    }
    if (e.i == e.j) {
      fail(errc::self_loop, "self-loop at vertex " + std::to_string(e.i));
    }
    if (e.w < 0.0) {
      fail(errc::negative_weight,
           "negative weight on edge (" + std::to_string(e.i) + ", " +
               std::to_string(e.j) + ")");
    }
    auto key = std::minmax(e.i, e.j);
    if (!seen.insert(key).second) {
      fail(errc::duplicate_edge,
           "duplicate edge (" + std::to_string(e.i) + ", " +
               std::to_string(e.j) + ")");
    }
  }
}

}  // namespace

Graph::Graph(int n_vertices, std::vector<Edge> edges)
    : n_(n_vertices), edges_(std::move(edges)) {
  if (n_ <= 0) fail(errc::invalid_parameters, "graph needs at least one vertex");
  validate_edges(n_, edges_);

  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(2 * edges_.size());
  for (const Edge& e : edges_) {
    triplets.emplace_back(e.i, e.j, e.w);
    triplets.emplace_back(e.j, e.i, e.w);
  }
  adjacency_.resize(n_, n_);
  adjacency_.setFromTriplets(triplets.begin(), triplets.end());
  degrees_ = adjacency_ * Eigen::VectorXd::Ones(n_);
}

bool Graph::connected() const {
  if (n_ == 1) return true;
  std::vector<char> visited(n_, 0);
  std::queue<int> frontier;
  frontier.push(0);
  visited[0] = 1;
  int reached = 1;
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    for (Eigen::SparseMatrix<double>::InnerIterator it(adjacency_, u); it;
         ++it) {
      const int v = static_cast<int>(it.row());
      if (!visited[v] && it.value() != 0.0) {
        visited[v] = 1;
        ++reached;
        frontier.push(v);
      }
    }
  }
  return reached == n_;
}

Graph build_graph(int n_vertices, const std::vector<Edge>& edges) {
  return Graph(n_vertices, edges);
}

Graph random_geometric_graph(int n, double radius, std::uint64_t seed) {
  if (n < 2) fail(errc::invalid_parameters, "geometric graph needs n >= 2");
  auto rng = make_engine(seed);
  std::vector<double> px(n), py(n);
  for (int i = 0; i < n; ++i) {
    px[i] = uniform01(rng);
    py[i] = uniform01(rng);
  }
  double r = radius > 0.0 ? radius : std::sqrt(8.0 / static_cast<double>(n));
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Edge> edges;
    const double r2 = r * r;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const double dx = px[i] - px[j];
        const double dy = py[i] - py[j];
        if (dx * dx + dy * dy <= r2) edges.push_back({i, j, 1.0});
      }
    }
    bool has_isolated = false;
    {
      std::vector<int> deg(n, 0);
      for (const Edge& e : edges) {
        ++deg[e.i];
        ++deg[e.j];
      }
      for (int d : deg) {
        if (d == 0) {
          has_isolated = true;
          break;
        }
      }
    }
    if (!has_isolated) {
      Graph g(n, edges);
      if (g.connected()) return g;
    }
    r *= 1.1;
  }
  fail(errc::no_convergence, "couldn't connect the geometric graph");
}

Laplacian::Laplacian(const Graph& graph, LaplacianKind kind) : kind_(kind) {
  const int n = graph.n_vertices();
  degrees_ = graph.degrees();
  for (int i = 0; i < n; ++i) {
    if (degrees_(i) <= 0.0) {
      fail(errc::isolated_vertex,
           "vertex " + std::to_string(i) + " has zero degree");
    }
  }
  Eigen::SparseMatrix<double> lap(n, n);
  const Eigen::SparseMatrix<double>& a = graph.adjacency();
  if (kind == LaplacianKind::combinatorial) {
    Eigen::SparseMatrix<double> d(n, n);
    d.setIdentity();
    for (int i = 0; i < n; ++i) d.coeffRef(i, i) = degrees_(i);
    lap = d - a;
  } else {
    Eigen::VectorXd inv_sqrt = degrees_.array().rsqrt();
    Eigen::SparseMatrix<double> d(n, n);
    d.setIdentity();
    Eigen::SparseMatrix<double> scaled =
        inv_sqrt.asDiagonal() * a * inv_sqrt.asDiagonal();
    lap = d - scaled;
  }
  lap.makeCompressed();
  matrix_ = std::move(lap);
}

Eigen::VectorXd Laplacian::apply(const Eigen::VectorXd& f) const {
  if (f.size() != matrix_.rows()) {
    fail(errc::dimension_mismatch,
         "signal length " + std::to_string(f.size()) +
             " does not match operator size " + std::to_string(matrix_.rows()));
  }
  return matrix_ * f;
}

}  // namespace graphspectra
