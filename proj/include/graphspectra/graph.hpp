#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <cstdint>
#include <vector>

#include "graphspectra/errors.hpp"

namespace graphspectra {

/// One undirected weighted edge. Vertex indices are 0-based inside the
/// library; file loaders translate from the 1-based on-disk convention.
struct Edge {
  int i = 0;
  int j = 0;
  double w = 1.0;
};

/// Undirected weighted graph without self-loops, immutable once built.
class Graph {
 public:
  Graph(int n_vertices, std::vector<Edge> edges);

  int n_vertices() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Eigen::SparseMatrix<double>& adjacency() const { return adjacency_; }
  const Eigen::VectorXd& degrees() const { return degrees_; }
  bool connected() const;

 private:
  int n_;
  std::vector<Edge> edges_;
  Eigen::SparseMatrix<double> adjacency_;
  Eigen::VectorXd degrees_;
};

/// Validates and assembles a graph. Throws on out-of-range indices,
/// self-loops, negative weights and duplicate undirected edges.
Graph build_graph(int n_vertices, const std::vector<Edge>& edges);

/// Seeded random geometric graph on the unit square: n points, edges
/// between pairs closer than `radius`. If radius <= 0 a starting value of
/// sqrt(8/n) is used, and in either case the radius grows by 10% until the
/// graph is connected. Deterministic for a fixed seed.
Graph random_geometric_graph(int n, double radius, std::uint64_t seed);

enum class LaplacianKind { combinatorial, normalized };

/// Graph Laplacian operator: D - A, or its symmetric degree-normalized
/// form. Construction rejects isolated vertices.
class Laplacian {
 public:
  Laplacian(const Graph& graph, LaplacianKind kind);

  const Eigen::SparseMatrix<double>& matrix() const { return matrix_; }
  LaplacianKind kind() const { return kind_; }
  int size() const { return static_cast<int>(matrix_.rows()); }
  const Eigen::VectorXd& degrees() const { return degrees_; }

  /// Exact sparse matrix-vector product.
  Eigen::VectorXd apply(const Eigen::VectorXd& f) const;

 private:
  Eigen::SparseMatrix<double> matrix_;
  Eigen::VectorXd degrees_;
  LaplacianKind kind_;
};

inline Laplacian laplacian(const Graph& graph, LaplacianKind kind) {
  return Laplacian(graph, kind);
}

inline Eigen::VectorXd apply_operator(const Laplacian& op,
                                      const Eigen::VectorXd& f) {
  return op.apply(f);
}

}  // namespace graphspectra
