#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "graphspectra/graph.hpp"

namespace graphspectra {

/// A group of numerically equal eigenvalues: multiplicity bookkeeping for
/// the warp constructions.
struct EigenGroup {
  double value = 0.0;
  int multiplicity = 0;
  int first_index = 0;  // 0-based index of the first member
};

/// Full eigendecomposition of a Laplacian: ascending eigenvalues, an
/// orthonormal eigenvector basis (columns), and equal-value groups.
struct Spectrum {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;
  std::vector<EigenGroup> groups;

  int size() const { return static_cast<int>(eigenvalues.size()); }
  double lambda_max() const {
    return eigenvalues.size() ? eigenvalues(eigenvalues.size() - 1) : 0.0;
  }

  /// Group containing eigenvalue index l (0-based).
  const EigenGroup& group_of(int l) const;

  /// Graph Fourier transform: coefficients of f in the eigenvector basis.
  Eigen::VectorXd gft(const Eigen::VectorXd& f) const;
};

/// Dense eigendecomposition of the Laplacian. Eigenvalues within
/// `group_tol` of each other are merged into one group; a negative
/// group_tol selects the default 1e-8 * lambda_max. Rejects disconnected
/// graphs (null eigenvalue multiplicity above one) and problems larger
/// than `max_size` vertices.
Spectrum full_spectrum(const Laplacian& op, double group_tol = -1.0,
                       int max_size = 5000);

/// Upper bound on the largest eigenvalue via power iteration with a
/// seeded start vector, inflated by `margin` (default 1%). Throws
/// errc::no_convergence if the Rayleigh quotient has not settled within
/// `max_iter` iterations.
double estimate_lambda_max(const Laplacian& op, double tol = 1e-7,
                           int max_iter = 2000, double margin = 0.01,
                           std::uint64_t seed = 20240501);

}  // namespace graphspectra
