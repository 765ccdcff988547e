#include "graphspectra/spectrum.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>

#include "graphspectra/rng.hpp"

namespace graphspectra {

const EigenGroup& Spectrum::group_of(int l) const {
  for (const EigenGroup& g : groups) {
    if (l >= g.first_index && l < g.first_index + g.multiplicity) return g;
  }
  fail(errc::index_out_of_range,
       "eigenvalue index " + std::to_string(l) + " outside spectrum");
}

Eigen::VectorXd Spectrum::gft(const Eigen::VectorXd& f) const {
  if (f.size() != eigenvectors.rows()) {
    fail(errc::dimension_mismatch, "signal length does not match spectrum");
  }
  return eigenvectors.transpose() * f;
}

Spectrum full_spectrum(const Laplacian& op, double group_tol, int max_size) {
  const int n = op.size();
  if (n > max_size) {
    fail(errc::too_large,
         "dense eigendecomposition capped at " + std::to_string(max_size) +
             " vertices, got " + std::to_string(n));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      Eigen::MatrixXd(op.matrix()));
  if (solver.info() != Eigen::Success) {
    fail(errc::no_convergence, "eigendecomposition failed");
  }

  Spectrum spec;
  spec.eigenvalues = solver.eigenvalues();
  spec.eigenvectors = solver.eigenvectors();

  const double lmax = spec.eigenvalues(n - 1);
  const double tol = group_tol >= 0.0 ? group_tol : 1e-8 * std::max(lmax, 1e-300);

  // The operator is positive semidefinite; tiny negative leading values
  // are roundoff.
  for (int l = 0; l < n; ++l) {
    if (spec.eigenvalues(l) < 0.0 && spec.eigenvalues(l) > -tol) {
      spec.eigenvalues(l) = 0.0;
    }
  }

  for (int l = 0; l < n;) {
    EigenGroup g;
    g.first_index = l;
    g.value = spec.eigenvalues(l);
    int count = 1;
    while (l + count < n &&
           spec.eigenvalues(l + count) - spec.eigenvalues(l + count - 1) <= tol) {
      ++count;
    }
    g.multiplicity = count;
    spec.groups.push_back(g);
    l += count;
  }

  if (!spec.groups.empty() && spec.groups.front().value <= tol &&
      spec.groups.front().multiplicity > 1) {
    fail(errc::disconnected,
         "null eigenvalue multiplicity " +
             std::to_string(spec.groups.front().multiplicity) +
             ": graph is disconnected");
  }
  return spec;
}

double estimate_lambda_max(const Laplacian& op, double tol, int max_iter,
                           double margin, std::uint64_t seed) {
  if (tol <= 0.0 || max_iter < 1 || margin < 0.0) {
    fail(errc::invalid_parameters, "bad power-iteration parameters");
  }
  const int n = op.size();
  auto rng = make_engine(seed);
  Eigen::VectorXd x(n);
  for (int i = 0; i < n; ++i) x(i) = uniform01(rng) - 0.5;
  x.normalize();

  double estimate = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    Eigen::VectorXd y = op.apply(x);
    const double rayleigh = x.dot(y);
    const double norm = y.norm();
    if (norm == 0.0) return 0.0;  // null operator
    x = y / norm;
    if (it > 0 && std::abs(rayleigh - estimate) <=
                      tol * std::max(std::abs(rayleigh), 1e-12)) {
      return rayleigh * (1.0 + margin);
    }
    estimate = rayleigh;
  }
  fail(errc::no_convergence, "power iteration did not settle");
}

}  // namespace graphspectra
