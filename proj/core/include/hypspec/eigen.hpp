#pragma once

// Generalized symmetric eigenproblems L x = lambda M x for weighted graph
// Laplacians L and diagonal positive mass matrices M.

#include <cstddef>
#include <span>
#include <vector>

#include "hypspec/graphs.hpp"

namespace hypspec::rayleigh {

/// Weighted graph: node masses (areas) and one conductance per edge.
/// Loops are allowed and do not contribute to the Laplacian.
struct DiscreteModel {
  graphs::MultiGraph topology;
  std::vector<double> node_masses;
  std::vector<double> edge_conductances;

  /// Throws DomainError unless masses and conductances are positive,
  /// sized to the topology, and the topology is connected.
  void validate() const;
};

enum class EigenMethod {
  kAuto,             // tridiagonal for paths, dense up to kDenseLimit nodes, sparse beyond
  kTridiagonal,      // Sturm-sequence bisection; path topologies only
  kDenseJacobi,      // cyclic Jacobi on M^{-1/2} L M^{-1/2}
  kSparseShiftInvert // subspace iteration with a sparse LDL^T of L + sigma M
};

inline constexpr std::size_t kDenseLimit = 400;

/// Smallest `count` eigenvalues, nondecreasing.
std::vector<double> generalized_eigs(const DiscreteModel& model, std::size_t count,
                                     EigenMethod method = EigenMethod::kAuto);

/// Node order along a path topology, or empty if the topology is not a
/// simple path.
std::vector<graphs::Vertex> path_order(const graphs::MultiGraph& topology);

/// Smallest `count` eigenvalues of the symmetric tridiagonal matrix with the
/// given diagonal and off-diagonal, by bisection on Sturm counts to
/// width 1e-14 times the Gershgorin radius.
std::vector<double> tridiagonal_eigenvalues(std::span<const double> diagonal,
                                            std::span<const double> off_diagonal,
                                            std::size_t count);

/// All eigenvalues of a dense symmetric row-major n x n matrix, ascending.
/// Cyclic Jacobi; stops when every off-diagonal entry is below 1e-12 times
/// the Frobenius norm. Throws NumericalError after 100 sweeps.
std::vector<double> jacobi_eigenvalues(std::vector<double> matrix, std::size_t n);

/// Same as jacobi_eigenvalues, also returning orthonormal eigenvectors as
/// the columns of a row-major n x n matrix.
struct JacobiResult {
  std::vector<double> values;
  std::vector<double> vectors;
};
JacobiResult jacobi_eigensystem(std::vector<double> matrix, std::size_t n);

}  // namespace hypspec::rayleigh
