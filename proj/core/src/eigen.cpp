#include "hypspec/eigen.hpp"

#include <Eigen/Dense>
#include <Eigen/SparseCholesky>
#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

namespace hypspec::rayleigh {

void DiscreteModel::validate() const {
  const std::size_t n = topology.vertex_count();
  if (n == 0) throw DomainError("discrete model: no nodes");
  if (node_masses.size() != n) throw DomainError("discrete model: one mass per node required");
  if (edge_conductances.size() != topology.edge_count()) {
    throw DomainError("discrete model: one conductance per edge required");
  }
  for (double m : node_masses) {
    if (!std::isfinite(m) || !(m > 0.0)) throw DomainError("discrete model: masses must be positive");
  }
  for (double c : edge_conductances) {
    if (!std::isfinite(c) || !(c > 0.0)) {
      throw DomainError("discrete model: conductances must be positive");
    }
  }
  if (!graphs::is_connected(topology)) throw DomainError("discrete model: topology is disconnected");
}

std::vector<graphs::Vertex> path_order(const graphs::MultiGraph& topology) {
  const std::size_t n = topology.vertex_count();
  if (n == 0 || topology.edge_count() != n - 1) return {};
  const auto adj = topology.incidence();
  graphs::Vertex start = 0;
  for (graphs::Vertex v = 0; v < n; ++v) {
    if (adj[v].size() > 2) return {};
    for (const auto& inc : adj[v]) {
      if (inc.neighbor == v) return {};
    }
    if (adj[v].size() <= 1 && start == 0 && adj[0].size() == 2) start = v;
  }
  std::vector<graphs::Vertex> order{start};
  std::vector<char> seen(n, 0);
  seen[start] = 1;
  while (order.size() < n) {
    const graphs::Vertex x = order.back();
    bool moved = false;
    for (const auto& inc : adj[x]) {
      if (!seen[inc.neighbor]) {
        seen[inc.neighbor] = 1;
        order.push_back(inc.neighbor);
        moved = true;
        break;
      }
    }
    if (!moved) return {};
  }
  return order;
}

std::vector<double> tridiagonal_eigenvalues(std::span<const double> diagonal,
                                            std::span<const double> off_diagonal,
                                            std::size_t count) {
  const std::size_t n = diagonal.size();
  if (n == 0 || off_diagonal.size() + 1 != n) {
    throw DomainError("tridiagonal_eigenvalues: off-diagonal must have n - 1 entries");
  }
  if (count > n) throw DomainError("tridiagonal_eigenvalues: count exceeds matrix size");

  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  double max_off_sq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double left = i > 0 ? std::fabs(off_diagonal[i - 1]) : 0.0;
    const double right = i + 1 < n ? std::fabs(off_diagonal[i]) : 0.0;
    lo = std::min(lo, diagonal[i] - left - right);
    hi = std::max(hi, diagonal[i] + left + right);
    if (i + 1 < n) max_off_sq = std::max(max_off_sq, off_diagonal[i] * off_diagonal[i]);
  }
  const double radius = std::max(std::fabs(lo), std::fabs(hi));
  if (radius == 0.0) return std::vector<double>(count, 0.0);
  const double width = 1e-14 * radius;
  const double pivmin = std::numeric_limits<double>::min() * std::max(1.0, max_off_sq);

  // Number of eigenvalues strictly below x.
  const auto sturm_count = [&](double x) {
    std::size_t negatives = 0;
    double q = diagonal[0] - x;
    for (std::size_t i = 0;; ++i) {
      if (std::fabs(q) < pivmin) q = -pivmin;
      if (q < 0.0) ++negatives;
      if (i + 1 == n) break;
      q = diagonal[i + 1] - x - off_diagonal[i] * off_diagonal[i] / q;
    }
    return negatives;
  };

  std::vector<double> values(count);
  for (std::size_t j = 0; j < count; ++j) {
    double a = j > 0 ? values[j - 1] - width : lo;
    double b = hi;
    for (int iter = 0; iter < 256 && b - a > width; ++iter) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      if (sturm_count(mid) > j) {
        b = mid;
      } else {
        a = mid;
      }
    }
    values[j] = 0.5 * (a + b);
  }
  return values;
}

JacobiResult jacobi_eigensystem(std::vector<double> a, std::size_t n) {
  if (a.size() != n * n) throw DomainError("jacobi: matrix size mismatch");
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
  double frob = 0.0;
  for (double x : a) frob += x * x;
  frob = std::sqrt(frob);
  const double threshold = 1e-12 * frob;
  const auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

  constexpr int kMaxSweeps = 100;
  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::fabs(at(p, q)));
    }
    if (off <= threshold) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        double t;
        if (std::fabs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = std::copysign(1.0, theta) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        at(p, p) -= t * apq;
        at(q, q) += t * apq;
        at(p, q) = at(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          if (k != p && k != q) {
            const double akp = at(k, p);
            const double akq = at(k, q);
            at(k, p) = at(p, k) = c * akp - s * akq;
            at(k, q) = at(q, k) = s * akp + c * akq;
          }
          const double vkp = v[k * n + p];
          const double vkq = v[k * n + q];
          v[k * n + p] = c * vkp - s * vkq;
          v[k * n + q] = s * vkp + c * vkq;
        }
      }
    }
  }
  if (!converged) throw NumericalError("jacobi: no convergence within 100 sweeps");

  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t x, std::size_t y) { return at(x, x) < at(y, y); });
  JacobiResult out;
  out.values.resize(n);
  out.vectors.resize(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = at(idx[j], idx[j]);
    for (std::size_t k = 0; k < n; ++k) out.vectors[k * n + j] = v[k * n + idx[j]];
  }
  return out;
}

std::vector<double> jacobi_eigenvalues(std::vector<double> matrix, std::size_t n) {
  return jacobi_eigensystem(std::move(matrix), n).values;
}

namespace {

std::vector<double> laplacian_diagonal(const DiscreteModel& model) {
  std::vector<double> diag(model.topology.vertex_count(), 0.0);
  const auto edges = model.topology.edges();
  for (std::size_t id = 0; id < edges.size(); ++id) {
    if (edges[id].is_loop()) continue;
    diag[edges[id].u] += model.edge_conductances[id];
    diag[edges[id].v] += model.edge_conductances[id];
  }
  return diag;
}

std::vector<double> path_eigs(const DiscreteModel& model, const std::vector<graphs::Vertex>& order,
                              std::size_t count) {
  const std::size_t n = order.size();
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;
  const auto ldiag = laplacian_diagonal(model);
  std::vector<double> diag(n);
  std::vector<double> off(n - 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) diag[i] = ldiag[order[i]] / model.node_masses[order[i]];
  const auto edges = model.topology.edges();
  for (std::size_t id = 0; id < edges.size(); ++id) {
    const std::size_t a = std::min(position[edges[id].u], position[edges[id].v]);
    off[a] = -model.edge_conductances[id] /
             std::sqrt(model.node_masses[edges[id].u] * model.node_masses[edges[id].v]);
  }
  return tridiagonal_eigenvalues(diag, off, count);
}

std::vector<double> dense_eigs(const DiscreteModel& model, std::size_t count) {
  const std::size_t n = model.topology.vertex_count();
  std::vector<double> a(n * n, 0.0);
  const auto ldiag = laplacian_diagonal(model);
  for (std::size_t i = 0; i < n; ++i) a[i * n + i] = ldiag[i] / model.node_masses[i];
  const auto edges = model.topology.edges();
  for (std::size_t id = 0; id < edges.size(); ++id) {
    const auto [u, v] = edges[id];
    if (u == v) continue;
    const double w = model.edge_conductances[id] / std::sqrt(model.node_masses[u] * model.node_masses[v]);
    a[u * n + v] -= w;
    a[v * n + u] -= w;
  }
  auto values = jacobi_eigenvalues(std::move(a), n);
  values.resize(count);
  return values;
}

// M-orthonormalizes the columns of y in place (two passes of modified
// Gram-Schmidt). Columns that vanish are replaced by fresh random vectors.
void m_orthonormalize(Eigen::MatrixXd& y, const Eigen::VectorXd& mass, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  for (Eigen::Index j = 0; j < y.cols(); ++j) {
    for (int attempt = 0; attempt < 3; ++attempt) {
      const double before = std::sqrt(y.col(j).cwiseProduct(mass).dot(y.col(j)));
      for (int pass = 0; pass < 2; ++pass) {
        for (Eigen::Index i = 0; i < j; ++i) {
          const double proj = y.col(i).cwiseProduct(mass).dot(y.col(j));
          y.col(j) -= proj * y.col(i);
        }
      }
      const double norm = std::sqrt(y.col(j).cwiseProduct(mass).dot(y.col(j)));
      if (norm > 1e-10 * before && norm > 0.0) {
        y.col(j) /= norm;
        break;
      }
      for (Eigen::Index k = 0; k < y.rows(); ++k) y(k, j) = normal(rng);
    }
  }
}

std::vector<double> sparse_eigs(const DiscreteModel& model, std::size_t count) {
  const auto n = static_cast<Eigen::Index>(model.topology.vertex_count());
  const auto ldiag = laplacian_diagonal(model);
  Eigen::VectorXd mass(n);
  double scale = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    mass(i) = model.node_masses[static_cast<std::size_t>(i)];
    scale = std::max(scale, ldiag[static_cast<std::size_t>(i)] / mass(i));
  }
  if (scale == 0.0) return std::vector<double>(count, 0.0);
  const double sigma = 1e-8 * scale;

  std::vector<Eigen::Triplet<double>> lap_entries;
  const auto edges = model.topology.edges();
  for (std::size_t id = 0; id < edges.size(); ++id) {
    const auto [u, v] = edges[id];
    if (u == v) continue;
    const double c = model.edge_conductances[id];
    lap_entries.emplace_back(u, v, -c);
    lap_entries.emplace_back(v, u, -c);
  }
  for (Eigen::Index i = 0; i < n; ++i) lap_entries.emplace_back(i, i, ldiag[static_cast<std::size_t>(i)]);
  Eigen::SparseMatrix<double> lap(n, n);
  lap.setFromTriplets(lap_entries.begin(), lap_entries.end());
  Eigen::SparseMatrix<double> shifted = lap;
  for (Eigen::Index i = 0; i < n; ++i) shifted.coeffRef(i, i) += sigma * mass(i);

  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(shifted);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("sparse eigensolver: factorization of L + sigma M failed");
  }

  const auto block = static_cast<Eigen::Index>(std::min<std::size_t>(
      static_cast<std::size_t>(n), std::max<std::size_t>(2 * count, count + 8)));
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  std::normal_distribution<double> normal;
  Eigen::MatrixXd x(n, block);
  for (Eigen::Index j = 0; j < block; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) x(i, j) = normal(rng);
  }
  m_orthonormalize(x, mass, rng);

  constexpr int kMaxIterations = 1000;
  std::vector<double> previous(count, std::numeric_limits<double>::infinity());
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    Eigen::MatrixXd y = solver.solve(mass.asDiagonal() * x);
    m_orthonormalize(y, mass, rng);
    const Eigen::MatrixXd projected = y.transpose() * (lap * y);
    std::vector<double> h(static_cast<std::size_t>(block * block));
    for (Eigen::Index i = 0; i < block; ++i) {
      for (Eigen::Index j = 0; j < block; ++j) {
        h[static_cast<std::size_t>(i * block + j)] = 0.5 * (projected(i, j) + projected(j, i));
      }
    }
    const auto ritz = jacobi_eigensystem(std::move(h), static_cast<std::size_t>(block));
    Eigen::MatrixXd c(block, block);
    for (Eigen::Index i = 0; i < block; ++i) {
      for (Eigen::Index j = 0; j < block; ++j) c(i, j) = ritz.vectors[static_cast<std::size_t>(i * block + j)];
    }
    x = y * c;
    bool done = true;
    for (std::size_t j = 0; j < count; ++j) {
      const double change = std::fabs(ritz.values[j] - previous[j]);
      if (!(change <= 1e-15 * scale + 1e-12 * std::fabs(ritz.values[j]))) done = false;
      previous[j] = ritz.values[j];
    }
    if (done && iter > 0) return previous;
  }
  throw NumericalError("sparse eigensolver: subspace iteration did not converge");
}

}  // namespace

std::vector<double> generalized_eigs(const DiscreteModel& model, std::size_t count,
                                     EigenMethod method) {
  model.validate();
  const std::size_t n = model.topology.vertex_count();
  if (count == 0 || count > n) {
    throw DomainError("generalized_eigs: count must lie in [1, " + std::to_string(n) + "]");
  }
  if (method == EigenMethod::kAuto || method == EigenMethod::kTridiagonal) {
    const auto order = path_order(model.topology);
    if (!order.empty()) return path_eigs(model, order, count);
    if (method == EigenMethod::kTridiagonal) {
      throw DomainError("generalized_eigs: tridiagonal method needs a path topology");
    }
    method = n <= kDenseLimit ? EigenMethod::kDenseJacobi : EigenMethod::kSparseShiftInvert;
  }
  if (method == EigenMethod::kDenseJacobi) return dense_eigs(model, count);
  return sparse_eigs(model, count);
}

}  // namespace hypspec::rayleigh
