#include <doctest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "hypspec/eigen.hpp"

using namespace hypspec;
using namespace hypspec::rayleigh;
using graphs::MultiGraph;
using graphs::Vertex;

namespace {

DiscreteModel uniform_path(std::size_t n) {
  DiscreteModel m{MultiGraph(n), std::vector<double>(n, 1.0), {}};
  for (std::size_t i = 0; i + 1 < n; ++i) {
    m.topology.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
    m.edge_conductances.push_back(1.0);
  }
  return m;
}

DiscreteModel random_model(std::size_t n, std::size_t extra_edges, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> mass(0.5, 20.0);
  std::uniform_real_distribution<double> cond(0.01, 3.0);
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  DiscreteModel m{MultiGraph(n), {}, {}};
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<Vertex> parent(0, static_cast<Vertex>(i - 1));
    m.topology.add_edge(parent(rng), static_cast<Vertex>(i));
  }
  for (std::size_t i = 0; i < extra_edges; ++i) m.topology.add_edge(pick(rng), pick(rng));
  for (std::size_t i = 0; i < n; ++i) m.node_masses.push_back(mass(rng));
  for (std::size_t i = 0; i < m.topology.edge_count(); ++i) m.edge_conductances.push_back(cond(rng));
  return m;
}

// Dense generalized solve with Eigen.
std::vector<double> oracle_eigs(const DiscreteModel& m) {
  const auto n = static_cast<Eigen::Index>(m.topology.vertex_count());
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd mass = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t id = 0; id < m.topology.edge_count(); ++id) {
    const auto e = m.topology.edge(id);
    if (e.u == e.v) continue;
    const double c = m.edge_conductances[id];
    l(e.u, e.u) += c;
    l(e.v, e.v) += c;
    l(e.u, e.v) -= c;
    l(e.v, e.u) -= c;
  }
  for (Eigen::Index i = 0; i < n; ++i) mass(i, i) = m.node_masses[static_cast<std::size_t>(i)];
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(l, mass);
  const auto& v = solver.eigenvalues();
  return {v.data(), v.data() + v.size()};
}

}  // namespace

TEST_CASE("uniform path spectrum") {
  const auto m = uniform_path(100);
  for (auto method : {EigenMethod::kAuto, EigenMethod::kTridiagonal, EigenMethod::kDenseJacobi,
                      EigenMethod::kSparseShiftInvert}) {
    const auto eigs = generalized_eigs(m, 11, method);
    REQUIRE(eigs.size() == 11);
    for (std::size_t k = 0; k <= 10; ++k) {
      const double exact = 2.0 * (1.0 - std::cos(k * std::numbers::pi / 100.0));
      CHECK(std::fabs(eigs[k] - exact) <= 1e-9);
    }
    CHECK(std::fabs(eigs[0]) <= 1e-10);
  }
}

TEST_CASE("random models against a dense oracle") {
  std::mt19937_64 rng(314);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial * 3;
    const auto m = random_model(n, trial % 2 == 0 ? n / 2 : 0, rng);
    const auto ref = oracle_eigs(m);
    const std::size_t count = std::min<std::size_t>(n, 6);
    const double scale = std::max(1.0, ref.back());
    for (auto method : {EigenMethod::kAuto, EigenMethod::kDenseJacobi, EigenMethod::kSparseShiftInvert}) {
      const auto eigs = generalized_eigs(m, count, method);
      for (std::size_t k = 0; k < count; ++k) CHECK(std::fabs(eigs[k] - ref[k]) <= 1e-9 * scale);
      CHECK(std::fabs(eigs[0]) <= 1e-10);
      CHECK(std::is_sorted(eigs.begin(), eigs.end()));
      if (count > 1) CHECK(eigs[1] > 1e-8);
    }
  }
}

TEST_CASE("larger sparse model") {
  std::mt19937_64 rng(8);
  const auto m = random_model(600, 300, rng);
  const auto ref = oracle_eigs(m);
  const auto eigs = generalized_eigs(m, 8);
  for (std::size_t k = 0; k < 8; ++k) CHECK(std::fabs(eigs[k] - ref[k]) <= 1e-9 * std::max(1.0, ref.back()));
}

TEST_CASE("relabeling and scaling") {
  std::mt19937_64 rng(77);
  const auto m = random_model(30, 12, rng);
  const auto base = generalized_eigs(m, 10);

  std::vector<Vertex> perm(30);
  for (Vertex i = 0; i < 30; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  DiscreteModel relabeled{MultiGraph(30), std::vector<double>(30), m.edge_conductances};
  for (std::size_t i = 0; i < 30; ++i) relabeled.node_masses[perm[i]] = m.node_masses[i];
  for (const auto& e : m.topology.edges()) relabeled.topology.add_edge(perm[e.u], perm[e.v]);
  const auto moved = generalized_eigs(relabeled, 10);
  for (std::size_t k = 0; k < 10; ++k) CHECK(moved[k] == doctest::Approx(base[k]).epsilon(1e-10));

  auto heavy = m;
  for (double& x : heavy.node_masses) x *= 3.0;
  auto stiff = m;
  for (double& c : stiff.edge_conductances) c *= 3.0;
  auto both = heavy;
  both.edge_conductances = stiff.edge_conductances;
  const auto eh = generalized_eigs(heavy, 10);
  const auto es = generalized_eigs(stiff, 10);
  const auto eb = generalized_eigs(both, 10);
  for (std::size_t k = 1; k < 10; ++k) {
    CHECK(eh[k] == doctest::Approx(base[k] / 3.0).epsilon(1e-10));
    CHECK(es[k] == doctest::Approx(base[k] * 3.0).epsilon(1e-10));
    CHECK(eb[k] == doctest::Approx(base[k]).epsilon(1e-10));
  }
}

TEST_CASE("path detection") {
  CHECK(path_order(uniform_path(5).topology).size() == 5);
  CHECK(path_order(MultiGraph(1)).size() == 1);
  MultiGraph shuffled(4, {{2, 0}, {0, 3}, {3, 1}});
  const auto order = path_order(shuffled);
  REQUIRE(order.size() == 4);
  CHECK((order.front() == 2 || order.front() == 1));
  CHECK(path_order(MultiGraph(3, {{0, 1}, {1, 2}, {2, 0}})).empty());
  CHECK(path_order(MultiGraph(3, {{0, 1}, {1, 1}})).empty());
  CHECK(path_order(MultiGraph(4, {{0, 1}, {0, 2}, {0, 3}})).empty());

  DiscreteModel star{MultiGraph(4, {{0, 1}, {0, 2}, {0, 3}}), {1, 1, 1, 1}, {1, 1, 1}};
  CHECK_THROWS_AS(generalized_eigs(star, 2, EigenMethod::kTridiagonal), DomainError);
  const auto e = generalized_eigs(star, 4);
  CHECK(e[1] == doctest::Approx(1.0));
  CHECK(e[3] == doctest::Approx(4.0));
}

TEST_CASE("model validation") {
  auto m = uniform_path(4);
  CHECK_THROWS_AS(generalized_eigs(m, 0), DomainError);
  CHECK_THROWS_AS(generalized_eigs(m, 5), DomainError);
  auto bad_mass = m;
  bad_mass.node_masses[2] = 0.0;
  CHECK_THROWS_AS(bad_mass.validate(), DomainError);
  auto bad_cond = m;
  bad_cond.edge_conductances[0] = -1.0;
  CHECK_THROWS_AS(bad_cond.validate(), DomainError);
  auto short_list = m;
  short_list.edge_conductances.pop_back();
  CHECK_THROWS_AS(short_list.validate(), DomainError);
  DiscreteModel split{MultiGraph(2), {1.0, 1.0}, {}};
  CHECK_THROWS_AS(split.validate(), DomainError);
}

TEST_CASE("tridiagonal bisection") {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + trial * 7;
    std::vector<double> d(n), e(n - 1);
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) a(i, i) = d[i] = normal(rng);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      e[i] = trial % 3 == 0 && i % 4 == 0 ? 0.0 : normal(rng);
      a(i, i + 1) = a(i + 1, i) = e[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ref(a);
    const auto vals = tridiagonal_eigenvalues(d, e, n);
    for (std::size_t k = 0; k < n; ++k) CHECK(vals[k] == doctest::Approx(ref.eigenvalues()(k)).epsilon(1e-12).scale(10));
  }
  CHECK_THROWS_AS(tridiagonal_eigenvalues(std::vector<double>{1, 2}, std::vector<double>{}, 1), DomainError);
}

TEST_CASE("Jacobi eigensystem") {
  std::mt19937_64 rng(6);
  std::normal_distribution<double> normal;
  const std::size_t n = 25;
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) a[i * n + j] = a[j * n + i] = normal(rng);
  }
  const auto sys = jacobi_eigensystem(a, n);
  CHECK(std::is_sorted(sys.values.begin(), sys.values.end()));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      double av = 0.0;
      for (std::size_t j = 0; j < n; ++j) av += a[i * n + j] * sys.vectors[j * n + k];
      CHECK(av == doctest::Approx(sys.values[k] * sys.vectors[i * n + k]).scale(1.0).epsilon(1e-10));
    }
    for (std::size_t l = 0; l < n; ++l) {
      double dot = 0.0;
      for (std::size_t i = 0; i < n; ++i) dot += sys.vectors[i * n + k] * sys.vectors[i * n + l];
      CHECK(dot == doctest::Approx(k == l ? 1.0 : 0.0).scale(1.0).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(jacobi_eigenvalues({1.0, 2.0}, 2), DomainError);
}
