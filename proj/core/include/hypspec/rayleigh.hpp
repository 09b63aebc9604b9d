#pragma once

// Test functions built from the block chain, their Rayleigh quotients, the
// closed-form upper bounds, and the discrete models whose eigenvalues bound
// lambda_k from above.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hypspec/eigen.hpp"
#include "hypspec/surface.hpp"

namespace hypspec::rayleigh {

/// A change of test-function value across the separating collar joining
/// components `collar` and `collar + 1`.
struct Transition {
  std::size_t pile = 0;
  std::size_t collar = 0;
  double a = 0;
  double b = 0;
};

/// Functions phi_0..phi_k, each constant on the core of every component.
/// Component i * g1 + j (j = 1..g1) belongs to pile i and carries the value
/// min(j, g1 + 1 - j) - 1. The end components and the r leftover components
/// before the last one carry 0.
struct TestFunctionFamily {
  std::size_t k = 0;
  std::size_t g1 = 0;
  std::size_t remainder = 0;
  std::vector<int> pile_of_block;  // -1 outside every pile
  std::vector<double> value_of_block;
  std::vector<Transition> transitions;

  std::size_t pile_count() const noexcept { return k + 1; }

  /// Values of phi_i on every component.
  std::vector<double> pile_vector(std::size_t pile) const;
};

/// Requires g0 - 1 >= k + 1; throws DomainError otherwise.
TestFunctionFamily build_test_functions(const surface::BlockChain& chain, std::size_t k);

/// sum_j value_j^2 * core_area_j per pile.
std::vector<double> family_mass(const TestFunctionFamily& family, const surface::BlockChain& chain);

/// Sum of the collar energy minima over the transitions of each pile.
std::vector<double> family_energy(const TestFunctionFamily& family, const surface::BlockChain& chain);

/// max_i energy_i / mass_i. Throws DomainError on a pile of zero mass.
double exact_family_bound(const TestFunctionFamily& family, const surface::BlockChain& chain);

/// Chain numbers used by the bounds: g0 and g1 for a genus and block size.
struct PileArithmetic {
  std::size_t g0 = 0;
  std::size_t g1 = 0;
  std::size_t remainder = 0;
};

PileArithmetic pile_arithmetic(std::size_t genus, std::size_t k, std::size_t block_size);

/// Core area 2 pi (V0 + 2) - 2 eps / sinh(eps / 2) of an interior component.
double interior_core_area(double epsilon, std::size_t block_size);

/// g1 * eps / (4 arctan(tanh(w/2))).
double energy_upper(std::size_t g1, double epsilon);

/// interior_core_area * (g1 - 2)^3 / 24.
double mass_lower(std::size_t g1, double epsilon, std::size_t block_size);

/// 24 eps / (4 arctan(tanh(w/2)) (2 pi (V0 + 2) - 2 eps / sinh(eps/2))) * g1 / (g1 - 2)^3.
/// Throws DomainError when g1 < 3.
double closed_form_bound(std::size_t genus, std::size_t k, double epsilon, std::size_t block_size);

/// 1e10 eps V0^2 / (arctan(tanh(w/2)) (pi (V0 + 2) - eps / sinh(eps/2))).
double beta(double epsilon, std::size_t block_size);

/// Nodes are the components of the chain with their core areas; edges are
/// the separating collars with conductance l / (4 arctan(tanh(w/2))).
DiscreteModel build_path_model(const surface::BlockChain& chain);

/// Nodes are the pants with mass 2 pi minus their three half-collars; edges
/// are the cuffs with the collar conductance.
DiscreteModel build_pants_model(const surface::FNSurface& surface);

/// Upper and lower bounds assembled for one configuration. The family bound
/// uses disjoint supports: any combination of the phi_i has quotient at most
/// the largest individual quotient.
struct BoundReport {
  std::size_t genus = 0;
  std::size_t k = 0;
  double epsilon = 0;
  std::size_t block_size = 0;  // V0
  std::size_t g0 = 0;
  std::size_t g1 = 0;
  std::size_t remainder = 0;
  std::size_t graph_girth = 0;
  std::uint64_t seed = 0;

  std::vector<double> family_energies;
  std::vector<double> family_masses;
  std::optional<double> exact_family_bound;  // undefined when a pile has zero mass
  std::optional<double> closed_form_bound;
  std::optional<double> energy_upper;
  std::optional<double> mass_lower;
  double beta = 0;
  double beta_bound = 0;
  double cheeger_lower = 0;
  double alpha = 0;
  bool pile_ratio_holds = false;  // g1 / g >= 1 / (24 V0 k)

  std::vector<double> path_model_eigs;
  std::vector<double> pants_model_eigs;  // empty when not computed

  double lambda_path_k() const { return path_model_eigs.at(k); }
  std::optional<double> lambda_pants_k() const {
    if (pants_model_eigs.size() <= k) return std::nullopt;
    return pants_model_eigs[k];
  }
};

}  // namespace hypspec::rayleigh
