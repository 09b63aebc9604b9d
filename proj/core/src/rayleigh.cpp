#include "hypspec/rayleigh.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hypspec/hypgeom.hpp"

namespace hypspec::rayleigh {

std::vector<double> TestFunctionFamily::pile_vector(std::size_t pile) const {
  std::vector<double> out(value_of_block.size(), 0.0);
  for (std::size_t j = 0; j < out.size(); ++j) {
    if (pile_of_block[j] == static_cast<int>(pile)) out[j] = value_of_block[j];
  }
  return out;
}

TestFunctionFamily build_test_functions(const surface::BlockChain& chain, std::size_t k) {
  const std::size_t blocks = chain.components.size();
  if (blocks < k + 3) {
    throw DomainError("build_test_functions: chain with " + std::to_string(blocks) +
                      " components is too short for k = " + std::to_string(k));
  }
  const std::size_t g0 = blocks - 1;
  TestFunctionFamily f;
  f.k = k;
  f.g1 = (g0 - 1) / (k + 1);
  f.remainder = (g0 - 1) % (k + 1);
  f.pile_of_block.assign(blocks, -1);
  f.value_of_block.assign(blocks, 0.0);
  for (std::size_t i = 0; i <= k; ++i) {
    for (std::size_t j = 1; j <= f.g1; ++j) {
      const std::size_t b = i * f.g1 + j;
      f.pile_of_block[b] = static_cast<int>(i);
      f.value_of_block[b] = static_cast<double>(std::min(j, f.g1 + 1 - j) - 1);
    }
  }
  for (std::size_t c = 0; c + 1 < blocks; ++c) {
    const double a = f.value_of_block[c];
    const double b = f.value_of_block[c + 1];
    if (a == b) continue;
    const int pile = a != 0.0 ? f.pile_of_block[c] : f.pile_of_block[c + 1];
    f.transitions.push_back({static_cast<std::size_t>(pile), c, a, b});
  }
  return f;
}

std::vector<double> family_mass(const TestFunctionFamily& family, const surface::BlockChain& chain) {
  if (family.value_of_block.size() != chain.components.size()) {
    throw DomainError("family_mass: family and chain disagree on the number of components");
  }
  std::vector<double> mass(family.pile_count(), 0.0);
  for (std::size_t j = 0; j < chain.components.size(); ++j) {
    if (family.pile_of_block[j] < 0) continue;
    const double v = family.value_of_block[j];
    mass[static_cast<std::size_t>(family.pile_of_block[j])] += v * v * chain.components[j].core_area;
  }
  return mass;
}

std::vector<double> family_energy(const TestFunctionFamily& family, const surface::BlockChain& chain) {
  std::vector<double> energy(family.pile_count(), 0.0);
  for (const Transition& t : family.transitions) {
    if (t.collar >= chain.separating_lengths.size()) {
      throw DomainError("family_energy: transition on a collar outside the chain");
    }
    const auto profile = geom::CollarProfile::standard(chain.separating_lengths[t.collar], t.a, t.b);
    energy[t.pile] += geom::collar_energy_min(profile);
  }
  return energy;
}

double exact_family_bound(const TestFunctionFamily& family, const surface::BlockChain& chain) {
  const auto mass = family_mass(family, chain);
  const auto energy = family_energy(family, chain);
  double bound = 0.0;
  for (std::size_t i = 0; i < mass.size(); ++i) {
    if (!(mass[i] > 0.0)) {
      throw DomainError("exact_family_bound: degenerate family, pile " + std::to_string(i) +
                        " has zero mass");
    }
    bound = std::max(bound, energy[i] / mass[i]);
  }
  return bound;
}

PileArithmetic pile_arithmetic(std::size_t genus, std::size_t k, std::size_t block_size) {
  const auto plan = graphs::chain_plan(genus, block_size, 0);
  PileArithmetic p;
  p.g0 = plan.block_count_full;
  if (p.g0 < k + 2) {
    throw DomainError("pile_arithmetic: g0 = " + std::to_string(p.g0) + " leaves fewer than k + 1 = " +
                      std::to_string(k + 1) + " blocks for the piles");
  }
  p.g1 = (p.g0 - 1) / (k + 1);
  p.remainder = (p.g0 - 1) % (k + 1);
  return p;
}

double interior_core_area(double epsilon, std::size_t block_size) {
  return 2.0 * std::numbers::pi * static_cast<double>(block_size + 2) -
         2.0 * geom::half_collar_area(epsilon);
}

double energy_upper(std::size_t g1, double epsilon) {
  return static_cast<double>(g1) * geom::collar_conductance(epsilon);
}

double mass_lower(std::size_t g1, double epsilon, std::size_t block_size) {
  const double m = static_cast<double>(g1) - 2.0;
  return interior_core_area(epsilon, block_size) * m * m * m / 24.0;
}

double closed_form_bound(std::size_t genus, std::size_t k, double epsilon, std::size_t block_size) {
  const auto p = pile_arithmetic(genus, k, block_size);
  if (p.g1 < 3) {
    throw DomainError("closed_form_bound: undefined for g1 = " + std::to_string(p.g1) + " < 3");
  }
  const double arc = geom::collar_arc(geom::collar_half_width(epsilon));
  const double g1 = static_cast<double>(p.g1);
  const double m = g1 - 2.0;
  return 24.0 * epsilon / (4.0 * arc * interior_core_area(epsilon, block_size)) * g1 / (m * m * m);
}

double beta(double epsilon, std::size_t block_size) {
  const double arc = geom::collar_arc(geom::collar_half_width(epsilon));
  const double v0 = static_cast<double>(block_size);
  const double denom =
      arc * (std::numbers::pi * (v0 + 2.0) - epsilon * geom::inv_sinh(epsilon / 2.0));
  return 1e10 * epsilon * v0 * v0 / denom;
}

DiscreteModel build_path_model(const surface::BlockChain& chain) {
  const std::size_t n = chain.components.size();
  DiscreteModel model{graphs::MultiGraph(n), {}, {}};
  for (const auto& b : chain.components) model.node_masses.push_back(b.core_area);
  for (std::size_t c = 0; c + 1 < n; ++c) {
    model.topology.add_edge(static_cast<graphs::Vertex>(c), static_cast<graphs::Vertex>(c + 1));
    model.edge_conductances.push_back(geom::collar_conductance(chain.separating_lengths.at(c)));
  }
  model.validate();
  return model;
}

DiscreteModel build_pants_model(const surface::FNSurface& surface) {
  const auto& g = surface.graph().graph();
  const auto lengths = surface.cuff_lengths();
  DiscreteModel model{g, std::vector<double>(g.vertex_count(), 2.0 * std::numbers::pi), {}};
  for (graphs::EdgeId id = 0; id < g.edge_count(); ++id) {
    const auto& e = g.edge(id);
    const double half = geom::half_collar_area(lengths[id]);
    model.node_masses[e.u] -= half;
    model.node_masses[e.v] -= half;
    model.edge_conductances.push_back(geom::collar_conductance(lengths[id]));
  }
  model.validate();
  return model;
}

}  // namespace hypspec::rayleigh
