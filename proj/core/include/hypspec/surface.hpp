#pragma once

// Fenchel-Nielsen surface model glued from pairs of pants along the edges of
// a cubic graph, and its decomposition along separating cuffs.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hypspec/graphs.hpp"

namespace hypspec::surface {

using graphs::CubicGraph;
using graphs::EdgeId;
using graphs::Vertex;

/// Closed hyperbolic surface: one pair of pants per vertex, one cuff per
/// edge with its length and twist. Genus is vertex_count / 2 + 1.
class FNSurface {
 public:
  FNSurface(CubicGraph graph, std::vector<double> cuff_lengths, std::vector<double> twists);

  const CubicGraph& graph() const noexcept { return graph_; }
  std::span<const double> cuff_lengths() const noexcept { return cuff_lengths_; }
  std::span<const double> twists() const noexcept { return twists_; }

  std::size_t genus() const noexcept { return graph_.vertex_count() / 2 + 1; }

  /// 2 pi per pair of pants, i.e. 4 pi (g - 1).
  double total_area() const noexcept;

  /// The common cuff length, if all cuffs have the same length.
  std::optional<double> uniform_length() const noexcept;

 private:
  CubicGraph graph_;
  std::vector<double> cuff_lengths_;
  std::vector<double> twists_;
};

/// Glues a pair of pants with all cuffs of length epsilon at every vertex.
/// An empty twist vector means zero twists.
FNSurface assemble(CubicGraph graph, double epsilon, std::vector<double> twists = {});

/// One component M_i of the surface cut along its separating cuffs.
/// `core_area` is the area left after removing the half-collars of the
/// component's own separating cuffs; half-collars of non-separating cuffs
/// stay inside the core.
struct Block {
  std::vector<Vertex> vertices;
  std::size_t pants = 0;
  double area = 0;
  double core_area = 0;
  std::vector<EdgeId> separating_cuffs;
};

/// Components M_0..M_{g0} ordered along the path of separating cuffs; cuff i
/// joins components i and i + 1.
struct BlockChain {
  std::vector<Block> components;
  std::vector<EdgeId> separating_cuffs;
  std::vector<double> separating_lengths;

  std::vector<double> core_areas() const;
};

/// Throws StructureError if the separating cuffs do not form a path. The
/// end containing vertex 0 comes first.
BlockChain block_chain(const FNSurface& surface);

/// Number of separating cuffs (bridges of the graph).
std::size_t separating_count(const FNSurface& surface);

}  // namespace hypspec::surface
