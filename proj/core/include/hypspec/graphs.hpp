#pragma once

// Trivalent multigraphs: the combinatorial pattern of a pants decomposition
// (vertices are pairs of pants, edges are cuffs).

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "hypspec/errors.hpp"

namespace hypspec::graphs {

using Vertex = std::uint32_t;
using EdgeId = std::size_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  bool is_loop() const noexcept { return u == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  Vertex neighbor;
  EdgeId edge;
};

/// Undirected multigraph. Parallel edges are repeated pairs and a loop is a
/// pair (u, u); a loop contributes two to the degree of its vertex.
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(std::size_t vertex_count) : vertex_count_(vertex_count) {}
  MultiGraph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_.at(id); }

  Vertex add_vertex();
  EdgeId add_edge(Vertex u, Vertex v);
  void reattach(EdgeId id, Edge replacement);

  std::vector<std::size_t> degrees() const;

  /// Incidence lists in edge-id order. A loop appears twice at its vertex.
  std::vector<std::vector<Incidence>> incidence() const;

  friend bool operator==(const MultiGraph&, const MultiGraph&) = default;

 private:
  void check_endpoint(Vertex v) const;

  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
};

inline constexpr std::size_t kInfiniteGirth = std::numeric_limits<std::size_t>::max();

bool is_connected(const MultiGraph& graph);

/// Length of the shortest cycle: 1 if a loop exists, 2 if a parallel pair
/// exists, otherwise found by breadth-first search from every vertex.
/// Returns kInfiniteGirth for a forest.
std::size_t girth(const MultiGraph& graph);

/// Same as girth(graph) >= min_girth, with early exit.
bool has_girth_at_least(const MultiGraph& graph, std::size_t min_girth);

/// Edges whose removal disconnects the graph, in increasing id order.
/// Throws DomainError if the graph is disconnected.
std::vector<EdgeId> bridges(const MultiGraph& graph);

/// Connected multigraph with every degree equal to three.
class CubicGraph {
 public:
  explicit CubicGraph(MultiGraph graph);

  const MultiGraph& graph() const noexcept { return graph_; }
  std::size_t vertex_count() const noexcept { return graph_.vertex_count(); }
  std::size_t edge_count() const noexcept { return graph_.edge_count(); }

  friend bool operator==(const CubicGraph&, const CubicGraph&) = default;

 private:
  MultiGraph graph_;
};

/// Uniform perfect matching on 3 * vertex_count half-edges.
MultiGraph random_pairing(std::size_t vertex_count, std::mt19937_64& rng);

/// Configuration-model rejection sampling: whole pairings are resampled
/// until one is connected with girth >= min_girth. Deterministic in seed.
/// Throws GenerationError once retry_budget pairings have been rejected.
CubicGraph random_cubic_with_girth(std::size_t vertex_count, std::size_t min_girth,
                                   std::uint64_t seed, std::size_t retry_budget);

/// Random pairing followed by edge switches that break short cycles without
/// creating new ones. Reaches girths that rejection sampling cannot, at the
/// price of a non-uniform distribution. Result is simple and bridgeless.
CubicGraph switching_cubic_with_girth(std::size_t vertex_count, std::size_t min_girth,
                                      std::uint64_t seed, std::size_t switch_budget);

/// Two vertices joined by three parallel edges.
CubicGraph theta_graph();

/// Smallest cubic graph of the given girth for girth in [3, 8]
/// (K4, K3,3, Petersen, Heawood, McGee, Tutte-Coxeter).
std::optional<CubicGraph> cage(std::size_t girth);

/// Order of the cage returned by cage(girth); nullopt outside [3, 8].
std::optional<std::size_t> cage_order(std::size_t girth);

/// Moore lower bound on the order of a cubic graph with the given girth.
std::size_t moore_bound(std::size_t girth);

/// Block size V0 used by the chain construction for the given girth.
/// Cage orders for 3..8, 2 for girth <= 2 (theta blocks), and a doubling
/// search from the Moore bound for 9..12.
std::size_t min_block_size(std::size_t min_girth);

/// A connected, bridgeless cubic graph with girth >= min_girth and the
/// requested even size, suitable as a chain block. Deterministic in seed.
CubicGraph generate_block(std::size_t vertex_count, std::size_t min_girth, std::uint64_t seed);

/// Arithmetic of the chain: 2g - 2 = g0 (V0 + 2) + V1 with V0 <= V1 <= 2 V0 + 2.
struct ChainPlan {
  std::size_t genus = 0;
  std::size_t block_size = 0;        // V0
  std::size_t block_count_full = 0;  // g0
  std::size_t last_block_size = 0;   // V1
  std::size_t required_girth = 0;    // W

  friend bool operator==(const ChainPlan&, const ChainPlan&) = default;
};

/// Smallest genus for which chain_plan accepts the block size.
std::size_t min_chain_genus(std::size_t block_size);

/// Picks the largest g0 >= 1 (equivalently the smallest V1) satisfying the
/// chain identity. Throws DomainError if the genus is below min_chain_genus.
ChainPlan chain_plan(std::size_t genus, std::size_t block_size, std::size_t required_girth);

/// Chains blocks[0..g0-1] (size V0) and blocks[g0] (size V1) left to right.
/// Each attachment subdivides the lexicographically first unused edge that
/// is neither a loop nor a bridge of the block; consecutive subdivision
/// vertices are joined by a bridge. Vertices are numbered block by block.
CubicGraph build_chain(const ChainPlan& plan, std::span<const CubicGraph> blocks);

/// Edge ids of the g0 connecting edges in a graph returned by build_chain,
/// left to right.
std::vector<EdgeId> chain_bridges(const ChainPlan& plan);

/// Path on 2g - 2 vertices alternating single and double edges, closed by a
/// loop at each end. Girth 1, with g - 1 bridges.
CubicGraph build_small_eps_chain(std::size_t genus);

/// Natural log of the asymptotic count of unlabeled n-regular graphs with
/// edge_count edges and girth >= min_girth.
double asymptotic_count(std::size_t degree, std::size_t edge_count, std::size_t min_girth);

/// Limiting probability exp(-sum_{i=1}^{w-1} (n-1)^i / (2i)) that a random
/// n-regular pairing has girth >= w.
double limiting_girth_probability(std::size_t degree, std::size_t min_girth);

struct GirthEstimate {
  double estimate = 0;
  double std_error = 0;
  std::size_t trials = 0;
  std::size_t hits = 0;
};

/// Fraction of uniform cubic pairings on vertex_count vertices with girth
/// >= min_girth. Trial t draws from its own generator seeded by (seed, t),
/// so the result does not depend on how trials are spread over threads.
GirthEstimate pairing_girth_probability(std::size_t vertex_count, std::size_t min_girth,
                                        std::size_t trials, std::uint64_t seed,
                                        unsigned threads = 0);

}  // namespace hypspec::graphs
