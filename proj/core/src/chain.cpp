#include <algorithm>
#include <string>
#include <tuple>

#include "hypspec/graphs.hpp"

namespace hypspec::graphs {

std::size_t min_chain_genus(std::size_t block_size) {
  // g0 = 1 and V1 = V0 give 2g - 2 = 2 V0 + 2.
  return block_size + 2;
}

ChainPlan chain_plan(std::size_t genus, std::size_t block_size, std::size_t required_girth) {
  if (block_size < 2 || block_size % 2 != 0) {
    throw DomainError("chain_plan: block size must be even and at least 2");
  }
  const std::size_t minimum = min_chain_genus(block_size);
  if (genus < minimum) {
    throw DomainError("chain_plan: genus " + std::to_string(genus) + " is too small for block size " +
                      std::to_string(block_size) + "; minimum supported genus is " +
                      std::to_string(minimum));
  }
  const std::size_t total = 2 * genus - 2;
  const std::size_t stride = block_size + 2;
  ChainPlan plan;
  plan.genus = genus;
  plan.block_size = block_size;
  plan.required_girth = required_girth;
  plan.block_count_full = (total - block_size) / stride;
  plan.last_block_size = total - plan.block_count_full * stride;
  return plan;
}

std::vector<EdgeId> chain_bridges(const ChainPlan& plan) {
  const std::size_t edge_count = 3 * plan.genus - 3;
  std::vector<EdgeId> ids(plan.block_count_full);
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = edge_count - plan.block_count_full + i;
  return ids;
}

namespace {

// Non-loop, non-bridge edges of a block in lexicographic (min, max, id) order.
std::vector<EdgeId> attachment_candidates(const MultiGraph& block) {
  const auto bridge_ids = bridges(block);
  std::vector<std::tuple<Vertex, Vertex, EdgeId>> keyed;
  for (EdgeId id = 0; id < block.edge_count(); ++id) {
    const Edge& e = block.edge(id);
    if (e.is_loop() || std::binary_search(bridge_ids.begin(), bridge_ids.end(), id)) continue;
    keyed.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v), id);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<EdgeId> ids;
  ids.reserve(keyed.size());
  for (const auto& k : keyed) ids.push_back(std::get<2>(k));
  return ids;
}

}  // namespace

CubicGraph build_chain(const ChainPlan& plan, std::span<const CubicGraph> blocks) {
  const std::size_t g0 = plan.block_count_full;
  if (blocks.size() != g0 + 1) {
    throw DomainError("build_chain: expected " + std::to_string(g0 + 1) + " blocks, got " +
                      std::to_string(blocks.size()));
  }
  if (plan.genus < 2 || 2 * plan.genus - 2 != g0 * (plan.block_size + 2) + plan.last_block_size) {
    throw DomainError("build_chain: plan violates 2g - 2 = g0 (V0 + 2) + V1");
  }
  for (std::size_t b = 0; b <= g0; ++b) {
    const std::size_t expected = b < g0 ? plan.block_size : plan.last_block_size;
    if (blocks[b].vertex_count() != expected) {
      throw DomainError("build_chain: block " + std::to_string(b) + " has " +
                        std::to_string(blocks[b].vertex_count()) + " vertices, plan needs " +
                        std::to_string(expected));
    }
    if (!has_girth_at_least(blocks[b].graph(), plan.required_girth)) {
      throw DomainError("build_chain: block " + std::to_string(b) + " has girth below " +
                        std::to_string(plan.required_girth));
    }
  }
  if (g0 == 0) return blocks[0];

  MultiGraph chain;
  std::vector<Vertex> left_port(g0 + 1);
  std::vector<Vertex> right_port(g0 + 1);
  for (std::size_t b = 0; b <= g0; ++b) {
    const MultiGraph& block = blocks[b].graph();
    const auto offset = static_cast<Vertex>(chain.vertex_count());
    for (std::size_t v = 0; v < block.vertex_count(); ++v) chain.add_vertex();
    const EdgeId first_edge = chain.edge_count();
    for (const Edge& e : block.edges()) chain.add_edge(e.u + offset, e.v + offset);

    const std::size_t needed = (b > 0 ? 1 : 0) + (b < g0 ? 1 : 0);
    const auto candidates = attachment_candidates(block);
    if (candidates.size() < needed) {
      throw StructureError("build_chain: block " + std::to_string(b) +
                           " lacks edges that are neither loops nor bridges");
    }
    std::size_t next = 0;
    const auto subdivide = [&]() {
      const EdgeId id = first_edge + candidates[next++];
      const Edge e = chain.edge(id);
      const Vertex mid = chain.add_vertex();
      chain.reattach(id, {e.u, mid});
      chain.add_edge(mid, e.v);
      return mid;
    };
    if (b > 0) left_port[b] = subdivide();
    if (b < g0) right_port[b] = subdivide();
  }
  for (std::size_t b = 0; b < g0; ++b) chain.add_edge(right_port[b], left_port[b + 1]);
  return CubicGraph(std::move(chain));
}

CubicGraph build_small_eps_chain(std::size_t genus) {
  if (genus < 2) throw DomainError("build_small_eps_chain: genus must be at least 2");
  const std::size_t n = 2 * genus - 2;
  MultiGraph g(n);
  g.add_edge(0, 0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const auto a = static_cast<Vertex>(i);
    const auto b = static_cast<Vertex>(i + 1);
    g.add_edge(a, b);
    if (i % 2 == 1) g.add_edge(a, b);
  }
  g.add_edge(static_cast<Vertex>(n - 1), static_cast<Vertex>(n - 1));
  return CubicGraph(std::move(g));
}

}  // namespace hypspec::graphs
