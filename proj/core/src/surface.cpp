#include "hypspec/surface.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "hypspec/hypgeom.hpp"

namespace hypspec::surface {

FNSurface::FNSurface(CubicGraph graph, std::vector<double> cuff_lengths, std::vector<double> twists)
    : graph_(std::move(graph)), cuff_lengths_(std::move(cuff_lengths)), twists_(std::move(twists)) {
  const std::size_t edges = graph_.edge_count();
  if (cuff_lengths_.size() != edges || twists_.size() != edges) {
    throw DomainError("surface: need one cuff length and one twist per edge (" +
                      std::to_string(edges) + ")");
  }
  for (double len : cuff_lengths_) {
    if (!std::isfinite(len) || !(len > 0.0) || len > geom::kMaxLength) {
      throw DomainError("surface: cuff lengths must lie in (0, 1e4]");
    }
  }
  for (double t : twists_) {
    if (!std::isfinite(t)) throw DomainError("surface: twists must be finite");
  }
}

double FNSurface::total_area() const noexcept {
  return 2.0 * std::numbers::pi * static_cast<double>(graph_.vertex_count());
}

std::optional<double> FNSurface::uniform_length() const noexcept {
  if (cuff_lengths_.empty()) return std::nullopt;
  const double first = cuff_lengths_.front();
  const bool uniform = std::all_of(cuff_lengths_.begin(), cuff_lengths_.end(),
                                   [first](double x) { return x == first; });
  if (!uniform) return std::nullopt;
  return first;
}

FNSurface assemble(CubicGraph graph, double epsilon, std::vector<double> twists) {
  const std::size_t edges = graph.edge_count();
  if (twists.empty()) twists.assign(edges, 0.0);
  std::vector<double> lengths(edges, epsilon);
  return FNSurface(std::move(graph), std::move(lengths), std::move(twists));
}

std::vector<double> BlockChain::core_areas() const {
  std::vector<double> out;
  out.reserve(components.size());
  for (const Block& b : components) out.push_back(b.core_area);
  return out;
}

std::size_t separating_count(const FNSurface& surface) {
  return graphs::bridges(surface.graph().graph()).size();
}

BlockChain block_chain(const FNSurface& surface) {
  const auto& g = surface.graph().graph();
  const std::size_t n = g.vertex_count();
  const auto bridge_ids = graphs::bridges(g);
  std::vector<char> is_bridge(g.edge_count(), 0);
  for (EdgeId id : bridge_ids) is_bridge[id] = 1;

  // Components of the graph with its bridges removed.
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  const auto adj = g.incidence();
  std::vector<std::size_t> comp(n, kNone);
  std::size_t comp_count = 0;
  for (Vertex start = 0; start < n; ++start) {
    if (comp[start] != kNone) continue;
    std::vector<Vertex> stack{start};
    comp[start] = comp_count;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (const auto& inc : adj[x]) {
        if (is_bridge[inc.edge] || comp[inc.neighbor] != kNone) continue;
        comp[inc.neighbor] = comp_count;
        stack.push_back(inc.neighbor);
      }
    }
    ++comp_count;
  }

  // The bridge tree must be a path.
  std::vector<std::vector<std::pair<std::size_t, EdgeId>>> tree(comp_count);
  for (EdgeId id : bridge_ids) {
    const auto& e = g.edge(id);
    tree[comp[e.u]].emplace_back(comp[e.v], id);
    tree[comp[e.v]].emplace_back(comp[e.u], id);
  }
  for (const auto& links : tree) {
    if (links.size() > 2) {
      throw StructureError("surface is not of chain type: a component meets three or more separating cuffs");
    }
  }

  std::size_t first = comp[0];
  if (comp_count > 1) {
    if (tree[first].size() != 1) {
      // Vertex 0 is in an interior component; start from the end with the smaller vertex.
      std::vector<std::size_t> ends;
      for (std::size_t c = 0; c < comp_count; ++c) {
        if (tree[c].size() == 1) ends.push_back(c);
      }
      std::vector<Vertex> min_vertex(comp_count, std::numeric_limits<Vertex>::max());
      for (Vertex v = 0; v < n; ++v) min_vertex[comp[v]] = std::min(min_vertex[comp[v]], v);
      first = *std::min_element(ends.begin(), ends.end(), [&](std::size_t a, std::size_t b) {
        return min_vertex[a] < min_vertex[b];
      });
    }
  }

  std::vector<std::size_t> order{first};
  BlockChain chain;
  std::size_t previous = kNone;
  for (std::size_t current = first; order.size() < comp_count;) {
    bool advanced = false;
    for (const auto& [next, id] : tree[current]) {
      if (next == previous) continue;
      chain.separating_cuffs.push_back(id);
      previous = current;
      current = next;
      order.push_back(current);
      advanced = true;
      break;
    }
    if (!advanced) throw StructureError("surface is not of chain type: separating cuffs are not a path");
  }

  std::vector<std::size_t> position(comp_count);
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;
  chain.components.resize(comp_count);
  for (Vertex v = 0; v < n; ++v) chain.components[position[comp[v]]].vertices.push_back(v);

  const auto lengths = surface.cuff_lengths();
  for (std::size_t i = 0; i < chain.separating_cuffs.size(); ++i) {
    const EdgeId id = chain.separating_cuffs[i];
    chain.separating_lengths.push_back(lengths[id]);
    chain.components[i].separating_cuffs.push_back(id);
    chain.components[i + 1].separating_cuffs.push_back(id);
  }
  for (Block& b : chain.components) {
    b.pants = b.vertices.size();
    b.area = 2.0 * std::numbers::pi * static_cast<double>(b.pants);
    b.core_area = b.area;
    for (EdgeId id : b.separating_cuffs) b.core_area -= geom::half_collar_area(lengths[id]);
  }
  return chain;
}

}  // namespace hypspec::surface
