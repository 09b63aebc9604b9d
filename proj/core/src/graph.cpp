#include <algorithm>
#include <string>

#include "hypspec/graphs.hpp"

namespace hypspec::graphs {

MultiGraph::MultiGraph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  for (const Edge& e : edges_) {
    check_endpoint(e.u);
    check_endpoint(e.v);
  }
}

void MultiGraph::check_endpoint(Vertex v) const {
  if (v >= vertex_count_) {
    throw DomainError("edge endpoint " + std::to_string(v) + " out of range for " +
                      std::to_string(vertex_count_) + " vertices");
  }
}

Vertex MultiGraph::add_vertex() { return static_cast<Vertex>(vertex_count_++); }

EdgeId MultiGraph::add_edge(Vertex u, Vertex v) {
  check_endpoint(u);
  check_endpoint(v);
  edges_.push_back({u, v});
  return edges_.size() - 1;
}

void MultiGraph::reattach(EdgeId id, Edge replacement) {
  check_endpoint(replacement.u);
  check_endpoint(replacement.v);
  edges_.at(id) = replacement;
}

std::vector<std::size_t> MultiGraph::degrees() const {
  std::vector<std::size_t> deg(vertex_count_, 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

std::vector<std::vector<Incidence>> MultiGraph::incidence() const {
  std::vector<std::vector<Incidence>> adj(vertex_count_);
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    adj[e.u].push_back({e.v, id});
    adj[e.v].push_back({e.u, id});
  }
  return adj;
}

bool is_connected(const MultiGraph& graph) {
  const std::size_t n = graph.vertex_count();
  if (n == 0) return true;
  const auto adj = graph.incidence();
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (const Incidence& inc : adj[x]) {
      if (!seen[inc.neighbor]) {
        seen[inc.neighbor] = 1;
        ++reached;
        stack.push_back(inc.neighbor);
      }
    }
  }
  return reached == n;
}

namespace {

bool has_loop(const MultiGraph& graph) {
  return std::any_of(graph.edges().begin(), graph.edges().end(),
                     [](const Edge& e) { return e.is_loop(); });
}

bool has_parallel_pair(const MultiGraph& graph) {
  std::vector<std::pair<Vertex, Vertex>> keys;
  keys.reserve(graph.edge_count());
  for (const Edge& e : graph.edges()) {
    if (!e.is_loop()) keys.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  }
  std::sort(keys.begin(), keys.end());
  return std::adjacent_find(keys.begin(), keys.end()) != keys.end();
}

// Shortest cycle of a loopless simple graph, or `cap` if none is shorter.
std::size_t bfs_girth(const MultiGraph& graph, std::size_t cap) {
  const std::size_t n = graph.vertex_count();
  const auto adj = graph.incidence();
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(n, kUnseen);
  std::vector<EdgeId> parent_edge(n);
  std::vector<Vertex> queue;
  queue.reserve(n);
  std::size_t best = cap;
  for (Vertex root = 0; root < n && best > 3; ++root) {
    for (Vertex v : queue) dist[v] = kUnseen;
    queue.clear();
    dist[root] = 0;
    parent_edge[root] = std::numeric_limits<EdgeId>::max();
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex x = queue[head];
      // Any cycle closed from here on is at least 2 dist[x] + 1 long.
      if (2 * dist[x] + 1 >= best) break;
      for (const Incidence& inc : adj[x]) {
        if (inc.edge == parent_edge[x]) continue;
        const Vertex y = inc.neighbor;
        if (dist[y] == kUnseen) {
          dist[y] = dist[x] + 1;
          parent_edge[y] = inc.edge;
          queue.push_back(y);
        } else {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  for (Vertex v : queue) dist[v] = kUnseen;
  return best;
}

}  // namespace

std::size_t girth(const MultiGraph& graph) {
  if (has_loop(graph)) return 1;
  if (has_parallel_pair(graph)) return 2;
  return bfs_girth(graph, kInfiniteGirth);
}

bool has_girth_at_least(const MultiGraph& graph, std::size_t min_girth) {
  if (min_girth <= 1) return true;
  if (has_loop(graph)) return false;
  if (min_girth == 2) return true;
  if (has_parallel_pair(graph)) return false;
  if (min_girth == 3) return true;
  return bfs_girth(graph, min_girth) >= min_girth;
}

std::vector<EdgeId> bridges(const MultiGraph& graph) {
  const std::size_t n = graph.vertex_count();
  if (!is_connected(graph)) {
    throw DomainError("bridges: graph is disconnected");
  }
  if (n == 0) return {};
  const auto adj = graph.incidence();
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> order(n, kUnseen);
  std::vector<std::size_t> low(n, 0);
  std::vector<EdgeId> bridge_list;

  struct Frame {
    Vertex vertex;
    EdgeId via;
    std::size_t next;
  };
  std::vector<Frame> stack;
  std::size_t counter = 0;
  order[0] = low[0] = counter++;
  stack.push_back({0, std::numeric_limits<EdgeId>::max(), 0});
  while (!stack.empty()) {
    Frame& top = stack.back();
    const Vertex x = top.vertex;
    if (top.next < adj[x].size()) {
      const Incidence inc = adj[x][top.next++];
      // Skip only the tree edge itself so that parallel edges count as back edges.
      if (inc.edge == top.via) continue;
      const Vertex y = inc.neighbor;
      if (order[y] == kUnseen) {
        order[y] = low[y] = counter++;
        stack.push_back({y, inc.edge, 0});
      } else {
        low[x] = std::min(low[x], order[y]);
      }
    } else {
      const EdgeId via = top.via;
      stack.pop_back();
      if (!stack.empty()) {
        const Vertex parent = stack.back().vertex;
        low[parent] = std::min(low[parent], low[x]);
        if (low[x] > order[parent]) bridge_list.push_back(via);
      }
    }
  }
  std::sort(bridge_list.begin(), bridge_list.end());
  return bridge_list;
}

CubicGraph::CubicGraph(MultiGraph graph) : graph_(std::move(graph)) {
  const auto deg = graph_.degrees();
  for (std::size_t v = 0; v < deg.size(); ++v) {
    if (deg[v] != 3) {
      throw StructureError("graph is not cubic: vertex " + std::to_string(v) + " has degree " +
                           std::to_string(deg[v]));
    }
  }
  if (graph_.vertex_count() == 0 || !is_connected(graph_)) {
    throw StructureError("cubic graph must be non-empty and connected");
  }
}

}  // namespace hypspec::graphs
