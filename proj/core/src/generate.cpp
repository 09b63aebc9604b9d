#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <numeric>
#include <string>

#include "hypspec/graphs.hpp"

namespace hypspec::graphs {

namespace {

void check_cubic_order(std::size_t vertex_count, std::size_t minimum) {
  if (vertex_count < minimum || vertex_count % 2 != 0) {
    throw DomainError("cubic graph order must be even and at least " + std::to_string(minimum) +
                      ", got " + std::to_string(vertex_count));
  }
}

MultiGraph from_lcf(std::size_t n, std::span<const int> pattern) {
  MultiGraph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    const long shift = pattern[i % pattern.size()];
    const auto j = static_cast<std::size_t>(((static_cast<long>(i) + shift) % static_cast<long>(n) +
                                             static_cast<long>(n)) %
                                            static_cast<long>(n));
    if (i < j) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  }
  return g;
}

MultiGraph petersen() {
  MultiGraph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

// Cubic multigraph kept as three neighbour slots per vertex so that edge
// switches are O(1).
class SwitchState {
 public:
  static constexpr EdgeId kEmpty = std::numeric_limits<EdgeId>::max();

  explicit SwitchState(const MultiGraph& g) : edges_(g.edges().begin(), g.edges().end()) {
    slots_.assign(g.vertex_count(), {});
    for (auto& s : slots_) s.fill({0, kEmpty});
    for (EdgeId id = 0; id < edges_.size(); ++id) attach(id, edges_[id]);
    dist_.assign(g.vertex_count(), kFar);
    parent_.assign(g.vertex_count(), kEmpty);
  }

  std::size_t vertex_count() const { return slots_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const Edge& edge(EdgeId id) const { return edges_[id]; }

  MultiGraph to_graph() const { return MultiGraph(slots_.size(), edges_); }

  void detach(EdgeId id) {
    const Edge e = edges_[id];
    clear_slot(e.u, id);
    clear_slot(e.v, id);
  }

  void attach(EdgeId id, Edge e) {
    edges_[id] = e;
    fill_slot(e.u, e.v, id);
    fill_slot(e.v, e.u, id);
  }

  // Shortest cycle of length < limit through edges reachable from root,
  // returned as edge ids; empty if there is none.
  std::vector<EdgeId> short_cycle_near(Vertex root, std::size_t limit) {
    reset();
    dist_[root] = 0;
    parent_[root] = kEmpty;
    touched_.push_back(root);
    for (std::size_t head = 0; head < touched_.size(); ++head) {
      const Vertex x = touched_[head];
      if (2 * dist_[x] + 1 >= limit) break;
      for (const Incidence& inc : slots_[x]) {
        if (inc.edge == parent_[x]) continue;
        if (edges_[inc.edge].is_loop()) return {inc.edge};
        const Vertex y = inc.neighbor;
        if (dist_[y] == kFar) {
          dist_[y] = dist_[x] + 1;
          parent_[y] = inc.edge;
          touched_.push_back(y);
          continue;
        }
        auto cycle = close_cycle(x, y, inc.edge);
        if (cycle.size() < limit) return cycle;
      }
    }
    return {};
  }

  // True if b is within max_dist of a without using edge `skip`.
  bool within(Vertex a, Vertex b, std::size_t max_dist, EdgeId skip) {
    reset();
    dist_[a] = 0;
    touched_.push_back(a);
    for (std::size_t head = 0; head < touched_.size(); ++head) {
      const Vertex x = touched_[head];
      if (x == b) return true;
      if (dist_[x] >= max_dist) continue;
      for (const Incidence& inc : slots_[x]) {
        if (inc.edge == skip) continue;
        if (dist_[inc.neighbor] == kFar) {
          dist_[inc.neighbor] = dist_[x] + 1;
          touched_.push_back(inc.neighbor);
        }
      }
    }
    return false;
  }

 private:
  static constexpr std::size_t kFar = std::numeric_limits<std::size_t>::max();

  void reset() {
    for (Vertex v : touched_) dist_[v] = kFar;
    touched_.clear();
  }

  std::vector<EdgeId> close_cycle(Vertex x, Vertex y, EdgeId closing) const {
    std::vector<EdgeId> left;
    std::vector<EdgeId> right;
    Vertex a = x;
    Vertex b = y;
    while (a != b) {
      if (dist_[a] >= dist_[b]) {
        left.push_back(parent_[a]);
        a = other_end(parent_[a], a);
      } else {
        right.push_back(parent_[b]);
        b = other_end(parent_[b], b);
      }
    }
    left.push_back(closing);
    left.insert(left.end(), right.rbegin(), right.rend());
    return left;
  }

  Vertex other_end(EdgeId id, Vertex v) const {
    const Edge& e = edges_[id];
    return e.u == v ? e.v : e.u;
  }

  void clear_slot(Vertex v, EdgeId id) {
    for (auto& s : slots_[v]) {
      if (s.edge == id) {
        s.edge = kEmpty;
        return;
      }
    }
  }

  void fill_slot(Vertex v, Vertex neighbor, EdgeId id) {
    for (auto& s : slots_[v]) {
      if (s.edge == kEmpty) {
        s = {neighbor, id};
        return;
      }
    }
    throw StructureError("switching: vertex degree exceeds three");
  }

  std::vector<Edge> edges_;
  std::vector<std::array<Incidence, 3>> slots_;
  std::vector<std::size_t> dist_;
  std::vector<EdgeId> parent_;
  std::vector<Vertex> touched_;
};

enum class SwitchOutcome { kClean, kStuck, kOutOfBudget };

// Runs switches until no cycle shorter than min_girth remains. Every
// accepted switch removes at least one short cycle and creates none.
SwitchOutcome remove_short_cycles(SwitchState& state, std::size_t min_girth, std::mt19937_64& rng,
                                  std::size_t& budget) {
  const std::size_t n = state.vertex_count();
  std::uniform_int_distribution<EdgeId> pick_edge(0, state.edge_count() - 1);
  constexpr std::size_t kPartnersPerCycle = 64;
  const std::size_t reach = min_girth - 2;
  std::size_t clean_run = 0;
  std::size_t failed_run = 0;
  Vertex cursor = 0;
  while (clean_run < n) {
    auto cycle = state.short_cycle_near(cursor, min_girth);
    if (cycle.empty()) {
      ++clean_run;
      cursor = static_cast<Vertex>((cursor + 1) % n);
      continue;
    }
    clean_run = 0;
    bool switched = false;
    std::uniform_int_distribution<std::size_t> pick_on_cycle(0, cycle.size() - 1);
    for (std::size_t attempt = 0; attempt < kPartnersPerCycle && !switched; ++attempt) {
      if (budget == 0) return SwitchOutcome::kOutOfBudget;
      --budget;
      const EdgeId e = cycle[pick_on_cycle(rng)];
      const EdgeId f = pick_edge(rng);
      if (f == e) continue;
      const Edge ee = state.edge(e);
      const Edge ff = state.edge(f);
      if (ee.u == ff.u || ee.u == ff.v || ee.v == ff.u || ee.v == ff.v) continue;
      const bool cross = (rng() & 1U) != 0;
      const Edge first{ee.u, cross ? ff.v : ff.u};
      const Edge second{ee.v, cross ? ff.u : ff.v};
      state.detach(e);
      state.detach(f);
      state.attach(e, first);
      state.attach(f, second);
      // A new edge closes a cycle of length dist + 1 through the rest of the graph.
      if (state.within(first.u, first.v, reach, e) || state.within(second.u, second.v, reach, f)) {
        state.detach(e);
        state.detach(f);
        state.attach(e, ee);
        state.attach(f, ff);
        continue;
      }
      switched = true;
    }
    if (switched) {
      failed_run = 0;
    } else {
      cursor = static_cast<Vertex>((cursor + 1) % n);
      if (++failed_run > n) return SwitchOutcome::kStuck;
    }
  }
  return SwitchOutcome::kClean;
}

}  // namespace

MultiGraph random_pairing(std::size_t vertex_count, std::mt19937_64& rng) {
  std::vector<Vertex> stubs(3 * vertex_count);
  for (std::size_t i = 0; i < stubs.size(); ++i) stubs[i] = static_cast<Vertex>(i / 3);
  std::shuffle(stubs.begin(), stubs.end(), rng);
  MultiGraph g(vertex_count);
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) g.add_edge(stubs[i], stubs[i + 1]);
  return g;
}

CubicGraph random_cubic_with_girth(std::size_t vertex_count, std::size_t min_girth,
                                   std::uint64_t seed, std::size_t retry_budget) {
  check_cubic_order(vertex_count, 4);
  if (min_girth < 1) throw DomainError("min_girth must be at least 1");
  std::mt19937_64 rng(seed);
  for (std::size_t attempt = 1; attempt <= retry_budget; ++attempt) {
    MultiGraph g = random_pairing(vertex_count, rng);
    if (has_girth_at_least(g, min_girth) && is_connected(g)) return CubicGraph(std::move(g));
  }
  throw GenerationError("no connected cubic graph on " + std::to_string(vertex_count) +
                            " vertices with girth >= " + std::to_string(min_girth) + " found",
                        retry_budget);
}

CubicGraph switching_cubic_with_girth(std::size_t vertex_count, std::size_t min_girth,
                                      std::uint64_t seed, std::size_t switch_budget) {
  check_cubic_order(vertex_count, 4);
  if (min_girth < 1) throw DomainError("min_girth must be at least 1");
  // Simple output is always requested.
  const std::size_t target = std::max<std::size_t>(min_girth, 3);
  std::mt19937_64 rng(seed);
  std::size_t budget = switch_budget;
  std::size_t restarts = 0;
  while (budget > 0) {
    SwitchState state(random_pairing(vertex_count, rng));
    ++restarts;
    const SwitchOutcome outcome = remove_short_cycles(state, target, rng, budget);
    if (outcome == SwitchOutcome::kOutOfBudget) break;
    if (outcome == SwitchOutcome::kStuck) continue;
    MultiGraph g = state.to_graph();
    if (is_connected(g) && bridges(g).empty()) return CubicGraph(std::move(g));
  }
  throw GenerationError("edge switching found no cubic graph on " + std::to_string(vertex_count) +
                            " vertices with girth >= " + std::to_string(min_girth),
                        restarts);
}

CubicGraph theta_graph() { return CubicGraph(MultiGraph(2, {{0, 1}, {0, 1}, {0, 1}})); }

std::optional<std::size_t> cage_order(std::size_t girth) {
  static constexpr std::array<std::size_t, 6> kOrders{4, 6, 10, 14, 24, 30};
  if (girth < 3 || girth > 8) return std::nullopt;
  return kOrders[girth - 3];
}

std::optional<CubicGraph> cage(std::size_t girth) {
  switch (girth) {
    case 3: {
      static constexpr int kPattern[] = {2};
      return CubicGraph(from_lcf(4, kPattern));
    }
    case 4: {
      static constexpr int kPattern[] = {3};
      return CubicGraph(from_lcf(6, kPattern));
    }
    case 5:
      return CubicGraph(petersen());
    case 6: {
      static constexpr int kPattern[] = {5, -5};
      return CubicGraph(from_lcf(14, kPattern));
    }
    case 7: {
      static constexpr int kPattern[] = {12, 7, -7};
      return CubicGraph(from_lcf(24, kPattern));
    }
    case 8: {
      static constexpr int kPattern[] = {-13, -9, 7, -7, 9, 13};
      return CubicGraph(from_lcf(30, kPattern));
    }
    default:
      return std::nullopt;
  }
}

std::size_t moore_bound(std::size_t girth) {
  if (girth <= 2) return 2;
  const std::size_t r = (girth - 1) / 2;
  const std::size_t pow2 = std::size_t{1} << r;
  // Odd girth 2r+1: 1 + 3(2^r - 1). Even girth 2r+2: 2(2^{r+1} - 1).
  const std::size_t bound = girth % 2 == 1 ? 1 + 3 * (pow2 - 1) : 2 * (2 * pow2 - 1);
  return bound + bound % 2;
}

namespace {

constexpr std::size_t kSwitchBudgetPerVertex = 4000;
constexpr std::uint64_t kBlockSearchSeed = 0x5eed'b10cULL;

}  // namespace

std::size_t min_block_size(std::size_t min_girth) {
  if (min_girth < 1) throw DomainError("min_block_size: girth must be at least 1");
  if (min_girth > 12) {
    throw UnsupportedError("min_block_size: girth above 12 is not supported");
  }
  if (min_girth <= 2) return 2;
  if (auto order = cage_order(min_girth)) return *order;

  static std::mutex cache_mutex;
  static std::map<std::size_t, std::size_t> cache;
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = cache.find(min_girth); it != cache.end()) return it->second;
  }
  std::size_t size = moore_bound(min_girth);
  for (;;) {
    try {
      switching_cubic_with_girth(size, min_girth, kBlockSearchSeed, kSwitchBudgetPerVertex * size);
      break;
    } catch (const GenerationError&) {
      size *= 2;
    }
  }
  std::lock_guard lock(cache_mutex);
  cache.emplace(min_girth, size);
  return size;
}

CubicGraph generate_block(std::size_t vertex_count, std::size_t min_girth, std::uint64_t seed) {
  check_cubic_order(vertex_count, 2);
  if (vertex_count == 2) {
    if (min_girth > 2) {
      throw DomainError("a two-vertex block has girth 2; cannot reach girth " +
                        std::to_string(min_girth));
    }
    return theta_graph();
  }
  if (cage_order(min_girth) == vertex_count) return *cage(min_girth);
  if (min_girth <= 5) {
    // Rejection sampling stays uniform; bridged samples are redrawn.
    constexpr std::size_t kRounds = 64;
    for (std::uint64_t round = 0; round < kRounds; ++round) {
      try {
        CubicGraph g = random_cubic_with_girth(vertex_count, min_girth, seed + round, 20000);
        if (bridges(g.graph()).empty()) return g;
      } catch (const GenerationError&) {
      }
    }
  }
  return switching_cubic_with_girth(vertex_count, min_girth, seed,
                                    kSwitchBudgetPerVertex * vertex_count);
}

}  // namespace hypspec::graphs
