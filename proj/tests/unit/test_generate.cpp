#include <doctest.h>

#include <numeric>

#include "hypspec/graphs.hpp"

using namespace hypspec;
using namespace hypspec::graphs;

namespace {

bool connected_without(const MultiGraph& g, EdgeId skip) {
  std::vector<std::size_t> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t comps = g.vertex_count();
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    if (id == skip) continue;
    const auto a = find(g.edge(id).u);
    const auto b = find(g.edge(id).v);
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
  return comps == 1;
}

std::vector<EdgeId> naive_bridges(const MultiGraph& g) {
  std::vector<EdgeId> out;
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    if (!connected_without(g, id)) out.push_back(id);
  }
  return out;
}

}  // namespace

TEST_CASE("chain plan arithmetic") {
  for (std::size_t v0 : {2u, 4u, 6u, 10u, 14u, 30u}) {
    CHECK_THROWS_AS(chain_plan(min_chain_genus(v0) - 1, v0, 3), DomainError);
    for (std::size_t g = min_chain_genus(v0); g < min_chain_genus(v0) + 300; ++g) {
      const auto plan = chain_plan(g, v0, 3);
      const std::size_t total = 2 * g - 2;
      CHECK(plan.block_count_full * (v0 + 2) + plan.last_block_size == total);
      CHECK(plan.block_count_full >= 1);
      CHECK(plan.last_block_size >= v0);
      CHECK(plan.last_block_size <= 2 * v0 + 2);
      // No larger g0 satisfies the identity.
      for (std::size_t g0 = plan.block_count_full + 1; g0 * (v0 + 2) <= total; ++g0) {
        CHECK(total - g0 * (v0 + 2) < v0);
      }
    }
  }
  CHECK_THROWS_AS(chain_plan(50, 3, 3), DomainError);
  CHECK_THROWS_AS(chain_plan(50, 0, 3), DomainError);
}

TEST_CASE("block sizes") {
  CHECK(min_block_size(1) == 2);
  CHECK(min_block_size(2) == 2);
  CHECK(min_block_size(3) == 4);
  CHECK(min_block_size(5) == 10);
  CHECK(min_block_size(8) == 30);
  CHECK_THROWS_AS(min_block_size(13), UnsupportedError);
  const std::size_t n10 = min_block_size(10);
  CHECK(n10 >= moore_bound(10));
  CHECK(min_block_size(10) == n10);
  const auto block = generate_block(n10, 10, 3);
  CHECK(girth(block.graph()) >= 10);
}

TEST_CASE("generated blocks") {
  for (std::size_t w : {2u, 3u, 4u, 5u, 6u}) {
    for (std::size_t n : {min_block_size(w), min_block_size(w) + 2, 2 * min_block_size(w) + 2}) {
      const auto a = generate_block(n, w, 17);
      const auto b = generate_block(n, w, 17);
      CHECK(a == b);
      CHECK(a.vertex_count() == n);
      CHECK(girth(a.graph()) >= w);
      CHECK(bridges(a.graph()).empty());
    }
  }
  CHECK_THROWS_AS(generate_block(2, 3, 0), DomainError);
}

TEST_CASE("switching reaches high girth") {
  const auto g = switching_cubic_with_girth(160, 10, 42, 200000);
  CHECK(g.vertex_count() == 160);
  CHECK(girth(g.graph()) >= 10);
  CHECK(bridges(g.graph()).empty());
  CHECK(g == switching_cubic_with_girth(160, 10, 42, 200000));
  CHECK_THROWS_AS(switching_cubic_with_girth(32, 8, 1, 2000), GenerationError);
}

TEST_CASE("rejection sampling") {
  const auto g = random_cubic_with_girth(20, 4, 9, 10000);
  CHECK(girth(g.graph()) >= 4);
  CHECK(g == random_cubic_with_girth(20, 4, 9, 10000));
  CHECK_THROWS_AS(random_cubic_with_girth(100, 9, 1, 20), GenerationError);
}

TEST_CASE("chains of blocks") {
  for (std::size_t w : {2u, 3u, 5u}) {
    const std::size_t v0 = min_block_size(w);
    for (std::size_t genus : {v0 + 2, v0 + 3, 3 * v0 + 7, 5 * v0 + 40}) {
      const auto plan = chain_plan(genus, v0, w);
      std::vector<CubicGraph> blocks(plan.block_count_full, generate_block(v0, w, 1));
      blocks.push_back(generate_block(plan.last_block_size, w, 2));
      const auto g = build_chain(plan, blocks);
      CHECK(g.vertex_count() == 2 * genus - 2);
      CHECK(g.edge_count() == 3 * genus - 3);
      CHECK(girth(g.graph()) >= w);
      CHECK(naive_bridges(g.graph()) == chain_bridges(plan));
      CHECK(bridges(g.graph()) == chain_bridges(plan));
    }
  }
  const auto plan = chain_plan(20, 4, 3);
  std::vector<CubicGraph> too_few(1, generate_block(4, 3, 0));
  CHECK_THROWS_AS(build_chain(plan, too_few), DomainError);
}

TEST_CASE("small-epsilon chain") {
  const auto g = build_small_eps_chain(50);
  CHECK(g.vertex_count() == 98);
  CHECK(g.edge_count() == 147);
  CHECK(girth(g.graph()) == 1);
  CHECK(bridges(g.graph()).size() == 49);
  CHECK(naive_bridges(g.graph()).size() == 49);
  CHECK_THROWS_AS(build_small_eps_chain(1), DomainError);
}
