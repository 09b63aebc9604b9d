#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <tuple>
#include <numbers>

#include "hypspec/hypgeom.hpp"
#include "hypspec/surface.hpp"

using namespace hypspec;
using namespace hypspec::surface;
using graphs::MultiGraph;

namespace {

constexpr double kPi = std::numbers::pi;

// K4 with edge (0, 1) subdivided; the subdivision vertex has degree two.
void add_pendant_blob(MultiGraph& g, graphs::Vertex hub) {
  const graphs::Vertex base = static_cast<graphs::Vertex>(g.vertex_count());
  for (int i = 0; i < 5; ++i) g.add_vertex();
  g.add_edge(base + 0, base + 4);
  g.add_edge(base + 4, base + 1);
  g.add_edge(base + 0, base + 2);
  g.add_edge(base + 0, base + 3);
  g.add_edge(base + 1, base + 2);
  g.add_edge(base + 1, base + 3);
  g.add_edge(base + 2, base + 3);
  g.add_edge(hub, base + 4);
}

FNSurface chain_surface(std::size_t genus, std::size_t v0, std::size_t w, double eps) {
  const auto plan = graphs::chain_plan(genus, v0, w);
  std::vector<CubicGraph> blocks(plan.block_count_full, graphs::generate_block(v0, w, 5));
  blocks.push_back(graphs::generate_block(plan.last_block_size, w, 6));
  return assemble(graphs::build_chain(plan, blocks), eps);
}

}  // namespace

TEST_CASE("assembled surface") {
  const auto s = assemble(graphs::theta_graph(), 1.5);
  CHECK(s.genus() == 2);
  CHECK(s.total_area() == doctest::Approx(4.0 * kPi));
  CHECK(s.uniform_length() == 1.5);
  CHECK(s.twists().size() == 3);
  CHECK(separating_count(s) == 0);

  CHECK_THROWS_AS(assemble(graphs::theta_graph(), 0.0), DomainError);
  CHECK_THROWS_AS(assemble(graphs::theta_graph(), 2e4), DomainError);
  CHECK_THROWS_AS(assemble(graphs::theta_graph(), 1.0, {0.0, 1.0}), DomainError);
  CHECK_THROWS_AS(FNSurface(graphs::theta_graph(), {1.0, 1.0, 1.0}, {0.0, std::nan(""), 0.0}), DomainError);

  const FNSurface mixed(graphs::theta_graph(), {1.0, 2.0, 1.0}, {0.0, 0.0, 0.0});
  CHECK(!mixed.uniform_length().has_value());
}

TEST_CASE("block decomposition of chains") {
  for (auto [genus, v0, w, eps] : {std::tuple{33ul, 2ul, 1ul, 0.5}, std::tuple{101ul, 2ul, 1ul, 1.0},
                                   std::tuple{60ul, 10ul, 5ul, 2.0}, std::tuple{101ul, 4ul, 3ul, 1.0}}) {
    const auto s = chain_surface(genus, v0, w, eps);
    const auto plan = graphs::chain_plan(genus, v0, w);
    const auto chain = block_chain(s);
    CHECK(chain.components.size() == plan.block_count_full + 1);
    CHECK(chain.separating_cuffs.size() == plan.block_count_full);
    CHECK(separating_count(s) == plan.block_count_full);

    std::size_t pants = 0;
    for (const auto& b : chain.components) pants += b.pants;
    CHECK(pants == 2 * genus - 2);
    // Gauss-Bonnet: core areas and the separating collars tile the surface.
    double area = 0.0;
    for (double a : chain.core_areas()) area += a;
    for (double len : chain.separating_lengths) area += geom::collar_area(len);
    CHECK(area == doctest::Approx(4.0 * kPi * (genus - 1)).epsilon(1e-12));

    // Interior components: V0 + 2 pants, two separating cuffs.
    for (std::size_t i = 1; i + 1 < chain.components.size(); ++i) {
      const auto& b = chain.components[i];
      CHECK(b.pants == v0 + 2);
      CHECK(b.separating_cuffs.size() == 2);
      CHECK(b.core_area == doctest::Approx(2 * kPi * (v0 + 2) - 2 * eps / std::sinh(eps / 2)).epsilon(1e-13));
    }
    CHECK(chain.components.front().separating_cuffs.size() == 1);
    CHECK(chain.components.back().separating_cuffs.size() == 1);
    CHECK(chain.components.back().pants == plan.last_block_size + 1);
    // Vertex 0 lies in the first component and cuff i joins components i, i + 1.
    CHECK(chain.components.front().vertices.front() == 0);
    const auto& g = s.graph().graph();
    for (std::size_t i = 0; i < chain.separating_cuffs.size(); ++i) {
      const auto& e = g.edge(chain.separating_cuffs[i]);
      const auto& left = chain.components[i].vertices;
      const auto& right = chain.components[i + 1].vertices;
      const bool u_left = std::find(left.begin(), left.end(), e.u) != left.end();
      const bool v_right = std::find(right.begin(), right.end(), e.v) != right.end();
      const bool v_left = std::find(left.begin(), left.end(), e.v) != left.end();
      const bool u_right = std::find(right.begin(), right.end(), e.u) != right.end();
      CHECK(((u_left && v_right) || (v_left && u_right)));
    }
  }
}

TEST_CASE("bridgeless surface is one component") {
  const auto s = assemble(*graphs::cage(5), 1.0);
  const auto chain = block_chain(s);
  CHECK(chain.components.size() == 1);
  CHECK(chain.components[0].core_area == doctest::Approx(s.total_area()));
}

TEST_CASE("separating cuffs must form a path") {
  MultiGraph g(1);
  add_pendant_blob(g, 0);
  add_pendant_blob(g, 0);
  add_pendant_blob(g, 0);
  const auto s = assemble(CubicGraph(g), 1.0);
  CHECK(separating_count(s) == 3);
  CHECK_THROWS_AS(block_chain(s), StructureError);
}
