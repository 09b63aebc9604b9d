#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hypspec/certify.hpp"
#include "hypspec/hypgeom.hpp"

using namespace hypspec;
using namespace hypspec::certify;

TEST_CASE("required girth") {
  CHECK(required_girth(0.5) == 1);
  CHECK(required_girth(1.0) == 1);
  CHECK(required_girth(4.0) == 10);
  for (int i = 1; i <= 400; ++i) {
    const double eps = 0.025 * i;
    const std::size_t w = required_girth(eps);
    const double d = geom::compute_d(eps);
    CHECK(static_cast<double>(w) * d >= 2.0 * eps);
    if (w > 1) CHECK(static_cast<double>(w - 1) * d < 2.0 * eps);
    CHECK(w == static_cast<std::size_t>(std::max(1.0, std::ceil(2.0 * eps / d))));
  }
}

TEST_CASE("certificates") {
  const auto small = certify_systole(surface::assemble(graphs::build_small_eps_chain(50), 0.1));
  CHECK(small.certified());
  CHECK(small.graph_girth == 1);
  CHECK(small.condition_lhs == doctest::Approx(geom::compute_d(0.1)));
  CHECK(small.condition_rhs == doctest::Approx(0.2));
  CHECK(small.tau_value > 0.05);

  const auto k4 = certify_systole(surface::assemble(*graphs::cage(3), 4.0));
  CHECK(!k4.certified());
  CHECK(k4.verdict == Verdict::kInsufficientGirth);
  CHECK(k4.required_girth == 10);
  CHECK(k4.condition_lhs < k4.condition_rhs);

  const auto heawood = certify_systole(surface::assemble(*graphs::cage(6), 2.0));
  CHECK(heawood.graph_girth == 6);
  CHECK(heawood.certified() == (6 * geom::compute_d(2.0) >= 4.0));

  const surface::FNSurface mixed(graphs::theta_graph(), {1.0, 1.0, 2.0}, {0.0, 0.0, 0.0});
  CHECK_THROWS_AS(certify_systole(mixed), UnsupportedError);
}

TEST_CASE("Cheeger lower bound") {
  constexpr double pi = std::numbers::pi;
  const auto b = cheeger_lower(101, 1.0);
  CHECK(b.h_lower == doctest::Approx(1.0 / (200.0 * pi)).epsilon(1e-15));
  CHECK(b.lambda1_lower == doctest::Approx(b.h_lower * b.h_lower / 4.0).epsilon(1e-14));
  CHECK(b.alpha == doctest::Approx(1.0 / (16.0 * pi * pi)).epsilon(1e-15));
  CHECK(b.lambda1_lower * 101.0 * 101.0 > b.alpha);
  const auto capped = cheeger_lower(2, 100.0);
  CHECK(capped.h_lower == 1.0);
  CHECK(capped.lambda1_lower == 0.25);
  CHECK_THROWS_AS(cheeger_lower(1, 1.0), DomainError);
  CHECK_THROWS_AS(cheeger_lower(5, 0.0), DomainError);
}
