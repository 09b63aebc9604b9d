#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <thread>

#include "hypspec/graphs.hpp"

namespace hypspec::graphs {

namespace {

double short_cycle_exponent(std::size_t degree, std::size_t min_girth) {
  double sum = 0.0;
  const double base = static_cast<double>(degree) - 1.0;
  for (std::size_t i = 1; i + 1 <= min_girth; ++i) {
    sum += std::pow(base, static_cast<double>(i)) / (2.0 * static_cast<double>(i));
  }
  return sum;
}

}  // namespace

double asymptotic_count(std::size_t degree, std::size_t edge_count, std::size_t min_girth) {
  if (degree < 3) throw DomainError("asymptotic_count: degree must be at least 3");
  if (min_girth < 3) throw DomainError("asymptotic_count: girth must be at least 3");
  if (edge_count == 0 || (2 * edge_count) % degree != 0) {
    throw DomainError("asymptotic_count: 2E must be a positive multiple of the degree");
  }
  const double e = static_cast<double>(edge_count);
  const double v = static_cast<double>(2 * edge_count / degree);
  const double n = static_cast<double>(degree);
  return -short_cycle_exponent(degree, min_girth) + std::lgamma(2.0 * e + 1.0) -
         e * std::numbers::ln2 - std::lgamma(e + 1.0) - std::lgamma(v + 1.0) -
         v * std::lgamma(n + 1.0);
}

double limiting_girth_probability(std::size_t degree, std::size_t min_girth) {
  if (degree < 3) throw DomainError("limiting_girth_probability: degree must be at least 3");
  return std::exp(-short_cycle_exponent(degree, min_girth));
}

GirthEstimate pairing_girth_probability(std::size_t vertex_count, std::size_t min_girth,
                                        std::size_t trials, std::uint64_t seed, unsigned threads) {
  if (vertex_count < 2 || vertex_count % 2 != 0) {
    throw DomainError("pairing_girth_probability: vertex count must be even and positive");
  }
  if (trials < 1000) throw DomainError("pairing_girth_probability: need at least 1000 trials");
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, trials));

  std::vector<std::size_t> hits(threads, 0);
  const auto work = [&](unsigned worker) {
    for (std::size_t t = worker; t < trials; t += threads) {
      std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                        static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(t >> 32)};
      std::mt19937_64 rng(seq);
      if (has_girth_at_least(random_pairing(vertex_count, rng), min_girth)) ++hits[worker];
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned w = 1; w < threads; ++w) pool.emplace_back(work, w);
  work(0);
  pool.clear();

  GirthEstimate out;
  out.trials = trials;
  for (std::size_t h : hits) out.hits += h;
  const double p = static_cast<double>(out.hits) / static_cast<double>(trials);
  out.estimate = p;
  out.std_error = std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
  return out;
}

}  // namespace hypspec::graphs
