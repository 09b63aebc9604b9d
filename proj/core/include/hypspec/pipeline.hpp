#pragma once

// End-to-end runs: chain construction for a target genus and systole, the
// bound report, and sweeps over genus.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypspec/graphs.hpp"
#include "hypspec/rayleigh.hpp"

namespace hypspec::pipeline {

struct ChainConstruction {
  double epsilon = 0;
  std::uint64_t seed = 0;
  graphs::ChainPlan plan;
  graphs::CubicGraph graph;
};

/// Picks the required girth W(eps), the block size (smallest known size for
/// W unless overridden), plans the chain and glues the blocks. The V0 block
/// is generated from `seed` and reused for every copy; the last block uses
/// seed + 1.
ChainConstruction construct_chain(std::size_t genus, double epsilon,
                                  std::optional<std::size_t> block_size, std::uint64_t seed);

struct BoundOptions {
  std::optional<std::size_t> block_size;
  std::uint64_t seed = 0;
  bool path_model = true;
  bool pants_model = true;
};

/// Full pipeline for one configuration. Throws CertificationRefused if the
/// surface cannot be certified, and NumericalError if the computed bounds
/// violate their ordering (lambda_0 = 0, nondecreasing eigenvalues, path
/// lambda_k <= family bound <= closed form, Cheeger bound <= path lambda_k).
rayleigh::BoundReport bound_report(std::size_t genus, std::size_t k, double epsilon,
                                   const BoundOptions& options);

struct SweepRow {
  std::size_t genus = 0;
  std::optional<rayleigh::BoundReport> report;
  std::string status = "ok";
};

/// One bound per genus, sorted by genus (duplicates kept). Genus number i of
/// the sorted list runs with seed + i. Failures are recorded in the row
/// status and the sweep continues. threads = 0 uses the hardware count.
std::vector<SweepRow> sweep(double epsilon, std::size_t k, std::vector<std::size_t> genera,
                            const BoundOptions& options, unsigned threads = 0);

}  // namespace hypspec::pipeline
