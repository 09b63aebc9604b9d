#include "hypspec/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

#include "hypspec/certify.hpp"
#include "hypspec/surface.hpp"

namespace hypspec::pipeline {

namespace {

constexpr double kOrderingSlack = 1e-9;

void require_order(double lower, double upper, const char* what) {
  if (!(lower <= upper * (1.0 + kOrderingSlack) + 1e-300)) {
    throw NumericalError(std::string("bound ordering violated: ") + what);
  }
}

}  // namespace

ChainConstruction construct_chain(std::size_t genus, double epsilon,
                                  std::optional<std::size_t> block_size, std::uint64_t seed) {
  const std::size_t w = certify::required_girth(epsilon);
  const std::size_t v0 = block_size ? *block_size : graphs::min_block_size(w);
  const auto plan = graphs::chain_plan(genus, v0, w);
  std::vector<graphs::CubicGraph> blocks;
  blocks.reserve(plan.block_count_full + 1);
  const auto first = graphs::generate_block(plan.block_size, w, seed);
  for (std::size_t i = 0; i < plan.block_count_full; ++i) blocks.push_back(first);
  blocks.push_back(graphs::generate_block(plan.last_block_size, w, seed + 1));
  auto graph = graphs::build_chain(plan, blocks);
  return ChainConstruction{epsilon, seed, plan, std::move(graph)};
}

rayleigh::BoundReport bound_report(std::size_t genus, std::size_t k, double epsilon,
                                   const BoundOptions& options) {
  if (k < 1) throw DomainError("bound_report: k must be at least 1");
  auto built = construct_chain(genus, epsilon, options.block_size, options.seed);
  const auto surf = surface::assemble(std::move(built.graph), epsilon);
  const auto cert = certify::certify_systole(surf);
  if (!cert.certified()) {
    throw CertificationRefused("bound_report: surface not certified (girth " +
                               std::to_string(cert.graph_girth) + ", need " +
                               std::to_string(cert.required_girth) + ")");
  }
  const auto chain = surface::block_chain(surf);
  if (chain.components.size() != built.plan.block_count_full + 1) {
    throw StructureError("bound_report: separating cuffs do not match the chain plan");
  }

  rayleigh::BoundReport r;
  r.genus = genus;
  r.k = k;
  r.epsilon = epsilon;
  r.block_size = built.plan.block_size;
  r.g0 = built.plan.block_count_full;
  r.graph_girth = cert.graph_girth;
  r.seed = options.seed;

  const auto family = rayleigh::build_test_functions(chain, k);
  r.g1 = family.g1;
  r.remainder = family.remainder;
  r.family_energies = rayleigh::family_energy(family, chain);
  r.family_masses = rayleigh::family_mass(family, chain);
  if (std::all_of(r.family_masses.begin(), r.family_masses.end(), [](double m) { return m > 0.0; })) {
    r.exact_family_bound = rayleigh::exact_family_bound(family, chain);
  }
  if (r.g1 >= 3) {
    r.closed_form_bound = rayleigh::closed_form_bound(genus, k, epsilon, r.block_size);
    r.energy_upper = rayleigh::energy_upper(r.g1, epsilon);
    r.mass_lower = rayleigh::mass_lower(r.g1, epsilon, r.block_size);
  }
  r.beta = rayleigh::beta(epsilon, r.block_size);
  const double g = static_cast<double>(genus);
  r.beta_bound = r.beta * static_cast<double>(k * k) / (g * g);
  const auto cheeger = certify::cheeger_lower(genus, epsilon);
  r.cheeger_lower = cheeger.lambda1_lower;
  r.alpha = cheeger.alpha;
  r.pile_ratio_holds = 24.0 * static_cast<double>(r.block_size * k * r.g1) >= g;

  const auto check_spectrum = [&](const std::vector<double>& eigs, const char* name) {
    const double scale = std::max(1.0, std::fabs(eigs.back()));
    if (std::fabs(eigs.front()) > 1e-10 * scale) {
      throw NumericalError(std::string(name) + ": lambda_0 is not zero");
    }
    for (std::size_t i = 1; i < eigs.size(); ++i) {
      if (eigs[i] < eigs[i - 1]) throw NumericalError(std::string(name) + ": eigenvalues out of order");
    }
  };
  if (options.path_model) {
    r.path_model_eigs = rayleigh::generalized_eigs(rayleigh::build_path_model(chain), k + 1);
    check_spectrum(r.path_model_eigs, "path model");
    const double lk = r.lambda_path_k();
    if (r.exact_family_bound) require_order(lk, *r.exact_family_bound, "path lambda_k <= family bound");
    require_order(r.cheeger_lower, lk, "Cheeger bound <= path lambda_k");
  }
  if (r.exact_family_bound && r.closed_form_bound) {
    require_order(*r.exact_family_bound, *r.closed_form_bound, "family bound <= closed form");
  }
  if (options.pants_model) {
    r.pants_model_eigs = rayleigh::generalized_eigs(rayleigh::build_pants_model(surf), k + 1);
    check_spectrum(r.pants_model_eigs, "pants model");
  }
  return r;
}

std::vector<SweepRow> sweep(double epsilon, std::size_t k, std::vector<std::size_t> genera,
                            const BoundOptions& options, unsigned threads) {
  std::stable_sort(genera.begin(), genera.end());
  std::vector<SweepRow> rows(genera.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, genera.size())));

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < genera.size(); i = next++) {
      SweepRow& row = rows[i];
      row.genus = genera[i];
      BoundOptions opts = options;
      opts.seed = options.seed + i;
      try {
        row.report = bound_report(genera[i], k, epsilon, opts);
      } catch (const CertificationRefused& e) {
        row.status = std::string("refused: ") + e.what();
      } catch (const NumericalError& e) {
        row.status = std::string("numerical: ") + e.what();
      } catch (const Error& e) {
        row.status = std::string("error: ") + e.what();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  return rows;
}

}  // namespace hypspec::pipeline
