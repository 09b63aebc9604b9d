#include <CLI11.hpp>
#include <cmath>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hypspec/certify.hpp"
#include "hypspec/hypgeom.hpp"
#include "hypspec/io.hpp"
#include "hypspec/pipeline.hpp"

namespace {

using namespace hypspec;
using io::json;

enum ExitCode : int { kOk = 0, kDomain = 2, kRefused = 3, kNumerical = 4 };

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
  } else {
    io::write_text_file(out, text);
  }
}

struct GenGraphArgs {
  double epsilon = 1.0;
  std::size_t genus = 0;
  std::uint64_t seed = 0;
  std::optional<std::size_t> block_size;
  bool small_eps = false;
  std::string out;
};

int run_gen_graph(const GenGraphArgs& a) {
  json meta{{"epsilon", a.epsilon}, {"genus", a.genus}, {"seed", a.seed}};
  if (a.small_eps) {
    const auto g = graphs::build_small_eps_chain(a.genus);
    meta["layout"] = "small-eps";
    emit(io::to_text(io::graph_to_json(g.graph(), meta)), a.out);
    return kOk;
  }
  const auto built = pipeline::construct_chain(a.genus, a.epsilon, a.block_size, a.seed);
  meta["layout"] = "chain";
  meta["V0"] = built.plan.block_size;
  meta["V1"] = built.plan.last_block_size;
  meta["g0"] = built.plan.block_count_full;
  meta["required_girth"] = built.plan.required_girth;
  emit(io::to_text(io::graph_to_json(built.graph.graph(), meta)), a.out);
  return kOk;
}

struct CertifyArgs {
  std::string graph;
  double epsilon = 0;
  std::string out;
};

int run_certify(const CertifyArgs& a) {
  auto g = io::graph_from_json(io::read_json_file(a.graph));
  const auto surf = surface::assemble(graphs::CubicGraph(g), a.epsilon);
  const auto cert = certify::certify_systole(surf);
  emit(io::to_text(io::certificate_to_json(cert, g)), a.out);
  return cert.certified() ? kOk : kRefused;
}

struct BoundArgs {
  std::size_t genus = 0;
  std::size_t k = 1;
  double epsilon = 1.0;
  std::uint64_t seed = 0;
  std::optional<std::size_t> block_size;
  bool no_pants = false;
  bool no_path = false;
  std::string format = "json";
  std::string out;
};

int run_bound(const BoundArgs& a) {
  pipeline::BoundOptions opts{a.block_size, a.seed, !a.no_path, !a.no_pants};
  const auto report = pipeline::bound_report(a.genus, a.k, a.epsilon, opts);
  if (a.format == "csv") {
    pipeline::SweepRow row{a.genus, report, "ok"};
    emit(io::sweep_csv({row}, a.k, a.epsilon), a.out);
  } else {
    emit(io::to_text(io::report_to_json(report)), a.out);
  }
  return kOk;
}

struct SweepArgs {
  double epsilon = 1.0;
  std::size_t k = 1;
  std::vector<std::size_t> genera;
  std::uint64_t seed = 0;
  std::optional<std::size_t> block_size;
  bool no_pants = false;
  unsigned threads = 0;
  std::string out;
};

int run_sweep(const SweepArgs& a) {
  pipeline::BoundOptions opts{a.block_size, a.seed, true, !a.no_pants};
  const auto rows = pipeline::sweep(a.epsilon, a.k, a.genera, opts, a.threads);
  emit(io::sweep_csv(rows, a.k, a.epsilon), a.out);
  return kOk;
}

struct MonteCarloArgs {
  std::size_t vertices = 100;
  std::size_t girth = 3;
  std::size_t trials = 100000;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::string out;
};

int run_montecarlo(const MonteCarloArgs& a) {
  const auto est = graphs::pairing_girth_probability(a.vertices, a.girth, a.trials, a.seed, a.threads);
  const double predicted = graphs::limiting_girth_probability(3, a.girth);
  json doc{{"vertices", a.vertices},
           {"girth", a.girth},
           {"trials", est.trials},
           {"hits", est.hits},
           {"seed", a.seed},
           {"estimate", est.estimate},
           {"std_error", est.std_error},
           {"limit_prediction", predicted},
           {"z_score", est.std_error > 0 ? (est.estimate - predicted) / est.std_error : 0.0}};
  emit(io::to_text(doc), a.out);
  return kOk;
}

struct CollarArgs {
  double length = 1.0;
  std::optional<double> half_width;
  double a = 0.0;
  double b = 1.0;
  std::size_t grid = 4096;
  std::string out;
};

int run_minimize_collar(const CollarArgs& c) {
  auto profile = geom::CollarProfile::standard(c.length, c.a, c.b);
  if (c.half_width) profile.half_width = *c.half_width;
  profile.validate();
  const double exact = geom::collar_energy_min(profile);
  const double brute = geom::collar_energy_bruteforce(profile, c.grid);
  const double gap = exact != 0.0 ? std::fabs(brute - exact) / std::fabs(exact) : std::fabs(brute);
  json doc{{"length", profile.length}, {"half_width", profile.half_width},
           {"a", profile.a},           {"b", profile.b},
           {"grid", c.grid},           {"closed_form", exact},
           {"bruteforce", brute},      {"relative_gap", gap}};
  emit(io::to_text(doc), c.out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Large-genus hyperbolic surfaces: construction, systole certificates, eigenvalue bounds"};
  app.require_subcommand(1);

  GenGraphArgs gen;
  auto* gen_cmd = app.add_subcommand("gen-graph", "Build the chained cubic graph for a genus and systole");
  gen_cmd->add_option("--epsilon", gen.epsilon, "Cuff length")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--genus", gen.genus, "Genus")->required()->check(CLI::Range(2u, 1u << 30));
  gen_cmd->add_option("--seed", gen.seed, "Random seed")->required();
  gen_cmd->add_option("--block-size", gen.block_size, "Override the block size V0");
  gen_cmd->add_flag("--small-eps", gen.small_eps, "Path of theta pieces closed by loops (girth 1)");
  gen_cmd->add_option("--out", gen.out, "Output file (default stdout)");

  CertifyArgs cert;
  auto* cert_cmd = app.add_subcommand("certify", "Certify the systole of a graph glued with cuff length epsilon");
  cert_cmd->add_option("--graph", cert.graph, "Graph file")->required();
  cert_cmd->add_option("--epsilon", cert.epsilon, "Cuff length")->required();
  cert_cmd->add_option("--out", cert.out, "Output file (default stdout)");

  BoundArgs bound;
  auto* bound_cmd = app.add_subcommand("bound", "Eigenvalue bounds for one genus");
  bound_cmd->add_option("--genus", bound.genus, "Genus")->required();
  bound_cmd->add_option("-k,--k", bound.k, "Eigenvalue index")->required();
  bound_cmd->add_option("--epsilon", bound.epsilon, "Cuff length");
  bound_cmd->add_option("--seed", bound.seed, "Random seed")->required();
  bound_cmd->add_option("--block-size", bound.block_size, "Override the block size V0");
  bound_cmd->add_flag("--no-pants", bound.no_pants, "Skip the pants model");
  bound_cmd->add_flag("--no-path", bound.no_path, "Skip the path model");
  bound_cmd->add_option("--format", bound.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  bound_cmd->add_option("--out", bound.out, "Output file (default stdout)");

  SweepArgs sw;
  auto* sweep_cmd = app.add_subcommand("sweep", "Bounds over a list of genera as CSV");
  sweep_cmd->add_option("--epsilon", sw.epsilon, "Cuff length");
  sweep_cmd->add_option("-k,--k", sw.k, "Eigenvalue index")->required();
  sweep_cmd->add_option("--genus", sw.genera, "Genera (repeatable or space separated)")->expected(0, -1);
  sweep_cmd->add_option("--seed", sw.seed, "Random seed")->required();
  sweep_cmd->add_option("--block-size", sw.block_size, "Override the block size V0");
  sweep_cmd->add_flag("--no-pants", sw.no_pants, "Skip the pants model");
  sweep_cmd->add_option("--threads", sw.threads, "Worker threads (0 = hardware)");
  sweep_cmd->add_option("--out", sw.out, "Output file (default stdout)");

  MonteCarloArgs mc;
  auto* mc_cmd = app.add_subcommand("montecarlo-girth", "Girth probability of random cubic pairings");
  mc_cmd->add_option("--vertices", mc.vertices, "Vertex count (even)");
  mc_cmd->add_option("--girth", mc.girth, "Minimum girth");
  mc_cmd->add_option("--trials", mc.trials, "Number of pairings");
  mc_cmd->add_option("--seed", mc.seed, "Random seed")->required();
  mc_cmd->add_option("--threads", mc.threads, "Worker threads (0 = hardware)");
  mc_cmd->add_option("--out", mc.out, "Output file (default stdout)");

  CollarArgs col;
  auto* col_cmd = app.add_subcommand("minimize-collar", "Closed-form versus discretized collar energy");
  auto* len_opt = col_cmd->add_option("--length", col.length, "Length of the core geodesic");
  col_cmd->add_option("--epsilon", col.length, "Alias of --length")->excludes(len_opt);
  col_cmd->add_option("--half-width", col.half_width, "Collar half width (default from the collar lemma)");
  col_cmd->add_option("--a", col.a, "Value at -w");
  col_cmd->add_option("--b", col.b, "Value at +w");
  col_cmd->add_option("--grid", col.grid, "Number of grid cells");
  col_cmd->add_option("--out", col.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kDomain;
  }

  try {
    if (*gen_cmd) return run_gen_graph(gen);
    if (*cert_cmd) return run_certify(cert);
    if (*bound_cmd) return run_bound(bound);
    if (*sweep_cmd) return run_sweep(sw);
    if (*mc_cmd) return run_montecarlo(mc);
    if (*col_cmd) return run_minimize_collar(col);
  } catch (const CertificationRefused& e) {
    std::cerr << "hypspec: " << e.what() << '\n';
    return kRefused;
  } catch (const NumericalError& e) {
    std::cerr << "hypspec: " << e.what() << '\n';
    return kNumerical;
  } catch (const std::exception& e) {
    std::cerr << "hypspec: " << e.what() << '\n';
    return kDomain;
  }
  return kDomain;
}
