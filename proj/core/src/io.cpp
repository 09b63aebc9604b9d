#include "hypspec/io.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hypspec::io {

namespace {

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_optional(const std::optional<double>& x) { return x ? format_double(*x) : "NA"; }

json optional_value(const std::optional<double>& x) { return x ? json(*x) : json(nullptr); }

std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, x);
  return buf;
}

// Commas and quotes are not allowed to break the CSV layout.
std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + '"';
}

}  // namespace

json graph_to_json(const graphs::MultiGraph& graph, const json& meta) {
  json edges = json::array();
  for (const auto& e : graph.edges()) edges.push_back({e.u, e.v});
  return json{{"vertices", graph.vertex_count()}, {"edges", std::move(edges)}, {"meta", meta}};
}

graphs::MultiGraph graph_from_json(const json& doc) {
  try {
    if (!doc.is_object()) throw ParseError("graph document must be a JSON object");
    const auto& n = doc.at("vertices");
    if (!n.is_number_unsigned()) throw ParseError("graph document: \"vertices\" must be a non-negative integer");
    const auto& list = doc.at("edges");
    if (!list.is_array()) throw ParseError("graph document: \"edges\" must be an array");
    std::vector<graphs::Edge> edges;
    edges.reserve(list.size());
    for (const auto& e : list) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
        throw ParseError("graph document: every edge must be a pair of vertex indices");
      }
      edges.push_back({e[0].get<graphs::Vertex>(), e[1].get<graphs::Vertex>()});
    }
    return graphs::MultiGraph(n.get<std::size_t>(), std::move(edges));
  } catch (const json::exception& e) {
    throw ParseError(std::string("graph document: ") + e.what());
  } catch (const ParseError&) {
    throw;
  } catch (const DomainError& e) {
    throw ParseError(std::string("graph document: ") + e.what());
  }
}

json surface_to_json(const surface::FNSurface& surf) {
  const auto eps = surf.uniform_length();
  if (!eps) throw UnsupportedError("surface_to_json: cuff lengths must all be equal");
  json doc = graph_to_json(surf.graph().graph());
  doc["epsilon"] = *eps;
  doc["twists"] = std::vector<double>(surf.twists().begin(), surf.twists().end());
  return doc;
}

surface::FNSurface surface_from_json(const json& doc) {
  auto graph = graph_from_json(doc);
  try {
    const double eps = doc.at("epsilon").get<double>();
    std::vector<double> twists;
    if (doc.contains("twists")) twists = doc.at("twists").get<std::vector<double>>();
    return surface::assemble(graphs::CubicGraph(std::move(graph)), eps, std::move(twists));
  } catch (const json::exception& e) {
    throw ParseError(std::string("surface document: ") + e.what());
  }
}

std::uint64_t graph_fingerprint(const graphs::MultiGraph& graph) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  const auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  mix(graph.vertex_count());
  for (const auto& e : graph.edges()) {
    mix(e.u);
    mix(e.v);
  }
  return h;
}

json certificate_to_json(const certify::SystoleCertificate& cert, const graphs::MultiGraph& graph) {
  return json{
      {"epsilon", cert.epsilon},
      {"graph_girth", cert.graph_girth},
      {"required_girth", cert.required_girth},
      {"d", cert.d_value},
      {"tau", cert.tau_value},
      {"condition_lhs", cert.condition_lhs},
      {"condition_rhs", cert.condition_rhs},
      {"verdict", cert.certified() ? "certified" : "insufficient_girth"},
      {"fingerprint", {{"graph", hex64(graph_fingerprint(graph))}, {"epsilon", cert.epsilon}}},
  };
}

json report_to_json(const rayleigh::BoundReport& r) {
  return json{
      {"genus", r.genus},
      {"k", r.k},
      {"epsilon", r.epsilon},
      {"V0", r.block_size},
      {"g0", r.g0},
      {"g1", r.g1},
      {"remainder", r.remainder},
      {"graph_girth", r.graph_girth},
      {"seed", r.seed},
      {"family_energies", r.family_energies},
      {"family_masses", r.family_masses},
      {"exact_family_bound", optional_value(r.exact_family_bound)},
      {"closed_form_bound", optional_value(r.closed_form_bound)},
      {"energy_upper", optional_value(r.energy_upper)},
      {"mass_lower", optional_value(r.mass_lower)},
      {"beta", r.beta},
      {"beta_bound", r.beta_bound},
      {"cheeger_lower", r.cheeger_lower},
      {"alpha", r.alpha},
      {"pile_ratio_holds", r.pile_ratio_holds},
      {"path_model_eigs", r.path_model_eigs},
      {"pants_model_eigs", r.pants_model_eigs},
  };
}

std::string csv_header() {
  return "g,k,eps,V0,g0,g1,lambda_path_k,lambda_pants_k,exact_family_bound,closed_form_bound,"
         "beta_bound,cheeger_lower,g2_lambda_path_k,status";
}

std::string csv_row(const pipeline::SweepRow& row, std::size_t k, double epsilon) {
  std::ostringstream out;
  out << row.genus << ',' << k << ',' << format_double(epsilon) << ',';
  if (!row.report) {
    out << "NA,NA,NA,NA,NA,NA,NA,NA,NA,NA," << csv_escape(row.status);
    return out.str();
  }
  const auto& r = *row.report;
  std::optional<double> path_k;
  std::optional<double> g2_path_k;
  if (r.path_model_eigs.size() > r.k) {
    path_k = r.lambda_path_k();
    const double g = static_cast<double>(r.genus);
    g2_path_k = g * g * *path_k;
  }
  out << r.block_size << ',' << r.g0 << ',' << r.g1 << ',' << format_optional(path_k) << ','
      << format_optional(r.lambda_pants_k()) << ',' << format_optional(r.exact_family_bound) << ','
      << format_optional(r.closed_form_bound) << ',' << format_double(r.beta_bound) << ','
      << format_double(r.cheeger_lower) << ',' << format_optional(g2_path_k) << ','
      << csv_escape(row.status);
  return out.str();
}

std::string sweep_csv(const std::vector<pipeline::SweepRow>& rows, std::size_t k, double epsilon) {
  std::string text = csv_header() + "\n";
  for (const auto& row : rows) text += csv_row(row, k, epsilon) + "\n";
  return text;
}

std::string to_text(const json& doc) { return doc.dump(2) + "\n"; }

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write " + path.string());
  out << text;
  if (!out) throw DomainError("write failed: " + path.string());
}

}  // namespace hypspec::io
