#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "hypspec/io.hpp"

using namespace hypspec;
using namespace hypspec::io;

TEST_CASE("graph documents round trip") {
  const auto g = graphs::cage(5)->graph();
  const auto doc = graph_to_json(g, {{"note", "petersen"}});
  CHECK(doc["vertices"] == 10);
  CHECK(doc["edges"].size() == 15);
  CHECK(graph_from_json(doc) == g);
  CHECK(graph_from_json(json::parse(to_text(doc))) == g);
  CHECK(to_text(doc).back() == '\n');
}

TEST_CASE("malformed graph documents") {
  CHECK_THROWS_AS(graph_from_json(json::array()), ParseError);
  CHECK_THROWS_AS(graph_from_json(json{{"vertices", 2}}), ParseError);
  CHECK_THROWS_AS(graph_from_json(json{{"vertices", -1}, {"edges", json::array()}}), ParseError);
  CHECK_THROWS_AS(graph_from_json(json{{"vertices", 2}, {"edges", {{0, 1, 1}}}}), ParseError);
  CHECK_THROWS_AS(graph_from_json(json{{"vertices", 2}, {"edges", {{0, 5}}}}), ParseError);
  CHECK_THROWS_AS(read_json_file("/nonexistent/graph.json"), ParseError);

  const auto path = std::filesystem::temp_directory_path() / "hypspec_bad.json";
  write_text_file(path, "{ not json");
  CHECK_THROWS_AS(read_json_file(path), ParseError);
  std::filesystem::remove(path);
}

TEST_CASE("surface documents") {
  const auto s = surface::assemble(graphs::theta_graph(), 0.75, {0.1, 0.2, 0.3});
  const auto doc = surface_to_json(s);
  const auto back = surface_from_json(doc);
  CHECK(back.graph() == s.graph());
  CHECK(back.uniform_length() == 0.75);
  CHECK(back.twists()[2] == 0.3);
  const surface::FNSurface mixed(graphs::theta_graph(), {1.0, 2.0, 1.0}, {0.0, 0.0, 0.0});
  CHECK_THROWS_AS(surface_to_json(mixed), UnsupportedError);
}

TEST_CASE("certificate documents") {
  const auto g = graphs::build_small_eps_chain(50);
  const auto cert = certify::certify_systole(surface::assemble(g, 0.1));
  const auto doc = certificate_to_json(cert, g.graph());
  CHECK(doc["verdict"] == "certified");
  CHECK(doc["graph_girth"] == 1);
  CHECK(doc["fingerprint"]["graph"].get<std::string>().size() == 16);
  CHECK(graph_fingerprint(g.graph()) == graph_fingerprint(graphs::build_small_eps_chain(50).graph()));
  CHECK(graph_fingerprint(g.graph()) != graph_fingerprint(graphs::build_small_eps_chain(51).graph()));
}

TEST_CASE("CSV rows") {
  CHECK(csv_header() ==
        "g,k,eps,V0,g0,g1,lambda_path_k,lambda_pants_k,exact_family_bound,closed_form_bound,"
        "beta_bound,cheeger_lower,g2_lambda_path_k,status");
  pipeline::SweepRow failed{7, std::nullopt, "error: too small, really"};
  CHECK(csv_row(failed, 3, 1.0) == "7,3,1,NA,NA,NA,NA,NA,NA,NA,NA,NA,NA,\"error: too small, really\"");

  rayleigh::BoundReport r;
  r.genus = 10;
  r.k = 1;
  r.block_size = 2;
  r.g0 = 4;
  r.g1 = 1;
  r.path_model_eigs = {0.0, 0.5};
  r.beta_bound = 2.0;
  r.cheeger_lower = 0.125;
  pipeline::SweepRow ok{10, r, "ok"};
  CHECK(csv_row(ok, 1, 0.5) == "10,1,0.5,2,4,1,0.5,NA,NA,NA,2,0.125,50,ok");
  const auto text = sweep_csv({ok, failed}, 1, 0.5);
  CHECK(std::count(text.begin(), text.end(), '\n') == 3);
  CHECK(sweep_csv({}, 1, 0.5) == csv_header() + "\n");
}

TEST_CASE("report documents") {
  rayleigh::BoundReport r;
  r.k = 1;
  r.path_model_eigs = {0.0, 0.25};
  const auto doc = report_to_json(r);
  CHECK(doc["closed_form_bound"].is_null());
  CHECK(doc["path_model_eigs"][1] == 0.25);
  const auto text = to_text(doc);
  CHECK(text.find("\"V0\"") < text.find("\"alpha\""));
}
