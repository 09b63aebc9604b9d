#pragma once

// JSON and CSV documents for graphs, surfaces, certificates and bound
// reports. JSON objects are written with sorted keys and two-space indent.

#include <cstdint>
#include <filesystem>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "hypspec/certify.hpp"
#include "hypspec/graphs.hpp"
#include "hypspec/pipeline.hpp"
#include "hypspec/rayleigh.hpp"
#include "hypspec/surface.hpp"

namespace hypspec::io {

using nlohmann::json;

/// {"vertices": n, "edges": [[u, v], ...], "meta": {...}}
json graph_to_json(const graphs::MultiGraph& graph, const json& meta = json::object());

/// Throws ParseError on malformed documents.
graphs::MultiGraph graph_from_json(const json& doc);

/// Graph document plus "epsilon" and "twists" (one per edge).
json surface_to_json(const surface::FNSurface& surface);
surface::FNSurface surface_from_json(const json& doc);

/// FNV-1a hash of the vertex count and edge list.
std::uint64_t graph_fingerprint(const graphs::MultiGraph& graph);

json certificate_to_json(const certify::SystoleCertificate& cert, const graphs::MultiGraph& graph);

json report_to_json(const rayleigh::BoundReport& report);

/// Header line of the sweep CSV (no trailing newline).
std::string csv_header();

/// One CSV line per row; missing values are written as NA.
std::string csv_row(const pipeline::SweepRow& row, std::size_t k, double epsilon);

std::string sweep_csv(const std::vector<pipeline::SweepRow>& rows, std::size_t k, double epsilon);

/// Two-space indented dump followed by a newline.
std::string to_text(const json& doc);

/// Throws ParseError if the file cannot be read or is not valid JSON.
json read_json_file(const std::filesystem::path& path);

/// Throws DomainError if the file cannot be written.
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace hypspec::io
