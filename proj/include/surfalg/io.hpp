#pragma once

#include <string>

#include <json.hpp>

#include "surfalg/brauer.hpp"
#include "surfalg/presentation.hpp"
#include "surfalg/quiver.hpp"
#include "surfalg/surface.hpp"

namespace surfalg::io {

using nlohmann::json;

// Wire format, version "1". Unknown fields are rejected, not ignored;
// malformed input reports a JSON pointer to the offending field. The
// free-form metadata object travels through load/save untouched.
struct QuiverDocument {
  WeightedBiserialQuiver wbq;
  json metadata;  // null when absent
};

struct BrauerDocument {
  BrauerGraph graph;
  json metadata;
};

enum class DocKind { Quiver, Brauer };

// A quiver document carries "arrows", a Brauer graph document "edges".
DocKind detect(const json& j);

QuiverDocument quiver_from_json(const json& j);
QuiverDocument load_quiver(const std::string& text);
json quiver_to_json(const WeightedBiserialQuiver& w, const json& metadata = json());
std::string save_quiver(const WeightedBiserialQuiver& w, const json& metadata = json());

BrauerDocument brauer_from_json(const json& j);
BrauerDocument load_brauer(const std::string& text);
json brauer_to_json(const BrauerGraph& g, const json& metadata = json());
std::string save_brauer(const BrauerGraph& g, const json& metadata = json());

json orbits_to_json(const BiserialQuiver& bq, const OrbitDecomposition& dec);
json presentation_to_json(const AlgebraPresentation& pres);
json surface_to_json(const SurfaceReport& report);

// Deterministic DOT. Quivers as digraphs with f stored in an edge
// attribute, border loops bold, virtual loops dotted; Brauer graphs as
// undirected graphs with multiplicities and cyclic orders in node labels.
std::string export_dot(const WeightedBiserialQuiver& w);
std::string export_dot(const BrauerGraph& g);

}  // namespace surfalg::io
