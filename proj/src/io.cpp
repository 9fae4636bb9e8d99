#include "surfalg/io.hpp"

#include <algorithm>

namespace surfalg::io {

namespace {

[[noreturn]] void fail(const std::string& pointer, const std::string& msg) {
  throw Error("MalformedDocument", msg + " (at " + (pointer.empty() ? "/" : pointer) + ")");
}

void expect_keys(const json& j, const std::string& pointer,
                 const std::vector<std::string>& required,
                 const std::vector<std::string>& optional) {
  if (!j.is_object()) fail(pointer, "expected an object");
  for (const auto& k : required)
    if (!j.contains(k)) fail(pointer + "/" + k, "missing required field");
  for (const auto& [key, value] : j.items()) {
    bool known = std::find(required.begin(), required.end(), key) != required.end() ||
                 std::find(optional.begin(), optional.end(), key) != optional.end();
    if (!known) fail(pointer + "/" + key, "unknown field rejected");
  }
}

std::string get_string(const json& j, const std::string& pointer) {
  if (!j.is_string()) fail(pointer, "expected a string");
  return j.get<std::string>();
}

int get_positive_int(const json& j, const std::string& pointer) {
  if (!j.is_number_integer() || j.get<long long>() < 1)
    fail(pointer, "expected a positive integer");
  return j.get<int>();
}

void check_version(const json& j, const std::string& pointer) {
  if (get_string(j, pointer) != "1") fail(pointer, "unsupported format_version");
}

Scalar parse_scalar(const json& j, const std::string& pointer) {
  try {
    return Scalar::parse(get_string(j, pointer));
  } catch (const Error& e) {
    fail(pointer, e.what());
  }
}

}  // namespace

DocKind detect(const json& j) {
  if (!j.is_object()) fail("", "expected an object");
  if (j.contains("arrows")) return DocKind::Quiver;
  if (j.contains("edges")) return DocKind::Brauer;
  fail("", "document has neither 'arrows' nor 'edges'");
}

QuiverDocument quiver_from_json(const json& j) {
  expect_keys(j, "", {"format_version", "vertices", "arrows", "f", "weights"},
              {"border", "params", "metadata"});
  check_version(j.at("format_version"), "/format_version");

  RawQuiver raw;
  if (!j.at("vertices").is_array()) fail("/vertices", "expected an array");
  for (size_t i = 0; i < j.at("vertices").size(); ++i)
    raw.vertices.push_back(get_string(j.at("vertices")[i], "/vertices/" + std::to_string(i)));

  if (!j.at("arrows").is_array()) fail("/arrows", "expected an array");
  for (size_t i = 0; i < j.at("arrows").size(); ++i) {
    std::string p = "/arrows/" + std::to_string(i);
    const json& a = j.at("arrows")[i];
    expect_keys(a, p, {"id", "source", "target"}, {});
    raw.arrows.push_back({get_string(a.at("id"), p + "/id"),
                          get_string(a.at("source"), p + "/source"),
                          get_string(a.at("target"), p + "/target")});
  }

  if (!j.at("f").is_object()) fail("/f", "expected an object");
  std::map<std::string, std::string> f;
  for (const auto& [key, value] : j.at("f").items())
    f[key] = get_string(value, "/f/" + key);

  if (!j.at("weights").is_object()) fail("/weights", "expected an object");
  std::map<std::string, int> weights;
  for (const auto& [key, value] : j.at("weights").items())
    weights[key] = get_positive_int(value, "/weights/" + key);

  std::map<std::string, Scalar> border, params;
  if (j.contains("border")) {
    if (!j.at("border").is_object()) fail("/border", "expected an object");
    for (const auto& [key, value] : j.at("border").items())
      border[key] = parse_scalar(value, "/border/" + key);
  }
  if (j.contains("params")) {
    if (!j.at("params").is_object()) fail("/params", "expected an object");
    for (const auto& [key, value] : j.at("params").items())
      params[key] = parse_scalar(value, "/params/" + key);
  }

  QuiverDocument doc{
      WeightedBiserialQuiver::create(BiserialQuiver::validate(raw, f), weights, border, params),
      j.contains("metadata") ? j.at("metadata") : json()};
  return doc;
}

QuiverDocument load_quiver(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) fail("", "invalid JSON");
  return quiver_from_json(j);
}

json quiver_to_json(const WeightedBiserialQuiver& w, const json& metadata) {
  const BiserialQuiver& bq = w.quiver();
  json j;
  j["format_version"] = "1";
  j["vertices"] = bq.vertices();
  json arrows = json::array();
  for (const Arrow& a : bq.arrows())
    arrows.push_back({{"id", a.id}, {"source", a.source}, {"target", a.target}});
  j["arrows"] = std::move(arrows);
  json f = json::object();
  for (int a = 0; a < bq.arrow_count(); ++a) f[bq.arrow_id(a)] = bq.arrow_id(bq.f(a));
  j["f"] = std::move(f);
  json weights = json::object();
  for (const auto& [rep, m] : w.weights_by_rep()) weights[rep] = m;
  j["weights"] = std::move(weights);
  if (w.has_border()) {
    json border = json::object();
    for (const auto& [v, b] : w.border_by_id()) border[v] = b.str();
    j["border"] = std::move(border);
  }
  if (w.has_params()) {
    json params = json::object();
    for (const auto& [rep, c] : w.params_by_rep()) params[rep] = c.str();
    j["params"] = std::move(params);
  }
  if (!metadata.is_null()) j["metadata"] = metadata;
  return j;
}

std::string save_quiver(const WeightedBiserialQuiver& w, const json& metadata) {
  return quiver_to_json(w, metadata).dump(2) + "\n";
}

BrauerDocument brauer_from_json(const json& j) {
  expect_keys(j, "", {"format_version", "vertices", "edges"}, {"metadata"});
  check_version(j.at("format_version"), "/format_version");

  RawBrauerGraph raw;
  if (!j.at("vertices").is_array()) fail("/vertices", "expected an array");
  for (size_t i = 0; i < j.at("vertices").size(); ++i) {
    std::string p = "/vertices/" + std::to_string(i);
    const json& v = j.at("vertices")[i];
    expect_keys(v, p, {"id", "multiplicity", "cyclic_order"}, {});
    RawBrauerVertex rv;
    rv.id = get_string(v.at("id"), p + "/id");
    rv.multiplicity = get_positive_int(v.at("multiplicity"), p + "/multiplicity");
    if (!v.at("cyclic_order").is_array()) fail(p + "/cyclic_order", "expected an array");
    for (size_t k = 0; k < v.at("cyclic_order").size(); ++k)
      rv.cyclic_order.push_back(
          get_string(v.at("cyclic_order")[k], p + "/cyclic_order/" + std::to_string(k)));
    raw.vertices.push_back(std::move(rv));
  }

  if (!j.at("edges").is_array()) fail("/edges", "expected an array");
  for (size_t i = 0; i < j.at("edges").size(); ++i) {
    std::string p = "/edges/" + std::to_string(i);
    const json& e = j.at("edges")[i];
    expect_keys(e, p, {"id", "half_edges"}, {});
    if (!e.at("half_edges").is_array() || e.at("half_edges").size() != 2)
      fail(p + "/half_edges", "expected an array of two half-edge ids");
    raw.edges.push_back({get_string(e.at("id"), p + "/id"),
                         {get_string(e.at("half_edges")[0], p + "/half_edges/0"),
                          get_string(e.at("half_edges")[1], p + "/half_edges/1")}});
  }

  return BrauerDocument{BrauerGraph::validate(raw),
                        j.contains("metadata") ? j.at("metadata") : json()};
}

BrauerDocument load_brauer(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) fail("", "invalid JSON");
  return brauer_from_json(j);
}

json brauer_to_json(const BrauerGraph& g, const json& metadata) {
  json j;
  j["format_version"] = "1";
  json vertices = json::array();
  for (int v = 0; v < g.vertex_count(); ++v)
    vertices.push_back({{"id", g.vertex_ids()[v]},
                        {"multiplicity", g.multiplicity(v)},
                        {"cyclic_order", g.cyclic_order(v)}});
  j["vertices"] = std::move(vertices);
  json edges = json::array();
  for (int e = 0; e < g.edge_count(); ++e) {
    auto halves = g.edge_half_edges(e);
    std::sort(halves.begin(), halves.end());
    edges.push_back({{"id", g.edge_ids()[e]}, {"half_edges", halves}});
  }
  j["edges"] = std::move(edges);
  if (!metadata.is_null()) j["metadata"] = metadata;
  return j;
}

std::string save_brauer(const BrauerGraph& g, const json& metadata) {
  return brauer_to_json(g, metadata).dump(2) + "\n";
}

json orbits_to_json(const BiserialQuiver& bq, const OrbitDecomposition& dec) {
  json out = json::array();
  for (const auto& orbit : dec.orbits) {
    json ids = json::array();
    for (int a : orbit) ids.push_back(bq.arrow_id(a));
    out.push_back(std::move(ids));
  }
  return json{{"orbits", out}};
}

json presentation_to_json(const AlgebraPresentation& pres) {
  const BiserialQuiver& bq = pres.wbq.quiver();
  auto path_json = [&](const Path& p) {
    json arrows = json::array();
    for (int a : p.arrows) arrows.push_back(bq.arrow_id(a));
    return json{{"start", bq.vertex_id(p.start)}, {"arrows", arrows}};
  };
  json rels = json::array();
  for (const Relation& r : pres.relations) {
    json rel;
    rel["kind"] =
        r.kind == RelationKind::MonomialZero ? "monomial-zero" : "binomial-equality";
    rel["left"] = path_json(r.left);
    if (r.kind == RelationKind::BinomialEquality) {
      rel["scalar"] = r.scalar.str();
      rel["right"] = path_json(*r.right);
    }
    rel["text"] = r.str(bq);
    rels.push_back(std::move(rel));
  }
  json virt = json::array(), gabriel = json::array();
  for (int a : pres.virtual_loops) virt.push_back(bq.arrow_id(a));
  for (int a : pres.gabriel_arrows) gabriel.push_back(bq.arrow_id(a));
  std::string kind = pres.kind == PresentationKind::Biserial ? "biserial"
                     : pres.kind == PresentationKind::Border ? "border"
                                                             : "weighted-triangulation";
  return json{{"kind", kind},
              {"relations", rels},
              {"virtual_loops", virt},
              {"gabriel_arrows", gabriel}};
}

json surface_to_json(const SurfaceReport& r) {
  json j{{"n_g_orbits", r.n_g_orbits},
         {"n_quiver_vertices", r.n_quiver_vertices},
         {"n_f_orbits", r.n_f_orbits},
         {"euler_characteristic", r.euler_characteristic},
         {"n_border_loops", r.n_border_loops},
         {"n_triangle_faces", r.n_triangle_faces}};
  if (r.genus) j["genus"] = *r.genus;
  return j;
}

std::string export_dot(const WeightedBiserialQuiver& w) {
  const BiserialQuiver& bq = w.quiver();
  std::string out = "digraph quiver {\n";
  for (const std::string& v : bq.vertices()) out += "  \"" + v + "\";\n";
  for (int a = 0; a < bq.arrow_count(); ++a) {
    bool border_loop = bq.is_loop(a) && bq.f(a) == a;
    bool virtual_loop = w.weight_of(a) * w.n_of(a) == 1;
    out += "  \"" + bq.arrows()[a].source + "\" -> \"" + bq.arrows()[a].target + "\" [label=\"" +
           bq.arrow_id(a) + "\", f=\"" + bq.arrow_id(bq.f(a)) + "\"";
    if (border_loop) out += ", style=bold";
    if (virtual_loop) out += ", style=dotted";
    out += "];\n";
  }
  out += "}\n";
  return out;
}

std::string export_dot(const BrauerGraph& g) {
  std::string out = "graph brauer {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::string cyc;
    for (const std::string& h : g.cyclic_order(v)) {
      if (!cyc.empty()) cyc += " ";
      cyc += h;
    }
    out += "  \"" + g.vertex_ids()[v] + "\" [label=\"" + g.vertex_ids()[v] +
           " (e=" + std::to_string(g.multiplicity(v)) + ")\\ncyclic: " + cyc + "\"];\n";
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& halves = g.edge_half_edges(e);
    out += "  \"" + g.vertex_ids()[g.vertex_of_half(halves[0])] + "\" -- \"" +
           g.vertex_ids()[g.vertex_of_half(halves[1])] + "\" [label=\"" + g.edge_ids()[e] +
           "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace surfalg::io
