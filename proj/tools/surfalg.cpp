#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "surfalg/constructions.hpp"
#include "surfalg/io.hpp"
#include "surfalg/iso.hpp"
#include "surfalg/presentation.hpp"
#include "surfalg/surface.hpp"

using namespace surfalg;
using nlohmann::json;

namespace {

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw Error("IOError", "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw Error("MalformedDocument", "invalid JSON (at /)");
  return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string quiver_text(const WeightedBiserialQuiver& w) {
  const BiserialQuiver& bq = w.quiver();
  std::ostringstream out;
  out << "vertices (" << bq.vertex_count() << "):";
  for (const auto& v : bq.vertices()) out << " " << v;
  out << "\narrows (" << bq.arrow_count() << "):\n";
  for (int a = 0; a < bq.arrow_count(); ++a)
    out << "  " << bq.arrow_id(a) << ": " << bq.arrows()[a].source << " -> "
        << bq.arrows()[a].target << "   f -> " << bq.arrow_id(bq.f(a)) << "\n";
  out << "weights:";
  for (const auto& [rep, m] : w.weights_by_rep()) out << " " << rep << "=" << m;
  out << "\n";
  if (w.has_border()) {
    out << "border:";
    for (const auto& [v, b] : w.border_by_id()) out << " " << v << "=" << b.str();
    out << "\n";
  }
  if (w.has_params()) {
    out << "params:";
    for (const auto& [rep, c] : w.params_by_rep()) out << " " << rep << "=" << c.str();
    out << "\n";
  }
  return out.str();
}

void emit_quiver(const WeightedBiserialQuiver& w, const std::string& format,
                 const json& metadata = json()) {
  if (format == "text")
    std::cout << quiver_text(w);
  else
    std::cout << io::save_quiver(w, metadata);
}

void emit_brauer(const BrauerGraph& g, const std::string& format) {
  if (format == "text") {
    for (int v = 0; v < g.vertex_count(); ++v) {
      std::cout << g.vertex_ids()[v] << " (e=" << g.multiplicity(v) << "):";
      for (const auto& h : g.cyclic_order(v)) std::cout << " " << h;
      std::cout << "\n";
    }
    for (int e = 0; e < g.edge_count(); ++e)
      std::cout << g.edge_ids()[e] << ": " << g.edge_half_edges(e)[0] << " / "
                << g.edge_half_edges(e)[1] << "\n";
  } else {
    std::cout << io::save_brauer(g);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"surfalg: Brauer graphs, biserial quivers and triangulation quivers"};
  app.require_subcommand(1);

  std::string input, input_b, format = "json", perm = "g", keep, kind = "biserial";
  bool minimal = false;
  int n_vertices = 1, max_weight = 1;
  std::uint64_t seed = 0;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "input document (default: stdin)");
    cmd->add_option("--format", format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
  };

  auto* c_validate = app.add_subcommand("validate", "check a document and echo its canonical form");
  add_input(c_validate);
  auto* c_orbits = app.add_subcommand("orbits", "orbit decomposition of f or g");
  add_input(c_orbits);
  c_orbits->add_option("--perm", perm, "permutation to decompose")->check(CLI::IsMember({"f", "g"}));
  auto* c_from = app.add_subcommand("from-brauer", "quiver of a Brauer graph");
  add_input(c_from);
  auto* c_to = app.add_subcommand("to-brauer", "Brauer graph of a weighted quiver");
  add_input(c_to);
  auto* c_star = app.add_subcommand("star", "enlargement to a triangulation quiver");
  add_input(c_star);
  c_star->add_flag("--minimal", minimal, "leave f-fixed loops and loop-free triangles untouched");
  auto* c_sharp = app.add_subcommand("sharp", "border-preserving enlargement");
  add_input(c_sharp);
  auto* c_dstar = app.add_subcommand("double-star", "star applied twice");
  add_input(c_dstar);
  auto* c_reduce = app.add_subcommand("reduce", "idempotent reduction to selected vertices");
  add_input(c_reduce);
  c_reduce->add_option("--keep", keep, "comma-separated vertex ids")->required();
  auto* c_bary = app.add_subcommand("barycentric", "barycentric division of a Brauer graph");
  add_input(c_bary);
  auto* c_rel = app.add_subcommand("relations", "generate the relation set");
  add_input(c_rel);
  c_rel->add_option("--kind", kind, "biserial, border or weighted")
      ->check(CLI::IsMember({"biserial", "border", "weighted"}));
  auto* c_dim = app.add_subcommand("dim", "dimension of the presented algebra");
  add_input(c_dim);
  auto* c_cartan = app.add_subcommand("cartan", "Cartan matrix of the presented algebra");
  add_input(c_cartan);
  auto* c_gabriel = app.add_subcommand("gabriel", "quiver with virtual loops removed");
  add_input(c_gabriel);
  auto* c_surface = app.add_subcommand("surface", "ribbon surface invariants");
  add_input(c_surface);
  auto* c_walks = app.add_subcommand("green-walks", "boundary walks, one per f-orbit");
  add_input(c_walks);
  auto* c_iso = app.add_subcommand("iso", "exhaustive isomorphism test of two quiver documents");
  c_iso->add_option("a", input, "first document")->required();
  c_iso->add_option("b", input_b, "second document")->required();
  c_iso->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
  auto* c_env = app.add_subcommand("envelope", "smallest periodic enlargement with parameters");
  add_input(c_env);
  auto* c_dot = app.add_subcommand("export-dot", "deterministic DOT export");
  c_dot->add_option("input", input, "input document (default: stdin)");
  c_dot->add_option("--format", format, "dot (default)")->check(CLI::IsMember({"dot"}));
  auto* c_random = app.add_subcommand("random", "seeded random biserial quiver");
  c_random->add_option("--vertices", n_vertices, "number of vertices")->required();
  c_random->add_option("--seed", seed, "seed")->required();
  c_random->add_option("--max-weight", max_weight, "weights drawn from 1..max");
  c_random->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_validate->parsed()) {
      json j = parse_json(read_input(input));
      if (io::detect(j) == io::DocKind::Quiver) {
        io::QuiverDocument doc = io::quiver_from_json(j);
        const BiserialQuiver& bq = doc.wbq.quiver();
        if (bq.vertex_count() == 1 && bq.is_triangulation())
          std::cerr << "warning: single-vertex triangulation quiver; surface operations refuse it\n";
        emit_quiver(doc.wbq, format, doc.metadata);
      } else {
        io::BrauerDocument doc = io::brauer_from_json(j);
        emit_brauer(doc.graph, format);
      }
    } else if (c_orbits->parsed()) {
      io::QuiverDocument doc = io::load_quiver(read_input(input));
      const BiserialQuiver& bq = doc.wbq.quiver();
      OrbitDecomposition dec = perm == "f" ? bq.f_orbits() : bq.g_orbits();
      if (format == "text") {
        for (const auto& orbit : dec.orbits) {
          std::cout << "(";
          for (size_t i = 0; i < orbit.size(); ++i)
            std::cout << (i ? " " : "") << bq.arrow_id(orbit[i]);
          std::cout << ")\n";
        }
      } else {
        emit(io::orbits_to_json(bq, dec));
      }
    } else if (c_from->parsed()) {
      io::BrauerDocument doc = io::load_brauer(read_input(input));
      emit_quiver(brauer_to_biserial(doc.graph), format);
    } else if (c_to->parsed()) {
      io::QuiverDocument doc = io::load_quiver(read_input(input));
      emit_brauer(biserial_to_brauer(doc.wbq), format);
    } else if (c_star->parsed()) {
      io::QuiverDocument doc = io::load_quiver(read_input(input));
      emit_quiver(star(doc.wbq, nullptr, minimal), format);
    } else if (c_sharp->parsed()) {
      io::QuiverDocument doc = io::load_quiver(read_input(input));
      emit_quiver(sharp(doc.wbq), format);
    } else if (c_dstar->parsed()) {
      io::QuiverDocument doc = io::load_quiver(read_input(input));
      emit_quiver(double_star(doc.wbq), format);
    } else if (c_reduce->parsed()) {
      io::QuiverDocument doc = io::load_quiver(read_input(input));
      IdempotentSelection sel;
      std::stringstream ss(keep);
      std::string item;
      while (std::getline(ss, item, ','))
        if (!item.empty()) sel.vertices.insert(item);
      auto components = reduce(doc.wbq, sel);
      if (format == "text") {
        for (size_t i = 0; i < components.size(); ++i) {
          std::cout << "component " << i << ":\n" << quiver_text(components[i]);
        }
      } else {
        json out = json::array();
        for (const auto& c : components) out.push_back(io::quiver_to_json(c));
        emit(json{{"components", out}});
      }
    } else if (c_bary->parsed()) {
      io::BrauerDocument doc = io::load_brauer(read_input(input));
      emit_brauer(barycentric_division(doc.graph), format);
    } else if (c_rel->parsed()) {
      io::QuiverDocument doc = io::load_quiver(read_input(input));
      AlgebraPresentation pres = kind == "biserial" ? relations_biserial(doc.wbq)
                                 : kind == "border" ? relations_border(doc.wbq)
                                                    : relations_weighted_triangulation(doc.wbq);
      if (format == "text") {
        for (const auto& r : pres.relations) std::cout << r.str(doc.wbq.quiver()) << "\n";
      } else {
        emit(io::presentation_to_json(pres));
      }
    } else if (c_dim->parsed()) {
      io::QuiverDocument doc = io::load_quiver(read_input(input));
      if (format == "text")
        std::cout << dimension(doc.wbq) << "\n";
      else
        emit(json{{"dimension", dimension(doc.wbq)}});
    } else if (c_cartan->parsed()) {
      io::QuiverDocument doc = io::load_quiver(read_input(input));
      AlgebraPresentation pres =
          doc.wbq.has_border() ? relations_border(doc.wbq) : relations_biserial(doc.wbq);
      auto m = cartan_matrix(pres);
      if (format == "text") {
        for (const auto& row : m) {
          for (size_t i = 0; i < row.size(); ++i) std::cout << (i ? " " : "") << row[i];
          std::cout << "\n";
        }
      } else {
        emit(json{{"vertices", doc.wbq.quiver().vertices()}, {"matrix", m}});
      }
    } else if (c_gabriel->parsed()) {
      io::QuiverDocument doc = io::load_quiver(read_input(input));
      AlgebraPresentation pres =
          doc.wbq.has_border() ? relations_border(doc.wbq) : relations_biserial(doc.wbq);
      RawQuiver gq = gabriel_quiver(pres);
      json arrows = json::array();
      for (const Arrow& a : gq.arrows)
        arrows.push_back({{"id", a.id}, {"source", a.source}, {"target", a.target}});
      emit(json{{"vertices", gq.vertices}, {"arrows", arrows}});
    } else if (c_surface->parsed()) {
      io::QuiverDocument doc = io::load_quiver(read_input(input));
      SurfaceReport r = surface_report(doc.wbq.quiver());
      if (format == "text") {
        std::cout << "g-orbits: " << r.n_g_orbits << "\nquiver vertices: " << r.n_quiver_vertices
                  << "\nf-orbits: " << r.n_f_orbits << "\neuler characteristic: "
                  << r.euler_characteristic << "\n";
        if (r.genus) std::cout << "genus: " << *r.genus << "\n";
        std::cout << "border loops: " << r.n_border_loops
                  << "\ntriangle faces: " << r.n_triangle_faces << "\n";
      } else {
        emit(io::surface_to_json(r));
      }
    } else if (c_walks->parsed()) {
      json j = parse_json(read_input(input));
      WeightedBiserialQuiver w = io::detect(j) == io::DocKind::Quiver
                                     ? io::quiver_from_json(j).wbq
                                     : brauer_to_biserial(io::brauer_from_json(j).graph);
      auto walks = green_walks(w.quiver());
      if (format == "text") {
        for (const auto& walk : walks) {
          std::cout << "(";
          for (size_t i = 0; i < walk.size(); ++i) std::cout << (i ? " " : "") << walk[i];
          std::cout << ")\n";
        }
      } else {
        emit(json{{"walks", walks}});
      }
    } else if (c_iso->parsed()) {
      io::QuiverDocument a = io::load_quiver(read_input(input));
      io::QuiverDocument b = io::load_quiver(read_input(input_b));
      auto witness = isomorphic(a.wbq, b.wbq);
      if (format == "text") {
        std::cout << (witness ? "isomorphic" : "not isomorphic") << "\n";
        if (witness)
          for (const auto& [v, w] : witness->vertex_map) std::cout << v << " -> " << w << "\n";
      } else if (witness) {
        emit(json{{"isomorphic", true},
                  {"vertex_map", witness->vertex_map},
                  {"arrow_map", witness->arrow_map}});
      } else {
        emit(json{{"isomorphic", false}});
      }
    } else if (c_env->parsed()) {
      io::QuiverDocument doc = io::load_quiver(read_input(input));
      auto [enlarged, sel] = periodic_envelope(doc.wbq);
      json meta{{"keep", std::vector<std::string>(sel.vertices.begin(), sel.vertices.end())}};
      emit_quiver(enlarged, format, meta);
    } else if (c_dot->parsed()) {
      json j = parse_json(read_input(input));
      if (io::detect(j) == io::DocKind::Quiver)
        std::cout << io::export_dot(io::quiver_from_json(j).wbq);
      else
        std::cout << io::export_dot(io::brauer_from_json(j).graph);
    } else if (c_random->parsed()) {
      emit_quiver(random_weighted_biserial_quiver(n_vertices, seed, max_weight), format);
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: invalid input\n";
    json errors = json::array();
    for (const auto& d : e.diagnostics()) errors.push_back(d);
    emit(json{{"valid", false}, {"errors", errors}});
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    emit(json{{"valid", false}, {"errors", {std::string(e.what())}}});
    return 1;
  }
  return 0;
}
