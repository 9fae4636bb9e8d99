#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "surfalg/constructions.hpp"
#include "surfalg/io.hpp"
#include "surfalg/iso.hpp"
#include "surfalg/presentation.hpp"
#include "surfalg/surface.hpp"

namespace py = pybind11;
using namespace surfalg;

namespace {

WeightedBiserialQuiver load_q(const std::string& text) { return io::load_quiver(text).wbq; }
BrauerGraph load_b(const std::string& text) { return io::load_brauer(text).graph; }

std::vector<std::vector<std::string>> orbit_ids(const BiserialQuiver& bq,
                                                const OrbitDecomposition& dec) {
  std::vector<std::vector<std::string>> out;
  for (const auto& orbit : dec.orbits) {
    std::vector<std::string> ids;
    for (int a : orbit) ids.push_back(bq.arrow_id(a));
    out.push_back(std::move(ids));
  }
  return out;
}

AlgebraPresentation make_presentation(const WeightedBiserialQuiver& w, const std::string& kind) {
  if (kind == "biserial") return relations_biserial(w);
  if (kind == "border") return relations_border(w);
  if (kind == "weighted") return relations_weighted_triangulation(w);
  throw Error("BadArgument", "unknown relation kind '" + kind + "'");
}

}  // namespace

PYBIND11_MODULE(_surfalg, m) {
  m.doc() = "Brauer graphs, biserial quivers and triangulation quivers. "
            "Documents are JSON strings in the surfalg wire format.";

  py::register_exception<Error>(m, "SurfalgError");

  m.def("validate_quiver", [](const std::string& t) { return io::save_quiver(load_q(t)); },
        py::arg("document"), "Validate a quiver document and return its canonical form.");
  m.def("validate_brauer", [](const std::string& t) { return io::save_brauer(load_b(t)); },
        py::arg("document"), "Validate a Brauer graph document and return its canonical form.");

  m.def("orbits",
        [](const std::string& t, const std::string& perm) {
          WeightedBiserialQuiver w = load_q(t);
          const BiserialQuiver& bq = w.quiver();
          return orbit_ids(bq, perm == "f" ? bq.f_orbits() : bq.g_orbits());
        },
        py::arg("document"), py::arg("perm") = "g");

  m.def("is_triangulation_quiver",
        [](const std::string& t) { return load_q(t).quiver().is_triangulation(); });
  m.def("border_vertices",
        [](const std::string& t) { return load_q(t).quiver().border_vertices(); });

  m.def("star",
        [](const std::string& t, bool minimal) {
          return io::save_quiver(star(load_q(t), nullptr, minimal));
        },
        py::arg("document"), py::arg("minimal") = false);
  m.def("sharp", [](const std::string& t) { return io::save_quiver(sharp(load_q(t))); });
  m.def("double_star",
        [](const std::string& t) { return io::save_quiver(double_star(load_q(t))); });

  m.def("reduce",
        [](const std::string& t, const std::vector<std::string>& keep) {
          IdempotentSelection sel;
          sel.vertices.insert(keep.begin(), keep.end());
          std::vector<std::string> out;
          for (const auto& c : reduce(load_q(t), sel)) out.push_back(io::save_quiver(c));
          return out;
        },
        py::arg("document"), py::arg("keep"));

  m.def("from_brauer", [](const std::string& t) { return io::save_quiver(brauer_to_biserial(load_b(t))); });
  m.def("to_brauer", [](const std::string& t) { return io::save_brauer(biserial_to_brauer(load_q(t))); });
  m.def("barycentric",
        [](const std::string& t) { return io::save_brauer(barycentric_division(load_b(t))); });

  m.def("relations",
        [](const std::string& t, const std::string& kind) {
          return io::presentation_to_json(make_presentation(load_q(t), kind)).dump(2) + "\n";
        },
        py::arg("document"), py::arg("kind") = "biserial");
  m.def("relations_text",
        [](const std::string& t, const std::string& kind) {
          WeightedBiserialQuiver w = load_q(t);
          AlgebraPresentation pres = make_presentation(w, kind);
          std::vector<std::string> out;
          for (const auto& r : pres.relations) out.push_back(r.str(w.quiver()));
          return out;
        },
        py::arg("document"), py::arg("kind") = "biserial");

  m.def("dim", [](const std::string& t) { return dimension(load_q(t)); });
  m.def("cartan",
        [](const std::string& t) {
          WeightedBiserialQuiver w = load_q(t);
          AlgebraPresentation pres =
              w.has_border() ? relations_border(w) : relations_biserial(w);
          return std::make_pair(w.quiver().vertices(), cartan_matrix(pres));
        });
  m.def("surface_report",
        [](const std::string& t) {
          return io::surface_to_json(surface_report(load_q(t).quiver())).dump(2) + "\n";
        });
  m.def("green_walks", [](const std::string& t) { return green_walks(load_q(t).quiver()); });

  m.def("iso",
        [](const std::string& ta, const std::string& tb)
            -> std::optional<std::map<std::string, std::string>> {
          auto witness = isomorphic(load_q(ta), load_q(tb));
          if (!witness) return std::nullopt;
          return witness->vertex_map;
        },
        py::arg("a"), py::arg("b"));

  m.def("envelope",
        [](const std::string& t) {
          auto [w, sel] = periodic_envelope(load_q(t));
          return std::make_pair(
              io::save_quiver(w),
              std::vector<std::string>(sel.vertices.begin(), sel.vertices.end()));
        });

  m.def("is_singular_tetrahedral",
        [](const std::string& t) { return is_singular_tetrahedral(load_q(t)); });

  m.def("random_quiver",
        [](int n, std::uint64_t seed, int max_weight) {
          return io::save_quiver(random_weighted_biserial_quiver(n, seed, max_weight));
        },
        py::arg("n_vertices"), py::arg("seed"), py::arg("max_weight") = 1);

  m.def("export_dot", [](const std::string& t) {
    io::json j = io::json::parse(t);
    if (io::detect(j) == io::DocKind::Quiver) return io::export_dot(io::quiver_from_json(j).wbq);
    return io::export_dot(io::brauer_from_json(j).graph);
  });
}
