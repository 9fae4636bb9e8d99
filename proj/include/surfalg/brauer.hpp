#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "surfalg/quiver.hpp"

namespace surfalg {

struct RawBrauerVertex {
  std::string id;
  int multiplicity = 1;
  std::vector<std::string> cyclic_order;  // half-edge ids
};

struct RawBrauerEdge {
  std::string id;
  std::array<std::string, 2> half_edges;
};

struct RawBrauerGraph {
  std::vector<RawBrauerVertex> vertices;
  std::vector<RawBrauerEdge> edges;
};

// Ribbon graph: cyclic half-edge order at every vertex plus a positive
// multiplicity per vertex. A loop edge attaches both of its half-edges to
// the same vertex and therefore occurs twice in that cyclic order.
class BrauerGraph {
public:
  static BrauerGraph validate(const RawBrauerGraph& raw);

  int vertex_count() const { return static_cast<int>(vertex_ids_.size()); }
  int edge_count() const { return static_cast<int>(edge_ids_.size()); }

  const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
  const std::vector<std::string>& edge_ids() const { return edge_ids_; }

  int vertex_index(const std::string& id) const;
  int edge_index(const std::string& id) const;

  int multiplicity(int v) const { return multiplicity_[v]; }
  // Canonical rotation: lexicographically smallest half-edge first.
  const std::vector<std::string>& cyclic_order(int v) const { return cyclic_[v]; }
  int valency(int v) const { return static_cast<int>(cyclic_[v].size()); }

  const std::array<std::string, 2>& edge_half_edges(int e) const { return edge_halves_[e]; }
  int edge_of_half(const std::string& h) const;
  int vertex_of_half(const std::string& h) const;
  const std::string& partner(const std::string& h) const;

private:
  BrauerGraph() = default;

  std::vector<std::string> vertex_ids_;  // sorted
  std::vector<std::string> edge_ids_;    // sorted
  std::vector<int> multiplicity_;
  std::vector<std::vector<std::string>> cyclic_;
  std::vector<std::array<std::string, 2>> edge_halves_;
  std::map<std::string, int> vertex_idx_, edge_idx_;
  std::map<std::string, int> half_to_edge_, half_to_vertex_;
  std::map<std::string, std::string> half_partner_;
};

// Quiver of a Brauer graph: one quiver vertex per edge, one arrow per
// half-edge (keeping the half-edge id), arrow from its edge to the cyclic
// successor's edge. The weight of a g-orbit is the multiplicity of the
// ribbon vertex the orbit walks around.
WeightedBiserialQuiver brauer_to_biserial(const BrauerGraph& g);

// Inverse direction: one ribbon vertex per g-orbit (cyclic order = orbit
// order), one edge per quiver vertex, multiplicity = orbit weight.
BrauerGraph biserial_to_brauer(const WeightedBiserialQuiver& w);

enum class LoopKind { External, Internal, NotALoop };

// External: the sole edge at some ribbon vertex (g fixes the arrow).
// Internal: a loop edge of the graph (the arrow is a loop, g moves it).
LoopKind classify_loop(const BrauerGraph& g, const std::string& arrow_id);

// One cyclic walk per f-orbit, listing the quiver vertices (= graph edges)
// visited: the sources of the arrows along the orbit. These enumerate the
// boundary components of the thickened ribbon surface.
std::vector<std::vector<std::string>> green_walks(const BiserialQuiver& bq);

struct RibbonIsomorphism {
  std::map<std::string, std::string> vertex_map;
  std::map<std::string, std::string> edge_map;
};

// Exhaustive ribbon-graph isomorphism (preserves cyclic orders up to
// rotation, edge pairing and multiplicities). Bounded like the quiver
// oracle; throws SizeLimitExceeded above `max_edges`.
std::optional<RibbonIsomorphism> ribbon_isomorphic(const BrauerGraph& a, const BrauerGraph& b,
                                                   int max_edges = 12);

}  // namespace surfalg
