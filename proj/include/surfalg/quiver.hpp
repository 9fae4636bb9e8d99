#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "surfalg/errors.hpp"
#include "surfalg/scalar.hpp"

namespace surfalg {

struct Arrow {
  std::string id;
  std::string source;
  std::string target;
};

// Unvalidated quiver data as it comes off the wire.
struct RawQuiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
};

// Orbit decomposition of a permutation of arrows. Canonical form: every
// orbit is rotated so its lexicographically smallest arrow id comes first,
// and orbits are sorted by that first id.
struct OrbitDecomposition {
  std::vector<std::vector<int>> orbits;          // arrow indices
  std::vector<std::pair<int, int>> position;     // arrow index -> (orbit, slot)

  std::vector<int> lengths() const {
    std::vector<int> out;
    out.reserve(orbits.size());
    for (const auto& o : orbits) out.push_back(static_cast<int>(o.size()));
    return out;
  }
};

// A connected 2-regular quiver together with a permutation f of its arrows
// such that f(a) starts where a ends. The companion data (the involution
// swapping the two arrows at a common source, and g = bar o f) is derived
// once at validation. Immutable afterwards.
class BiserialQuiver {
public:
  // Checks every invariant and reports all violations at once:
  // NotTwoRegular, NotBijective, NotAdmissible, Disconnected.
  static BiserialQuiver validate(const RawQuiver& raw,
                                 const std::map<std::string, std::string>& f);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  int vertex_index(const std::string& id) const;
  int arrow_index(const std::string& id) const;
  const std::string& vertex_id(int v) const { return vertices_[v]; }
  const std::string& arrow_id(int a) const { return arrows_[a].id; }

  int source(int a) const { return source_[a]; }
  int target(int a) const { return target_[a]; }
  bool is_loop(int a) const { return source_[a] == target_[a]; }

  int f(int a) const { return f_[a]; }
  int f_inv(int a) const { return f_inv_[a]; }
  int bar(int a) const { return bar_[a]; }
  int g(int a) const { return g_[a]; }

  const std::vector<int>& f_perm() const { return f_; }
  const std::vector<int>& g_perm() const { return g_; }

  // The two arrows leaving / entering a vertex, sorted by arrow id.
  const std::array<int, 2>& arrows_from(int v) const { return out_[v]; }
  const std::array<int, 2>& arrows_into(int v) const { return in_[v]; }

  // f o f o f = identity.
  bool is_triangulation() const;

  // Vertices carrying an f-fixed loop, sorted.
  std::vector<int> border_vertex_indices() const;
  std::vector<std::string> border_vertices() const;

  // f-orbits of length 3 containing a loop. Requires is_triangulation().
  std::vector<std::vector<int>> self_folded_triangles() const;

  OrbitDecomposition f_orbits() const { return orbits(f_); }
  OrbitDecomposition g_orbits() const { return orbits(g_); }

  // Canonical orbit decomposition of a permutation given as arrow index map.
  OrbitDecomposition orbits(const std::vector<int>& perm) const;

private:
  friend class WeightedBiserialQuiver;
  BiserialQuiver() = default;

  std::vector<std::string> vertices_;  // sorted
  std::vector<Arrow> arrows_;          // sorted by id
  std::map<std::string, int> vertex_idx_;
  std::map<std::string, int> arrow_idx_;
  std::vector<int> source_, target_;
  std::vector<int> f_, f_inv_, bar_, g_;
  std::vector<std::array<int, 2>> out_, in_;
};

// Orbit decomposition of an arbitrary permutation given by ids.
// Throws NotBijective if `perm` is not a bijection of `arrows`.
OrbitDecomposition orbits_of_mapping(const std::map<std::string, std::string>& perm,
                                     const std::set<std::string>& arrows,
                                     std::vector<std::string>* ids_out);

// BiserialQuiver plus a positive integer weight per g-orbit, an optional
// border scalar per border vertex and an optional nonzero parameter per
// g-orbit. Weight lookups key on any arrow of the orbit.
class WeightedBiserialQuiver {
public:
  WeightedBiserialQuiver() = default;  // empty placeholder; fill via create()

  static WeightedBiserialQuiver create(BiserialQuiver bq,
                                       const std::map<std::string, int>& weights,
                                       const std::map<std::string, Scalar>& border = {},
                                       const std::map<std::string, Scalar>& params = {});

  // Rvalue access copies, so chaining off a temporary cannot dangle.
  const BiserialQuiver& quiver() const& { return bq_; }
  BiserialQuiver quiver() const&& { return bq_; }
  const OrbitDecomposition& g_orbits() const& { return g_orbits_; }
  OrbitDecomposition g_orbits() const&& { return g_orbits_; }

  int orbit_of_arrow(int a) const { return g_orbits_.position[a].first; }
  int orbit_length(int orbit) const { return static_cast<int>(g_orbits_.orbits[orbit].size()); }
  int orbit_weight(int orbit) const { return weights_[orbit]; }

  // m_a and n_a for an arrow index.
  int weight_of(int a) const { return weights_[orbit_of_arrow(a)]; }
  int n_of(int a) const { return orbit_length(orbit_of_arrow(a)); }

  // Orbit representative: the lexicographically smallest arrow id.
  const std::string& orbit_rep(int orbit) const {
    return bq_.arrow_id(g_orbits_.orbits[orbit][0]);
  }

  bool has_border() const { return !border_.empty(); }
  const std::map<int, Scalar>& border() const { return border_; }
  // b_i for a border vertex; vertices without a stored value count as zero.
  Scalar border_value(int v) const;

  bool has_params() const { return !params_.empty(); }
  const std::map<int, Scalar>& params() const { return params_; }  // orbit -> c
  Scalar param_of_orbit(int orbit) const;

  std::map<std::string, int> weights_by_rep() const;
  std::map<std::string, Scalar> border_by_id() const;
  std::map<std::string, Scalar> params_by_rep() const;

private:


  BiserialQuiver bq_;
  OrbitDecomposition g_orbits_;
  std::vector<int> weights_;       // per orbit
  std::map<int, Scalar> border_;   // vertex index -> scalar
  std::map<int, Scalar> params_;   // orbit -> scalar
};

// Seeded generator: connected 2-regular quiver with admissible f, built by
// matching out-slots to in-slots and flipping one coin per vertex for f,
// resampling until connected (GenerationFailed after 10^4 attempts).
BiserialQuiver random_biserial_quiver(int n_vertices, std::uint64_t seed);

// Same, plus weights drawn uniformly from 1..max_weight per g-orbit.
// The two-dimensional degenerate configuration is avoided by bumping one
// weight when it would occur.
WeightedBiserialQuiver random_weighted_biserial_quiver(int n_vertices, std::uint64_t seed,
                                                       int max_weight = 1);

}  // namespace surfalg
