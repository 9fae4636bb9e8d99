#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "surfalg/brauer.hpp"
#include "surfalg/quiver.hpp"

namespace surfalg {

struct IdempotentSelection {
  std::set<std::string> vertices;
};

// Idempotent reduction: keep the selected vertices; every arrow starting in
// the selection becomes the shortest g-run ending in the selection, the new
// f follows f applied to the last arrow of a run, weights and border
// scalars are inherited. The result splits into connected components,
// ordered by smallest vertex id.
// Errors: EmptySelection, ExcludedDegenerate (degenerate component).
std::vector<WeightedBiserialQuiver> reduce(const WeightedBiserialQuiver& w,
                                           const IdempotentSelection& sel);

// Bookkeeping for where the arrows of an enlargement came from.
struct StarProvenance {
  std::map<std::string, std::string> primed_origin;  // a' and a'' -> a
  std::map<std::string, std::string> eps_origin;     // eps_a -> a
  std::set<std::string> kept;                        // arrows copied verbatim
};

// Enlargement to a triangulation quiver: each processed arrow a gets a new
// vertex x_a and arrows a': s(a)->x_a, a'': x_a->t(a), eps_a: x_{f(a)}->x_a,
// with f(a'') = f(a)', f(f(a)') = eps_a, f(eps_a) = a''. New-orbit weights
// follow the originating orbit; eps-orbits get weight one. Border and
// parameter data are dropped.
// With `minimal`, f-fixed loops and loop-free f-orbits of length three are
// copied verbatim instead of processed.
WeightedBiserialQuiver star(const WeightedBiserialQuiver& w, StarProvenance* prov = nullptr,
                            bool minimal = false);

// star twice: a triangulation quiver without loops or self-folded triangles.
WeightedBiserialQuiver double_star(const WeightedBiserialQuiver& w);

// Variant of star that copies every f-fixed border loop verbatim and keeps
// the border function; the border is preserved as a vertex set with its
// scalars. Errors: EmptyBorder.
WeightedBiserialQuiver sharp(const WeightedBiserialQuiver& w);

// Brauer-graph shadow of star: one new multiplicity-one vertex per f-orbit
// whose cyclic order is the inverse f-cycle; the original vertices survive
// with their multiplicities, each edge i->j subdivided through x-edges.
BrauerGraph barycentric_division(const BrauerGraph& g);

// Smallest iterated star whose output supports the quadratic-relation
// presentation (triangulation quiver, m*n >= 3 on every arrow, never the
// tetrahedral configuration), equipped with the trivial parameter function.
// One star suffices for loop-free inputs with no short f-orbits, two when
// no f-fixed loop exists, three otherwise. The selection holds the original
// vertices.
std::pair<WeightedBiserialQuiver, IdempotentSelection> periodic_envelope(
    const WeightedBiserialQuiver& w);

// The 6-vertex, 12-arrow tetrahedral configuration with trivial weights and
// parameters: the one weighted triangulation algebra excluded from
// period-four behaviour.
WeightedBiserialQuiver tetrahedral_quiver();

// True only for trivial weights/parameters on a quiver isomorphic (f
// preserved) to the tetrahedral configuration.
bool is_singular_tetrahedral(const WeightedBiserialQuiver& w);

}  // namespace surfalg
