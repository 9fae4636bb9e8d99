#pragma once

#include <optional>
#include <string>
#include <vector>

#include "surfalg/quiver.hpp"

namespace surfalg {

// A path in the quiver: a start vertex and a composable arrow sequence.
// The empty sequence is the stationary path at the start vertex. Arrows
// compose left to right.
struct Path {
  int start = -1;                // vertex index
  std::vector<int> arrows;       // arrow indices

  int end(const BiserialQuiver& bq) const {
    return arrows.empty() ? start : bq.target(arrows.back());
  }
  int length() const { return static_cast<int>(arrows.size()); }
  bool operator==(const Path& other) const = default;

  // "e_<vertex>" for stationary paths, arrow ids joined by '*' otherwise.
  std::string str(const BiserialQuiver& bq) const;
};

enum class RelationKind { MonomialZero, BinomialEquality };

// left = 0, or left = scalar * right with both sides parallel.
struct Relation {
  RelationKind kind = RelationKind::MonomialZero;
  Path left;
  Scalar scalar;  // meaningful for binomials only; always nonzero there
  std::optional<Path> right;

  std::string str(const BiserialQuiver& bq) const;
};

enum class PresentationKind { Biserial, Border, WeightedTriangulation };

struct AlgebraPresentation {
  WeightedBiserialQuiver wbq;
  PresentationKind kind = PresentationKind::Biserial;
  std::vector<Relation> relations;
  std::vector<int> virtual_loops;   // arrows with m*n == 1, sorted
  std::vector<int> gabriel_arrows;  // all arrows except virtual loops, sorted
};

// The closed cycle B_a: the g-run through a, repeated m_a times
// (length m_a * n_a), based at the source of a.
Path cycle_B(const WeightedBiserialQuiver& w, int arrow);

// The length m_a * n_a - 1 prefix of B_a; TooShort when m_a * n_a == 1.
Path path_A(const WeightedBiserialQuiver& w, int arrow);

// One zero relation a f(a) per arrow plus one cycle equality B_a = B_a' per
// vertex (a the lexicographically smaller arrow leaving it).
AlgebraPresentation relations_biserial(const WeightedBiserialQuiver& w);

// Like relations_biserial, but every border loop a contributes
// a^2 = b_{s(a)} B_a instead of a zero square (falling back to a zero
// relation where the border scalar vanishes). EmptyBorder without border.
AlgebraPresentation relations_border(const WeightedBiserialQuiver& w);

// For triangulation quivers with m_a * n_a >= 3 everywhere: per arrow a the
// equality a f(a) = c_{bar a} A_{bar a} and the zero relation
// a f(a) g(f(a)). Errors: NotTriangulation, WeightTooSmall.
AlgebraPresentation relations_weighted_triangulation(const WeightedBiserialQuiver& w);

// Basis of the presented algebra for the biserial and border kinds: per
// vertex the stationary path, all proper nonempty prefixes of both arrow
// cycles, and one socle cycle.
std::vector<Path> basis_paths(const AlgebraPresentation& pres);

// Closed formula: sum of m_O * n_O^2 over g-orbits.
long long dimension(const WeightedBiserialQuiver& w);
long long dimension(const AlgebraPresentation& pres);

// Entry (i, j): number of basis paths from i to j. Biserial/border only.
std::vector<std::vector<long long>> cartan_matrix(const AlgebraPresentation& pres);

// The quiver with virtual loops removed.
RawQuiver gabriel_quiver(const AlgebraPresentation& pres);

}  // namespace surfalg
