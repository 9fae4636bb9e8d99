#pragma once

#include <map>
#include <optional>
#include <string>

#include "surfalg/quiver.hpp"

namespace surfalg {

struct Isomorphism {
  std::map<std::string, std::string> vertex_map;
  std::map<std::string, std::string> arrow_map;
};

// Exhaustive search for a bijection of vertices and arrows preserving
// sources, targets, f, g-orbit weights and border scalars.
// Every candidate image of one pivot arrow is tried; the rest of the map is
// forced by compatibility with f and with the source-sharing involution, so
// the search is complete on connected quivers. Intended for desk-scale
// instances; throws SizeLimitExceeded above `max_vertices`.
std::optional<Isomorphism> isomorphic(const WeightedBiserialQuiver& a,
                                      const WeightedBiserialQuiver& b,
                                      int max_vertices = 12);

}  // namespace surfalg
