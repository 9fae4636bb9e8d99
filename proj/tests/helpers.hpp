#pragma once

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "surfalg/io.hpp"
#include "surfalg/quiver.hpp"

namespace testutil {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string fixture_path(const std::string& name) {
  return std::string(FIXTURES_DIR) + "/" + name;
}

inline surfalg::WeightedBiserialQuiver load_fixture(const std::string& name) {
  return surfalg::io::load_quiver(read_file(fixture_path(name))).wbq;
}

inline surfalg::BrauerGraph load_brauer_fixture(const std::string& name) {
  return surfalg::io::load_brauer(read_file(fixture_path(name))).graph;
}

inline std::vector<int> sorted_orbit_lengths(const surfalg::OrbitDecomposition& dec) {
  auto l = dec.lengths();
  std::sort(l.begin(), l.end());
  return l;
}

// Arrow ids of every orbit, for literal comparison against known cycles.
inline std::vector<std::vector<std::string>> orbit_ids(const surfalg::BiserialQuiver& bq,
                                                       const surfalg::OrbitDecomposition& dec) {
  std::vector<std::vector<std::string>> out;
  for (const auto& orbit : dec.orbits) {
    std::vector<std::string> ids;
    for (int a : orbit) ids.push_back(bq.arrow_id(a));
    out.push_back(std::move(ids));
  }
  return out;
}

// True when `cycle` appears among the orbits up to rotation.
inline bool has_cycle(const std::vector<std::vector<std::string>>& orbits,
                      std::vector<std::string> cycle) {
  for (const auto& orbit : orbits) {
    if (orbit.size() != cycle.size()) continue;
    for (size_t r = 0; r < cycle.size(); ++r) {
      bool match = true;
      for (size_t i = 0; i < cycle.size() && match; ++i)
        match = orbit[i] == cycle[(i + r) % cycle.size()];
      if (match) return true;
    }
  }
  return false;
}

// Weight of the g-orbit containing the named arrow.
inline int weight_at(const surfalg::WeightedBiserialQuiver& w, const std::string& arrow) {
  return w.weight_of(w.quiver().arrow_index(arrow));
}

// Independent count of the distinct nonzero paths of the presented algebra:
// walks g arrow by arrow (checking composability), collects every prefix of
// both cycles per vertex plus the stationary path, and discounts the
// identified pair of full cycles.
inline long long dim_oracle(const surfalg::WeightedBiserialQuiver& w) {
  const surfalg::BiserialQuiver& bq = w.quiver();
  long long total = 0;
  for (int v = 0; v < bq.vertex_count(); ++v) {
    std::vector<std::vector<int>> paths;
    paths.push_back({});
    for (int a : bq.arrows_from(v)) {
      std::vector<int> prefix;
      int at = v, current = a;
      int steps = w.weight_of(a) * w.n_of(a);
      for (int k = 0; k < steps; ++k) {
        REQUIRE(bq.source(current) == at);
        prefix.push_back(current);
        at = bq.target(current);
        paths.push_back(prefix);
        current = bq.g(current);
      }
      REQUIRE(at == v);  // the full cycle closes up
    }
    std::sort(paths.begin(), paths.end());
    paths.erase(std::unique(paths.begin(), paths.end()), paths.end());
    total += static_cast<long long>(paths.size()) - 1;  // the two socles coincide
  }
  return total;
}

}  // namespace testutil
