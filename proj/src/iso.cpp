#include "surfalg/iso.hpp"

#include <algorithm>
#include <queue>

namespace surfalg {

namespace {

// Multisets used for cheap rejection before the real search.
std::vector<int> sorted_lengths(const OrbitDecomposition& dec) {
  auto l = dec.lengths();
  std::sort(l.begin(), l.end());
  return l;
}

std::vector<std::pair<int, int>> sorted_weighted_lengths(const WeightedBiserialQuiver& w) {
  std::vector<std::pair<int, int>> out;
  for (size_t oi = 0; oi < w.g_orbits().orbits.size(); ++oi)
    out.push_back({w.orbit_length(static_cast<int>(oi)), w.orbit_weight(static_cast<int>(oi))});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::optional<Isomorphism> isomorphic(const WeightedBiserialQuiver& wa,
                                      const WeightedBiserialQuiver& wb, int max_vertices) {
  const BiserialQuiver& a = wa.quiver();
  const BiserialQuiver& b = wb.quiver();
  if (a.vertex_count() > max_vertices || b.vertex_count() > max_vertices)
    throw Error("SizeLimitExceeded",
                "isomorphism search limited to " + std::to_string(max_vertices) + " vertices");

  if (a.vertex_count() != b.vertex_count() || a.arrow_count() != b.arrow_count())
    return std::nullopt;
  if (sorted_lengths(a.f_orbits()) != sorted_lengths(b.f_orbits())) return std::nullopt;
  if (sorted_weighted_lengths(wa) != sorted_weighted_lengths(wb)) return std::nullopt;

  const int na = a.arrow_count();
  const int nv = a.vertex_count();

  for (int pivot_image = 0; pivot_image < na; ++pivot_image) {
    // Propagate from arrow 0 -> pivot_image along f, f^-1 and bar. Any
    // isomorphism commutes with all three, and they act transitively on the
    // arrows of a connected quiver, so the whole map is forced.
    std::vector<int> amap(na, -1);
    amap[0] = pivot_image;
    std::queue<int> work;
    work.push(0);
    bool ok = true;
    while (ok && !work.empty()) {
      int x = work.front();
      work.pop();
      int y = amap[x];
      const int next_x[3] = {a.f(x), a.f_inv(x), a.bar(x)};
      const int next_y[3] = {b.f(y), b.f_inv(y), b.bar(y)};
      for (int k = 0; k < 3 && ok; ++k) {
        if (amap[next_x[k]] < 0) {
          amap[next_x[k]] = next_y[k];
          work.push(next_x[k]);
        } else if (amap[next_x[k]] != next_y[k]) {
          ok = false;
        }
      }
    }
    if (!ok) continue;

    // Bijectivity of the forced arrow map.
    std::vector<int> hit(na, 0);
    for (int x = 0; x < na && ok; ++x) {
      if (amap[x] < 0) ok = false;  // cannot happen on connected input
      else if (++hit[amap[x]] > 1) ok = false;
    }
    if (!ok) continue;

    // Induced vertex map; must respect both endpoints of every arrow.
    std::vector<int> vmap(nv, -1);
    for (int x = 0; x < na && ok; ++x) {
      int sv = a.source(x), tv = a.target(x);
      int sw = b.source(amap[x]), tw = b.target(amap[x]);
      if (vmap[sv] < 0) vmap[sv] = sw;
      else if (vmap[sv] != sw) ok = false;
      if (!ok) break;
      if (vmap[tv] < 0) vmap[tv] = tw;
      else if (vmap[tv] != tw) ok = false;
    }
    if (!ok) continue;
    std::vector<int> vhit(nv, 0);
    for (int v = 0; v < nv && ok; ++v) {
      if (vmap[v] < 0 || ++vhit[vmap[v]] > 1) ok = false;
    }
    if (!ok) continue;

    // Weights and border scalars must transport. Parameter functions are
    // deliberately not part of the comparison; callers that care about them
    // (tetrahedral detection) check them separately.
    for (int x = 0; x < na && ok; ++x) {
      int oa = wa.orbit_of_arrow(x), ob = wb.orbit_of_arrow(amap[x]);
      if (wa.orbit_weight(oa) != wb.orbit_weight(ob)) ok = false;
    }
    if (!ok) continue;
    for (int v : a.border_vertex_indices())
      if (!(wa.border_value(v) == wb.border_value(vmap[v]))) ok = false;
    if (!ok) continue;

    Isomorphism iso;
    for (int v = 0; v < nv; ++v) iso.vertex_map[a.vertex_id(v)] = b.vertex_id(vmap[v]);
    for (int x = 0; x < na; ++x) iso.arrow_map[a.arrow_id(x)] = b.arrow_id(amap[x]);
    return iso;
  }
  return std::nullopt;
}

}  // namespace surfalg
