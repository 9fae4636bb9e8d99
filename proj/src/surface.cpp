#include "surfalg/surface.hpp"

namespace surfalg {

SurfaceReport surface_report(const BiserialQuiver& bq) {
  if (bq.vertex_count() < 2)
    throw Error("TooSmall", "surface invariants need at least two vertices");

  SurfaceReport r;
  r.n_g_orbits = static_cast<int>(bq.g_orbits().orbits.size());
  r.n_quiver_vertices = bq.vertex_count();
  for (const auto& orbit : bq.f_orbits().orbits) {
    ++r.n_f_orbits;
    if (orbit.size() == 3) ++r.n_triangle_faces;
    if (orbit.size() == 1 && bq.is_loop(orbit[0])) ++r.n_border_loops;
  }
  r.euler_characteristic = r.n_g_orbits - r.n_quiver_vertices + r.n_f_orbits;
  if (r.euler_characteristic % 2 == 0 && r.euler_characteristic <= 2)
    r.genus = (2 - r.euler_characteristic) / 2;
  return r;
}

}  // namespace surfalg
