#pragma once

#include <optional>

#include "surfalg/quiver.hpp"

namespace surfalg {

// Invariants of the closed oriented surface obtained by thickening the
// associated ribbon graph and capping every boundary component. Boundary
// components before capping correspond to the f-orbits.
struct SurfaceReport {
  int n_g_orbits = 0;          // ribbon vertices
  int n_quiver_vertices = 0;   // ribbon edges
  int n_f_orbits = 0;          // faces after capping
  int euler_characteristic = 0;
  std::optional<int> genus;    // (2 - chi) / 2 when chi is even and <= 2
  int n_border_loops = 0;      // f-fixed loops
  int n_triangle_faces = 0;    // f-orbits of length 3
};

// Requires at least two vertices (TooSmall otherwise). The value computed
// is an invariant of the ribbon realization; distinct surfaces may share a
// quiver, and no attempt is made to classify them.
SurfaceReport surface_report(const BiserialQuiver& bq);

}  // namespace surfalg
