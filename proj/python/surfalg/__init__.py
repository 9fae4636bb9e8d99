"""Brauer graphs, biserial quivers and triangulation quivers.

All document arguments are JSON strings in the surfalg wire format; see the
README for the schema and the `surfalg` CLI for the same operations on files.
"""

from ._surfalg import (
    SurfalgError,
    barycentric,
    border_vertices,
    cartan,
    dim,
    double_star,
    envelope,
    export_dot,
    from_brauer,
    green_walks,
    is_singular_tetrahedral,
    is_triangulation_quiver,
    iso,
    orbits,
    random_quiver,
    reduce,
    relations,
    relations_text,
    sharp,
    star,
    surface_report,
    to_brauer,
    validate_brauer,
    validate_quiver,
)

__all__ = [
    "SurfalgError",
    "barycentric",
    "border_vertices",
    "cartan",
    "dim",
    "double_star",
    "envelope",
    "export_dot",
    "from_brauer",
    "green_walks",
    "is_singular_tetrahedral",
    "is_triangulation_quiver",
    "iso",
    "orbits",
    "random_quiver",
    "reduce",
    "relations",
    "relations_text",
    "sharp",
    "star",
    "surface_report",
    "to_brauer",
    "validate_brauer",
    "validate_quiver",
]
