"""Smoke tests for the python bindings: a few known values per operation."""

import json

import pytest

import surfalg

MARKOV = json.dumps(
    {
        "format_version": "1",
        "vertices": ["1", "2", "3"],
        "arrows": [
            {"id": "alpha1", "source": "1", "target": "2"},
            {"id": "alpha2", "source": "2", "target": "3"},
            {"id": "alpha3", "source": "3", "target": "1"},
            {"id": "beta1", "source": "1", "target": "2"},
            {"id": "beta2", "source": "2", "target": "3"},
            {"id": "beta3", "source": "3", "target": "1"},
        ],
        "f": {
            "alpha1": "alpha2",
            "alpha2": "alpha3",
            "alpha3": "alpha1",
            "beta1": "beta2",
            "beta2": "beta3",
            "beta3": "beta1",
        },
        "weights": {"alpha1": 1},
    }
)

TWO_LOOPS = json.dumps(
    {
        "format_version": "1",
        "vertices": ["1"],
        "arrows": [
            {"id": "alpha", "source": "1", "target": "1"},
            {"id": "beta", "source": "1", "target": "1"},
        ],
        "f": {"alpha": "beta", "beta": "alpha"},
        "weights": {"alpha": 2, "beta": 3},
    }
)

LOOP_GRAPH = json.dumps(
    {
        "format_version": "1",
        "vertices": [{"id": "a", "multiplicity": 2, "cyclic_order": ["h1x", "h1y"]}],
        "edges": [{"id": "1", "half_edges": ["h1x", "h1y"]}],
    }
)


def test_validate_is_canonical():
    text = surfalg.validate_quiver(MARKOV)
    assert surfalg.validate_quiver(text) == text
    doc = json.loads(text)
    assert doc["vertices"] == ["1", "2", "3"]


def test_dim_and_orbits():
    assert surfalg.dim(MARKOV) == 36
    orbits = surfalg.orbits(MARKOV, "g")
    assert len(orbits) == 1
    assert len(orbits[0]) == 6
    assert len(surfalg.orbits(MARKOV, "f")) == 2
    assert surfalg.is_triangulation_quiver(MARKOV)


def test_star_and_round_trip():
    enlarged = surfalg.star(MARKOV)
    doc = json.loads(enlarged)
    assert len(doc["vertices"]) == 9
    assert len(doc["arrows"]) == 18
    components = surfalg.reduce(enlarged, ["1", "2", "3"])
    assert len(components) == 1
    assert surfalg.iso(MARKOV, components[0]) is not None
    assert surfalg.iso(MARKOV, TWO_LOOPS) is None


def test_surface_report():
    report = json.loads(surfalg.surface_report(MARKOV))
    assert report["euler_characteristic"] == 0
    assert report["genus"] == 1


def test_green_walks_and_border():
    assert len(surfalg.green_walks(MARKOV)) == 2
    assert surfalg.border_vertices(MARKOV) == []


def test_relations():
    lines = surfalg.relations_text(MARKOV, "biserial")
    assert len(lines) == 9
    assert "alpha1*alpha2 = 0" in lines
    weighted = surfalg.relations_text(MARKOV, "weighted")
    assert "alpha1*alpha2*beta3 = 0" in weighted
    pres = json.loads(surfalg.relations(MARKOV, "biserial"))
    assert pres["kind"] == "biserial"


def test_envelope():
    doc, keep = surfalg.envelope(TWO_LOOPS)
    assert keep == ["1"]
    parsed = json.loads(doc)
    assert len(parsed["vertices"]) == 9
    assert not surfalg.is_singular_tetrahedral(doc)


def test_brauer_conversions():
    quiver = surfalg.from_brauer(LOOP_GRAPH)
    assert surfalg.dim(quiver) == 8  # one orbit of length 2, weight 2
    back = surfalg.to_brauer(quiver)
    assert len(json.loads(back)["edges"]) == 1
    divided = json.loads(surfalg.barycentric(LOOP_GRAPH))
    assert len(divided["vertices"]) == 3
    assert len(divided["edges"]) == 3


def test_cartan():
    vertices, matrix = surfalg.cartan(MARKOV)
    assert vertices == ["1", "2", "3"]
    assert sum(sum(row) for row in matrix) == 36


def test_random_quiver_deterministic():
    a = surfalg.random_quiver(4, 11, max_weight=3)
    assert a == surfalg.random_quiver(4, 11, max_weight=3)
    assert a != surfalg.random_quiver(4, 12, max_weight=3)
    surfalg.validate_quiver(a)


def test_export_dot():
    dot = surfalg.export_dot(MARKOV)
    assert dot.startswith("digraph")
    assert surfalg.export_dot(LOOP_GRAPH).startswith("graph")


def test_errors_are_typed():
    with pytest.raises(surfalg.SurfalgError):
        surfalg.validate_quiver("{}")
    with pytest.raises(surfalg.SurfalgError):
        surfalg.relations(MARKOV, "border")  # no border loops here
