import pytest

from qtoric.atlas import (
    SECTIONS,
    charts,
    emit_atlas,
    orbit_census,
    overlap_records,
    read_atlas_sections,
    spec_from_atlas,
    strata,
)
from qtoric.combinatorics import morse_data
from qtoric.fixtures import fixture
from qtoric.pipeline import analyze

from conftest import polytope


@pytest.mark.parametrize("name, count", [("simplex-2", 7), ("cube-2", 9), ("cube-3", 27)])
def test_strata_counts(name, count):
    p = polytope(name)
    st = strata(p.lattice, p.spec.d)
    assert len(st) == count
    assert st[0].face == frozenset() and st[0].free_coords == frozenset(range(1, p.spec.d + 1))
    for s in st:
        assert s.zero_coords | s.free_coords == frozenset(range(1, p.spec.d + 1))
        assert not s.zero_coords & s.free_coords


def test_charts_cp2_and_weighted():
    p = polytope("cp2-triangle")
    cs = charts(p.spec, p.vertices, p.lattice)
    assert len(cs) == 3 and all(c.group.kind == "trivial" for c in cs)
    assert all(c.model_dimension == 2 for c in cs)
    p = polytope("weighted-triangle-2")
    kinds = sorted(c.group.describe() for c in charts(p.spec, p.vertices, p.lattice))
    assert kinds == ["Z2", "trivial", "trivial"]


def test_charts_golden():
    p = polytope("golden-triangle")
    cs = charts(p.spec, p.vertices, p.lattice)
    assert len(cs) == 3
    assert any(c.group.kind == "infinite" for c in cs)


def test_every_chart_contains_dense_stratum(simple_name):
    p = polytope(simple_name)
    cs = charts(p.spec, p.vertices, p.lattice)
    assert len(cs) == p.f_vector()[0]
    for c in cs:
        assert frozenset() in c.strata
        assert len(c.strata) == 2 ** p.n


@pytest.mark.parametrize(
    "name, census",
    [
        ("cube-3", {0: 8, 1: 12, 2: 6, 3: 1}),
        ("simplex-2", {0: 3, 1: 3, 2: 1}),
        ("pentagon", {0: 5, 1: 5, 2: 1}),
    ],
)
def test_orbit_census(name, census):
    assert orbit_census(polytope(name).lattice) == census


def test_square_overlaps():
    p = polytope("cube-2")
    recs = overlap_records(morse_data(p.lattice, (1, 2)))
    assert [r.k for r in recs] == [2, 3, 4]
    assert [r.sphere_dim for r in recs] == [1, 1, 3]
    assert recs[-1].residual_block == frozenset()


def test_overlap_ranges(simple_name):
    an = analyze(fixture(simple_name), seed=2)
    for r in an.overlaps:
        assert r.sphere_dim % 2 == 1 and 1 <= r.sphere_dim <= 2 * an.spec.n - 1
        assert r.k >= 2


def test_emit_atlas_golden():
    doc = emit_atlas(analyze(fixture("golden-triangle"), seed=7))
    sec = read_atlas_sections(doc)
    assert tuple(sec) == SECTIONS
    assert sec["rational"][0].startswith("false")
    assert any("kind=infinite" in line for line in sec["charts"])
    assert sec["betti"] == ["1 0 1 0 1"]


def test_emit_atlas_cube():
    sec = read_atlas_sections(emit_atlas(analyze(fixture("cube-3"), seed=0)))
    assert len(sec["charts"]) == 8
    assert all("kind=trivial" in line for line in sec["charts"])
    assert sec["fvector"] == ["8 12 6 1"]
    assert len(sec["strata"]) == 27


def test_emit_is_deterministic_and_roundtrips(simple_name):
    an = analyze(fixture(simple_name), seed=4)
    doc = emit_atlas(an)
    assert emit_atlas(analyze(fixture(simple_name), seed=4)) == doc
    spec = spec_from_atlas(doc)
    assert spec == fixture(simple_name)
    assert emit_atlas(analyze(spec, seed=4)) == doc
