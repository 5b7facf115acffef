from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qtoric.exactnum import FieldSpec, Scalar
from qtoric.fixtures import fixture
from qtoric.linalg import matvec, solve
from qtoric.polytope import PolytopeSpec
from qtoric.quasilattice import (
    Quasilattice,
    TorusElement,
    gamma_generators,
    gamma_lifts,
    gamma_structure,
    is_rational,
    kernel_basis,
    quasilattice_zrank,
    vertex_matrix,
)

from conftest import SIMPLE_FIXTURES, polytope

F5 = FieldSpec(5)
PHI = Scalar(Fraction(1, 2), Fraction(1, 2), F5)


def multiples_order(g, bound=16):
    """Smallest k <= bound with k*g == 0 mod 1, by direct enumeration."""
    for k in range(1, bound + 1):
        if all((k * c).a.denominator == 1 and (k * c).b == 0 for c in g):
            return k
    return None


def closure_size(gens, bound=512):
    """Size of the subgroup of (Q/Z)^m generated by ``gens``, by breadth-first closure."""
    m = len(gens[0])
    zero = (Fraction(0),) * m
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple((a + b) % 1 for a, b in zip(x, g))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
        assert len(seen) <= bound
    return len(seen)


def test_kernel_examples():
    assert kernel_basis(fixture("cp2-triangle")).vectors == ((1, 1, 1),)
    assert kernel_basis(fixture("cube-2")).vectors == ((1, 0, 1, 0), (0, 1, 0, 1))
    assert kernel_basis(fixture("golden-triangle")).vectors == ((1, PHI, 1),)


def test_kernel_pairs_to_zero(simple_name):
    spec = fixture(simple_name)
    kb = kernel_basis(spec)
    assert len(kb.vectors) == spec.d - spec.n
    for v in kb.vectors:
        for i in range(spec.n):
            assert sum((v[j] * spec.normals[j][i] for j in range(spec.d)), Scalar(0)) == 0


@pytest.mark.parametrize(
    "name, zrank, rational",
    [
        ("cp2-triangle", 2, True),
        ("golden-triangle", 3, False),
        ("cube-2", 2, True),
        ("cube-3", 3, True),
        ("golden-quad", 3, False),
        ("weighted-triangle-3", 2, True),
    ],
)
def test_zrank(name, zrank, rational):
    q = Quasilattice.from_spec(fixture(name))
    assert q.spans()
    assert quasilattice_zrank(q) == zrank
    assert is_rational(q) is rational


def test_extra_generator_enlarges_quasilattice():
    spec = PolytopeSpec.build(2, fixture("cp2-triangle").halfspaces, extra_generators=[("1/2", 0)])
    assert is_rational(Quasilattice.from_spec(spec))
    gens = gamma_generators(spec, frozenset({1, 2}))
    g = gamma_structure(gens)
    assert g.kind == "finite" and g.order == 2


def test_weighted_triangle_generators():
    spec = fixture("weighted-triangle-2")
    (g,) = gamma_generators(spec, frozenset({1, 3}))
    assert g.label == "2"
    assert g.coords == (Fraction(1, 2), Fraction(1, 2))
    a = vertex_matrix(spec, frozenset({1, 3}))
    assert a == [[1, -1], [0, -2]]
    # A * (1/2, 1/2) = X_2 + (integer combination of the vertex normals)
    diff = [x - y for x, y in zip(matvec(a, list(g.coords)), spec.normal(2))]
    coeffs = solve(a, diff)
    assert all(c.is_rational and c.a.denominator == 1 for c in coeffs)


def test_cp2_trivial_generators():
    spec = fixture("cp2-triangle")
    for v in polytope("cp2-triangle").vertices:
        gens = gamma_generators(spec, v)
        assert all(g.is_zero for g in gens)
        assert gamma_structure(gens).kind == "trivial"


def test_golden_triangle_generator_irrational():
    spec = fixture("golden-triangle")
    (g,) = gamma_generators(spec, frozenset({1, 3}))
    inv_phi = 1 / PHI
    assert g.coords == ((-inv_phi).frac(), (-inv_phi).frac())
    # -1/phi and 1/phi generate the same cyclic subgroup
    assert TorusElement((inv_phi, inv_phi)) + g == TorusElement((Scalar(0), Scalar(0)))
    assert not g.is_torsion


def test_structure_examples():
    z = Scalar(0)
    assert gamma_structure([TorusElement((z, z))]).kind == "trivial"
    assert gamma_structure([TorusElement((z, z))]).order == 1
    half = TorusElement((Scalar(Fraction(1, 2)), Scalar(Fraction(1, 2))))
    s = gamma_structure([half])
    assert (s.kind, s.order, s.invariant_factors) == ("finite", 2, (2,))
    inv_phi = 1 / PHI
    s = gamma_structure([TorusElement((inv_phi, inv_phi))])
    assert s.kind == "infinite" and s.free_rank == 1 and s.order is None


def test_structure_invariant_factors():
    q = lambda x: Scalar(Fraction(x))
    gens = [TorusElement((q("1/2"), q(0))), TorusElement((q(0), q("1/4")))]
    s = gamma_structure(gens)
    assert s.invariant_factors == (2, 4) and s.order == 8
    s = gamma_structure([TorusElement((q("1/2"), q("1/3")))])
    assert s.invariant_factors == (6,)


torsion = st.fractions(min_value=0, max_value=1, max_denominator=6)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(torsion, torsion), min_size=1, max_size=3))
def test_order_matches_brute_force_closure(raw):
    gens = [TorusElement(tuple(Scalar(c) for c in g)) for g in raw]
    s = gamma_structure(gens)
    assert s.order == closure_size([tuple(c.a for c in g.coords) for g in gens])
    assert (s.kind == "trivial") == (s.order == 1)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(torsion, torsion), min_size=1, max_size=3), st.randoms())
def test_structure_invariant_under_permutation_and_zero(raw, rnd):
    gens = [TorusElement(tuple(Scalar(c) for c in g)) for g in raw]
    base = gamma_structure(gens)
    shuffled = list(gens) + [TorusElement((Scalar(0), Scalar(0)))]
    rnd.shuffle(shuffled)
    assert gamma_structure(shuffled) == base


def test_weighted_triangle_chart_orders_by_brute_force():
    for qv in (2, 3):
        spec = fixture(f"weighted-triangle-{qv}")
        orders = []
        for v in polytope(f"weighted-triangle-{qv}").vertices:
            gens = gamma_generators(spec, v)
            s = gamma_structure(gens)
            assert max(multiples_order(g.coords) for g in gens) == s.order
            orders.append(s.order)
        assert sorted(orders) == [1, 1, qv]


def test_lifts_represent_generators(simple_name):
    spec = fixture(simple_name)
    for v in polytope(simple_name).vertices:
        a = vertex_matrix(spec, v.active)
        for label, c in gamma_lifts(spec, v).items():
            target = spec.normal(int(label))
            assert matvec(a, c) == list(target)
        for g in gamma_generators(spec, v):
            # the reduced representative still maps to X_j modulo the Z-span of the vertex normals
            diff = [x - y for x, y in zip(matvec(a, list(g.coords)), spec.normal(int(g.label)))]
            coeffs = solve(a, diff)
            assert all(k.is_rational and k.a.denominator == 1 for k in coeffs)


@pytest.mark.parametrize("name", ["cp2-triangle", "cube-2", "cube-3", "cube-4", "simplex-3"])
def test_delzant_fixtures_have_trivial_groups(name):
    spec = fixture(name)
    for v in polytope(name).vertices:
        assert gamma_structure(gamma_generators(spec, v)).kind == "trivial"


RATIONAL_FIXTURES = [n for n in SIMPLE_FIXTURES if is_rational(Quasilattice.from_spec(fixture(n)))]


@pytest.mark.parametrize("name", RATIONAL_FIXTURES)
def test_rational_fixtures_have_finite_groups(name):
    spec = fixture(name)
    for v in polytope(name).vertices:
        assert gamma_structure(gamma_generators(spec, v)).order is not None


def test_golden_fixtures_have_infinite_groups():
    for name in ("golden-triangle", "golden-quad", "dodecahedron"):
        spec = fixture(name)
        kinds = {gamma_structure(gamma_generators(spec, v)).kind for v in polytope(name).vertices}
        assert "infinite" in kinds
