"""Quasilattices, the kernel of the projection ``e_j -> X_j``, and chart groups.

At a vertex with facet set ``I``, the projection restricted to the
coordinates in ``I`` is the invertible matrix ``A`` whose columns are the
``X_i`` (``i`` in ``I``).  The chart group is then ``A^{-1}(Q) / Z^I``, which
is generated by the classes of ``A^{-1} X_j`` mod 1 for the remaining facets
(and for any extra quasilattice generators).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm, prod
from typing import Optional, Sequence

from .errors import DegenerateSpecError, GeometryError
from .exactnum import FieldSpec, Scalar
from .linalg import nullspace, rank, solve, transpose
from .polytope import PolytopeSpec, Vertex, Vector, format_index_set
from .smith import smith_diagonal


def _embed(vec: Sequence[Scalar], fs: FieldSpec) -> list[Fraction]:
    """Q-coordinates of a vector of scalars: all 1-parts, then all sqrt-parts."""
    if fs.d is None:
        return [x.a for x in vec]
    return [x.a for x in vec] + [x.b for x in vec]


def zrank(vectors: Sequence[Sequence[Scalar]], fs: FieldSpec) -> int:
    """Z-rank of the Z-module generated by ``vectors``."""
    if not vectors:
        return 0
    return rank([_embed(v, fs) for v in vectors])


@dataclass(frozen=True)
class Quasilattice:
    n: int
    field: FieldSpec
    generators: tuple[Vector, ...]

    @classmethod
    def from_spec(cls, spec: PolytopeSpec) -> "Quasilattice":
        """Default choice: the Z-span of the facet normals plus any ``qgen`` lines."""
        return cls(spec.n, spec.field, tuple(spec.normals) + tuple(spec.extra_generators))

    def spans(self) -> bool:
        return rank([list(g) for g in self.generators]) == self.n

    @property
    def zrank(self) -> int:
        return zrank(self.generators, self.field)


def quasilattice_zrank(q: Quasilattice) -> int:
    return q.zrank


def is_rational(q: Quasilattice) -> bool:
    return q.zrank == q.n


@dataclass(frozen=True)
class KernelBasis:
    vectors: tuple[tuple[Scalar, ...], ...]


def kernel_basis(spec: PolytopeSpec) -> KernelBasis:
    """Basis of ``Ker(pi)``, ``pi(e_j) = X_j``, with ``d - n`` vectors."""
    m = transpose([list(x) for x in spec.normals])
    if rank(m) < spec.n:
        raise DegenerateSpecError("facet normals do not span")
    zero, one = Scalar(0, 0, spec.field), Scalar(1, 0, spec.field)
    return KernelBasis(tuple(tuple(v) for v in nullspace(m, zero, one)))


# -- torus elements and chart groups ----------------------------------------


@dataclass(frozen=True)
class TorusElement:
    """Point of a torus ``R^m / Z^m``, stored by its representative in ``[0,1)^m``."""

    coords: tuple[Scalar, ...]
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(c.frac() for c in self.coords))

    def __eq__(self, other):
        if not isinstance(other, TorusElement):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    @property
    def is_torsion(self) -> bool:
        return all(c.is_rational for c in self.coords)

    def __add__(self, other: "TorusElement") -> "TorusElement":
        return TorusElement(tuple(a + b for a, b in zip(self.coords, other.coords)))

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)


def vertex_matrix(spec: PolytopeSpec, active: frozenset[int]) -> list[list[Scalar]]:
    """``A`` with columns ``X_i`` for ``i`` in ``active`` (ascending)."""
    cols = [spec.normal(i) for i in sorted(active)]
    return transpose([list(c) for c in cols])


def gamma_lifts(spec: PolytopeSpec, vertex: Vertex | frozenset[int]) -> dict[str, list[Scalar]]:
    """``A^{-1} g`` for every quasilattice generator ``g`` not among the vertex's normals."""
    active = vertex.active if isinstance(vertex, Vertex) else frozenset(vertex)
    if len(active) != spec.n:
        raise GeometryError(f"vertex {format_index_set(active)} is not simple")
    a = vertex_matrix(spec, active)
    lifts = {}
    extra = [(f"q{k}", g) for k, g in enumerate(spec.extra_generators, 1)]
    for label, g in [(str(j), spec.normal(j)) for j in range(1, spec.d + 1) if j not in active] + extra:
        c = solve(a, list(g))
        if c is None:
            raise GeometryError(f"singular vertex matrix at {format_index_set(active)}")
        lifts[label] = c
    return lifts


def gamma_generators(spec: PolytopeSpec, vertex: Vertex | frozenset[int]) -> list[TorusElement]:
    """Generators of the chart group, one per facet off the vertex (zeros kept)."""
    return [TorusElement(tuple(c), label) for label, c in gamma_lifts(spec, vertex).items()]


@dataclass(frozen=True)
class GroupStructure:
    kind: str  # "trivial" | "finite" | "infinite"
    order: Optional[int]
    free_rank: int = 0
    invariant_factors: tuple[int, ...] = ()
    generators: tuple[TorusElement, ...] = field(default=(), compare=False)

    def describe(self) -> str:
        if self.kind == "trivial":
            return "trivial"
        if self.kind == "finite":
            return " x ".join(f"Z{q}" for q in self.invariant_factors)
        return f"infinite, free rank {self.free_rank}"


def gamma_structure(gens: Sequence[TorusElement]) -> GroupStructure:
    """Isomorphism type of the subgroup of a torus generated by ``gens``.

    Torsion case: with ``D`` clearing all denominators, the Smith diagonal
    ``s_i`` of the integer lattice spanned by ``D*Z^m`` and ``D*g`` gives the
    quotient by ``Z^m`` as the sum of ``Z/(D/s_i)``.  Otherwise the group has
    elements of infinite order and only its free rank is computed.
    """
    gens = tuple(gens)
    nonzero = [g for g in gens if not g.is_zero]
    if not nonzero:
        return GroupStructure("trivial", 1, 0, (), gens)
    m = len(nonzero[0].coords)
    if all(g.is_torsion for g in nonzero):
        den = lcm(*(c.a.denominator for g in nonzero for c in g.coords))
        rows = [[den if i == k else 0 for i in range(m)] for k in range(m)]
        rows += [[int(c.a * den) for c in g.coords] for g in nonzero]
        diag = smith_diagonal(rows)
        assert len(diag) == m and all(den % s == 0 for s in diag)
        factors = tuple(sorted(den // s for s in diag if den // s != 1))
        order = prod(factors)
        return GroupStructure("trivial" if order == 1 else "finite", order, 0, factors, gens)
    fs = next(c.field for g in nonzero for c in g.coords if not c.is_rational)
    unit = [tuple(Scalar(1 if i == k else 0, 0, fs) for i in range(m)) for k in range(m)]
    free = zrank(unit + [g.coords for g in nonzero], fs) - m
    return GroupStructure("infinite", None, free, (), gens)
