"""Simple polytopes given by halfspaces ``<mu, X_j> >= lambda_j``.

Facets are numbered 1..d in the order they appear in the spec; that
numbering is the index set every other module uses (face index sets,
chart coordinates, strata).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Optional, Sequence

from .errors import (
    DegenerateSpecError,
    EmptyPolytopeError,
    InvariantError,
    NotSimpleError,
    SpecSyntaxError,
    UnboundedPolytopeError,
)
from .exactnum import RATIONAL, FieldSpec, Scalar, ScalarSyntaxError, scalar_format, scalar_parse
from .linalg import dot, rank, nullspace, solve

Vector = tuple[Scalar, ...]


def format_index_set(s: Iterable[int]) -> str:
    return ",".join(str(i) for i in sorted(s))


def parse_index_set(text: str) -> frozenset[int]:
    text = text.strip()
    if text in ("", "-"):
        return frozenset()
    return frozenset(int(t) for t in text.split(","))


def format_point(coords: Sequence[Scalar]) -> str:
    return "(" + ",".join(scalar_format(c) for c in coords) + ")"


@dataclass(frozen=True)
class PolytopeSpec:
    n: int
    field: FieldSpec
    halfspaces: tuple[tuple[Vector, Scalar], ...]
    name: Optional[str] = None
    extra_generators: tuple[Vector, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("dimension must be positive")
        for j, (x, _) in enumerate(self.halfspaces, 1):
            if len(x) != self.n:
                raise ValueError(f"facet {j}: normal has {len(x)} entries, expected {self.n}")
            if not any(x):
                raise ValueError(f"facet {j}: zero normal")
        for g in self.extra_generators:
            if len(g) != self.n:
                raise ValueError(f"qgen has {len(g)} entries, expected {self.n}")

    @property
    def d(self) -> int:
        return len(self.halfspaces)

    @property
    def normals(self) -> list[Vector]:
        return [x for x, _ in self.halfspaces]

    @property
    def offsets(self) -> list[Scalar]:
        return [lam for _, lam in self.halfspaces]

    def normal(self, j: int) -> Vector:
        """Normal X_j, 1-based."""
        return self.halfspaces[j - 1][0]

    @classmethod
    def build(cls, n, halfspaces, d=None, name=None, extra_generators=()):
        """Convenience constructor from strings/ints/Fractions."""
        fs = FieldSpec(d)

        def conv(v):
            if isinstance(v, Scalar):
                return Scalar(v.a, v.b, fs)
            if isinstance(v, str):
                return scalar_parse(v, fs)
            return Scalar(Fraction(v), 0, fs)

        hs = tuple((tuple(conv(c) for c in x), conv(lam)) for x, lam in halfspaces)
        extra = tuple(tuple(conv(c) for c in g) for g in extra_generators)
        return cls(n, fs, hs, name, extra)

    def with_halfspaces(self, halfspaces, name=None) -> "PolytopeSpec":
        return PolytopeSpec(self.n, self.field, tuple(halfspaces), name or self.name, self.extra_generators)


# -- spec files -------------------------------------------------------------


def _scalars(tokens, fs, lineno):
    out = []
    for t in tokens:
        try:
            out.append(scalar_parse(t, fs))
        except ScalarSyntaxError as e:
            raise SpecSyntaxError(str(e), lineno) from None
    return tuple(out)


def parse_spec(text: str, name: Optional[str] = None) -> PolytopeSpec:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line.split()))
    if not lines:
        raise SpecSyntaxError("empty spec")

    lineno, toks = lines[0]
    if toks[0] != "dim" or len(toks) != 2 or not toks[1].isdigit() or int(toks[1]) < 1:
        raise SpecSyntaxError("first line must be 'dim <n>' with n >= 1", lineno)
    n = int(toks[1])
    fs = RATIONAL
    rest = lines[1:]
    if rest and rest[0][1][0] == "sqrt":
        lineno, toks = rest[0]
        if len(toks) != 2 or not toks[1].isdigit():
            raise SpecSyntaxError("expected 'sqrt <d>'", lineno)
        try:
            fs = FieldSpec(int(toks[1]))
        except ValueError as e:
            raise SpecSyntaxError(str(e), lineno) from None
        rest = rest[1:]

    halfspaces = []
    qgens = []
    for lineno, toks in rest:
        kw = toks[0]
        if kw == "facet":
            if qgens:
                raise SpecSyntaxError("facet lines must precede qgen lines", lineno)
            if "|" not in toks:
                raise SpecSyntaxError("facet line needs '|' before the offset", lineno)
            bar = toks.index("|")
            normal, offset = toks[1:bar], toks[bar + 1:]
            if len(normal) != n or len(offset) != 1:
                raise SpecSyntaxError(f"facet needs {n} normal entries and one offset", lineno)
            x = _scalars(normal, fs, lineno)
            if not any(x):
                raise SpecSyntaxError("zero facet normal", lineno)
            halfspaces.append((x, _scalars(offset, fs, lineno)[0]))
        elif kw == "qgen":
            if len(toks) != n + 1:
                raise SpecSyntaxError(f"qgen needs {n} entries", lineno)
            qgens.append(_scalars(toks[1:], fs, lineno))
        else:
            raise SpecSyntaxError(f"unknown keyword {kw!r}", lineno)
    if not halfspaces:
        raise SpecSyntaxError("no facets")
    return PolytopeSpec(n, fs, tuple(halfspaces), name, tuple(qgens))


def load_spec(path) -> PolytopeSpec:
    path = Path(path)
    return parse_spec(path.read_text(encoding="utf-8"), name=path.stem)


def format_spec(spec: PolytopeSpec) -> str:
    out = []
    if spec.name:
        out.append(f"# {spec.name}")
    out.append(f"dim {spec.n}")
    if spec.field.d is not None:
        out.append(f"sqrt {spec.field.d}")
    for x, lam in spec.halfspaces:
        out.append("facet " + " ".join(scalar_format(c) for c in x) + " | " + scalar_format(lam))
    for g in spec.extra_generators:
        out.append("qgen " + " ".join(scalar_format(c) for c in g))
    return "\n".join(out) + "\n"


# -- vertices ---------------------------------------------------------------


@dataclass(frozen=True)
class Vertex:
    coords: Vector
    active: frozenset[int]

    def __str__(self):
        return format_point(self.coords)


def _check_spanning(spec: PolytopeSpec) -> None:
    if rank([list(x) for x in spec.normals]) < spec.n:
        raise DegenerateSpecError("facet normals do not span; no invertible n-subset")


def recession_directions(spec: PolytopeSpec) -> list[Vector]:
    """Nonzero directions y with ``<y, X_j> >= 0`` for every facet (empty iff bounded).

    Extreme rays of the recession cone are tight on n-1 independent facets,
    so testing the null direction of every (n-1)-subset, both orientations,
    is exhaustive once the normals span.
    """
    n = spec.n
    zero, one = Scalar(0, 0, spec.field), Scalar(1, 0, spec.field)
    normals = spec.normals
    found = []
    for subset in itertools.combinations(range(spec.d), n - 1):
        if n == 1:
            cands = [[one]]
        else:
            rows = [list(normals[j]) for j in subset]
            cands = nullspace(rows, zero, one)
            if len(cands) != 1:
                continue
        y = cands[0]
        for s in (y, [-c for c in y]):
            if all(dot(x, s).sign() >= 0 for x in normals):
                found.append(tuple(s))
    return found


def enumerate_vertices(spec: PolytopeSpec) -> list[Vertex]:
    """All vertices, by exact solves over every n-subset of facets.

    Solutions tight on more than n facets are merged into one vertex whose
    active set is the union.  Vertices are returned sorted by active set.
    """
    _check_spanning(spec)
    if recession_directions(spec):
        raise UnboundedPolytopeError("polytope is unbounded")
    normals, offsets = spec.normals, spec.offsets
    points: dict[Vector, frozenset[int]] = {}
    for subset in itertools.combinations(range(spec.d), spec.n):
        sol = solve([list(normals[j]) for j in subset], [offsets[j] for j in subset])
        if sol is None:
            continue
        mu = tuple(sol)
        if mu in points:
            continue
        active = []
        for j in range(spec.d):
            s = (dot(mu, normals[j]) - offsets[j]).sign()
            if s < 0:
                break
            if s == 0:
                active.append(j + 1)
        else:
            points[mu] = frozenset(active)
    if not points:
        raise EmptyPolytopeError("polytope is empty")
    verts = [Vertex(mu, act) for mu, act in points.items()]
    verts.sort(key=lambda v: sorted(v.active))
    return verts


def _affine_rank(points: Sequence[Vector]) -> int:
    if len(points) <= 1:
        return 0
    base = points[0]
    return rank([[a - b for a, b in zip(p, base)] for p in points[1:]])


@dataclass
class SimplicityReport:
    simple: bool
    bounded: bool = True
    full_dimensional: bool = True
    nonsimple_vertices: list[Vertex] = field(default_factory=list)
    redundant_facets: list[int] = field(default_factory=list)
    problems: list[str] = field(default_factory=list)

    def __bool__(self):
        return self.simple


def _duplicates(spec: PolytopeSpec) -> dict[int, int]:
    """Map facet index -> earlier facet index describing the same halfspace."""
    dup = {}
    for i in range(spec.d):
        xi, li = spec.halfspaces[i]
        for j in range(i + 1, spec.d):
            if j + 1 in dup:
                continue
            xj, lj = spec.halfspaces[j]
            k = next(t for t in range(spec.n) if xi[t])
            if not xj[k]:
                continue
            c = xj[k] / xi[k]
            if c.sign() > 0 and all(b == c * a for a, b in zip(xi, xj)) and lj == c * li:
                dup[j + 1] = i + 1
    return dup


def check_simple(spec: PolytopeSpec, vertices: Sequence[Vertex]) -> SimplicityReport:
    rep = SimplicityReport(simple=True)
    if recession_directions(spec):
        rep.bounded = False
        rep.problems.append("polytope is unbounded")
    if _affine_rank([v.coords for v in vertices]) < spec.n:
        rep.full_dimensional = False
        rep.problems.append("vertices do not affinely span the ambient space")
    for v in vertices:
        if len(v.active) != spec.n:
            rep.nonsimple_vertices.append(v)
            rep.problems.append(
                f"vertex {v} lies on {len(v.active)} facets; polytope not simple"
            )
    dup = _duplicates(spec)
    for j in range(1, spec.d + 1):
        if j in dup:
            rep.redundant_facets.append(j)
            rep.problems.append(f"facet {j} duplicates facet {dup[j]}; redundant")
            continue
        tight = [v.coords for v in vertices if j in v.active]
        if not tight:
            rep.redundant_facets.append(j)
            rep.problems.append(f"facet {j} is never tight; redundant")
        elif _affine_rank(tight) < spec.n - 1:
            rep.redundant_facets.append(j)
            rep.problems.append(f"facet {j} touches the polytope in a lower-dimensional face; redundant")
    rep.simple = not rep.problems
    return rep


# -- face lattice -----------------------------------------------------------


@dataclass(frozen=True)
class Face:
    active: frozenset[int]
    dim: int
    vertices: frozenset[int]  # positions in the lattice's vertex list


@dataclass
class FaceLattice:
    n: int
    vertices: list[Vertex]
    faces: dict[frozenset[int], Face]
    covers: dict[frozenset[int], frozenset[frozenset[int]]]

    def faces_of_dim(self, p: int) -> list[Face]:
        return sorted(
            (f for f in self.faces.values() if f.dim == p),
            key=lambda f: sorted(f.active),
        )

    def neighbors(self, v: int) -> dict[int, int]:
        """For vertex ``v``: facet index dropped along an edge -> other endpoint."""
        out = {}
        act = self.vertices[v].active
        for j in act:
            edge = self.faces[act - {j}]
            (w,) = edge.vertices - {v}
            out[j] = w
        return out

    def all_faces(self) -> list[Face]:
        return sorted(self.faces.values(), key=lambda f: (f.dim, sorted(f.active)))


def build_face_lattice(spec: PolytopeSpec, vertices: Sequence[Vertex]) -> FaceLattice:
    n = spec.n
    verts = list(vertices)
    faces: dict[frozenset[int], Face] = {}
    for v in verts:
        act = sorted(v.active)
        for r in range(len(act) + 1):
            for sub in itertools.combinations(act, r):
                s = frozenset(sub)
                if s in faces:
                    continue
                members = frozenset(i for i, w in enumerate(verts) if s <= w.active)
                faces[s] = Face(s, n - len(s), members)

    for s, f in faces.items():
        common = frozenset.intersection(*(verts[i].active for i in f.vertices))
        if common != s:
            raise InvariantError(f"face {format_index_set(s)} has common facet set {format_index_set(common)}")

    covers = {
        s: frozenset(t for t in faces if len(t) == len(s) + 1 and s < t) for s in faces
    }
    lat = FaceLattice(n, verts, faces, covers)

    tops = [f for f in faces.values() if f.dim == n]
    if len(tops) != 1 or tops[0].active:
        raise InvariantError("face lattice must have a unique n-face")
    for i, v in enumerate(verts):
        edges = [faces.get(v.active - {j}) for j in v.active]
        if len(edges) != n or any(e is None or len(e.vertices) != 2 for e in edges):
            raise InvariantError(f"vertex {v} does not have {n} edges")
    return lat


@dataclass(frozen=True)
class FVector:
    entries: tuple[int, ...]

    def __post_init__(self):
        if not self.entries or self.entries[-1] != 1:
            raise ValueError("f-vector must end with f_n = 1")
        if any(x < 0 for x in self.entries):
            raise ValueError("f-vector entries must be nonnegative")

    @property
    def n(self) -> int:
        return len(self.entries) - 1

    def __getitem__(self, j):
        return self.entries[j]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)


def f_vector(lattice: FaceLattice) -> FVector:
    counts = [0] * (lattice.n + 1)
    for f in lattice.faces.values():
        counts[f.dim] += 1
    return FVector(tuple(counts))


@dataclass
class Polytope:
    """A validated simple polytope with its vertices and face lattice."""

    spec: PolytopeSpec
    vertices: list[Vertex]
    lattice: FaceLattice

    @classmethod
    def from_spec(cls, spec: PolytopeSpec) -> "Polytope":
        verts = enumerate_vertices(spec)
        report = check_simple(spec, verts)
        if not report.simple:
            raise NotSimpleError(report)
        return cls(spec, verts, build_face_lattice(spec, verts))

    @property
    def n(self) -> int:
        return self.spec.n

    def f_vector(self) -> FVector:
        return f_vector(self.lattice)

    def vertex_index(self, active: frozenset[int]) -> int:
        for i, v in enumerate(self.vertices):
            if v.active == active:
                return i
        raise KeyError(f"no vertex with active set {format_index_set(active)}")
