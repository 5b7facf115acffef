"""h-vectors of simple polytopes, from the f-vector and from a linear height.

The two routes are independent: :func:`h_from_f` is the binomial transform
of the face counts, :func:`h_from_morse` counts vertices by the number of
edges that descend from them along a generic direction.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import comb
from typing import Sequence

from .errors import InvariantError, NonGenericDirectionError
from .exactnum import Scalar
from .polytope import FaceLattice, FVector, Vertex

__all__ = [
    "HVector",
    "MorseVertex",
    "MorseData",
    "h_from_f",
    "is_generic",
    "generic_direction",
    "morse_data",
    "h_from_morse",
    "dehn_sommerville",
]


@dataclass(frozen=True)
class HVector:
    entries: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.entries) - 1

    def __getitem__(self, k):
        return self.entries[k]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)


def h_from_f(f: FVector) -> HVector:
    """``h_k = sum_{i<=k} (-1)^(k-i) C(n-i, n-k) f_{n-i}``."""
    n = f.n
    return HVector(tuple(
        sum((-1) ** (k - i) * comb(n - i, n - k) * f[n - i] for i in range(k + 1))
        for k in range(n + 1)
    ))


def dehn_sommerville(h: HVector) -> bool:
    e = h.entries
    return all(e[k] == e[len(e) - 1 - k] for k in range(len(e)))


# -- Morse-style indexing ---------------------------------------------------


def heights(vertices: Sequence[Vertex], direction: Sequence) -> list[Scalar]:
    return [sum((c * x for c, x in zip(v.coords, direction)), Scalar(0)) for v in vertices]


def is_generic(vertices: Sequence[Vertex], direction: Sequence) -> bool:
    """True when all vertex heights along ``direction`` are pairwise distinct.

    Distinct vertex values already force the height to be nonconstant on
    every edge, hence on every positive-dimensional face.
    """
    hs = heights(vertices, direction)
    return len(set(hs)) == len(hs)


def generic_direction(vertices: Sequence[Vertex], seed: int, n: int | None = None,
                      max_tries: int = 32) -> tuple[int, ...]:
    """Seeded integer direction with pairwise-distinct vertex heights.

    Coordinates are drawn uniformly from ``[-R, R]`` with ``R = 2**10``,
    doubling ``R`` after each rejected draw.
    """
    if not vertices:
        raise ValueError("no vertices")
    if n is None:
        n = len(vertices[0].coords)
    rng = random.Random(seed)
    r = 2 ** 10
    for _ in range(max_tries):
        cand = tuple(rng.randint(-r, r) for _ in range(n))
        if any(cand) and is_generic(vertices, cand):
            return cand
        r *= 2
    raise NonGenericDirectionError(f"no generic direction found (seed={seed}, budget={max_tries})")


@dataclass(frozen=True)
class MorseVertex:
    vertex: int  # position in the lattice's vertex list
    active: frozenset[int]
    height: Scalar
    index: int
    face: frozenset[int]  # facet set of the largest face having this vertex as its minimum

    @property
    def face_dim(self) -> int:
        return len(self.active) - len(self.face)


@dataclass(frozen=True)
class MorseData:
    n: int
    direction: tuple
    order: tuple[MorseVertex, ...]

    def indices(self) -> list[int]:
        return [m.index for m in self.order]

    def histogram(self) -> list[int]:
        hist = [0] * (self.n + 1)
        for m in self.order:
            hist[m.index] += 1
        return hist


def morse_data(lattice: FaceLattice, direction: Sequence) -> MorseData:
    """Sort vertices by height and classify their edges as up or down.

    The index of a vertex is its number of descending edges.  The facets
    kept by the descending edges cut out the face spanned by the ascending
    ones; that face is validated against the lattice and checked to have
    the vertex as its lowest point.
    """
    verts = lattice.vertices
    hs = heights(verts, direction)
    if len(set(hs)) != len(hs):
        raise NonGenericDirectionError("vertex heights collide; resample the direction")
    order = sorted(range(len(verts)), key=lambda i: hs[i])
    out = []
    for i in order:
        down = set()
        for j, w in lattice.neighbors(i).items():
            if hs[w] < hs[i]:
                down.add(j)
        face = frozenset(down)
        f = lattice.faces.get(face)
        if f is None:
            raise InvariantError(f"face {sorted(face)} at vertex {verts[i]} is not in the lattice")
        if any(hs[w] < hs[i] for w in f.vertices):
            raise InvariantError(f"vertex {verts[i]} is not the lowest point of its face")
        if lattice.n - f.dim != len(down):
            raise InvariantError("index disagrees with face dimension")
        out.append(MorseVertex(i, verts[i].active, hs[i], len(down), face))
    md = MorseData(lattice.n, tuple(direction), tuple(out))
    idx = md.indices()
    if idx[0] != 0 or idx[-1] != lattice.n:
        raise InvariantError("lowest vertex must have index 0 and highest index n")
    return md


def h_from_morse(md: MorseData) -> HVector:
    return HVector(tuple(md.histogram()))
