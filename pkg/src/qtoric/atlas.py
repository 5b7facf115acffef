"""Combinatorial atlas of the quasitoric space and its text serialization.

Charts are indexed by vertices, strata by faces.  Transition maps between
charts are not modeled; every pair of charts overlaps in the dense stratum.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from .combinatorics import MorseData
from .errors import InvariantError
from .polytope import FaceLattice, PolytopeSpec, Vertex, format_index_set, format_spec, parse_spec
from .quasilattice import GroupStructure, gamma_generators, gamma_structure

if TYPE_CHECKING:
    from .pipeline import Analysis


@dataclass(frozen=True)
class Stratum:
    face: frozenset[int]
    zero_coords: frozenset[int]
    free_coords: frozenset[int]
    dim: int


def strata(lattice: FaceLattice, d: int) -> list[Stratum]:
    """One stratum ``C^F x (C*)^{F^c}`` per face, the dense one (empty F) first."""
    everything = frozenset(range(1, d + 1))
    return [
        Stratum(f.active, f.active, everything - f.active, f.dim)
        for f in sorted(lattice.faces.values(), key=lambda f: (len(f.active), sorted(f.active)))
    ]


@dataclass(frozen=True)
class Chart:
    vertex: frozenset[int]
    model_dimension: int
    group: GroupStructure
    strata: tuple[frozenset[int], ...]  # faces whose closure contains the vertex

    @property
    def anchor(self) -> str:
        """Coordinates set to 1 by the chart map (those off the vertex)."""
        return "off " + format_index_set(self.vertex)


def charts(spec: PolytopeSpec, vertices: list[Vertex], lattice: FaceLattice | None = None) -> list[Chart]:
    out = []
    for v in vertices:
        group = gamma_structure(gamma_generators(spec, v))
        if lattice is not None:
            faces = tuple(sorted((s for s in lattice.faces if s <= v.active), key=lambda s: (len(s), sorted(s))))
        else:
            faces = (frozenset(),)
        out.append(Chart(v.active, spec.n, group, faces))
    return out


def orbit_census(lattice: FaceLattice) -> dict[int, int]:
    census = {r: 0 for r in range(lattice.n + 1)}
    for f in lattice.faces.values():
        census[f.dim] += 1
    return census


@dataclass(frozen=True)
class OverlapRecord:
    k: int
    face: frozenset[int]
    sphere_dim: int
    residual_block: frozenset[int]


def overlap_records(md: MorseData) -> list[OverlapRecord]:
    """Intersection of chart ``k`` with the union of the earlier ones, ``k >= 2``.

    It retracts onto ``(C^F minus 0)``, a sphere of real dimension ``2|F| - 1``;
    the remaining coordinates of the vertex form a contractible factor.
    """
    recs = []
    for k, mv in enumerate(md.order, start=1):
        if k == 1:
            continue
        if mv.index == 0 or len(mv.face) != mv.index:
            raise InvariantError(f"malformed Morse data at step {k}")
        recs.append(OverlapRecord(k, mv.face, 2 * mv.index - 1, mv.active - mv.face))
    return recs


# -- document ---------------------------------------------------------------

SECTIONS = ("spec", "fvector", "hvector", "rational", "charts", "strata", "morse", "overlaps", "betti")


def _ix(s) -> str:
    return format_index_set(s) or "-"


def _gens(group: GroupStructure) -> str:
    parts = []
    for g in group.generators:
        parts.append(f"{g.label}:(" + ",".join(str(c) for c in g.coords) + ")")
    return " ".join(parts) or "-"


def emit_atlas(an: "Analysis") -> str:
    """Line-oriented atlas document with a fixed section and key order."""
    spec = an.spec
    lines = ["[spec]"]
    lines += format_spec(spec).rstrip("\n").split("\n")
    lines += ["", "[fvector]", " ".join(map(str, an.f))]
    lines += ["", "[hvector]", " ".join(map(str, an.h))]
    lines += ["", "[rational]", f"{'true' if an.rational else 'false'} zrank={an.zrank} n={spec.n}"]
    lines += ["", "[charts]"]
    for c in an.charts:
        g = c.group
        order = g.order if g.order is not None else "inf"
        factors = ",".join(map(str, g.invariant_factors)) or "-"
        lines.append(
            f"vertex={_ix(c.vertex)} kind={g.kind} order={order} free_rank={g.free_rank} "
            f"factors={factors} gens={_gens(g)}"
        )
    lines += ["", "[strata]"]
    for s in an.strata:
        lines.append(f"face={_ix(s.face)} dim={s.dim} zero={_ix(s.zero_coords)} free={_ix(s.free_coords)}")
    lines += ["", "[morse]", f"seed={an.seed} direction=" + ",".join(map(str, an.morse.direction))]
    for k, mv in enumerate(an.morse.order, start=1):
        lines.append(
            f"k={k} vertex={_ix(mv.active)} height={mv.height} index={mv.index} face={_ix(mv.face)}"
        )
    lines += ["", "[overlaps]"]
    for r in an.overlaps:
        lines.append(f"k={r.k} face={_ix(r.face)} sphere_dim={r.sphere_dim} residual={_ix(r.residual_block)}")
    lines += ["", "[betti]", " ".join(map(str, an.betti))]
    return "\n".join(lines) + "\n"


def read_atlas_sections(text: str) -> dict[str, list[str]]:
    sections: dict[str, list[str]] = {}
    current = None
    for line in text.splitlines():
        if line.startswith("[") and line.endswith("]"):
            current = line[1:-1]
            sections[current] = []
        elif current is not None and line.strip():
            sections[current].append(line)
    return sections


def spec_from_atlas(text: str) -> PolytopeSpec:
    """Re-parse the spec echoed in an atlas document."""
    body = read_atlas_sections(text)["spec"]
    name = body[0][2:].strip() if body and body[0].startswith("# ") else None
    return parse_spec("\n".join(body), name=name)
