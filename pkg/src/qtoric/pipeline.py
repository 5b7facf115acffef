"""End-to-end analysis of one polytope spec."""

from __future__ import annotations

from dataclasses import dataclass

from .atlas import Chart, OverlapRecord, Stratum, charts, overlap_records, strata
from .cohomology import BettiVector, FiltrationState, betti_from_h, mv_filtration
from .combinatorics import HVector, MorseData, dehn_sommerville, generic_direction, h_from_f, h_from_morse, morse_data
from .errors import InvariantError
from .polytope import FVector, Polytope, PolytopeSpec
from .quasilattice import Quasilattice, is_rational


@dataclass
class Analysis:
    spec: PolytopeSpec
    polytope: Polytope
    seed: int
    f: FVector
    h: HVector
    h_morse: HVector
    rational: bool
    zrank: int
    charts: list[Chart]
    strata: list[Stratum]
    morse: MorseData
    overlaps: list[OverlapRecord]
    betti: BettiVector
    betti_mv: BettiVector
    trace: list[FiltrationState]

    @property
    def agree(self) -> bool:
        return self.h == self.h_morse and self.betti == self.betti_mv


def analyze(spec: PolytopeSpec, seed: int = 0) -> Analysis:
    poly = Polytope.from_spec(spec)
    f = poly.f_vector()
    h = h_from_f(f)
    x0 = generic_direction(poly.vertices, seed, spec.n)
    md = morse_data(poly.lattice, x0)
    q = Quasilattice.from_spec(spec)
    betti_mv, trace = mv_filtration(md)
    return Analysis(
        spec=spec,
        polytope=poly,
        seed=seed,
        f=f,
        h=h,
        h_morse=h_from_morse(md),
        rational=is_rational(q),
        zrank=q.zrank,
        charts=charts(spec, poly.vertices, poly.lattice),
        strata=strata(poly.lattice, spec.d),
        morse=md,
        overlaps=overlap_records(md),
        betti=betti_from_h(h),
        betti_mv=betti_mv,
        trace=trace,
    )


def check_invariants(an: Analysis, directions: int = 100) -> list[str]:
    """Every cross-check the pipeline knows; returns failure messages."""
    fails = []
    n = an.spec.n
    f, h = an.f, an.h
    if h != an.h_morse:
        fails.append(f"h-vector mismatch: formula {list(h)} vs Morse {list(an.h_morse)}")
    if an.betti != an.betti_mv:
        fails.append(f"Betti mismatch: {list(an.betti)} vs filtration {list(an.betti_mv)}")
    if not dehn_sommerville(h):
        fails.append(f"Dehn-Sommerville fails for h={list(h)}")
    if h[0] != 1 or h[n] != 1:
        fails.append("h_0 and h_n must equal 1")
    if h[1] != f[n - 1] - n * f[n]:
        fails.append("h_1 != f_{n-1} - n f_n")
    if sum(h) != f[0]:
        fails.append("sum of h differs from f_0")
    if len(an.charts) != f[0]:
        fails.append("chart count differs from f_0")
    if len(an.strata) != sum(f):
        fails.append("stratum count differs from the number of faces")
    if any(frozenset() not in c.strata for c in an.charts):
        fails.append("dense stratum missing from a chart")
    if any(r.sphere_dim % 2 == 0 or r.sphere_dim > 2 * n - 1 for r in an.overlaps):
        fails.append("overlap sphere dimension out of range")
    lat, verts = an.polytope.lattice, an.polytope.vertices
    for s in range(1, directions):
        md = morse_data(lat, generic_direction(verts, an.seed + s, n))
        if h_from_morse(md) != h:
            fails.append(f"direction seed {an.seed + s} gives h={md.histogram()}")
    return fails


def require(an: Analysis, directions: int = 100) -> None:
    fails = check_invariants(an, directions)
    if fails:
        raise InvariantError("; ".join(fails))
