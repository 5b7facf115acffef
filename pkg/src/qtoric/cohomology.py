"""Betti numbers of the quasitoric space: closed form and filtration recurrence."""

from __future__ import annotations

from dataclasses import dataclass

from .combinatorics import HVector, MorseData
from .errors import InvariantError


@dataclass(frozen=True)
class BettiVector:
    entries: tuple[int, ...]

    def __post_init__(self):
        e = self.entries
        if len(e) % 2 != 1:
            raise ValueError("Betti vector must have length 2n+1")
        if any(b < 0 for b in e):
            raise ValueError("Betti numbers are nonnegative")
        if any(e[1::2]):
            raise ValueError("odd Betti numbers must vanish")
        if e[0] != 1 or e[-1] != 1:
            raise ValueError("b_0 and b_2n must both be 1")

    @property
    def n(self) -> int:
        return (len(self.entries) - 1) // 2

    @property
    def even(self) -> tuple[int, ...]:
        return self.entries[::2]

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __len__(self):
        return len(self.entries)


@dataclass(frozen=True)
class FiltrationState:
    """Even Betti numbers of the union of the first ``k`` charts."""

    k: int
    even: tuple[int, ...]


def betti_from_h(h: HVector) -> BettiVector:
    out = []
    for j, hj in enumerate(h):
        if j:
            out.append(0)
        out.append(hj)
    return BettiVector(tuple(out))


def mv_filtration(md: MorseData) -> tuple[BettiVector, list[FiltrationState]]:
    """Add charts in height order; each new chart adds one class in degree 2*index.

    The first chart is contractible and seeds ``b_0 = 1``.  Chart ``k`` meets
    the earlier union in something homotopic to a sphere of dimension
    ``2*index - 1``, which raises exactly ``b_{2*index}`` by one and leaves
    the odd groups zero.
    """
    if not md.order:
        raise InvariantError("no vertices")
    if md.order[0].index != 0:
        raise InvariantError("first vertex in the filtration must have index 0")
    even = [0] * (md.n + 1)
    even[0] = 1
    trace = [FiltrationState(1, tuple(even))]
    for k, mv in enumerate(md.order[1:], start=2):
        if mv.index == 0:
            raise InvariantError(f"vertex {k} in the filtration has index 0")
        even[mv.index] += 1
        trace.append(FiltrationState(k, tuple(even)))
    betti = []
    for j, b in enumerate(even):
        if j:
            betti.append(0)
        betti.append(b)
    return BettiVector(tuple(betti)), trace


def euler_characteristic(b: BettiVector) -> int:
    return sum((-1) ** i * x for i, x in enumerate(b))


def poincare_polynomial(b: BettiVector) -> list[int]:
    """Coefficients of ``sum b_i t^i``, constant term first."""
    return list(b.entries)


def format_poincare(coeffs: list[int]) -> str:
    terms = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
        if not mono:
            terms.append(str(c))
        else:
            terms.append(mono if c == 1 else f"{c}{mono}")
    return " + ".join(terms) or "0"
