"""Builtin polytope specs, stored as spec-file text."""

from __future__ import annotations

from .polytope import PolytopeSpec, parse_spec


def _simplex(n: int) -> str:
    lines = [f"dim {n}"]
    for i in range(n):
        lines.append("facet " + " ".join("1" if k == i else "0" for k in range(n)) + " | 0")
    lines.append("facet " + " ".join(["-1"] * n) + " | -1")
    return "\n".join(lines) + "\n"


def _cube(n: int) -> str:
    lines = [f"dim {n}"]
    for i in range(n):
        lines.append("facet " + " ".join("1" if k == i else "0" for k in range(n)) + " | 0")
    for i in range(n):
        lines.append("facet " + " ".join("-1" if k == i else "0" for k in range(n)) + " | -1")
    return "\n".join(lines) + "\n"


def _weighted_triangle(q: int) -> str:
    return f"dim 2\nfacet 1 0 | 0\nfacet 0 1 | 0\nfacet -1 -{q} | -{q}\n"


def _dodecahedron() -> str:
    # inward normals are minus the icosahedron vertices (0,+-1,+-phi) and cyclic shifts;
    # every facet sits at support value phi^2 = 3/2+1/2s
    phi = "1/2+1/2s"
    mphi = "-1/2-1/2s"
    lines = ["dim 3", "sqrt 5"]
    for s1 in (1, -1):
        for s2 in (1, -1):
            a = "-1" if s1 > 0 else "1"
            b = mphi if s2 > 0 else phi
            for normal in (("0", a, b), (a, b, "0"), (b, "0", a)):
                lines.append("facet " + " ".join(normal) + " | -3/2-1/2s")
    return "\n".join(lines) + "\n"


FIXTURES: dict[str, str] = {}
for _n in (1, 2, 3, 4):
    FIXTURES[f"simplex-{_n}"] = _simplex(_n)
for _n in (2, 3, 4):
    FIXTURES[f"cube-{_n}"] = _cube(_n)
FIXTURES["pentagon"] = (
    "dim 2\nfacet 1 0 | 0\nfacet 0 1 | 0\nfacet -1 0 | -2\nfacet 0 -1 | -2\nfacet -1 -1 | -3\n"
)
FIXTURES["hexagon"] = (
    "dim 2\nfacet 1 0 | 0\nfacet 0 1 | 0\nfacet -1 0 | -2\nfacet 0 -1 | -2\n"
    "facet 1 -1 | -1\nfacet -1 1 | -1\n"
)
FIXTURES["dodecahedron"] = _dodecahedron()
FIXTURES["cp2-triangle"] = "dim 2\nfacet 1 0 | 0\nfacet 0 1 | 0\nfacet -1 -1 | -1\n"
FIXTURES["weighted-triangle-2"] = _weighted_triangle(2)
FIXTURES["weighted-triangle-3"] = _weighted_triangle(3)
FIXTURES["golden-triangle"] = (
    "dim 2\nsqrt 5\nfacet 1 0 | 0\nfacet 0 1 | 0\nfacet -1 -1/2-1/2s | -1\n"
)
FIXTURES["golden-quad"] = (
    "dim 2\nsqrt 5\nfacet 1 0 | 0\nfacet 0 1 | 0\nfacet -1 0 | -1\nfacet -1 -1/2-1/2s | -2\n"
)
FIXTURES["pyramid"] = (
    "# square pyramid, apex (0,0,1) on four facets: not simple\n"
    "dim 3\nfacet 0 0 1 | 0\nfacet -1 0 -1 | -1\nfacet 1 0 -1 | -1\n"
    "facet 0 -1 -1 | -1\nfacet 0 1 -1 | -1\n"
)

NONSIMPLE = frozenset({"pyramid"})


def fixture_names(simple_only: bool = False) -> list[str]:
    return [k for k in FIXTURES if not (simple_only and k in NONSIMPLE)]


def fixture(name: str) -> PolytopeSpec:
    return parse_spec(FIXTURES[name], name=name)
