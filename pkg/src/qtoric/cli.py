"""Command-line front end (``qtoric``).

Exit status: 0 ok, 2 usage, 3 spec syntax, 4 geometry (empty, unbounded,
degenerate or nonsimple input), 5 internal cross-check failure.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import fixtures
from .atlas import emit_atlas
from .cohomology import format_poincare, poincare_polynomial
from .combinatorics import h_from_f
from .errors import QtoricError, SpecSyntaxError
from .exactnum import Scalar, scalar_format
from .polytope import PolytopeSpec, Polytope, format_index_set, load_spec, parse_index_set
from .quasilattice import gamma_generators, gamma_structure
from .pipeline import analyze, check_invariants


def _num(x: Scalar) -> str:
    s = scalar_format(x)
    if x.is_rational:
        return s
    return f"{s} (~{x.approx():.6g})"


def _point(coords) -> str:
    return "(" + ", ".join(_num(c) for c in coords) + ")"


def _vec(v) -> str:
    return " ".join(map(str, v))


def _ix(s) -> str:
    return "{" + format_index_set(s) + "}"


def resolve_spec(arg: str) -> PolytopeSpec:
    """A path to a spec file, or the name of a builtin fixture."""
    p = Path(arg)
    if p.exists():
        return load_spec(p)
    if arg in fixtures.FIXTURES:
        return fixtures.fixture(arg)
    raise SpecSyntaxError(f"no such spec file or builtin fixture: {arg}")


def _default_seed() -> int:
    env = os.environ.get("QTORIC_SEED")
    return int(env) if env else 0


def cmd_hvector(args, out):
    poly = Polytope.from_spec(resolve_spec(args.file))
    f = poly.f_vector()
    print(f"f: {_vec(f)}", file=out)
    print(f"h: {_vec(h_from_f(f))}", file=out)
    return 0


def cmd_betti(args, out):
    an = analyze(resolve_spec(args.file), args.seed)
    print(f"rational: {'true' if an.rational else 'false'} (zrank {an.zrank}, n {an.spec.n})", file=out)
    if an.betti == an.betti_mv:
        print(f"b: {_vec(an.betti)} (methods agree)", file=out)
    else:
        print(f"b: {_vec(an.betti)} from h-vector, {_vec(an.betti_mv)} from filtration (methods DISAGREE)", file=out)
        return 5
    print(f"P(t) = {format_poincare(poincare_polynomial(an.betti))}", file=out)
    return 0


def cmd_morse(args, out):
    an = analyze(resolve_spec(args.file), args.seed)
    md = an.morse
    print(f"seed: {args.seed}", file=out)
    print(f"direction: {_vec(md.direction)}", file=out)
    print("k  vertex  index  face  height  coords", file=out)
    for k, mv in enumerate(md.order, 1):
        v = an.polytope.vertices[mv.vertex]
        print(f"{k}  {_ix(mv.active)}  {mv.index}  {_ix(mv.face)}  {_num(mv.height)}  {_point(v.coords)}", file=out)
    print(f"index histogram: {_vec(md.histogram())}", file=out)
    return 0


def cmd_group(args, out):
    spec = resolve_spec(args.file)
    poly = Polytope.from_spec(spec)
    try:
        active = parse_index_set(args.vertex)
        poly.vertex_index(active)
    except (KeyError, ValueError):
        print(f"error: {args.vertex!r} is not the facet set of a vertex", file=out)
        return 2
    gens = gamma_generators(spec, active)
    g = gamma_structure(gens)
    print(f"vertex: {_ix(active)}", file=out)
    for e in gens:
        print(f"  g_{e.label} = {_point(e.coords)}", file=out)
    print(f"structure: {g.describe()}", file=out)
    if g.order is not None:
        print(f"order: {g.order}", file=out)
    return 0


def cmd_atlas(args, out):
    an = analyze(resolve_spec(args.file), args.seed)
    doc = emit_atlas(an)
    if args.output in (None, "-"):
        out.write(doc)
    else:
        Path(args.output).write_text(doc, encoding="utf-8")
    return 0


def cmd_check(args, out):
    spec = resolve_spec(args.file)
    an = analyze(spec, args.seed)
    print(f"spec: {spec.name or args.file}", file=out)
    print(f"field: {spec.field}  d: {spec.d}  n: {spec.n}", file=out)
    print("simple: yes", file=out)
    print(f"f: {_vec(an.f)}", file=out)
    print(f"h (formula): {_vec(an.h)}", file=out)
    print(f"h (Morse):   {_vec(an.h_morse)}", file=out)
    print(f"rational: {'true' if an.rational else 'false'} (zrank {an.zrank})", file=out)
    print(f"seed: {args.seed}  direction: {_vec(an.morse.direction)}", file=out)
    print("vertices:", file=out)
    for mv in an.morse.order:
        v = an.polytope.vertices[mv.vertex]
        print(f"  {_ix(mv.active)}  index {mv.index}  {_point(v.coords)}", file=out)
    print("charts:", file=out)
    for c in an.charts:
        print(f"  {_ix(c.vertex)}  {c.group.describe()}", file=out)
    print(f"b: {_vec(an.betti)}", file=out)
    fails = check_invariants(an, args.directions)
    if fails:
        for msg in fails:
            print(f"FAILED: {msg}", file=out)
        print("status: FAILED", file=out)
        return 5
    print(f"status: OK ({args.directions} directions)", file=out)
    return 0


def cmd_examples(args, out):
    if args.emit:
        if args.emit not in fixtures.FIXTURES:
            print(f"unknown fixture {args.emit!r}", file=sys.stderr)
            return 2
        out.write(fixtures.FIXTURES[args.emit])
        return 0
    for name in fixtures.fixture_names():
        note = "  (not simple)" if name in fixtures.NONSIMPLE else ""
        print(f"{name}{note}", file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qtoric", description="Invariants of simple polytopes and their quasitoric spaces.")
    sub = p.add_subparsers(dest="command", required=True)
    seed = dict(type=int, default=None, help="direction seed (default: $QTORIC_SEED or 0)")

    s = sub.add_parser("check", help="full pipeline with all cross-checks")
    s.add_argument("file")
    s.add_argument("--seed", **seed)
    s.add_argument("--directions", type=int, default=100)
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("hvector", help="f- and h-vectors")
    s.add_argument("file")
    s.set_defaults(func=cmd_hvector)

    s = sub.add_parser("betti", help="Betti numbers by both methods")
    s.add_argument("file")
    s.add_argument("--seed", **seed)
    s.set_defaults(func=cmd_betti)

    s = sub.add_parser("morse", help="vertex order, indices and faces along a generic direction")
    s.add_argument("file")
    s.add_argument("--seed", **seed)
    s.set_defaults(func=cmd_morse)

    s = sub.add_parser("group", help="chart group at a vertex")
    s.add_argument("file")
    s.add_argument("--vertex", required=True, help="facet indices of the vertex, e.g. 1,3")
    s.set_defaults(func=cmd_group)

    s = sub.add_parser("atlas", help="emit the atlas document")
    s.add_argument("file")
    s.add_argument("--seed", **seed)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_atlas)

    s = sub.add_parser("examples", help="list builtin fixtures")
    s.add_argument("--emit", metavar="NAME")
    s.set_defaults(func=cmd_examples)
    return p


def run_command(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if getattr(args, "seed", 0) is None:
        args.seed = _default_seed()
    try:
        return args.func(args, out)
    except QtoricError as e:
        print(f"error: {e}", file=out)
        return e.exit_code


def main():
    sys.exit(run_command())


if __name__ == "__main__":
    main()
