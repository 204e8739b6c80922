"""Command-line front end.

Exit status is 0 on success, 1 on a domain error (the error class is named on
stderr) and 2 on a usage or parse error.  Numbers are printed exactly.
"""
from __future__ import annotations

import argparse
import enum
import json
import re
import sys
import time
from pathlib import Path

from . import arcsys, lattice, pillowcase, twistgen
from .errors import TunnelRhoError
from .slope import INFINITY, ONE, ZERO, Slope, delta, min_intersections, parse_slope, reduce_mod2
from .svg import lattice_svg, pillowcase_svg

__all__ = ["Command", "main", "run", "oracle_check", "slope_grid"]


class Command(enum.Enum):
    DELTA = "delta"
    INTERSECT = "intersect"
    RHO_TORUS = "rho-torus"
    WAVES = "waves"
    REALIZE = "realize"
    RENDER = "render"
    ORACLE_CHECK = "oracle-check"


# let "-1/3" through as a positional slope
_NEGATIVE = re.compile(r"^-\d+(/\d+)?$")


def _slope_arg(text: str) -> Slope:
    try:
        return parse_slope(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def slope_grid(max_p: int, max_q: int) -> list[Slope]:
    """Reduced slopes with ``|p| <= max_p`` and ``0 < q <= max_q``, plus 0/1 and 1/0."""
    # reduction only shrinks |p| and q, so the set stays inside the bounds
    grid = {Slope(p, q) for q in range(1, max_q + 1) for p in range(-max_p, max_p + 1)}
    return sorted(grid | {ZERO, INFINITY}, key=lambda s: (s.q, s.p))


def oracle_check(max_p: int, max_q: int) -> dict:
    """Compare the intersection formula with the pillowcase count on every pair."""
    if max_p < 1 or max_q < 1:
        raise ValueError("bounds must be at least 1")
    start = time.perf_counter()
    grid = slope_grid(max_p, max_q)
    realized = {s: pillowcase.realize_pair(s) for s in grid}
    mismatches = []
    pairs = 0
    for i, a in enumerate(grid):
        for b in grid[i + 1:]:
            pairs += 1
            formula = min_intersections(a, b)
            oracle = pillowcase.count_crossings(realized[a], realized[b])
            if formula != oracle:
                mismatches.append({"a": str(a), "b": str(b), "formula": formula, "oracle": oracle})
    return {
        "max_p": max_p,
        "max_q": max_q,
        "slopes": len(grid),
        "pairs": pairs,
        "mismatches": mismatches,
        "elapsed_ms": round((time.perf_counter() - start) * 1000),
    }


def _analyze(system: arcsys.ArcSystem) -> dict:
    report = arcsys.validate(system)
    out = {
        "valid": report.valid,
        "end_counts": {k.value: v for k, v in report.end_counts.items()},
        "violations": report.violations,
        "waves": [],
        "augmented_slope": None,
        "rho": None,
        "error": None,
    }
    try:
        out["waves"] = [{"base": x.value, "slope": str(c.slope), "encloses": c.enclosed.value}
                        for x, c in arcsys.waves_of(system)]
        aug = arcsys.derive_augmented_slope(system)
        out["augmented_slope"] = {"slope": str(aug.slope), "base": aug.base.value}
        out["rho"] = str(arcsys.rho_of_system(system).rep)
    except TunnelRhoError as exc:
        out["error"] = f"{type(exc).__name__}: {exc}"
    return out


def _print(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(lines))


def _cmd_delta(args) -> int:
    d = delta(args.a, args.b)
    _print(args, {"a": str(args.a), "b": str(args.b), "delta": d}, [str(d)])
    return 0


def _cmd_intersect(args) -> int:
    n = min_intersections(args.a, args.b)
    payload = {"a": str(args.a), "b": str(args.b), "delta": delta(args.a, args.b),
               "min_intersections": n}
    lines = [str(n)]
    if args.oracle:
        oracle = pillowcase.count_crossings(pillowcase.realize_pair(args.a),
                                            pillowcase.realize_pair(args.b))
        payload["oracle"] = oracle
        payload["agree"] = oracle == n
        lines = [f"formula {n}", f"oracle  {oracle}", "agree" if oracle == n else "MISMATCH"]
    _print(args, payload, lines)
    return 0 if not args.oracle or payload["agree"] else 1


def _cmd_rho_torus(args) -> int:
    knot = lattice.TorusKnotInput(args.m, args.n)
    cert = lattice.certify(knot)
    rho = lattice.rho_torus(knot)
    if args.svg:
        Path(args.svg).write_text(lattice_svg(cert), encoding="utf-8")
    if args.trace:
        print(json.dumps(lattice.trace(cert), indent=2))
    elif args.json:
        print(json.dumps({"m": knot.m, "n": knot.n, "rho": str(rho.rep)}, indent=2))
    else:
        print(rho)
    return 0


def _cmd_waves(args) -> int:
    system = arcsys.load_system(args.file)
    analysis = _analyze(system)
    if args.json:
        doc = arcsys.system_to_json(system)
        doc["analysis"] = analysis
        print(json.dumps(doc, indent=2))
    else:
        lines = [f"{m} x {c}" for c, m in system.classes]
        counts = ", ".join(f"{k} {v}" for k, v in analysis["end_counts"].items())
        lines.append(f"ends: {counts}")
        lines.append(f"valid: {'yes' if analysis['valid'] else 'no'}")
        lines += [f"  violation: {v}" for v in analysis["violations"]]
        for w in analysis["waves"]:
            lines.append(f"wave at {w['base']} slope {w['slope']} encloses {w['encloses']}")
        if analysis["augmented_slope"]:
            aug = analysis["augmented_slope"]
            lines.append(f"augmented slope: {aug['slope']} based at {aug['base']}")
        if analysis["rho"]:
            lines.append(f"rho: {analysis['rho']} (mod 2)")
        print("\n".join(lines))
    if analysis["error"]:
        print(analysis["error"], file=sys.stderr)
        return 1
    return 0


def _cmd_realize(args) -> int:
    gens = twistgen.load_generators(args.gens) if args.gens else twistgen.DEFAULT_GENERATORS
    target = reduce_mod2(args.target)
    word = twistgen.realize(target, gens, args.max_len)
    path = twistgen.word_trace(word, ONE, gens)
    reached = reduce_mod2(path[-1])
    payload = {"target": str(target.rep), "word": str(word), "length": len(word),
               "trace": [str(s) for s in path], "reduced": str(reached.rep),
               "verified": reached == target}
    lines = [f"word:   {word}",
             f"trace:  {' -> '.join(str(s) for s in path)}",
             f"check:  {reached} == {target}: {'ok' if reached == target else 'FAILED'}"]
    _print(args, payload, lines)
    return 0


def _cmd_render(args) -> int:
    slopes = [args.a] + ([args.b] if args.b is not None else [])
    pairs = [pillowcase.realize_pair(s) for s in slopes]
    Path(args.svg).write_text(pillowcase_svg(pairs), encoding="utf-8")
    _print(args, {"svg": args.svg, "slopes": [str(s) for s in slopes]}, [f"wrote {args.svg}"])
    return 0


def _cmd_oracle_check(args) -> int:
    report = oracle_check(args.max_p, args.max_q)
    lines = [f"slopes      {report['slopes']}",
             f"pairs       {report['pairs']}",
             f"mismatches  {len(report['mismatches'])}",
             f"elapsed     {report['elapsed_ms']} ms"]
    lines += [f"  {m['a']} {m['b']}: formula {m['formula']} oracle {m['oracle']}"
              for m in report["mismatches"]]
    _print(args, report, lines)
    return 1 if report["mismatches"] else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tunnelrho",
        description="Slope calculus on the 4-punctured sphere and the tunnel invariant rho.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(cmd: Command, handler, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(cmd.value, help=help_text)
        p._negative_number_matcher = _NEGATIVE
        p.add_argument("--json", action="store_true", help="structured JSON on stdout")
        p.set_defaults(handler=handler, cmd=cmd)
        return p

    p = add(Command.DELTA, _cmd_delta, "distance |pq' - p'q| between two slopes")
    p.add_argument("a", type=_slope_arg)
    p.add_argument("b", type=_slope_arg)

    p = add(Command.INTERSECT, _cmd_intersect, "minimal intersection count of two pairs")
    p.add_argument("a", type=_slope_arg)
    p.add_argument("b", type=_slope_arg)
    p.add_argument("--oracle", action="store_true", help="also count on the pillowcase")

    p = add(Command.RHO_TORUS, _cmd_rho_torus, "rho for the (N, M) torus knot's annulus tunnel")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--trace", action="store_true", help="print the certificate chain as JSON")
    p.add_argument("--svg", metavar="PATH", help="draw the lattice certificate")

    p = add(Command.WAVES, _cmd_waves, "analyze an arc system JSON file")
    p.add_argument("file")

    p = add(Command.REALIZE, _cmd_realize, "search for a twist word reaching a rho value")
    p.add_argument("target", type=_slope_arg)
    p.add_argument("--max-len", type=int, default=8)
    p.add_argument("--gens", metavar="FILE", help="generator set JSON")

    p = add(Command.RENDER, _cmd_render, "draw one or two realized pairs as SVG")
    p.add_argument("a", type=_slope_arg)
    p.add_argument("b", type=_slope_arg, nargs="?")
    p.add_argument("--svg", metavar="PATH", required=True)

    p = add(Command.ORACLE_CHECK, _cmd_oracle_check, "sweep formula against pillowcase oracle")
    p.add_argument("--max-p", type=_positive, default=10)
    p.add_argument("--max-q", type=_positive, default=10)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except TunnelRhoError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
