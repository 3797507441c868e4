"""Command-line interface.

Exit codes: 0 on success, 1 when a verification fails, 2 on usage errors
(bad flags, unparseable or infeasible boundaries).

Compact boundaries list sides comma-separated, with ``-`` for an empty side::

    tri:NW,NE,S              triangle with those three sides
    trap:beta,gamma,nu,delta
    par:alpha,gamma,beta,delta
    rhom:alpha,gamma,beta,delta
    pent:beta,gamma,delta,epsilon,zeta
    hex:alpha,beta,gamma,delta,epsilon,zeta   (clockwise from SW)
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import completion, lrcalc, theorems
from .pieces import PieceSet
from .poly import Poly
from .region import BoundarySpec, InfeasibleShape, polygon_boundary, triangle_boundary
from .render import RenderStyle, render_svg
from .tiler import _mode_for, enumerate_fillings, iter_fillings, weight_sum
from .tiler import count as count_fillings
from .words import WordError


class ParseError(ValueError):
    pass


_FORMS = {
    "trap": ("trapezoid", 4),
    "par": ("parallelogram", 4),
    "rhom": ("rhombus", 4),
    "pent": ("pentagon", 5),
    "hex": ("hexagon", 6),
}


def _side(s: str) -> str:
    s = s.strip()
    return "" if s == "-" else s


def parse_boundary(text: str) -> BoundarySpec:
    """Parse a compact boundary such as ``tri:1010,0101,0011``.

    Raises ParseError for malformed text and InfeasibleShape when the side
    lengths do not close up.
    """
    head, sep, body = text.partition(":")
    if not sep:
        raise ParseError(f"missing shape prefix in {text!r} (expected e.g. tri:...)")
    head = head.strip().lower()
    parts = [_side(p) for p in body.split(",")]
    for p in parts:
        if set(p) - {"0", "1"}:
            raise ParseError(f"side {p!r} is not a 0/1 string")
    if head == "tri":
        if len(parts) != 3:
            raise ParseError(f"tri needs 3 sides, got {len(parts)}")
        return triangle_boundary(*parts)
    if head not in _FORMS:
        raise ParseError(f"unknown shape {head!r}")
    kind, n = _FORMS[head]
    if len(parts) != n:
        raise ParseError(f"{head} needs {n} sides, got {len(parts)}")
    return polygon_boundary(kind, parts)


def _pieces(text: str) -> PieceSet:
    try:
        return PieceSet.parse(text)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _weight_json(v) -> dict:
    if isinstance(v, Poly):
        return {"kind": "eqvt", "value": v.to_json()}
    return {"kind": "int", "value": v}


def emit(result, as_json: bool) -> str:
    """Text for one result: an int, a Poly, a report or a list of reports."""
    if isinstance(result, theorems.VerificationReport):
        return _dump(result.to_json()) if as_json else result.summary()
    if isinstance(result, list):
        if as_json:
            return _dump({"pass": all(r.passed for r in result), "reports": [r.to_json() for r in result]})
        lines = [r.summary() for r in result]
        bad = sum(not r.passed for r in result)
        lines.append(f"{len(result) - bad}/{len(result)} passed")
        return "\n".join(lines)
    return str(result)


def _parse_params(items: Sequence[str]) -> dict:
    out = {}
    for item in items:
        key, sep, val = item.partition("=")
        if not sep:
            raise ParseError(f"expected key=value, got {item!r}")
        out[key.strip()] = _side(val)
    return out


# -- commands -----------------------------------------------------------------


def _cmd_count(args, out) -> int:
    n = count_fillings(args.boundary, args.pieces)
    out.write((_dump({"count": n}) if args.json else str(n)) + "\n")
    return 0


def _cmd_weight(args, out) -> int:
    w = weight_sum(args.boundary, args.pieces)
    out.write((_dump(_weight_json(w)) if args.json else str(w)) + "\n")
    return 0


def _cmd_enumerate(args, out) -> int:
    mode = _mode_for(args.pieces)
    if args.threads > 1:
        fillings = enumerate_fillings(args.boundary, args.pieces, threads=args.threads)
    else:
        fillings = iter_fillings(args.boundary, args.pieces)
    for k, f in enumerate(fillings):
        rec = {"index": k, "placements": f.to_json()}
        if mode != "count":
            rec["weight"] = _weight_json(f.weight(mode))
        out.write(_dump(rec) + "\n")
    return 0


def _cmd_lr(args, out) -> int:
    lam, mu, nu = (_side(x) for x in (args.lam, args.mu, args.nu))
    fn = lrcalc.lr_coeff_padded if args.padded else lrcalc.lr_coeff
    v = fn(lam, mu, nu)
    out.write((_dump({"lr": v}) if args.json else str(v)) + "\n")
    return 0


def _cmd_verify(args, out) -> int:
    if args.theorem not in theorems.ALL_IDS:
        raise ParseError(f"unknown theorem id {args.theorem!r}; known: {', '.join(theorems.ALL_IDS)}")
    if args.sweep:
        if args.params:
            raise ParseError("--sweep takes no parameters")
        size = args.max_size if args.max_size is not None else theorems.DEFAULT_SIZES[args.theorem]
        reports = theorems.sweep(args.theorem, size, threads=args.threads)
        out.write(emit(reports, args.json) + "\n")
        return 0 if all(r.passed for r in reports) else 1
    if args.max_size is not None:
        raise ParseError("--max-size needs --sweep")
    report = theorems.verify(args.theorem, _parse_params(args.params))
    out.write(emit(report, args.json) + "\n")
    return 0 if report.passed else 1


def _cmd_complete(args, out) -> int:
    cm = completion.complete_to_triangle(args.boundary)
    corners = {name: list(sides) for name, sides in cm.corner_labels().items()}
    if args.json:
        out.write(_dump({"triangle": cm.triangle.compact(), "corners": corners}) + "\n")
    else:
        out.write(f"triangle {cm.triangle.compact()}\n")
        for name, sides in corners.items():
            shown = ",".join(s or "-" for s in sides)
            out.write(f"corner {name} {shown}\n")
    return 0


def _cmd_render(args, out) -> int:
    target = args.boundary
    if args.filling_index is not None:
        found = None
        for k, f in enumerate(iter_fillings(args.boundary, args.pieces)):
            if k == args.filling_index:
                found = f
                break
        if found is None:
            raise ParseError(f"no filling with index {args.filling_index}")
        target = found
    svg = render_svg(target, RenderStyle(labels=not args.no_labels))
    if args.output in (None, "-"):
        out.write(svg)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(svg)
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--pieces", default="H", help="H, H+eqvt, H+delta or H+nabla")
    common.add_argument("--json", action="store_true")
    common.add_argument("--threads", type=int, default=1)

    with_boundary = _Parser(add_help=False, parents=[common])
    with_boundary.add_argument("--boundary", required=True, help="compact form, e.g. tri:1010,0101,0011")

    p = _Parser(prog="schubpuzzle", description="Enumerate and verify Schubert puzzles.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("count", parents=[with_boundary], help="number of fillings")
    sub.add_parser("weight", parents=[with_boundary], help="weight sum of all fillings")
    sub.add_parser("enumerate", parents=[with_boundary], help="fillings as JSON lines")

    lr = sub.add_parser("lr", parents=[common], help="Littlewood-Richardson coefficient")
    lr.add_argument("lam")
    lr.add_argument("mu")
    lr.add_argument("nu")
    lr.add_argument("--padded", action="store_true")

    v = sub.add_parser("verify", parents=[common], help="check a theorem instance or sweep")
    v.add_argument("theorem")
    v.add_argument("params", nargs="*", help="key=value, '-' for an empty word")
    v.add_argument("--sweep", action="store_true")
    v.add_argument("--max-size", type=int)

    sub.add_parser("complete", parents=[with_boundary], help="completed triangle and corner labels")

    r = sub.add_parser("render", parents=[with_boundary], help="SVG picture")
    r.add_argument("-o", "--output")
    r.add_argument("--filling-index", type=int)
    r.add_argument("--no-labels", action="store_true")
    return p


_COMMANDS = {
    "count": _cmd_count,
    "weight": _cmd_weight,
    "enumerate": _cmd_enumerate,
    "lr": _cmd_lr,
    "verify": _cmd_verify,
    "complete": _cmd_complete,
    "render": _cmd_render,
}


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.threads < 1:
            raise ParseError("--threads must be at least 1")
        args.pieces = _pieces(args.pieces)
        if hasattr(args, "boundary"):
            args.boundary = parse_boundary(args.boundary)
        return _COMMANDS[args.command](args, out)
    except (ParseError, InfeasibleShape, WordError, completion.InfeasibleCorner,
            completion.UnsupportedPieceSet, theorems.HypothesisViolated, KeyError) as exc:
        err.write(f"error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())
