"""Command-line front end.

JSON goes to stdout and diagnostics to stderr.  Exit status is 0 on success,
1 on a mathematical or input-domain error and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import __version__
from .catalog import get_presentation
from .errors import FuchsDecompError
from .hecke import tree_json
from .homology import DEFAULT_MAX_ITER, GenWord, decompose, multiply_word
from .moebius import MoebiusMap, parse_point
from .render import RenderSpec, parse_viewport, write_svg
from .sl2z import (IntMatrix, STWord, convergents, decomposition_json, format_gauss,
                   st_decompose, st_multiply)
from .verify import run_checks


class UsageError(Exception):
    pass


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=None, separators=(", ", ": "))
    sys.stdout.write("\n")


def _read_json(text: Optional[str], path: Optional[str], what: str):
    if text is None and path is None:
        text = sys.stdin.read()
    elif path is not None:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{what} is not valid JSON: {exc}") from None


def cmd_decompose_fuchsian(args) -> int:
    p = get_presentation(args.group)
    entries = _read_json(args.matrix, args.matrix_file, "matrix")
    if isinstance(entries, list) and len(entries) == 2 and all(isinstance(r, list) for r in entries):
        entries = entries[0] + entries[1]
    g = MoebiusMap.parse(entries, p.spec)
    tau = parse_point(args.tau, p.spec) if args.tau else p.domain.witness
    res = decompose(p, tau, g, max_iter=args.max_iter, record=args.trace)
    out = {"group": p.label, "matrix": g.to_json(), **res.to_json()}
    if args.trace:
        out["trace"] = [[tag.value, str(z)] for tag, z in res.trace]
    _emit(out)
    return 0


def cmd_multiply_fuchsian(args) -> int:
    p = get_presentation(args.group)
    data = _read_json(args.input, None, "decomposition")
    g = multiply_word(p, GenWord.from_json(data["word"]))
    if int(data.get("sign", 1)) < 0:
        g = -g
    _emit({"group": p.label, "matrix": g.to_json()})
    return 0


def cmd_decompose_sl2z(args) -> int:
    g = IntMatrix(args.a, args.b, args.c, args.d)
    _emit(decomposition_json(g, st_decompose(g, max_iter=args.max_iter)))
    return 0


def cmd_multiply_sl2z(args) -> int:
    data = _read_json(args.input, None, "decomposition")
    w = STWord(tuple(int(n) for n in data["v"]), data.get("residual", "Id"))
    _emit({"matrix": st_multiply(w).tolist()})
    return 0


def cmd_convergents(args) -> int:
    _emit({"exponents": args.exponents,
           "convergents": [format_gauss(z) for z in convergents(args.exponents)]})
    return 0


def cmd_hecke_tree(args) -> int:
    _emit(tree_json(args.p, args.N, args.depth))
    return 0


def cmd_render_domain(args) -> int:
    viewport = parse_viewport(args.viewport) if args.viewport else None
    kwargs = {"group": args.group, "translate_depth": args.depth, "out": args.out}
    if viewport is not None:
        kwargs["viewport"] = viewport
    doc = write_svg(RenderSpec(**kwargs))
    if not args.out:
        sys.stdout.write(doc)
    return 0


def cmd_verify(args) -> int:
    results = run_checks()
    for c in results:
        print(f"{'PASS' if c.ok else 'FAIL'} {c.name}: {c.detail}", file=sys.stderr)
    _emit({"ok": all(c.ok for c in results),
           "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail} for c in results]})
    return 0 if all(c.ok for c in results) else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="fuchsdecomp",
                                 description="Exact word problems in Fuchsian groups and SL(2,Z).")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("decompose-fuchsian", help="write a group element as a word in alpha, beta")
    sp.add_argument("--group", default="e2d1D6ii", help="builtin label or presentation JSON path")
    src = sp.add_mutually_exclusive_group()
    src.add_argument("--matrix", help='JSON list of four entry strings, e.g. ["r2","1","1","r2"]')
    src.add_argument("--matrix-file", help="file holding the matrix JSON")
    sp.add_argument("--tau", help="base point 'x;y' inside F (default: a built-in witness)")
    sp.add_argument("--max-iter", type=int, default=DEFAULT_MAX_ITER)
    sp.add_argument("--trace", action="store_true", help="include the region of every iterate")
    sp.set_defaults(func=cmd_decompose_fuchsian)

    sp = sub.add_parser("multiply-fuchsian", help="evaluate a decompose-fuchsian result")
    sp.add_argument("--group", default="e2d1D6ii")
    sp.add_argument("--input", help="decomposition JSON (default: stdin)")
    sp.set_defaults(func=cmd_multiply_fuchsian)

    sp = sub.add_parser("decompose-sl2z", help="S/T factorisation of an SL(2,Z) matrix")
    for name in "abcd":
        sp.add_argument(name, type=int)
    sp.add_argument("--max-iter", type=int, default=DEFAULT_MAX_ITER)
    sp.set_defaults(func=cmd_decompose_sl2z)

    sp = sub.add_parser("multiply-sl2z", help="evaluate a decompose-sl2z result")
    sp.add_argument("--input", help="decomposition JSON (default: stdin)")
    sp.set_defaults(func=cmd_multiply_sl2z)

    sp = sub.add_parser("convergents", help="g_1(i), ..., g_k(i) for exponents n_1 ... n_k")
    sp.add_argument("exponents", type=int, nargs="+")
    sp.set_defaults(func=cmd_convergents)

    sp = sub.add_parser("hecke-tree", help="coset labels of the Hecke tree")
    sp.add_argument("p", type=int)
    sp.add_argument("N", type=int)
    sp.add_argument("depth", type=int)
    sp.set_defaults(func=cmd_hecke_tree)

    sp = sub.add_parser("render-domain", help="SVG of the fundamental rectangle")
    sp.add_argument("--group", default="e2d1D6ii")
    sp.add_argument("--depth", type=int, default=0, help="translate depth, at most 4")
    sp.add_argument("--out", help="output file (default: stdout)")
    sp.add_argument("--viewport", help="x0,x1,ymax; write --viewport=-3,3,2 when x0 is negative")
    sp.set_defaults(func=cmd_render_domain)

    sp = sub.add_parser("verify", help="run built-in invariant checks")
    sp.set_defaults(func=cmd_verify)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (FuchsDecompError, ValueError, KeyError, TypeError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
