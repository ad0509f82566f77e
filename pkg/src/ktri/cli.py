"""Command-line interface.

Verbs: enumerate, count, map, unmap, parent, children, tree, verify, render.
Exit codes: 0 success, 1 domain error, 2 usage error.  All output is
deterministic; the map --trace log goes to stderr so stdout stays a clean
two-line pair.
"""

from __future__ import annotations

import argparse
import sys

from .bijection import color_diagram, from_paths, to_paths
from .errors import DomainError, StructuralError
from .formats import (
    diagonal_line,
    format_pair,
    format_triangulation,
    parse_pair,
    parse_triangulation,
)
from .gentree2 import children2, label2, parent2
from .gentree_k import children_k, enumerate_tree, parent_k, tree_root
from .paths import catalan_determinant
from .polygon import PolygonContext, enumerate_brute
from .render import render_diagram, render_paths
from .verify import run_verify


def _read_input(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _cmd_count(args) -> int:
    if args.method == "det":
        value = catalan_determinant(args.n, args.k)
    elif args.method == "brute":
        value = len(enumerate_brute(PolygonContext(args.n, args.k)))
    else:
        value = len(enumerate_tree(args.n, args.k))
    print(value)
    return 0


def _cmd_enumerate(args) -> int:
    if args.method == "brute":
        tris = enumerate_brute(PolygonContext(args.n, args.k))
    else:
        tris = enumerate_tree(args.n, args.k)
    print(f"k={args.k} n={args.n}")
    for tri in tris:
        print(diagonal_line(tri))
    return 0


def _cmd_map(args) -> int:
    tri = parse_triangulation(_read_input(args.input))
    if args.trace:
        colored = color_diagram(tri)
        for step in colored.steps:
            print(
                f"iter={step.index} r={step.r} "
                f"blue={step.blue[0]}-{step.blue[1]} red={step.red[0]}-{step.red[1]} "
                f"merged={step.merged[0]}+{step.merged[1]}",
                file=sys.stderr,
            )
    p, q = to_paths(tri)
    sys.stdout.write(format_pair(p, q))
    return 0


def _cmd_unmap(args) -> int:
    p, q = parse_pair(_read_input(args.input))
    tri = from_paths(p, q)
    sys.stdout.write(format_triangulation(tri))
    return 0


def _cmd_parent(args) -> int:
    tri = parse_triangulation(_read_input(args.input))
    parent = parent2(tri) if tri.ctx.k == 2 else parent_k(tri)
    sys.stdout.write(format_triangulation(parent))
    return 0


def _cmd_children(args) -> int:
    tri = parse_triangulation(_read_input(args.input))
    if tri.ctx.k == 2:
        for choice, child in children2(tri):
            print(f"u={choice.u} i={choice.i}\t{diagonal_line(child)}")
    else:
        for choice, child in children_k(tri):
            rows = ",".join(str(b) for b in choice.rows)
            print(f"u={choice.u} b={rows}\t{diagonal_line(child)}")
    return 0


def _cmd_tree(args) -> int:
    def walk(tri, level: int) -> None:
        label = "(" + ",".join(str(d) for d in label2(tri)) + ")" if args.k == 2 else "-"
        print(f"{level}\t{label}\t{diagonal_line(tri)}")
        if tri.ctx.n < args.n:
            kids = children2(tri) if args.k == 2 else children_k(tri)
            for _, child in kids:
                walk(child, level + 1)

    if args.n < 2 * args.k + 1:
        raise DomainError(f"need n >= 2k+1, got n={args.n}, k={args.k}")
    total = catalan_determinant(args.n, args.k)
    if total > 10**5:
        raise DomainError(f"tree dump of {total} leaves refused; lower n")
    walk(tree_root(args.k), 0)
    return 0


def _cmd_verify(args) -> int:
    checks = run_verify(args.k, args.n_max)
    failed = 0
    for name, ok, detail in checks:
        status = "PASS" if ok else "FAIL"
        print(f"{status} {name}: {detail}")
        if not ok:
            failed += 1
    return 1 if failed else 0


def _cmd_render(args) -> int:
    text = _read_input(args.input)
    first = text.strip().splitlines()[0].strip() if text.strip() else ""
    if first.startswith("k="):
        sys.stdout.write(render_diagram(parse_triangulation(text)))
    else:
        p, q = parse_pair(text)
        sys.stdout.write(render_paths(p, q, shifted=args.shifted))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ktri",
        description="k-triangulations of a convex polygon: exact counting, "
        "generating trees, and the Dyck-path-pair bijection",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_nk(p):
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("count", help="count k-triangulations")
    add_nk(p)
    p.add_argument("--method", choices=["det", "tree", "brute"], default="det")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("enumerate", help="list all k-triangulations")
    add_nk(p)
    p.add_argument("--method", choices=["tree", "brute"], default="brute")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("map", help="triangulation file -> path pair")
    p.add_argument("--input", default=None, help="file path or - for stdin")
    p.add_argument("--trace", action="store_true", help="log coloring steps to stderr")
    p.set_defaults(func=_cmd_map)

    p = sub.add_parser("unmap", help="path pair file -> triangulation")
    p.add_argument("--input", default=None)
    p.set_defaults(func=_cmd_unmap)

    p = sub.add_parser("parent", help="one step up the generating tree")
    p.add_argument("--input", default=None)
    p.set_defaults(func=_cmd_parent)

    p = sub.add_parser("children", help="all children in the generating tree")
    p.add_argument("--input", default=None)
    p.set_defaults(func=_cmd_children)

    p = sub.add_parser("tree", help="dump the generating tree level by level")
    add_nk(p)
    p.set_defaults(func=_cmd_tree)

    p = sub.add_parser("verify", help="run the invariant suite")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--n-max", type=int, default=8)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("render", help="ASCII art for a triangulation or a pair")
    p.add_argument("--input", default=None)
    p.add_argument("--shifted", action="store_true")
    p.set_defaults(func=_cmd_render)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, StructuralError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
