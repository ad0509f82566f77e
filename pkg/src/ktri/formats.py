"""Line-oriented text formats for triangulations, path pairs and path tuples.

Triangulation format (two lines):

    k=<k> n=<n>
    a-b,a-b,...      (sorted by (a, b); the literal "-" for the empty set)

Path pair format: two lines of bare step strings, upper path first.
Path tuple format: one step string per line, top path first.
"""

from __future__ import annotations

from .errors import DomainError
from .paths import DyckPath, PathTuple, dominates
from .polygon import KTriangulation, PolygonContext


def format_triangulation(tri: KTriangulation) -> str:
    header = f"k={tri.ctx.k} n={tri.ctx.n}"
    if not tri.diagonals:
        return f"{header}\n-\n"
    body = ",".join(f"{a}-{b}" for a, b in tri.diagonals)
    return f"{header}\n{body}\n"


def diagonal_line(tri: KTriangulation) -> str:
    if not tri.diagonals:
        return "-"
    return ",".join(f"{a}-{b}" for a, b in tri.diagonals)


def parse_triangulation(text: str) -> KTriangulation:
    lines = [line.strip() for line in text.strip().splitlines() if line.strip()]
    if len(lines) != 2:
        raise DomainError(f"expected 2 lines (header, diagonals), got {len(lines)}")
    header = dict(part.split("=", 1) for part in lines[0].split() if "=" in part)
    try:
        ctx = PolygonContext(int(header["n"]), int(header["k"]))
    except (KeyError, ValueError) as exc:
        raise DomainError(f"bad header {lines[0]!r}") from exc
    diagonals = []
    if lines[1] != "-":
        for item in lines[1].split(","):
            try:
                a, b = item.split("-")
                diagonals.append((int(a), int(b)))
            except ValueError as exc:
                raise DomainError(f"bad diagonal {item!r}") from exc
    return KTriangulation.certified(ctx, diagonals)


def format_pair(p: DyckPath, q: DyckPath) -> str:
    return f"{p.steps}\n{q.steps}\n"


def parse_pair(text: str) -> tuple[DyckPath, DyckPath]:
    lines = [line.strip() for line in text.strip().splitlines() if line.strip()]
    if len(lines) != 2:
        raise DomainError(f"expected 2 path lines, got {len(lines)}")
    p, q = DyckPath(lines[0]), DyckPath(lines[1])
    if not dominates(p, q):
        raise DomainError("first path must never go below the second")
    return p, q


def format_tuple(pt: PathTuple) -> str:
    return "".join(f"{p.steps}\n" for p in pt.paths)


def parse_tuple(text: str) -> PathTuple:
    lines = [line.strip() for line in text.strip().splitlines() if line.strip()]
    if not lines:
        raise DomainError("empty path tuple")
    paths = tuple(DyckPath(line) for line in lines)
    return PathTuple(paths[0].m, len(paths), paths)
