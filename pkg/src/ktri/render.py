"""ASCII renderings of staircase diagrams and path pairs."""

from __future__ import annotations

from .errors import DomainError
from .paths import DyckPath, dominates
from .polygon import KTriangulation, is_cell


def render_diagram(tri: KTriangulation) -> str:
    """Draw the staircase array: '.' for an empty cell, 'X' for a cross.

    The header line lists the column indices k+2..n; one text row follows
    per diagram row.  Positions outside the staircase stay blank.
    """
    ctx = tri.ctx
    width = len(str(ctx.n))
    members = set(tri.diagonals)
    lines = [" ".join(f"{b:>{width}}" for b in ctx.columns)]
    if ctx.n >= 2 * ctx.k + 2:
        for a in ctx.rows:
            cells = []
            for b in ctx.columns:
                if not is_cell(ctx, (a, b)):
                    cells.append(" " * width)
                elif (a, b) in members:
                    cells.append(f"{'X':>{width}}")
                else:
                    cells.append(f"{'.':>{width}}")
            lines.append(" ".join(cells).rstrip())
    return "\n".join(lines) + "\n"


def render_paths(p: DyckPath, q: DyckPath, shifted: bool = False) -> str:
    """Draw the two paths on a lattice grid.

    Unshifted, both run from the origin to (m, m).  Shifted, the upper path
    runs from (0, 1) to (m, m+1) and the lower from (1, 0) to (m+1, m), so
    non-crossing shows up as disjointness.  Upper-path edges use '-' and
    '|', lower-path edges '=' and ':', shared edges '#', visited lattice
    points '+'.
    """
    if not dominates(p, q):
        raise DomainError("first path must never go below the second")
    m = p.m
    size = m + (1 if shifted else 0)

    def edges(path: DyckPath, x0: int, y0: int) -> tuple[set, set]:
        horizontal, vertical = set(), set()
        x, y = x0, y0
        for step in path.steps:
            if step == "N":
                vertical.add((x, y))
                y += 1
            else:
                horizontal.add((x, y))
                x += 1
        return horizontal, vertical

    ph, pv = edges(p, 0, 1 if shifted else 0)
    qh, qv = edges(q, 1 if shifted else 0, 0)

    points = set()
    for hset, is_h in ((ph, True), (qh, True), (pv, False), (qv, False)):
        for x, y in hset:
            points.add((x, y))
            points.add((x + 1, y) if is_h else (x, y + 1))

    rows = []
    for y in range(size, -1, -1):
        row = []
        for x in range(size + 1):
            row.append("+" if (x, y) in points else " ")
            if x < size:
                here_p, here_q = (x, y) in ph, (x, y) in qh
                row.append("#" if here_p and here_q else "-" if here_p else "=" if here_q else " ")
        rows.append("".join(row).rstrip())
        if y > 0:
            row = []
            for x in range(size + 1):
                here_p, here_q = (x, y - 1) in pv, (x, y - 1) in qv
                row.append("#" if here_p and here_q else "|" if here_p else ":" if here_q else " ")
                if x < size:
                    row.append(" ")
            rows.append("".join(row).rstrip())
    return "\n".join(rows) + "\n"
