"""The bijection between 2-triangulations and pairs of non-crossing Dyck paths.

:func:`to_paths` runs the direct coloring algorithm on the staircase
diagram: repeatedly locate the corner block, color one cross blue and one
red, and merge two blocks.  Blue counts per column give the upper path,
red counts the lower path.  :func:`to_paths_via_tree` computes the same map
through the two generating trees (climb to the root recording labels, then
descend the other tree matching them); it serves as the reference
implementation.  :func:`from_paths` inverts the map the same way.

Tie-break conventions are fixed: when several crosses in one column tie for
blue, the lowest (largest row) is taken, and for red the highest; per-column
color counts, hence the resulting paths, do not depend on these choices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import DomainError, StructuralError
from .gentree2 import (
    ROOT_PAIR,
    children2,
    label2,
    pair_children,
    pair_label,
    pair_parent,
    parent2,
    pentagon_root,
)
from .paths import DyckPath, PairEncoding, dominates
from .polygon import Diagonal, KTriangulation

BLUE = "blue"
RED = "red"


@dataclass(frozen=True)
class IterationStep:
    """Trace record of one coloring iteration (1-based index)."""

    index: int
    r: int
    blue: Diagonal
    red: Diagonal
    merged: tuple[int, int]
    blocks: tuple[tuple[int, ...], ...]
    absorbed: tuple[int, ...]


@dataclass(frozen=True)
class ColoredDiagram:
    """Outcome of the coloring: per-cross colors and per-column color counts."""

    diagram: KTriangulation
    color: Mapping[Diagonal, str]
    blue_counts: tuple[int, ...]  # columns 4..n
    red_counts: tuple[int, ...]  # columns 4..n
    steps: tuple[IterationStep, ...]
    blocks: tuple[tuple[int, ...], ...]
    absorbed: tuple[int, ...]


def color_diagram(tri: KTriangulation, flip_ties: bool = False) -> ColoredDiagram:
    """Color every cross blue or red by the iterated corner-block step.

    Starting from one singleton block per column, repeat n-5 times: find the
    largest r such that block r has a cross (of either color) in row r,
    color blue the leftmost uncolored cross in block r, merge blocks r-2 and
    r-1 (block 1 is absorbed into the unnumbered far-left block when r = 2),
    and color red the rightmost uncolored cross of the merged block.

    ``flip_ties`` reverses both within-column tie-breaks; it exists to make
    the tie-break independence of the color counts testable.
    """
    if tri.ctx.k != 2:
        raise DomainError(f"coloring defined for k=2 only, got k={tri.ctx.k}")
    n = tri.ctx.n
    by_column: dict[int, list[int]] = {b: [] for b in range(4, n + 1)}
    for a, b in tri.diagonals:
        by_column[b].append(a)
    for rows in by_column.values():
        rows.sort()

    blocks: list[list[int]] = [[b] for b in range(4, n + 1)]
    absorbed: list[int] = []
    color: dict[Diagonal, str] = {}
    steps: list[IterationStep] = []

    def has_cross_in_row(cols: list[int], row: int) -> bool:
        return any(row in by_column[c] for c in cols)

    def pick(cols: list[int], rightmost: bool, prefer_high_row: bool) -> Diagonal | None:
        scan = reversed(cols) if rightmost else cols
        for c in scan:
            rows = [a for a in by_column[c] if (a, c) not in color]
            if rows:
                return (min(rows) if prefer_high_row else max(rows), c)
        return None

    for index in range(1, n - 4):
        r = 0
        for j in range(len(blocks), 0, -1):
            if has_cross_in_row(blocks[j - 1], j):
                r = j
                break
        if r < 2:
            raise StructuralError(f"no usable corner block found (r={r})")

        blue = pick(blocks[r - 1], rightmost=False, prefer_high_row=flip_ties)
        if blue is None:
            raise StructuralError(f"no uncolored cross to color blue in block {r}")
        color[blue] = BLUE

        if r == 2:
            absorbed.extend(blocks.pop(0))
            merged_cols = absorbed
        else:
            blocks[r - 3] = blocks[r - 3] + blocks.pop(r - 2)
            merged_cols = blocks[r - 3]

        red = pick(merged_cols, rightmost=True, prefer_high_row=not flip_ties)
        if red is None:
            raise StructuralError(f"no uncolored cross to color red in merged block {r - 2}")
        color[red] = RED

        steps.append(
            IterationStep(
                index,
                r,
                blue,
                red,
                (r - 2, r - 1),
                tuple(tuple(b) for b in blocks),
                tuple(absorbed),
            )
        )

    if len(color) != len(tri.diagonals):
        raise StructuralError("coloring finished with uncolored crosses")
    if len(blocks) != 2:
        raise StructuralError(f"coloring finished with {len(blocks)} blocks")

    blue_counts = []
    red_counts = []
    for b in range(4, n + 1):
        blues = sum(1 for a in by_column[b] if color.get((a, b)) == BLUE)
        reds = sum(1 for a in by_column[b] if color.get((a, b)) == RED)
        blue_counts.append(blues)
        red_counts.append(reds)
    return ColoredDiagram(
        tri,
        color,
        tuple(blue_counts),
        tuple(red_counts),
        tuple(steps),
        tuple(tuple(b) for b in blocks),
        tuple(absorbed),
    )


def to_paths(tri: KTriangulation) -> tuple[DyckPath, DyckPath]:
    """Map a 2-triangulation to its pair of non-crossing Dyck paths.

    The upper path takes an E run of length (blue count of column j) for
    j = 5..n, the lower path one of length (red count of column j) for
    j = 4..n-1; both get a closing E.
    """
    colored = color_diagram(tri)
    blues, reds = colored.blue_counts, colored.red_counts
    if blues[0] != 0:
        raise StructuralError("blue cross in the first column")
    if reds[-1] != 0:
        raise StructuralError("red cross in the last column")
    p = "".join("N" + "E" * c for c in blues[1:]) + "E"
    q = "".join("N" + "E" * c for c in reds[:-1]) + "E"
    upper, lower = DyckPath(p), DyckPath(q)
    if not dominates(upper, lower):
        raise StructuralError("colored counts produced a crossing pair")
    return upper, lower


def _label_chain_to_root(tri: KTriangulation) -> list[tuple[int, ...]]:
    chain = [label2(tri)]
    cur = tri
    while cur.ctx.n > 5:
        cur = parent2(cur)
        chain.append(label2(cur))
    chain.reverse()
    return chain


def to_paths_via_tree(tri: KTriangulation) -> tuple[DyckPath, DyckPath]:
    """Reference implementation through the generating trees.

    Climb from the triangulation to the root recording labels, then walk
    down the pair tree matching each label; sibling labels are pairwise
    distinct, so every step is forced.
    """
    chain = _label_chain_to_root(tri)
    if chain[0] != (0, 0):
        raise StructuralError(f"root label {chain[0]} is not (0, 0)")
    enc = ROOT_PAIR
    for target in chain[1:]:
        matches = [child for _, child in pair_children(enc) if pair_label(child) == target]
        if len(matches) != 1:
            raise StructuralError(f"label {target} matched {len(matches)} children")
        enc = matches[0]
    return enc.paths()


def from_paths(p: DyckPath, q: DyckPath) -> KTriangulation:
    """Inverse of :func:`to_paths`, computed through the generating trees."""
    enc = PairEncoding.from_paths(p, q)  # rejects non-dominating pairs
    chain = [pair_label(enc)]
    while enc.m > 1:
        enc = pair_parent(enc)
        chain.append(pair_label(enc))
    chain.reverse()
    if chain[0] != (0, 0):
        raise StructuralError(f"root label {chain[0]} is not (0, 0)")
    tri = pentagon_root()
    for target in chain[1:]:
        matches = [child for _, child in children2(tri) if label2(child) == target]
        if len(matches) != 1:
            raise StructuralError(f"label {target} matched {len(matches)} children")
        tri = matches[0]
    return tri
