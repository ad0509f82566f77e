"""Runtime verification driver: re-checks the package invariants at desk scale.

Each check returns (name, passed, detail); the CLI prints one line per
check and exits nonzero when any fails.  The checks mirror the pytest
suite but are runnable from the installed package without test files.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations

from .bijection import color_diagram, from_paths, to_paths, to_paths_via_tree
from .gentree2 import (
    ROOT_PAIR,
    children2,
    label2,
    label_children,
    pair_children,
    pair_parent,
    parent2,
    pentagon_root,
)
from .gentree_k import children_k, enumerate_tree, parent_k, tree_root
from .paths import PairEncoding, catalan_determinant, enumerate_tuples
from .polygon import (
    PolygonContext,
    check_structure_lemmas,
    enumerate_brute,
    is_t_crossing,
)

Check = tuple[str, bool, str]


def _counting(k: int, n_max: int) -> Check:
    for n in range(2 * k + 1, n_max + 1):
        det = catalan_determinant(n, k)
        brute = enumerate_brute(PolygonContext(n, k))
        if len(brute) != det:
            return ("counting", False, f"brute count {len(brute)} != det {det} at n={n}")
        if k >= 2:
            tree = enumerate_tree(n, k)
            if [t.diagonals for t in tree] != [t.diagonals for t in brute]:
                return ("counting", False, f"tree and brute enumerations differ at n={n}")
    return ("counting", True, f"k={k}, n<={n_max}: det = brute = tree")


def _tuples_vs_det(k: int, m_max: int) -> Check:
    for kk in range(1, min(k, 3) + 1):
        for m in range(1, m_max + 1):
            det = catalan_determinant(m + 2 * kk, kk)
            count = len(enumerate_tuples(m, kk))
            if count != det:
                return ("tuples_vs_det", False, f"{count} != {det} at m={m}, k={kk}")
    return ("tuples_vs_det", True, f"k<={min(k, 3)}, m<={m_max}")


def _crossing_criterion(n_max: int) -> Check:
    ctx = PolygonContext(min(n_max, 10), 2)
    from .polygon import staircase_cells

    cells = staircase_cells(ctx)
    for d1, d2 in combinations(cells, 2):
        (a, b), (c, d) = sorted((d1, d2))
        geometric = a < c < b < d
        if is_t_crossing([d1, d2]) != geometric:
            return ("crossing_criterion", False, f"mismatch on {d1}, {d2}")
    return ("crossing_criterion", True, f"all diagonal pairs of the {ctx.n}-gon")


def _round_trips(k: int, n_max: int) -> Check:
    level = [tree_root(k)]
    n = 2 * k + 1
    while n < n_max:
        produced = []
        for tri in level:
            for _, child in children_k(tri):
                if parent_k(child) != tri:
                    return ("round_trips", False, f"parent(child) != parent at n={n + 1}")
                produced.append(child)
        seen = Counter(t.diagonals for t in produced)
        dup = [d for d, c in seen.items() if c > 1]
        if dup:
            return ("round_trips", False, f"duplicate child at n={n + 1}: {dup[0]}")
        brute = enumerate_brute(PolygonContext(n + 1, k))
        if sorted(seen) != [t.diagonals for t in brute]:
            return ("round_trips", False, f"children of level {n} do not partition level {n + 1}")
        level = sorted(produced, key=lambda t: t.diagonals)
        n += 1
    return ("round_trips", True, f"k={k}, levels up to n={n_max}")


def _pair_round_trips(m_max: int) -> Check:
    level = [ROOT_PAIR]
    for m in range(1, m_max):
        produced = []
        for enc in level:
            for _, child in pair_children(enc):
                if pair_parent(child) != enc:
                    return ("pair_round_trips", False, f"bad parent at m={m + 1}")
                produced.append(child)
        seen = Counter((e.p, e.q) for e in produced)
        if any(c > 1 for c in seen.values()):
            return ("pair_round_trips", False, f"duplicate pair child at m={m + 1}")
        expected = catalan_determinant(m + 5, 2)
        if len(produced) != expected:
            return ("pair_round_trips", False, f"{len(produced)} pairs != {expected} at m={m + 1}")
        level = produced
    return ("pair_round_trips", True, f"pairs up to m={m_max}")


def _label_coherence(n_max: int) -> Check:
    tris = [pentagon_root()]
    for n in range(5, n_max):
        nxt = []
        for tri in tris:
            expected = label_children(label2(tri))
            got = tuple(label2(child) for _, child in children2(tri))
            if got != expected:
                return ("label_coherence", False, f"labels differ below {tri.diagonals}")
            if len(set(got)) != len(got):
                return ("label_coherence", False, f"sibling labels repeat below {tri.diagonals}")
            nxt.extend(child for _, child in children2(tri))
        tris = nxt
    return ("label_coherence", True, f"2-triangulations up to n={n_max}")


def _bijection(n_max: int) -> Check:
    for n in range(5, n_max + 1):
        tris = enumerate_brute(PolygonContext(n, 2))
        images = set()
        for tri in tris:
            pq = to_paths(tri)
            if to_paths_via_tree(tri) != pq:
                return ("bijection", False, f"direct and tree maps differ on {tri.diagonals}")
            if from_paths(*pq) != tri:
                return ("bijection", False, f"inverse fails on {tri.diagonals}")
            images.add((pq[0].steps, pq[1].steps))
        expected = {
            (t.paths[0].steps, t.paths[1].steps) for t in enumerate_tuples(n - 4, 2)
        }
        if images != expected:
            return ("bijection", False, f"image at n={n} is not all non-crossing pairs")
    return ("bijection", True, f"n<={n_max}")


def _tie_breaks(n_max: int) -> Check:
    for n in range(5, n_max + 1):
        for tri in enumerate_brute(PolygonContext(n, 2)):
            a = color_diagram(tri)
            b = color_diagram(tri, flip_ties=True)
            if a.blue_counts != b.blue_counts or a.red_counts != b.red_counts:
                return ("tie_breaks", False, f"counts depend on tie-break for {tri.diagonals}")
    return ("tie_breaks", True, f"n<={n_max}")


def _lemmas(k: int, n_max: int) -> Check:
    for n in range(2 * k + 1, n_max + 1):
        for tri in enumerate_brute(PolygonContext(n, k)):
            report = check_structure_lemmas(tri)
            if not report.ok:
                return ("structure_lemmas", False, f"{report.failures()[0]} on {tri.diagonals}")
    return ("structure_lemmas", True, f"k={k}, n<={n_max}")


def _column_identity(n_max: int) -> Check:
    for n in range(5, n_max + 1):
        for tri in enumerate_brute(PolygonContext(n, 2)):
            p, q = to_paths(tri)
            enc = PairEncoding.from_paths(p, q)
            m = n - 4
            expected = [enc.q_at(m)]
            expected += [enc.p_at(j + 1) + enc.q_at(j) for j in range(m - 1, 0, -1)]
            expected.append(enc.p_at(1))
            counts = tri.column_counts()
            actual = [counts.get(j, 0) for j in range(4, n + 1)]
            if actual != expected:
                return ("column_identity", False, f"mismatch on {tri.diagonals}")
    return ("column_identity", True, f"n<={n_max}")


def _k2_specialization(n_max: int) -> Check:
    for n in range(5, n_max + 1):
        for tri in enumerate_brute(PolygonContext(n, 2)):
            via2 = {child.diagonals for _, child in children2(tri)}
            viak = {child.diagonals for _, child in children_k(tri)}
            if via2 != viak:
                return ("k2_specialization", False, f"children differ on {tri.diagonals}")
            if n >= 6 and parent_k(tri) != parent2(tri):
                return ("k2_specialization", False, f"parents differ on {tri.diagonals}")
    return ("k2_specialization", True, f"n<={n_max}")


def run_verify(k: int, n_max: int) -> list[Check]:
    checks: list[Check] = []
    checks.append(_counting(k, n_max))
    checks.append(_tuples_vs_det(k, min(5, n_max - 2 * k)))
    checks.append(_crossing_criterion(n_max))
    if k >= 2:
        checks.append(_round_trips(k, n_max))
    checks.append(_lemmas(k, min(n_max, 2 * k + 5)))
    if k == 2:
        checks.append(_pair_round_trips(min(n_max - 4, 6)))
        checks.append(_label_coherence(min(n_max, 9)))
        checks.append(_bijection(min(n_max, 9)))
        checks.append(_tie_breaks(min(n_max, 8)))
        checks.append(_column_identity(min(n_max, 9)))
        checks.append(_k2_specialization(min(n_max, 8)))
    return checks
