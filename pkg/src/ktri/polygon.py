"""Convex polygon diagonals, mutual crossings and k-triangulations.

Vertices of the n-gon are labeled 1..n clockwise.  A diagonal is stored as
the pair (a, b) with a < b.  Diagonals with at most k-1 vertices between
their endpoints (on either side) can never take part in a (k+1)-crossing;
they belong to every k-triangulation and are omitted from all
representations.  The remaining diagonals are exactly the cells of a
staircase-shaped array with columns k+2..n and rows 1..n-k-1, where the
diagonal (a, b) occupies row a of column b.

A k-triangulation is a maximal set of diagonals containing no
(k+1)-crossing, i.e. no k+1 diagonals that mutually cross in their
interiors.  All such sets have exactly k*(n-2k-1) (nontrivial) diagonals;
the code asserts this instead of assuming it.
"""

from __future__ import annotations

import os
from bisect import insort
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import DomainError, GuardExceeded, StructuralError

Diagonal = tuple[int, int]

BRUTE_CELL_GUARD = 40


def _guard_value(explicit: int | None, default: int) -> int:
    if explicit is not None:
        return explicit
    raw = os.environ.get("KTRI_GUARD")
    if raw:
        try:
            return int(raw)
        except ValueError as exc:
            raise DomainError(f"KTRI_GUARD must be an integer, got {raw!r}") from exc
    return default


@dataclass(frozen=True)
class PolygonContext:
    """Convex n-gon with crossing parameter k (forbidding (k+1)-crossings)."""

    n: int
    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise DomainError(f"k must be at least 1, got {self.k}")
        if self.n <= 2 * self.k:
            raise DomainError(f"need n > 2k, got n={self.n}, k={self.k}")

    @property
    def diagonal_count(self) -> int:
        """Number of nontrivial diagonals in any k-triangulation of this polygon."""
        return self.k * (self.n - 2 * self.k - 1)

    @property
    def columns(self) -> range:
        return range(self.k + 2, self.n + 1)

    @property
    def rows(self) -> range:
        return range(1, self.n - self.k)


def wrap_chord(x: int, y: int, n: int) -> Diagonal:
    """Canonical (a, b) with a < b for a chord given with labels modulo n."""
    x = (x - 1) % n + 1
    y = (y - 1) % n + 1
    if x == y:
        raise DomainError(f"degenerate chord ({x},{y})")
    return (x, y) if x < y else (y, x)


def trivial_diagonals(ctx: PolygonContext) -> frozenset[Diagonal]:
    """All diagonals that cannot take part in a k-crossing: (a, a+j) for 2 <= j <= k, mod n."""
    out = set()
    for a in range(1, ctx.n + 1):
        for j in range(2, ctx.k + 1):
            out.add(wrap_chord(a, a + j, ctx.n))
    return frozenset(out)


@lru_cache(maxsize=None)
def staircase_cells(ctx: PolygonContext) -> tuple[Diagonal, ...]:
    """Cells (a, b) housing the nontrivial diagonals, ordered by column then row."""
    cells = []
    for b in ctx.columns:
        low = max(1, b - ctx.n + ctx.k + 1)
        for a in range(low, b - ctx.k):
            cells.append((a, b))
    return tuple(cells)


def is_cell(ctx: PolygonContext, d: Diagonal) -> bool:
    a, b = d
    return 1 <= a < b - ctx.k <= ctx.n - ctx.k and a > b - ctx.n + ctx.k


def _check_members(ctx: PolygonContext, diagonals: Iterable[Diagonal]) -> tuple[Diagonal, ...]:
    out = sorted(set(diagonals))
    for d in out:
        if not is_cell(ctx, d):
            raise DomainError(f"{d} is not a nontrivial diagonal of the {ctx.n}-gon (k={ctx.k})")
    return tuple(out)


@dataclass(frozen=True)
class DiagonalSet:
    """A set of nontrivial diagonals of an n-gon, kept sorted by (a, b)."""

    ctx: PolygonContext
    diagonals: tuple[Diagonal, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "diagonals", _check_members(self.ctx, self.diagonals))

    def __len__(self) -> int:
        return len(self.diagonals)

    def __contains__(self, d: Diagonal) -> bool:
        return d in set(self.diagonals)

    def column_rows(self, b: int) -> tuple[int, ...]:
        return tuple(a for (a, c) in self.diagonals if c == b)


@dataclass(frozen=True)
class KTriangulation:
    """A maximal (k+1)-crossing-free diagonal set.

    The constructor checks membership in the staircase array and the
    cardinality k*(n-2k-1); use :func:`is_k_triangulation` or
    :meth:`certified` for the full maximality verification.
    """

    ctx: PolygonContext
    diagonals: tuple[Diagonal, ...]

    def __post_init__(self) -> None:
        diags = _check_members(self.ctx, self.diagonals)
        object.__setattr__(self, "diagonals", diags)
        if len(diags) != self.ctx.diagonal_count:
            raise DomainError(
                f"a k-triangulation of the {self.ctx.n}-gon (k={self.ctx.k}) has "
                f"{self.ctx.diagonal_count} nontrivial diagonals, got {len(diags)}"
            )

    @classmethod
    def certified(cls, ctx: PolygonContext, diagonals: Iterable[Diagonal]) -> "KTriangulation":
        candidate = DiagonalSet(ctx, tuple(diagonals))
        if not is_k_triangulation(candidate):
            raise DomainError("diagonal set is not a k-triangulation")
        return cls(ctx, candidate.diagonals)

    def __len__(self) -> int:
        return len(self.diagonals)

    def __contains__(self, d: Diagonal) -> bool:
        return d in self.diagonals

    def column_rows(self, b: int) -> tuple[int, ...]:
        return tuple(a for (a, c) in self.diagonals if c == b)

    def column_counts(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for _, b in self.diagonals:
            counts[b] = counts.get(b, 0) + 1
        return counts


def is_t_crossing(diagonals: Sequence[Diagonal]) -> bool:
    """True iff the given distinct diagonals mutually cross.

    After sorting by endpoints this is the condition
    a_1 < a_2 < ... < a_t < b_1 < b_2 < ... < b_t.
    """
    ds = sorted(diagonals)
    if not ds:
        raise DomainError("a crossing needs at least one diagonal")
    heads = [a for a, _ in ds]
    tails = [b for _, b in ds]
    if any(x >= y for x, y in zip(heads, heads[1:])):
        return False
    if any(x >= y for x, y in zip(tails, tails[1:])):
        return False
    return heads[-1] < tails[0]


def _find_crossing(
    ds: Sequence[Diagonal], t: int, required: Diagonal | None = None
) -> list[Diagonal] | None:
    """Search for a t-crossing inside ds (sorted by (a, b)).

    Depth-first extension of chains that are strictly increasing in both
    endpoints; every head must stay below the first tail, which is exactly
    the mutual-crossing criterion.  When ``required`` is given, only
    crossings containing that diagonal count.  Returns one witness or None.
    """
    n = len(ds)
    if t <= 0:
        return []
    if n < t:
        return None
    req_i = ds.index(required) if required is not None else -1
    chain: list[Diagonal] = []

    def extend(j0: int, last_a: int, last_b: int, first_b: int, has_req: bool) -> bool:
        if len(chain) == t:
            return has_req or required is None
        for j in range(j0, n):
            if n - j < t - len(chain):
                break
            a, b = ds[j]
            if a >= first_b:
                break
            if required is not None and not has_req and j > req_i:
                break
            if a > last_a and b > last_b:
                chain.append(ds[j])
                if extend(j + 1, a, b, first_b, has_req or j == req_i):
                    return True
                chain.pop()
        return False

    for i in range(n):
        if n - i < t:
            break
        if required is not None and i > req_i:
            break
        a, b = ds[i]
        chain.clear()
        chain.append(ds[i])
        if extend(i + 1, a, b, b, i == req_i):
            return list(chain)
    return None


def has_crossing(obj, t: int) -> bool:
    """True iff some t of the diagonals mutually cross (exact backtracking)."""
    diagonals = getattr(obj, "diagonals", obj)
    return _find_crossing(sorted(diagonals), t) is not None


def is_k_triangulation(obj) -> bool:
    """Full check: no (k+1)-crossing and no further diagonal can be added.

    When both conditions hold the cardinality must be k*(n-2k-1); a
    violation of that identity is raised as a structural error.
    """
    ctx: PolygonContext = obj.ctx
    diags = sorted(obj.diagonals)
    t = ctx.k + 1
    if _find_crossing(diags, t) is not None:
        return False
    members = set(diags)
    for cell in staircase_cells(ctx):
        if cell in members:
            continue
        trial = list(diags)
        insort(trial, cell)
        if _find_crossing(trial, t, required=cell) is None:
            return False
    if len(diags) != ctx.diagonal_count:
        raise StructuralError(
            f"maximal (k+1)-crossing-free set of unexpected size {len(diags)} "
            f"on the {ctx.n}-gon with k={ctx.k}"
        )
    return True


def complete_to_maximal(dset: DiagonalSet) -> KTriangulation:
    """Greedily extend a crossing-free set to a k-triangulation.

    Candidate cells are tried in staircase order (column, then row), which
    makes the result deterministic.  Rejects inputs that already contain a
    (k+1)-crossing.
    """
    ctx = dset.ctx
    t = ctx.k + 1
    current = list(dset.diagonals)
    if _find_crossing(current, t) is not None:
        raise DomainError("input already contains a (k+1)-crossing")
    members = set(current)
    for cell in staircase_cells(ctx):
        if cell in members:
            continue
        trial = list(current)
        insort(trial, cell)
        if _find_crossing(trial, t, required=cell) is None:
            current = trial
            members.add(cell)
    return KTriangulation(ctx, tuple(current))


def degree(obj, vertex: int) -> int:
    """Number of nontrivial diagonals of the set incident to the vertex."""
    ctx: PolygonContext = obj.ctx
    if not 1 <= vertex <= ctx.n:
        raise DomainError(f"vertex {vertex} out of range 1..{ctx.n}")
    return sum(1 for (a, b) in obj.diagonals if vertex in (a, b))


def enumerate_brute(ctx: PolygonContext, guard: int | None = None) -> list[KTriangulation]:
    """All k-triangulations of the polygon, by exhaustive backtracking.

    Cells are decided in staircase order; a cell may be included only when
    it completes no (k+1)-crossing, and every leaf is a set whose excluded
    cells are each blocked by the included ones, i.e. a maximal set.  The
    cardinality formula is asserted on every result, never assumed.  Output
    is sorted lexicographically by the sorted diagonal lists.
    """
    limit = _guard_value(guard, BRUTE_CELL_GUARD)
    cells = staircase_cells(ctx)
    m = len(cells)
    if m > limit:
        raise GuardExceeded(f"{m} cells exceeds the enumeration guard of {limit}")
    t = ctx.k + 1
    by_ab = sorted(cells)
    bit_of = {c: 1 << i for i, c in enumerate(cells)}

    def mask_cells(mask: int) -> list[Diagonal]:
        return [c for c in by_ab if bit_of[c] & mask]

    suffix = [0] * (m + 1)
    for i in range(m - 1, -1, -1):
        suffix[i] = suffix[i + 1] | (1 << i)

    witness: dict[int, int] = {}
    results: list[int] = []

    def rec(i: int, included: int, excluded: int) -> None:
        # Every excluded cell must still be blockable using included and
        # undecided cells; cached witness crossings keep this check cheap.
        # At a leaf the undecided part is empty, so a passing sweep states
        # that every excluded cell is blocked by the final set: maximality.
        available = included | suffix[i]
        x = excluded
        while x:
            low = x & -x
            x -= low
            w = witness.get(low)
            if w is not None and (w & ~(available | low)) == 0:
                continue
            cell = cells[low.bit_length() - 1]
            found = _find_crossing(mask_cells(available | low), t, required=cell)
            if found is None:
                return
            mask = 0
            for c in found:
                mask |= bit_of[c]
            witness[low] = mask
        if i == m:
            results.append(included)
            return
        bit = 1 << i
        if _find_crossing(mask_cells(included | bit), t, required=cells[i]) is None:
            rec(i + 1, included | bit, excluded)
        rec(i + 1, included, excluded | bit)

    rec(0, 0, 0)
    out = [KTriangulation(ctx, tuple(mask_cells(mask))) for mask in results]
    out.sort(key=lambda tri: tri.diagonals)
    return out


@dataclass(frozen=True)
class LemmaCheck:
    name: str
    passed: bool
    failures: tuple[str, ...]


@dataclass(frozen=True)
class StructureReport:
    checks: tuple[LemmaCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[str]:
        return [f"{c.name}: {msg}" for c in self.checks for msg in c.failures]


def check_structure_lemmas(obj) -> StructureReport:
    """Evaluate the structural facts every k-triangulation must satisfy.

    The checks are stated for arbitrary diagonal sets so that near-misses
    (for example a non-maximal set submitted as if it were maximal) produce
    failure witnesses instead of being rejected up front.

    - neighbor_extension: a diagonal (a, b) with a < b-k-1 is accompanied by
      (a, b-1) or by some (a', b) with a < a' <= b-k-1.
    - short_diagonal_reach: a diagonal (a, b) with a <= b-k-1 forces a short
      diagonal (i, i+k+1) for some i in a..b-k-1.
    - missing_short_support (k=2, n>=6): if (a, a+3) is absent (labels mod n)
      then both a+1 and a+2 have nonzero degree.
    - isolated_vertex_closure (k=2, n>=6): a vertex of degree 0 forces the
      diagonals (a-2, a+1) and (a-1, a+2) (labels mod n).
    """
    ctx: PolygonContext = obj.ctx
    n, k = ctx.n, ctx.k
    members = set(obj.diagonals)
    checks = []

    fails: list[str] = []
    for a, b in sorted(members):
        if a >= b - k - 1:
            continue
        if (a, b - 1) in members:
            continue
        if any(x == b and a < y <= b - k - 1 for (y, x) in members):
            continue
        fails.append(f"({a},{b}) has neither ({a},{b - 1}) nor a partner ending at {b}")
    checks.append(LemmaCheck("neighbor_extension", not fails, tuple(fails)))

    fails = []
    shorts = {a for (a, b) in members if b == a + k + 1}
    for a, b in sorted(members):
        if a > b - k - 1:
            continue
        if not any(a <= i <= b - k - 1 for i in shorts):
            fails.append(f"({a},{b}) sees no short diagonal in rows {a}..{b - k - 1}")
    checks.append(LemmaCheck("short_diagonal_reach", not fails, tuple(fails)))

    if k == 2 and n >= 6:
        degrees = {v: 0 for v in range(1, n + 1)}
        for a, b in members:
            degrees[a] += 1
            degrees[b] += 1

        fails = []
        for a in range(1, n + 1):
            if wrap_chord(a, a + 3, n) in members:
                continue
            for v in (a + 1, a + 2):
                v = (v - 1) % n + 1
                if degrees[v] == 0:
                    fails.append(f"({a},{a + 3}) absent but vertex {v} has degree 0")
        checks.append(LemmaCheck("missing_short_support", not fails, tuple(fails)))

        fails = []
        for v in range(1, n + 1):
            if degrees[v] != 0:
                continue
            for chord in (wrap_chord(v - 2, v + 1, n), wrap_chord(v - 1, v + 2, n)):
                if chord not in members:
                    fails.append(f"vertex {v} isolated but {chord} missing")
        checks.append(LemmaCheck("isolated_vertex_closure", not fails, tuple(fails)))

    return StructureReport(tuple(checks))
