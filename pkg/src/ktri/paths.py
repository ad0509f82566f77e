"""Dyck paths, non-crossing path tuples, and exact Catalan-determinant counts.

A Dyck path of semilength m goes from (0, 0) to (m, m) with north steps N
and east steps E, never below the diagonal.  Every path factors uniquely as

    N E^{e_m} N E^{e_{m-1}} ... N E^{e_2} N E^{e_1} E

and is stored either as its step string or as the exponent tuple
(e_1, ..., e_m).  A pair (P, Q) with P never below Q is encoded by a
2 x (m+2) integer matrix of these exponents, padded with zeros; all the
tree operations in :mod:`ktri.gentree2` work on that encoding.

All arithmetic is exact integer arithmetic; no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator, Sequence

from .errors import DomainError, GuardExceeded
from .polygon import _guard_value

TUPLE_GUARD = 40


def catalan(m: int) -> int:
    """The m-th Catalan number, binom(2m, m)/(m+1), exactly."""
    if m < 0:
        raise DomainError(f"catalan undefined for m={m}")
    return comb(2 * m, m) // (m + 1)


def int_det(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix by fraction-free (Bareiss) elimination."""
    a = [list(row) for row in matrix]
    n = len(a)
    if any(len(row) != n for row in a):
        raise DomainError("determinant needs a square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for i in range(n - 1):
        if a[i][i] == 0:
            for j in range(i + 1, n):
                if a[j][i] != 0:
                    a[i], a[j] = a[j], a[i]
                    sign = -sign
                    break
            else:
                return 0
        for j in range(i + 1, n):
            for l in range(i + 1, n):
                a[j][l] = (a[j][l] * a[i][i] - a[j][i] * a[i][l]) // prev
            a[j][i] = 0
        prev = a[i][i]
    return sign * a[-1][-1]


def catalan_determinant(n: int, k: int) -> int:
    """Number of k-triangulations of an n-gon: det(C_{n-i-j})_{i,j=1..k}."""
    if k < 1:
        raise DomainError(f"k must be at least 1, got {k}")
    if k == 1:
        if n < 2:
            raise DomainError(f"need n >= 2 for k=1, got {n}")
        return catalan(n - 2)
    if n <= 2 * k:
        raise DomainError(f"need n > 2k, got n={n}, k={k}")
    matrix = [[catalan(n - i - j) for j in range(1, k + 1)] for i in range(1, k + 1)]
    return int_det(matrix)


@dataclass(frozen=True)
class DyckPath:
    """A lattice path over steps N and E staying weakly above the diagonal."""

    steps: str

    def __post_init__(self) -> None:
        north = east = 0
        for ch in self.steps:
            if ch == "N":
                north += 1
            elif ch == "E":
                east += 1
                if east > north:
                    raise DomainError(f"path {self.steps!r} dips below the diagonal")
            else:
                raise DomainError(f"bad step {ch!r} in {self.steps!r}")
        if north != east:
            raise DomainError(f"path {self.steps!r} is not balanced")

    @property
    def m(self) -> int:
        """Semilength."""
        return len(self.steps) // 2

    def sort_key(self) -> str:
        # lexicographic order with N < E
        return self.steps.replace("N", "0").replace("E", "1")

    def east_runs(self) -> tuple[int, ...]:
        """Number of E steps after each N, first N first."""
        runs = []
        for ch in self.steps:
            if ch == "N":
                runs.append(0)
            else:
                runs[-1] += 1
        return tuple(runs)

    def exponents(self) -> tuple[int, ...]:
        """The exponent tuple (e_1, ..., e_m); e_m belongs to the first N."""
        if self.m < 1:
            raise DomainError("the empty path has no exponent form")
        runs = self.east_runs()
        exps = list(reversed(runs))
        exps[0] -= 1  # final E of the template is not part of e_1
        return tuple(exps)

    @classmethod
    def from_exponents(cls, exps: Sequence[int]) -> "DyckPath":
        if not exps:
            raise DomainError("exponent form needs at least one entry")
        steps = []
        for e in reversed(exps):
            if e < 0:
                raise DomainError(f"negative exponent {e}")
            steps.append("N" + "E" * e)
        return cls("".join(steps) + "E")

    def east_prefix(self) -> tuple[int, ...]:
        """east_prefix()[i] is the number of E steps before the (i+1)-th N."""
        out = []
        east = 0
        for ch in self.steps:
            if ch == "N":
                out.append(east)
            else:
                east += 1
        out.append(east)
        return tuple(out)

    def __str__(self) -> str:
        return self.steps


def to_exponents(path: DyckPath) -> tuple[int, ...]:
    return path.exponents()


def from_exponents(exps: Sequence[int]) -> DyckPath:
    return DyckPath.from_exponents(exps)


def dominates(p: DyckPath, q: DyckPath) -> bool:
    """True iff p never goes below q (both paths of the same semilength)."""
    if p.m != q.m:
        raise DomainError(f"semilength mismatch: {p.m} vs {q.m}")
    return all(a <= b for a, b in zip(p.east_prefix(), q.east_prefix()))


@lru_cache(maxsize=None)
def all_paths(m: int) -> tuple[DyckPath, ...]:
    """All Dyck paths of semilength m in lexicographic order (N < E)."""
    if m < 0:
        raise DomainError(f"negative semilength {m}")

    def gen(prefix: list[str], north: int, east: int) -> Iterator[str]:
        if north == m and east == m:
            yield "".join(prefix)
            return
        if north < m:
            prefix.append("N")
            yield from gen(prefix, north + 1, east)
            prefix.pop()
        if east < north:
            prefix.append("E")
            yield from gen(prefix, north, east + 1)
            prefix.pop()

    return tuple(DyckPath(s) for s in gen([], 0, 0))


@dataclass(frozen=True)
class PathTuple:
    """A k-tuple (P_1, ..., P_k) where each P_i never goes below P_{i+1}."""

    m: int
    k: int
    paths: tuple[DyckPath, ...]

    def __post_init__(self) -> None:
        if len(self.paths) != self.k:
            raise DomainError(f"expected {self.k} paths, got {len(self.paths)}")
        for p in self.paths:
            if p.m != self.m:
                raise DomainError("all paths in a tuple must have equal semilength")
        for upper, lower in zip(self.paths, self.paths[1:]):
            if not dominates(upper, lower):
                raise DomainError("paths must be mutually non-crossing, top to bottom")


def enumerate_tuples(m: int, k: int, guard: int | None = None) -> list[PathTuple]:
    """All non-crossing k-tuples of semilength-m Dyck paths, lex order."""
    if m < 1 or k < 1:
        raise DomainError(f"need m >= 1 and k >= 1, got m={m}, k={k}")
    limit = _guard_value(guard, TUPLE_GUARD)
    if m * k > limit:
        raise GuardExceeded(f"m*k = {m * k} exceeds the tuple guard of {limit}")
    paths = all_paths(m)
    dom = {
        (i, j): dominates(paths[i], paths[j])
        for i in range(len(paths))
        for j in range(len(paths))
    }
    out: list[PathTuple] = []

    def rec(chosen: list[int]) -> None:
        if len(chosen) == k:
            out.append(PathTuple(m, k, tuple(paths[i] for i in chosen)))
            return
        for j in range(len(paths)):
            if not chosen or dom[(chosen[-1], j)]:
                chosen.append(j)
                rec(chosen)
                chosen.pop()

    rec([])
    return out


def _check_exponent_form(exps: Sequence[int], what: str) -> None:
    m = len(exps)
    total = 0
    for t, e in enumerate(exps, start=1):
        if e < 0:
            raise DomainError(f"{what}: negative exponent {e}")
        total += e
        if total < t - 1:
            raise DomainError(f"{what}: prefix sum {total} below {t - 1}")
    if total != m - 1:
        raise DomainError(f"{what}: exponents sum to {total}, expected {m - 1}")


@dataclass(frozen=True)
class PairEncoding:
    """Exponent matrix of a pair (P, Q) of Dyck paths with P never below Q.

    Stored as the two 1-based exponent tuples; indices above the semilength
    read as the conventional padding zeros, so the matrix rows

        top    = (p_{m+2}, p_{m+1}, p_m, ..., p_1)
        bottom = (q_{m+1}, q_m, ..., q_1, 0)

    can be reproduced verbatim.
    """

    p: tuple[int, ...]
    q: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.p) != len(self.q) or not self.p:
            raise DomainError("p and q must be nonempty tuples of equal length")
        _check_exponent_form(self.p, "upper path")
        _check_exponent_form(self.q, "lower path")
        total_p = total_q = 0
        for a, b in zip(self.p, self.q):
            total_p += a
            total_q += b
            if total_p < total_q:
                raise DomainError("upper path dips below the lower path")

    @property
    def m(self) -> int:
        return len(self.p)

    def p_at(self, j: int) -> int:
        if j < 1:
            raise DomainError(f"index {j} out of range")
        return self.p[j - 1] if j <= self.m else 0

    def q_at(self, j: int) -> int:
        if j < 1:
            raise DomainError(f"index {j} out of range")
        return self.q[j - 1] if j <= self.m else 0

    @property
    def top_row(self) -> tuple[int, ...]:
        return tuple(self.p_at(j) for j in range(self.m + 2, 0, -1))

    @property
    def bottom_row(self) -> tuple[int, ...]:
        return tuple(self.q_at(j) for j in range(self.m + 1, 0, -1)) + (0,)

    def rows(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return (self.top_row, self.bottom_row)

    @property
    def s(self) -> int:
        """Least j >= 2 with p_j * q_j = 0; always 2 <= s <= m+1."""
        for j in range(2, self.m + 2):
            if self.p_at(j) * self.q_at(j) == 0:
                return j
        raise DomainError("no splitting index; encoding is corrupt")

    def paths(self) -> tuple[DyckPath, DyckPath]:
        return DyckPath.from_exponents(self.p), DyckPath.from_exponents(self.q)

    @classmethod
    def from_paths(cls, p: DyckPath, q: DyckPath) -> "PairEncoding":
        if not dominates(p, q):
            raise DomainError("first path must never go below the second")
        return cls(p.exponents(), q.exponents())


def encode_pair(p: DyckPath, q: DyckPath) -> PairEncoding:
    return PairEncoding.from_paths(p, q)


def s_param(enc: PairEncoding) -> int:
    return enc.s
