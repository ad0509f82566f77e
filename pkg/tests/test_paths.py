"""Dyck paths, exponent forms, pair encodings, and determinant counting."""

from itertools import combinations, product

import pytest

from conftest import EXAMPLE_14GON_BOTTOM, EXAMPLE_14GON_P, EXAMPLE_14GON_Q, EXAMPLE_14GON_TOP
from ktri import (
    DomainError,
    DyckPath,
    GuardExceeded,
    PairEncoding,
    PathTuple,
    all_paths,
    catalan,
    catalan_determinant,
    dominates,
    encode_pair,
    enumerate_tuples,
    from_exponents,
    s_param,
    to_exponents,
)
from ktri.paths import int_det


class TestCatalan:
    def test_values(self):
        assert catalan(0) == 1
        assert catalan(4) == 14
        assert catalan(12) == 208012

    def test_determinant_helper(self):
        assert int_det([[1, 2], [3, 4]]) == -2
        assert int_det([[42, 14, 5], [14, 5, 2], [5, 2, 1]]) == 1
        assert int_det([[0, 1], [1, 0]]) == -1
        assert int_det([]) == 1

    def test_counts(self):
        assert catalan_determinant(8, 2) == 84
        assert catalan_determinant(7, 3) == 1
        assert catalan_determinant(5, 1) == 5
        assert [catalan_determinant(n, 2) for n in range(5, 11)] == [1, 3, 14, 84, 594, 4719]

    def test_count_bounds(self):
        with pytest.raises(DomainError):
            catalan_determinant(4, 2)
        with pytest.raises(DomainError):
            catalan_determinant(6, 0)


class TestDyckPath:
    def test_validation(self):
        DyckPath("")
        DyckPath("NNEE")
        with pytest.raises(DomainError):
            DyckPath("EN")
        with pytest.raises(DomainError):
            DyckPath("NEN")
        with pytest.raises(DomainError):
            DyckPath("NXE")

    def test_exponents_examples(self):
        assert to_exponents(DyckPath("NE")) == (0,)
        assert to_exponents(DyckPath("NENE")) == (0, 1)
        assert to_exponents(DyckPath(EXAMPLE_14GON_P)) == (2, 2, 1, 1, 0, 0, 2, 0, 1, 0)

    def test_round_trip_exhaustive(self):
        for m in range(1, 8):
            for p in all_paths(m):
                assert from_exponents(to_exponents(p)) == p

    def test_from_exponents_rejects_bad_input(self):
        with pytest.raises(DomainError):
            from_exponents(())
        with pytest.raises(DomainError):
            from_exponents((-1,))
        with pytest.raises(DomainError):
            from_exponents((2, 0))  # dips below the diagonal
        with pytest.raises(DomainError):
            DyckPath("").exponents()

    def test_all_paths_counts_and_order(self):
        for m in range(0, 8):
            paths = all_paths(m)
            assert len(paths) == catalan(m)
            keys = [p.sort_key() for p in paths]
            assert keys == sorted(keys)


class TestDominates:
    def test_examples(self):
        assert dominates(DyckPath("NNEE"), DyckPath("NENE"))
        assert not dominates(DyckPath("NENE"), DyckPath("NNEE"))
        assert dominates(DyckPath(EXAMPLE_14GON_P), DyckPath(EXAMPLE_14GON_Q))
        with pytest.raises(DomainError):
            dominates(DyckPath("NE"), DyckPath("NNEE"))

    def test_partial_order(self):
        for m in range(1, 6):
            paths = all_paths(m)
            for p in paths:
                assert dominates(p, p)
            for p, q in combinations(paths, 2):
                if dominates(p, q) and dominates(q, p):
                    assert p == q
            for p, q, r in product(paths, repeat=3):
                if dominates(p, q) and dominates(q, r):
                    assert dominates(p, r)

    def test_prefix_sum_equivalence(self):
        # domination of the step walks == domination of exponent prefix sums
        for m in range(1, 6):
            for p, q in product(all_paths(m), repeat=2):
                pe, qe = to_exponents(p), to_exponents(q)
                sums = all(
                    sum(pe[:t]) >= sum(qe[:t]) for t in range(1, m + 1)
                )
                assert dominates(p, q) == sums, (p, q)


class TestPairEncoding:
    def test_root(self):
        enc = encode_pair(DyckPath("NE"), DyckPath("NE"))
        assert enc.rows() == ((0, 0, 0), (0, 0, 0))
        assert s_param(enc) == 2

    def test_example_pair(self):
        enc = encode_pair(DyckPath(EXAMPLE_14GON_P), DyckPath(EXAMPLE_14GON_Q))
        assert enc.top_row == EXAMPLE_14GON_TOP
        assert enc.bottom_row == EXAMPLE_14GON_BOTTOM
        assert s_param(enc) == 3

    def test_staircase(self):
        enc = encode_pair(DyckPath("NENE"), DyckPath("NENE"))
        assert enc.rows() == ((0, 0, 1, 0), (0, 1, 0, 0))
        assert s_param(enc) == 3  # m + 1 on the staircase

    def test_rejects_crossing_pair(self):
        with pytest.raises(DomainError):
            encode_pair(DyckPath("NENE"), DyckPath("NNEE"))

    def test_s_bounds(self):
        for m in range(1, 6):
            for p, q in product(all_paths(m), repeat=2):
                if not dominates(p, q):
                    continue
                s = encode_pair(p, q).s
                assert 2 <= s <= m + 1

    def test_paths_round_trip(self):
        for m in range(1, 6):
            for p, q in product(all_paths(m), repeat=2):
                if not dominates(p, q):
                    continue
                assert encode_pair(p, q).paths() == (p, q)

    def test_invariant_matches_domination(self):
        # the encoding constructor accepts exactly the dominating pairs
        for m in range(1, 6):
            for p, q in product(all_paths(m), repeat=2):
                ok = dominates(p, q)
                try:
                    PairEncoding(to_exponents(p), to_exponents(q))
                    built = True
                except DomainError:
                    built = False
                assert built == ok, (p, q)


class TestEnumerateTuples:
    def test_pairs_m2(self):
        got = [tuple(p.steps for p in t.paths) for t in enumerate_tuples(2, 2)]
        assert got == [("NNEE", "NNEE"), ("NNEE", "NENE"), ("NENE", "NENE")]

    def test_single_triple(self):
        got = enumerate_tuples(1, 3)
        assert len(got) == 1
        assert [p.steps for p in got[0].paths] == ["NE", "NE", "NE"]

    def test_triples_m2(self):
        assert len(enumerate_tuples(2, 3)) == 4 == catalan_determinant(8, 3)

    def test_counts_match_determinant(self):
        for k in (1, 2, 3):
            for m in range(1, 6):
                assert len(enumerate_tuples(m, k)) == catalan_determinant(m + 2 * k, k)

    def test_single_path_count_is_catalan(self):
        for m in range(1, 8):
            assert len(enumerate_tuples(m, 1)) == catalan(m)

    def test_tuple_validation(self):
        with pytest.raises(DomainError):
            PathTuple(2, 2, (DyckPath("NENE"), DyckPath("NNEE")))
        with pytest.raises(DomainError):
            PathTuple(2, 2, (DyckPath("NNEE"), DyckPath("NE")))

    def test_guard(self):
        with pytest.raises(GuardExceeded):
            enumerate_tuples(30, 2)
