from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sptk.partitions import (
    EmptyPartition,
    OutOfRange,
    Partition,
    build_stat_table,
    crank,
    crank_table_from_gf,
    partition_count,
    partitions_of,
    rank,
    rank_table_from_gf,
    residue_count,
    stat_table,
)

from conftest import brute_partitions, pentagonal_p

P = Partition.from_parts


def conjugate(parts):
    parts = sorted(parts, reverse=True)
    return [sum(1 for p in parts if p > i) for i in range(parts[0])] if parts else []


def crank_oracle(parts):
    """Crank straight from its definition on a part list."""
    ones = parts.count(1)
    if ones == 0:
        return max(parts)
    return sum(1 for p in parts if p > ones) - ones


class TestPartitionType:
    def test_frequency_form(self):
        pi = P([2, 1, 1])
        assert pi.parts == (1, 2) and pi.freqs == (2, 1)
        assert (pi.size, pi.num_parts, pi.largest) == (4, 3, 2)
        assert pi.as_list() == [2, 1, 1]
        assert str(pi) == "2+1+1"

    @pytest.mark.parametrize("parts,freqs", [((2, 1), (1, 1)), ((1,), (0,)), ((0,), (1,)), ((1, 2), (1,))])
    def test_invalid(self, parts, freqs):
        with pytest.raises(ValueError):
            Partition(parts, freqs)

    def test_empty_statistics(self):
        empty = P([])
        with pytest.raises(EmptyPartition):
            rank(empty)
        with pytest.raises(EmptyPartition):
            crank(empty)


class TestEnumeration:
    def test_four(self):
        got = [pi.as_list() for pi in partitions_of(4)]
        assert got == [[4], [3, 1], [2, 2], [2, 1, 1], [1, 1, 1, 1]]

    def test_zero(self):
        assert [pi.as_list() for pi in partitions_of(0)] == [[]]

    def test_p29(self):
        assert sum(1 for _ in partitions_of(29)) == pentagonal_p(29)[29] == 4565

    @pytest.mark.parametrize("n", range(0, 31))
    def test_matches_brute_oracle(self, n):
        ours = [tuple(pi.as_list()) for pi in partitions_of(n)]
        assert len(ours) == len(set(ours)) == pentagonal_p(30)[n]
        assert set(ours) == set(brute_partitions(n))

    def test_partition_count(self):
        p = pentagonal_p(200)
        assert [partition_count(n) for n in range(201)] == p
        assert partition_count(-1) == 0


class TestStatistics:
    @pytest.mark.parametrize("parts,want", [([3, 1], 1), ([4], 3), ([1, 1, 1, 1], -3)])
    def test_rank(self, parts, want):
        assert rank(P(parts)) == want

    @pytest.mark.parametrize("parts,want", [([4], 4), ([2, 1, 1], -2), ([2, 2], 2)])
    def test_crank(self, parts, want):
        assert crank(P(parts)) == want

    @pytest.mark.parametrize("n", range(1, 16))
    def test_conjugation_negates_rank(self, n):
        for parts in brute_partitions(n):
            assert rank(P(conjugate(parts))) == -rank(P(parts))

    @pytest.mark.parametrize("n", range(2, 16))
    def test_crank_against_definition(self, n):
        for parts in brute_partitions(n):
            assert crank(P(parts)) == crank_oracle(list(parts))

    @given(st.lists(st.integers(1, 12), min_size=1, max_size=12))
    def test_rank_bounds(self, parts):
        pi = P(parts)
        assert -pi.size < rank(pi) < pi.size or pi.size == 1


class TestTables:
    def test_crank_row_four(self):
        t = build_stat_table("crank", 4)
        assert {m: c for m, c in t.row(4) if c} == {-4: 1, -2: 1, 0: 1, 2: 1, 4: 1}

    def test_rank_row_four(self):
        t = build_stat_table("rank", 4)
        assert {m: c for m, c in t.row(4) if c} == {-3: 1, -1: 1, 0: 1, 1: 1, 3: 1}

    def test_crank_row_one_convention(self):
        for t in (build_stat_table("crank", 3), crank_table_from_gf(1)):
            assert t.row(1) == [(-1, 1), (0, -1), (1, 1)]

    def test_gf_row_four(self):
        assert crank_table_from_gf(4).count(0, 4) == 1

    @pytest.mark.parametrize("kind", ["crank", "rank"])
    def test_row_sums_and_symmetry(self, kind):
        t = stat_table(kind, 40)
        p = pentagonal_p(40)
        for n in range(1, 41):
            assert sum(c for _, c in t.row(n)) == p[n]
            for m in range(-n, n + 1):
                assert t.count(m, n) == t.count(-m, n)

    def test_gf_equals_enumeration(self):
        assert crank_table_from_gf(30) == build_stat_table("crank", 30)
        assert rank_table_from_gf(30) == build_stat_table("rank", 30)

    @pytest.mark.parametrize("kind", ["crank", "rank"])
    def test_enumeration_against_oracle(self, kind):
        stat = crank_oracle if kind == "crank" else (lambda ps: max(ps) - len(ps))
        t = build_stat_table(kind, 14)
        for n in range(2, 15):
            want = Counter(stat(list(ps)) for ps in brute_partitions(n))
            assert {m: c for m, c in t.row(n) if c} == dict(want)

    def test_large_tables_from_gf(self):
        t = stat_table("crank", 80)
        assert sum(c for _, c in t.row(80)) == pentagonal_p(80)[80]

    def test_out_of_range(self):
        t = build_stat_table("rank", 5)
        with pytest.raises(OutOfRange):
            t.count(0, 6)
        with pytest.raises(OutOfRange):
            t.row(0)
        assert t.count(9, 5) == 0
        assert t.truncate(3).max_n == 3

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            build_stat_table("weight", 3)


class TestResidueCount:
    def test_all_residues(self):
        t = stat_table("crank", 20)
        for n in range(1, 21):
            assert residue_count(t, 0, 1, n) == partition_count(n)

    def test_examples(self):
        # the single-part partition 4 has crank 4
        assert residue_count(stat_table("crank", 4), 4, 9, 4) == 1
        assert residue_count(stat_table("crank", 3), 4, 9, 3) == 0
        assert residue_count(stat_table("rank", 3), 4, 9, 3) == 0
        assert residue_count(stat_table("rank", 6), 4, 9, 6) == 1

    def test_bad_modulus(self):
        with pytest.raises(ValueError):
            residue_count(stat_table("rank", 3), 0, 0, 3)
