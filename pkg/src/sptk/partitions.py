"""Partitions, rank and crank, and the tables N(m, n) and M(m, n).

The crank table follows the usual convention for n = 1: the single
partition of 1 is spread as M(-1, 1) = M(1, 1) = 1, M(0, 1) = -1.  This
row is what the crank generating function produces, and it is what every
moment formula downstream expects.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Literal

from .series import LaurentZSeries, TruncatedSeries, qpochhammer_infinite, series_inv

__all__ = [
    "EmptyPartition",
    "OutOfRange",
    "Partition",
    "StatTable",
    "partitions_of",
    "partition_count",
    "rank",
    "crank",
    "build_stat_table",
    "residue_count",
    "crank_table_from_gf",
    "rank_table_from_gf",
    "stat_table",
]

Kind = Literal["rank", "crank"]

CRANK_ROW_ONE = {-1: 1, 0: -1, 1: 1}


class EmptyPartition(ValueError):
    pass


class OutOfRange(IndexError):
    pass


@dataclass(frozen=True)
class Partition:
    """A partition in frequency form: distinct parts ascending, with multiplicities."""

    parts: tuple[int, ...]
    freqs: tuple[int, ...]

    def __post_init__(self):
        if len(self.parts) != len(self.freqs):
            raise ValueError("parts and freqs differ in length")
        if any(f < 1 for f in self.freqs):
            raise ValueError("frequencies must be positive")
        if any(p < 1 for p in self.parts) or any(
            a >= b for a, b in zip(self.parts, self.parts[1:])
        ):
            raise ValueError("parts must be positive and strictly increasing")

    @classmethod
    def from_parts(cls, parts) -> Partition:
        counts: dict[int, int] = {}
        for p in parts:
            counts[p] = counts.get(p, 0) + 1
        keys = sorted(counts)
        return cls(tuple(keys), tuple(counts[k] for k in keys))

    @property
    def size(self) -> int:
        return sum(p * f for p, f in zip(self.parts, self.freqs))

    @property
    def num_parts(self) -> int:
        return sum(self.freqs)

    @property
    def largest(self) -> int:
        return self.parts[-1]

    def as_list(self) -> list[int]:
        """Parts in weakly decreasing order."""
        out = []
        for p, f in zip(reversed(self.parts), reversed(self.freqs)):
            out.extend([p] * f)
        return out

    def __str__(self) -> str:
        return "+".join(map(str, self.as_list())) or "()"


def _descending(n: int) -> Iterator[list[int]]:
    # reverse lexicographic order: [n], [n-1, 1], ..., [1]*n
    if n == 0:
        yield []
        return
    a = [n]
    while True:
        yield a
        i = len(a) - 1
        while i >= 0 and a[i] == 1:
            i -= 1
        if i < 0:
            return
        rem = len(a) - i
        x = a[i] - 1
        del a[i:]
        a.append(x)
        while rem >= x:
            a.append(x)
            rem -= x
        if rem:
            a.append(rem)


def partitions_of(n: int) -> Iterator[Partition]:
    """Yield every partition of ``n`` once, largest-first lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    for a in _descending(n):
        parts: list[int] = []
        freqs: list[int] = []
        for p in reversed(a):
            if parts and parts[-1] == p:
                freqs[-1] += 1
            else:
                parts.append(p)
                freqs.append(1)
        yield Partition(tuple(parts), tuple(freqs))


@lru_cache(maxsize=None)
def _p_table(N: int) -> tuple[int, ...]:
    return series_inv(qpochhammer_infinite(1, N)).coeffs


def partition_count(n: int) -> int:
    """p(n), read off 1/(q;q)_oo."""
    if n < 0:
        return 0
    return _p_table(max(n, 64))[n]


def rank(pi: Partition) -> int:
    if not pi.parts:
        raise EmptyPartition("rank of the empty partition")
    return pi.largest - pi.num_parts


def crank(pi: Partition) -> int:
    if not pi.parts:
        raise EmptyPartition("crank of the empty partition")
    ones = pi.freqs[0] if pi.parts[0] == 1 else 0
    if ones == 0:
        return pi.largest
    bigger = sum(f for p, f in zip(pi.parts, pi.freqs) if p > ones)
    return bigger - ones


@dataclass(frozen=True)
class StatTable:
    """Dense triangle of counts for 1 <= n <= max_n, -n <= m <= n."""

    kind: str
    max_n: int
    rows: tuple[tuple[int, ...], ...]

    def count(self, m: int, n: int) -> int:
        if not 1 <= n <= self.max_n:
            raise OutOfRange(f"n={n} outside 1..{self.max_n}")
        if abs(m) > n:
            return 0
        return self.rows[n - 1][m + n]

    def row(self, n: int) -> list[tuple[int, int]]:
        if not 1 <= n <= self.max_n:
            raise OutOfRange(f"n={n} outside 1..{self.max_n}")
        return [(m, c) for m, c in zip(range(-n, n + 1), self.rows[n - 1])]

    def truncate(self, max_n: int) -> StatTable:
        if max_n > self.max_n:
            raise OutOfRange("cannot extend a table by truncation")
        return StatTable(self.kind, max_n, self.rows[:max_n])


def build_stat_table(kind: Kind, N: int) -> StatTable:
    """Count partitions of each n <= N by rank or crank, by enumeration."""
    if N < 1:
        raise ValueError("N must be positive")
    return _build_stat_table(kind, N)


@lru_cache(maxsize=8)
def _build_stat_table(kind: str, N: int) -> StatTable:
    if kind == "rank":
        stat = rank
    elif kind == "crank":
        stat = crank
    else:
        raise ValueError(f"unknown statistic {kind!r}")
    rows = []
    for n in range(1, N + 1):
        row = [0] * (2 * n + 1)
        if kind == "crank" and n == 1:
            for m, c in CRANK_ROW_ONE.items():
                row[m + 1] = c
        else:
            for pi in partitions_of(n):
                row[stat(pi) + n] += 1
        rows.append(tuple(row))
    return StatTable(kind, N, tuple(rows))


def residue_count(table: StatTable, r: int, t: int, n: int) -> int:
    """Sum of the row-n counts over statistics congruent to r mod t."""
    if t < 1:
        raise ValueError("t must be positive")
    if not 1 <= n <= table.max_n:
        raise OutOfRange(f"n={n} outside 1..{table.max_n}")
    return sum(c for m, c in table.row(n) if (m - r) % t == 0)


def _lerch_table(kind: str, N: int, exponent) -> StatTable:
    # (1/(q)_oo) * (1 + sum_n (1-z)(1-1/z)(-1)^n q^e(n) (1+q^n) / ((1-zq^n)(1-q^n/z)))
    one_minus_z_sym = LaurentZSeries(
        {0: TruncatedSeries((2,), N), 1: TruncatedSeries((-1,), N), -1: TruncatedSeries((-1,), N)},
        N,
    )
    total = LaurentZSeries.from_q(TruncatedSeries.one(N))
    n = 1
    while exponent(n) <= N:
        e = exponent(n)
        sign = -1 if n % 2 else 1
        lead = TruncatedSeries.from_dict({e: sign, e + n: sign}, N)
        # 1/((1-zq^n)(1-q^n/z)) = sum_d z^d q^(n|d|) / (1 - q^(2n))
        terms = {}
        d = 0
        while e + n * d <= N:
            s = lead.shift(n * d).div_one_minus(2 * n)
            terms[d] = s
            if d:
                terms[-d] = s
            d += 1
        total = total + LaurentZSeries(terms, N) * one_minus_z_sym
        n += 1
    gf = total * series_inv(qpochhammer_infinite(1, N))
    if not gf.respects_crank_support():
        raise RuntimeError("generating function left the support |m| <= n")
    rows = tuple(
        tuple(gf.coefficient(m, k) for m in range(-k, k + 1)) for k in range(1, N + 1)
    )
    return StatTable(kind, N, rows)


@lru_cache(maxsize=8)
def crank_table_from_gf(N: int) -> StatTable:
    """Crank table read off the two-variable crank generating function."""
    if N < 1:
        raise ValueError("N must be positive")
    return _lerch_table("crank", N, lambda n: n * (n + 1) // 2)


@lru_cache(maxsize=8)
def rank_table_from_gf(N: int) -> StatTable:
    """Rank table read off the two-variable rank generating function."""
    if N < 1:
        raise ValueError("N must be positive")
    return _lerch_table("rank", N, lambda n: n * (3 * n + 1) // 2)


def stat_table(kind: Kind, N: int) -> StatTable:
    """Fastest exact table: enumeration for small N, generating function above."""
    if N <= 40:
        return build_stat_table(kind, N)
    if kind == "crank":
        return crank_table_from_gf(N)
    if kind == "rank":
        return rank_table_from_gf(N)
    raise ValueError(f"unknown statistic {kind!r}")
