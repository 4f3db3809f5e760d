"""Ordinary and symmetrized rank/crank moments.

Symmetrized moments are binomial-weighted sums over a :class:`StatTable`;
their generating functions are Lerch-type sums divided by ``(q;q)_oo``.
The S* triangle converts symmetrized moments to ordinary ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from .partitions import OutOfRange, StatTable, partition_count, stat_table
from .report import VerificationReport
from .series import TruncatedSeries, binomial, qpochhammer_infinite, series_inv

__all__ = [
    "StirlingStarTriangle",
    "MomentVector",
    "ordinary_moment",
    "symmetrized_moment",
    "symmetrized_rank_series",
    "symmetrized_crank_series",
    "stirling_star",
    "g_eval",
    "ordinary_from_symmetrized",
    "moment_vector",
    "verify_inequality",
    "second_crank_moment_check",
    "odd_symmetrized_zero_check",
    "moment_conversion_check",
]


def _check_n(table: StatTable, n: int) -> None:
    if not 1 <= n <= table.max_n:
        raise OutOfRange(f"n={n} outside 1..{table.max_n}")


def ordinary_moment(table: StatTable, two_k: int, n: int) -> int:
    """``sum_m m**two_k * count(m, n)``."""
    if two_k < 1 or two_k % 2:
        raise ValueError("two_k must be a positive even integer")
    _check_n(table, n)
    return sum(m**two_k * c for m, c in table.row(n))


def symmetrized_moment(table: StatTable, k: int, n: int) -> int:
    """``sum_m binomial(m + floor((k-1)/2), k) * count(m, n)``.

    Odd ``k`` is allowed; the result is then zero by symmetry of the table.
    """
    if k < 1:
        raise ValueError("k must be positive")
    _check_n(table, n)
    shift = (k - 1) // 2
    return sum(binomial(m + shift, k) * c for m, c in table.row(n))


def _lerch_moment_series(k: int, N: int, exponent) -> TruncatedSeries:
    # (1/(q)_oo) * sum_{n>=1} (-1)^(n-1) q^e(n) (1+q^n) / (1-q^n)^(2k)
    if k < 1:
        raise ValueError("k must be positive")
    inner = TruncatedSeries.zero(N)
    n = 1
    while exponent(n, k) <= N:
        e = exponent(n, k)
        sign = 1 if n % 2 else -1
        term = TruncatedSeries.from_dict({e: sign, e + n: sign}, N)
        inner = inner + term.div_one_minus(n, 2 * k)
        n += 1
    return inner * series_inv(qpochhammer_infinite(1, N))


@lru_cache(maxsize=64)
def symmetrized_rank_series(k: int, N: int) -> TruncatedSeries:
    """Generating function of eta_{2k}(n)."""
    return _lerch_moment_series(k, N, lambda n, k: n * (3 * n - 1) // 2 + k * n)


@lru_cache(maxsize=64)
def symmetrized_crank_series(k: int, N: int) -> TruncatedSeries:
    """Generating function of mu_{2k}(n)."""
    return _lerch_moment_series(k, N, lambda n, k: n * (n - 1) // 2 + k * n)


@dataclass(frozen=True)
class StirlingStarTriangle:
    """S*(n, k) for 1 <= k <= n <= max_n; ``rows[n-1][k-1]``."""

    rows: tuple[tuple[int, ...], ...]

    @property
    def max_n(self) -> int:
        return len(self.rows)

    def __call__(self, n: int, k: int) -> int:
        if not 1 <= n <= self.max_n:
            raise OutOfRange(f"n={n} outside 1..{self.max_n}")
        if k < 1 or k > n:
            return 0
        return self.rows[n - 1][k - 1]

    def flat(self) -> list[int]:
        return [x for row in self.rows for x in row]


@lru_cache(maxsize=8)
def stirling_star(max_n: int) -> StirlingStarTriangle:
    """Central factorial numbers: S*(n+1, k) = S*(n, k-1) + k^2 S*(n, k)."""
    if max_n < 1:
        raise ValueError("max_n must be positive")
    rows = [(1,)]
    for n in range(1, max_n):
        prev = rows[-1]
        row = []
        for k in range(1, n + 2):
            left = prev[k - 2] if k >= 2 else 0
            here = prev[k - 1] if k <= n else 0
            row.append(left + k * k * here)
        rows.append(tuple(row))
    return StirlingStarTriangle(tuple(rows))


def g_eval(k: int, x: int) -> int:
    """``prod_{j<k} (x^2 - j^2)``."""
    if k < 1:
        raise ValueError("k must be positive")
    out = 1
    for j in range(k):
        out *= x * x - j * j
    return out


def ordinary_from_symmetrized(table: StatTable, k: int, n: int) -> int:
    """The ordinary 2k-th moment rebuilt from symmetrized moments of orders 2, 4, ..., 2k."""
    if k < 1:
        raise ValueError("k must be positive")
    tri = stirling_star(k)
    return sum(
        factorial(2 * j) * tri(k, j) * symmetrized_moment(table, 2 * j, n)
        for j in range(1, k + 1)
    )


@dataclass(frozen=True)
class MomentVector:
    """``values[n]`` for 0 <= n <= N of one moment family at order 2k."""

    kind: str
    k: int
    values: tuple[int, ...]

    def __getitem__(self, n: int) -> int:
        return self.values[n]


_MOMENT_KINDS = ("crank", "rank", "mu", "eta")


@lru_cache(maxsize=64)
def moment_vector(kind: str, k: int, N: int) -> MomentVector:
    """Moments of order 2k for n <= N from the generating functions.

    ``kind`` is ``"crank"`` (M_2k), ``"rank"`` (N_2k), ``"mu"`` or ``"eta"``.
    Ordinary moments are assembled from symmetrized series through S*, so
    no partition enumeration is needed and N may be large.
    """
    if kind not in _MOMENT_KINDS:
        raise ValueError(f"kind must be one of {_MOMENT_KINDS}")
    if kind in ("mu", "eta"):
        gen = symmetrized_crank_series if kind == "mu" else symmetrized_rank_series
        return MomentVector(kind, k, gen(k, N).coeffs)
    gen = symmetrized_crank_series if kind == "crank" else symmetrized_rank_series
    tri = stirling_star(k)
    total = TruncatedSeries.zero(N)
    for j in range(1, k + 1):
        total = total + factorial(2 * j) * tri(k, j) * gen(j, N)
    return MomentVector(kind, k, total.coeffs)


def verify_inequality(k_max: int, n_max: int) -> VerificationReport:
    """Check M_2k(n) > N_2k(n) and mu_2k(n) > eta_2k(n) for 1 <= k <= n."""
    crank_t = stat_table("crank", n_max)
    rank_t = stat_table("rank", n_max)
    report = VerificationReport("inequality", n_max)
    for n in range(1, n_max + 1):
        for k in range(1, min(k_max, n) + 1):
            big_m = ordinary_moment(crank_t, 2 * k, n)
            big_n = ordinary_moment(rank_t, 2 * k, n)
            if not big_m > big_n:
                return report.fail(n, f"M_{2 * k}={big_m} <= N_{2 * k}={big_n}", f"> {big_n}")
            mu = symmetrized_moment(crank_t, 2 * k, n)
            eta = symmetrized_moment(rank_t, 2 * k, n)
            if not mu > eta:
                return report.fail(n, f"mu_{2 * k}={mu} <= eta_{2 * k}={eta}", f"> {eta}")
            report.checked += 1
    return report


def second_crank_moment_check(n_max: int) -> VerificationReport:
    """M_2(n) = 2 n p(n)."""
    m2 = moment_vector("crank", 1, n_max)
    report = VerificationReport("M2=2np", n_max)
    for n in range(1, n_max + 1):
        want = 2 * n * partition_count(n)
        if m2[n] != want:
            return report.fail(n, m2[n], want)
        report.checked += 1
    return report


def odd_symmetrized_zero_check(k_max: int, n_max: int) -> VerificationReport:
    """mu_k(n) and eta_k(n) vanish for odd k, computed rather than assumed."""
    crank_t = stat_table("crank", n_max)
    rank_t = stat_table("rank", n_max)
    report = VerificationReport("symm-odd-zero", n_max)
    for n in range(1, n_max + 1):
        for k in range(1, k_max + 1, 2):
            for t in (crank_t, rank_t):
                v = symmetrized_moment(t, k, n)
                if v:
                    return report.fail(n, f"{t.kind} order {k}: {v}", 0)
            report.checked += 1
    return report


def moment_conversion_check(k_max: int, n_max: int) -> VerificationReport:
    """Ordinary moments rebuilt through S* match the direct sums, for both statistics."""
    report = VerificationReport("moment-convert", n_max)
    for kind in ("crank", "rank"):
        t = stat_table(kind, n_max)
        for n in range(1, n_max + 1):
            for k in range(1, k_max + 1):
                direct = ordinary_moment(t, 2 * k, n)
                rebuilt = ordinary_from_symmetrized(t, k, n)
                if direct != rebuilt:
                    return report.fail(n, f"{kind} 2k={2 * k}: {rebuilt}", direct)
                report.checked += 1
    return report
