"""Higher order spt-functions spt_k(n) and the Bailey-chain multi-sums behind them.

Three independent routes are provided:

* :func:`spt_combinatorial` sums the weight omega_k over the partitions of n;
* :func:`spt_from_moments` takes mu_2k(n) - eta_2k(n) from rank/crank tables;
* :func:`spt_series` expands the k-fold sum over chains n_k >= ... >= n_1 >= 1.

The chain sums are evaluated level by level from the largest index down,
keeping a running suffix sum per level, so no chain is ever enumerated.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterator

from .moments import symmetrized_crank_series, symmetrized_moment, symmetrized_rank_series
from .partitions import Partition, partition_count, partitions_of, stat_table
from .report import VerificationReport
from .series import (
    TruncatedSeries,
    binomial,
    qpochhammer_finite,
    qpochhammer_infinite,
    series_inv,
    sigma,
)

__all__ = [
    "compositions",
    "weight",
    "weights",
    "spt_combinatorial",
    "spt_combinatorial_table",
    "spt_from_moments",
    "spt_series",
    "a_k_series",
    "chain_sum",
    "BaileyPair",
    "CRANK_PAIR",
    "RANK_PAIR",
    "bailey_verify",
    "mainthm_check",
    "three_route_check",
    "sptkid_check",
    "mukid_check",
    "symnid2_check",
    "a1_sigma_check",
    "spt1_identity_check",
]


def compositions(k: int) -> Iterator[tuple[int, ...]]:
    """All 2**(k-1) compositions of k, by number of parts, then largest first."""
    if k < 1:
        raise ValueError("k must be positive")
    for r in range(1, k + 1):
        batch = []
        for cuts in combinations(range(1, k), r - 1):
            edges = (0,) + cuts + (k,)
            batch.append(tuple(b - a for a, b in zip(edges, edges[1:])))
        yield from sorted(batch, reverse=True)


def weight(k: int, pi: Partition) -> int:
    """omega_k(pi), summed composition by composition.

    For a composition (m_1, ..., m_r) the smallest part contributes
    binomial(f_1 + m_1 - 1, 2 m_1 - 1) and the remaining m_2, ..., m_r are
    placed, in order, on strictly increasing larger parts j, each
    contributing binomial(f_j + m_i, 2 m_i).
    """
    if not pi.parts:
        raise ValueError("weight of the empty partition")
    f = pi.freqs
    total = 0
    for comp in compositions(k):
        head = binomial(f[0] + comp[0] - 1, 2 * comp[0] - 1)
        if not head:
            continue
        tail = comp[1:]
        if len(tail) > len(f) - 1:
            continue
        # ways[t]: placements of tail[:t] on the larger parts seen so far
        ways = [1] + [0] * len(tail)
        for fj in f[1:]:
            for t in range(len(tail), 0, -1):
                mi = tail[t - 1]
                ways[t] += ways[t - 1] * binomial(fj + mi, 2 * mi)
        total += head * ways[len(tail)]
    return total


def weights(k_max: int, pi: Partition) -> list[int]:
    """``[omega_1(pi), ..., omega_kmax(pi)]`` in one pass.

    Equivalent to :func:`weight`: summing over ordered compositions placed
    on increasing parts is the coefficient extraction from
    prod_{j>=2} (1 + sum_m binomial(f_j + m, 2m) x^m).
    """
    f = pi.freqs
    poly = [1] + [0] * (k_max - 1)
    for fj in f[1:]:
        factor = [binomial(fj + m, 2 * m) for m in range(k_max)]
        new = [0] * k_max
        for i, a in enumerate(poly):
            if a:
                for m in range(k_max - i):
                    if factor[m]:
                        new[i + m] += a * factor[m]
        poly = new
    head = [binomial(f[0] + m - 1, 2 * m - 1) for m in range(1, k_max + 1)]
    out = []
    for k in range(1, k_max + 1):
        out.append(sum(head[m - 1] * poly[k - m] for m in range(1, k + 1)))
    return out


@lru_cache(maxsize=512)
def _spt_row(n: int, k_max: int) -> tuple[int, ...]:
    totals = [0] * k_max
    for pi in partitions_of(n):
        for i, w in enumerate(weights(k_max, pi)):
            totals[i] += w
    return tuple(totals)


def spt_combinatorial(k: int, n: int) -> int:
    """spt_k(n) as the sum of omega_k over all partitions of n."""
    if k < 1 or n < 1:
        raise ValueError("k and n must be positive")
    return _spt_row(n, max(k, 6))[k - 1]


def spt_combinatorial_table(k_max: int, n_max: int) -> dict[tuple[int, int], int]:
    """``{(n, k): spt_k(n)}`` for 1 <= n <= n_max, 1 <= k <= k_max, by enumeration."""
    km = max(k_max, 6)
    return {
        (n, k): _spt_row(n, km)[k - 1] for n in range(1, n_max + 1) for k in range(1, k_max + 1)
    }


def spt_from_moments(k: int, N: int, crank_table=None, rank_table=None) -> list[int]:
    """``[0, spt_k(1), ..., spt_k(N)]`` as mu_2k(n) - eta_2k(n)."""
    ct = crank_table if crank_table is not None else stat_table("crank", N)
    rt = rank_table if rank_table is not None else stat_table("rank", N)
    out = [0]
    for n in range(1, N + 1):
        v = symmetrized_moment(ct, 2 * k, n) - symmetrized_moment(rt, 2 * k, n)
        if v < 0:
            raise ArithmeticError(f"mu_{2 * k}({n}) - eta_{2 * k}({n}) = {v} is negative")
        out.append(v)
    return out


def _times_t(s: TruncatedSeries, m: int) -> TruncatedSeries:
    # multiply by q^m / (1 - q^m)^2
    return s.shift(m).div_one_minus(m, 2)


def _chain_levels(k: int, N: int) -> Iterator[tuple[int, TruncatedSeries]]:
    """Yield (m, U(m)) for m = N..1, U(m) the chain sum with smallest index n_1 = m."""
    if k < 1:
        raise ValueError("k must be positive")
    one = TruncatedSeries.one(N)
    suffix = [TruncatedSeries.zero(N) for _ in range(k - 1)]
    for m in range(N, 0, -1):
        u = _times_t(one, m)
        for j in range(k - 1):
            suffix[j] = suffix[j] + u
            u = _times_t(suffix[j], m)
        yield m, u


def chain_sum(
    k: int, N: int, inner: Callable[[int], TruncatedSeries | None] | None = None
) -> TruncatedSeries:
    """sum over n_k >= ... >= n_1 >= 1 of inner(n_1) q^(n_1+...+n_k) / prod (1 - q^(n_i))^2.

    ``inner`` maps the smallest index to a series factor; None means 1.
    A None return skips that index.
    """
    total = TruncatedSeries.zero(N)
    for m, u in _chain_levels(k, N):
        if inner is None:
            total = total + u
        else:
            w = inner(m)
            if w is not None:
                total = total + u * w
    return total


@lru_cache(maxsize=32)
def a_k_series(k: int, N: int) -> TruncatedSeries:
    """MacMahon's A_k(q): the k-fold chain sum with no extra factor."""
    return chain_sum(k, N)


@lru_cache(maxsize=32)
def spt_series(k: int, N: int) -> TruncatedSeries:
    """Generating function of spt_k(n): the chain sum with 1/(q^(n_1+1);q)_oo.

    Sweeping m downward, X_m = U(m) + (1 - q^(m+1)) X_(m+1) equals
    (q^(m+1);q)_oo times the partial sum over n_1 >= m, so the total is
    X_1 / (q^2;q)_oo.
    """
    acc = TruncatedSeries.zero(N)
    for m, u in _chain_levels(k, N):
        acc = u + acc.times_one_minus(m + 1)
    for i in range(2, N + 1):
        acc = acc.div_one_minus(i)
    return acc


@dataclass(frozen=True)
class BaileyPair:
    """A Bailey pair relative to a = 1, given as closed-form rules per index."""

    label: str
    alpha: Callable[[int, int], TruncatedSeries]
    beta: Callable[[int, int], TruncatedSeries]


def _alpha_lerch(quad: Callable[[int], int]):
    def alpha(n: int, N: int) -> TruncatedSeries:
        if n == 0:
            return TruncatedSeries.one(N)
        sign = -1 if n % 2 else 1
        e = quad(n)
        return TruncatedSeries.from_dict({e: sign, e + n: sign}, N)

    return alpha


def _beta_unit(n: int, N: int) -> TruncatedSeries:
    return TruncatedSeries.one(N) if n == 0 else TruncatedSeries.zero(N)


def _beta_inverse_pochhammer(n: int, N: int) -> TruncatedSeries:
    s = TruncatedSeries.one(N)
    for j in range(1, n + 1):
        s = s.div_one_minus(j)
    return s


# alpha_n = (-1)^n q^(n(n-1)/2) (1+q^n), beta_n = [n = 0]
CRANK_PAIR = BaileyPair("crank", _alpha_lerch(lambda n: n * (n - 1) // 2), _beta_unit)
# alpha_n = (-1)^n q^(n(3n-1)/2) (1+q^n), beta_n = 1/(q;q)_n
RANK_PAIR = BaileyPair("rank", _alpha_lerch(lambda n: n * (3 * n - 1) // 2), _beta_inverse_pochhammer)


def _first_diff(a: TruncatedSeries, b: TruncatedSeries) -> int | None:
    for i, (x, y) in enumerate(zip(a.coeffs, b.coeffs)):
        if x != y:
            return i
    return None


def bailey_verify(pair: BaileyPair, n_max: int, N: int) -> VerificationReport:
    """Check beta_n = sum_r alpha_r / ((q;q)_(n-r) (q;q)_(n+r)) for n <= n_max."""
    report = VerificationReport(f"bailey[{pair.label}]", n_max)
    for n in range(n_max + 1):
        lhs = TruncatedSeries.zero(N)
        for r in range(n + 1):
            term = pair.alpha(r, N)
            for j in range(1, n - r + 1):
                term = term.div_one_minus(j)
            for j in range(1, n + r + 1):
                term = term.div_one_minus(j)
            lhs = lhs + term
        rhs = pair.beta(n, N)
        i = _first_diff(lhs, rhs)
        if i is not None:
            return report.fail(n, f"coefficient of q^{i} is {lhs[i]}", rhs[i])
        report.checked += 1
    return report


def mainthm_check(pair: BaileyPair, k: int, N: int) -> VerificationReport:
    """Check the iterated-Bailey identity for ``pair`` at depth k, as series to q^N.

    Left: chain sum weighted by (q;q)_(n_1)^2 beta_(n_1).  Right: the plain
    chain sum plus sum_r q^(kr) alpha_r / (1 - q^r)^(2k).
    """

    def inner(m: int):
        b = pair.beta(m, N)
        if not any(b.coeffs):
            return None
        return b * qpochhammer_finite(m, N) ** 2

    lhs = chain_sum(k, N, inner)
    rhs = a_k_series(k, N)
    for r in range(1, N // k + 1):
        rhs = rhs + pair.alpha(r, N).shift(k * r).div_one_minus(r, 2 * k)
    report = VerificationReport(f"mainthm[{pair.label}, k={k}]", N)
    i = _first_diff(lhs, rhs)
    if i is not None:
        return report.fail(i, lhs[i], rhs[i])
    report.checked = N + 1
    return report


def _series_report(name: str, got: TruncatedSeries, want: TruncatedSeries) -> VerificationReport:
    report = VerificationReport(name, min(got.precision, want.precision))
    i = _first_diff(got, want)
    if i is not None:
        return report.fail(i, got[i], want[i])
    report.checked = report.n_max + 1
    return report


def sptkid_check(k: int, N: int) -> VerificationReport:
    """The spt chain sum equals the difference of the symmetrized crank and rank series."""
    want = symmetrized_crank_series(k, N) - symmetrized_rank_series(k, N)
    return _series_report(f"sptkid[k={k}]", spt_series(k, N), want)


def mukid_check(k: int, N: int) -> VerificationReport:
    """A_k(q) / (q;q)_oo equals the symmetrized crank moment series."""
    got = a_k_series(k, N) * series_inv(qpochhammer_infinite(1, N))
    return _series_report(f"mukid[k={k}]", got, symmetrized_crank_series(k, N))


def symnid2_check(k: int, N: int) -> VerificationReport:
    """A_k minus the (q;q)_(n_1)-weighted chain sum is the rank Lerch sum."""
    weighted = chain_sum(k, N, lambda m: qpochhammer_finite(m, N))
    lerch = TruncatedSeries.zero(N)
    n = 1
    while n * (3 * n - 1) // 2 + k * n <= N:
        e = n * (3 * n - 1) // 2 + k * n
        sign = 1 if n % 2 else -1
        lerch = lerch + TruncatedSeries.from_dict({e: sign, e + n: sign}, N).div_one_minus(n, 2 * k)
        n += 1
    return _series_report(f"symnid2[k={k}]", a_k_series(k, N) - weighted, lerch)


def a1_sigma_check(N: int) -> VerificationReport:
    """Coefficients of A_1(q) are sigma_1(n)."""
    a1 = a_k_series(1, N)
    report = VerificationReport("A1=sigma1", N)
    for n in range(1, N + 1):
        if a1[n] != sigma(1, n):
            return report.fail(n, a1[n], sigma(1, n))
        report.checked += 1
    return report


def three_route_check(k: int, n_max: int) -> VerificationReport:
    """Combinatorial, moment-difference and series routes agree for n <= n_max."""
    report = VerificationReport(f"three-route[k={k}]", n_max)
    moments = spt_from_moments(k, n_max)
    series = spt_series(k, n_max)
    for n in range(1, n_max + 1):
        comb = spt_combinatorial(k, n)
        if not comb == moments[n] == series[n]:
            return report.fail(n, f"comb={comb}, moments={moments[n]}, series={series[n]}", "all equal")
        report.checked += 1
    return report


def spt1_identity_check(n_max: int) -> VerificationReport:
    """spt_1(n) = n p(n) - N_2(n)/2 and equals the count of smallest parts."""
    rt = stat_table("rank", n_max)
    series = spt_series(1, n_max)
    report = VerificationReport("spt1", n_max)
    for n in range(1, n_max + 1):
        n2 = sum(m * m * c for m, c in rt.row(n))
        want = n * partition_count(n) - n2 // 2
        if n2 % 2 or series[n] != want:
            return report.fail(n, series[n], want)
        report.checked += 1
    return report
