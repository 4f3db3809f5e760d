"""Congruences for spt_2, spt_3, spt_4 and the moment identities they rest on.

Targets are read from the chain-sum series (:func:`sptk.spt.spt_series`),
which reaches n = 500 in well under a second per k.  Ordinary moments for
large n come from :func:`sptk.moments.moment_vector`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .moments import moment_vector, ordinary_moment
from .partitions import partition_count, residue_count, stat_table
from .report import VerificationReport
from .series import (
    TruncatedSeries,
    qpochhammer_infinite,
    rational_mod,
    series_inv,
    sigma,
    tau_series,
)
from .spt import spt_series

__all__ = [
    "MismatchError",
    "CongruenceSpec",
    "SPECS",
    "aux_series",
    "divisor_power_series",
    "s3",
    "s4",
    "check_congruence",
    "tau_congruence_check",
    "skbt_series",
    "skbt_checks",
    "lewis_check",
    "moment_relation_checks",
    "spt_identity_check",
    "s3_closed_form_check",
    "n2mod7_check",
    "tau_rhs",
]


class MismatchError(ArithmeticError):
    """Two independent evaluations of the same quantity disagree."""


@dataclass(frozen=True)
class CongruenceSpec:
    """spt_k(n) = 0 (mod modulus) whenever n mod residue_modulus lies in residues."""

    name: str
    k: int
    modulus: int
    residue_modulus: int
    residues: frozenset[int]

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError("modulus must be at least 2")
        if not all(0 <= r < self.residue_modulus for r in self.residues):
            raise ValueError("residues must lie in 0..residue_modulus-1")

    def applies(self, n: int) -> bool:
        return n % self.residue_modulus in self.residues


SPECS = {
    s.name: s
    for s in (
        CongruenceSpec("spt2mod5", 2, 5, 5, frozenset({0, 1, 4})),
        CongruenceSpec("spt2mod7", 2, 7, 7, frozenset({0, 1, 5})),
        CongruenceSpec("spt2mod11", 2, 11, 11, frozenset({0})),
        CongruenceSpec("spt3mod7", 3, 7, 7, frozenset({0, 1, 2, 4, 5})),
        CongruenceSpec("spt3mod2", 3, 2, 4, frozenset({1})),
        CongruenceSpec("spt4mod3", 4, 3, 3, frozenset({0})),
    )
}


def check_congruence(spec: CongruenceSpec, n_max: int) -> VerificationReport:
    values = spt_series(spec.k, n_max)
    report = VerificationReport(spec.name, n_max)
    for n in range(1, n_max + 1):
        if not spec.applies(n):
            continue
        v = values[n]
        if v % spec.modulus:
            return report.fail(n, v, f"0 mod {spec.modulus}")
        report.checked += 1
    return report


@lru_cache(maxsize=16)
def divisor_power_series(j: int, N: int) -> TruncatedSeries:
    """sum_{n>=1} sigma_j(n) q^n, by a divisor sieve."""
    c = [0] * (N + 1)
    for d in range(1, N + 1):
        dj = d**j
        for m in range(d, N + 1, d):
            c[m] += dj
    return TruncatedSeries(c, N)


@lru_cache(maxsize=16)
def aux_series(which: str, N: int) -> TruncatedSeries:
    """One of ``"P"`` (1/(q;q)_oo), ``"P3"``, ``"P5"`` (P times sigma_3, sigma_5 series) or ``"Delta"``."""
    if which == "Delta":
        return tau_series(N)
    p = series_inv(qpochhammer_infinite(1, N))
    if which == "P":
        return p
    if which == "P3":
        return p * divisor_power_series(3, N)
    if which == "P5":
        return p * divisor_power_series(5, N)
    raise ValueError(f"unknown auxiliary series {which!r}")


def _crank_moments(n: int, table, orders) -> list[int]:
    if table is None:
        return [moment_vector("crank", o, max(n, 64))[n] for o in orders]
    return [ordinary_moment(table, 2 * o, n) for o in orders]


def _s3_combination(n: int, m2: int, m4: int, m6: int) -> Fraction:
    return (
        Fraction(-7, 7920) * m6
        + Fraction(60 * n + 13, 1584) * m4
        + Fraction(7 - 78 * n - 108 * n * n, 3960) * m2
    )


def _s4_combination(n: int, m2: int, m4: int, m6: int, m8: int) -> Fraction:
    return (
        Fraction(-67, 7362432) * m8
        + Fraction(491 + 1176 * n, 2629440) * m6
        - Fraction(1309 + 8400 * n + 5856 * n * n, 1051776) * m4
        + Fraction(-851 + 10966 * n + 21204 * n**2 + 12162 * n**3, 3067680) * m2
    )


def _s3_from_moments(n: int, table=None) -> Fraction:
    return _s3_combination(n, *_crank_moments(n, table, (1, 2, 3)))


def _s3_closed(n: int) -> Fraction:
    N = max(n, 64)
    p, p3, p5 = (aux_series(w, N)[n] for w in ("P", "P3", "P5"))
    return (
        Fraction(n * (5 - 12 * n - 147 * n * n), 270) * p
        + Fraction(6 * n + 1, 12) * p3
        - Fraction(7, 540) * p5
    )


def s3(n: int, table=None) -> Fraction:
    """The crank part of spt_3(n), evaluated from M_2, M_4, M_6 and from p, p_3, p_5.

    ``table`` is an optional crank StatTable covering n; without it the
    moments come from the generating functions.
    """
    if n < 1:
        raise ValueError("n must be positive")
    a = _s3_from_moments(n, table)
    b = _s3_closed(n)
    if a != b:
        raise MismatchError(f"s3({n}): moments give {a}, closed form gives {b}")
    return a


def _rank2(n: int, table=None) -> int:
    if table is None:
        return moment_vector("rank", 1, max(n, 64))[n]
    return ordinary_moment(table, 2, n)


def s4(n: int, table=None, rank_table=None) -> Fraction:
    """The crank part of spt_4(n), cross-checked against spt_4(n) minus its N_2 term."""
    if n < 1:
        raise ValueError("n must be positive")
    val = _s4_combination(n, *_crank_moments(n, table, (1, 2, 3, 4)))
    other = spt_series(4, max(n, 64))[n] - _rank4_term(n, rank_table)
    if val != other:
        raise MismatchError(f"s4({n}): moments give {val}, spt_4 minus rank term gives {other}")
    return val


def _rank4_term(n: int, rank_table=None) -> Fraction:
    return Fraction(n + 4 * n * n + 3 * n**3, 140) * _rank2(n, rank_table)


def spt_identity_check(k: int, n_max: int) -> VerificationReport:
    """spt_k(n) for k = 2, 3, 4 rebuilt from rational combinations of moments."""
    N = max(n_max, 1)
    M = {j: moment_vector("crank", j, N) for j in range(1, k + 1)}
    N2 = moment_vector("rank", 1, N)
    spt = spt_series(k, N)
    report = VerificationReport(f"spt{k}id", n_max)
    for n in range(1, n_max + 1):
        if k == 2:
            got = Fraction(6 * n - 1, 3) * M[1][n] - Fraction(5, 3) * M[2][n] + 12 * n * N2[n]
            want = 24 * spt[n]
        elif k == 3:
            got = _s3_combination(n, M[1][n], M[2][n], M[3][n]) - Fraction(
                n * (1 + 3 * n), 20
            ) * N2[n]
            want = spt[n]
        elif k == 4:
            got = _s4_combination(n, M[1][n], M[2][n], M[3][n], M[4][n]) + Fraction(
                n + 4 * n * n + 3 * n**3, 140
            ) * N2[n]
            want = spt[n]
        else:
            raise ValueError("identities are known for k = 2, 3, 4")
        if got != want:
            return report.fail(n, got, want)
        report.checked += 1
    return report


def s3_closed_form_check(n_max: int) -> VerificationReport:
    """Both evaluations of s_3, its parity on n = 1 mod 4, and the mod 8 / mod 2 steps."""
    report = VerificationReport("s3-closed", n_max)
    N = max(n_max, 64)
    p, p3, p5 = (aux_series(w, N) for w in ("P", "P3", "P5"))
    for n in range(1, n_max + 1):
        try:
            v = s3(n)
        except MismatchError as e:
            return report.fail(n, str(e), "agreement")
        if (sigma(3, n) - sigma(5, n)) % 8 or (p3[n] - p5[n]) % 8:
            return report.fail(n, "sigma_3/sigma_5 or p_3/p_5 differ mod 8", "0 mod 8")
        if (n * p[n] - p3[n]) % 2:
            return report.fail(n, "n p(n) - p_3(n) odd", "0 mod 2")
        lhs = rational_mod(4 * v, 8)
        rhs = (6 * n * (1 + n * n) * p[n] + (3 + 2 * n) * p3[n] + 7 * p5[n]) % 8
        if lhs != rhs:
            return report.fail(n, f"4 s3 = {lhs} mod 8", rhs)
        if n % 4 == 1 and rational_mod(v, 2):
            return report.fail(n, f"s3 = {v}", "0 mod 2")
        report.checked += 1
    return report


def tau_rhs(n: int) -> int:
    """The divisor-sum combination congruent to tau(n) modulo 3^6."""
    polys = (
        (1, (588, 297, 258, 9, 108, 486)),
        (3, (60, 255, 189, 612, 162)),
        (5, (306, 297, 540, 180)),
        (7, (177, 576, 454)),
        (9, (201, 690)),
        (11, (117,)),
    )
    total = 0
    for j, coeffs in polys:
        total += sum(c * n**i for i, c in enumerate(coeffs)) * sigma(j, n)
    return total


def tau_congruence_check(n_max: int) -> VerificationReport:
    delta = tau_series(n_max)
    report = VerificationReport("taumod729", n_max)
    for n in range(1, n_max + 1):
        if (delta[n] - tau_rhs(n)) % 729:
            return report.fail(n, delta[n] % 729, tau_rhs(n) % 729)
        report.checked += 1
    return report


def skbt_series(k: int, b: int, t: int, N: int) -> TruncatedSeries:
    """sum_{n != 0} (-1)^n q^(n(kn+1)/2 + bn) / (1 - q^(tn)), to q^N.

    Negative n are rewritten with 1/(1 - q^(-m)) = -q^m/(1 - q^m) before
    expanding, so every term is an honest power series.
    """
    if k not in (1, 3):
        raise ValueError("k must be 1 or 3")
    if t < 1:
        raise ValueError("t must be positive")
    out = [0] * (N + 1)
    bound = 2 * (N + abs(b) + t) + 2
    for n in range(1, bound + 1):
        sign = -1 if n % 2 else 1
        pos = n * (k * n + 1) // 2 + b * n
        neg = n * (k * n - 1) // 2 - b * n + t * n
        for e, s in ((pos, sign), (neg, -sign)):
            if e < 0:
                raise ValueError(f"term n={n} has negative exponent {e}")
            for i in range(e, N + 1, t * n):
                out[i] += s
    return TruncatedSeries(out, N)


def skbt_checks(N: int, n_max: int = 30) -> VerificationReport:
    """S_1(4,9) = S_3(4,9) = 0, antisymmetry, and the residue-count generating functions."""
    report = VerificationReport("skbt", N)
    for k in (1, 3):
        if any(skbt_series(k, 4, 9, N).coeffs):
            return report.fail(0, f"S_{k}(4,9) nonzero", 0)
        for t in (5, 7, 9, 11):
            for b in range(t):
                lhs = skbt_series(k, b, t, N)
                rhs = -skbt_series(k, t - 1 - b, t, N)
                if lhs != rhs:
                    return report.fail(0, f"S_{k}({b},{t})", f"-S_{k}({t - 1 - b},{t})")
        report.checked += 1
    p = aux_series("P", n_max)
    crank_gf = skbt_series(1, 5, 9, n_max) * p
    rank_gf = skbt_series(3, 5, 9, n_max) * p
    ct, rt = stat_table("crank", n_max), stat_table("rank", n_max)
    for n in range(1, n_max + 1):
        if crank_gf[n] != residue_count(ct, 4, 9, n):
            return report.fail(n, crank_gf[n], f"M(4,9,{n})={residue_count(ct, 4, 9, n)}")
        if rank_gf[n] != residue_count(rt, 4, 9, n):
            return report.fail(n, rank_gf[n], f"N(4,9,{n})={residue_count(rt, 4, 9, n)}")
        report.checked += 1
    return report


def lewis_check(n_max: int) -> VerificationReport:
    """M(4,9,3n) = N(4,9,3n), and spt_4(n) = M(4,9,n) - N(4,9,n) mod 3, for n <= n_max."""
    ct, rt = stat_table("crank", n_max), stat_table("rank", n_max)
    spt4 = spt_series(4, n_max)
    report = VerificationReport("lewis", n_max)
    for n in range(1, n_max + 1):
        mc, nc = residue_count(ct, 4, 9, n), residue_count(rt, 4, 9, n)
        if n % 3 == 0 and mc != nc:
            return report.fail(n, f"M(4,9,{n})={mc}", f"N(4,9,{n})={nc}")
        if (spt4[n] - (mc - nc)) % 3:
            return report.fail(n, spt4[n] % 3, (mc - nc) % 3)
        report.checked += 1
    return report


def moment_relation_checks(n_max: int) -> VerificationReport:
    """Exact moment identities and the mod 5, 7, 11 relations used for spt_2 and spt_3."""
    N = max(n_max, 1)
    M2, M4 = moment_vector("crank", 1, N), moment_vector("crank", 2, N)
    N2, N4 = moment_vector("rank", 1, N), moment_vector("rank", 2, N)
    spt2, spt3 = spt_series(2, N), spt_series(3, N)
    report = VerificationReport("moment-relations", n_max)
    for n in range(1, n_max + 1):
        p = partition_count(n)
        m2, m4, n2, n4 = M2[n], M4[n], N2[n], N4[n]
        checks = [
            ("M2 = 2np", m2, 2 * n * p, None),
            ("N4 identity", n4,
             Fraction(-2 * (3 * n + 1), 3) * m2 + Fraction(8, 3) * m4 + (1 - 12 * n) * n2, None),
            ("spt2 identity", 24 * spt2[n],
             Fraction(6 * n - 1, 3) * m2 - Fraction(5, 3) * m4 + 12 * n * n2, None),
            ("M4/M2 mod 7", (n + 2) * m4, -(6 * n * n + 4 * n + 1) * m2, 7),
            ("M4/M2 mod 11", (n + 5) ** 3 * m4,
             (5 * n**4 + 10 * n**3 + 8 * n**2 + 8 * n + 9) * m2, 11),
            ("spt2 mod 7 reduction", spt2[n], m4 + 3 * (n + 1) * m2 + 4 * n * n2, 7),
            ("spt2 mod 11 reduction", spt2[n], m4 + (n + 9) * m2 + 6 * n * n2, 11),
            ("spt3 mod 7 reduction", spt3[n],
             n * (5 * n + 4) * m2 + (3 + 2 * n) * m4 + n * (3 * n + 1) * n2, 7),
        ]
        if n % 7 not in (0, 2, 6):
            checks.append(("N2 mod 7", n2, (6 * n + 1) * p, 7))
        if n % 5 not in (0, 3):
            checks.append(("N2 mod 5", n2, (n + 4) * p, 5))
        for label, got, want, mod in checks:
            ok = got == want if mod is None else (got - want) % mod == 0
            if not ok:
                return report.fail(n, f"{label}: {got}", want)
        report.checked += 1
    return report


def n2mod7_check(n_max: int) -> VerificationReport:
    N2 = moment_vector("rank", 1, max(n_max, 1))
    report = VerificationReport("n2mod7", n_max)
    for n in range(1, n_max + 1):
        if n % 7 in (0, 2, 6):
            continue
        want = (6 * n + 1) * partition_count(n)
        if (N2[n] - want) % 7:
            return report.fail(n, N2[n] % 7, want % 7)
        report.checked += 1
    return report
