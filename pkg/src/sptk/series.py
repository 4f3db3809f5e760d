"""Exact truncated q-series and the integer helpers built on top of them.

Every coefficient is a Python ``int``.  A :class:`TruncatedSeries` of
precision ``N`` knows the coefficients of ``q^0 .. q^N`` and nothing beyond;
binary operations return the smaller of the two precisions.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

__all__ = [
    "NonUnitConstantTerm",
    "TruncatedSeries",
    "LaurentZSeries",
    "series_mul",
    "series_inv",
    "qpochhammer_finite",
    "qpochhammer_infinite",
    "delta_q",
    "binomial",
    "sigma",
    "tau_series",
    "rational_mod",
]


class NonUnitConstantTerm(ArithmeticError):
    """Raised when inverting a series whose constant term is not +1 or -1."""


class TruncatedSeries:
    """Formal power series in q known through ``q^precision``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[int], precision: int | None = None):
        c = [int(x) for x in coeffs]
        if precision is not None:
            if precision < 0:
                raise ValueError("precision must be nonnegative")
            if len(c) > precision + 1:
                c = c[: precision + 1]
            else:
                c.extend([0] * (precision + 1 - len(c)))
        if not c:
            raise ValueError("a series needs at least one coefficient")
        self._c = tuple(c)

    # construction helpers

    @classmethod
    def zero(cls, precision: int) -> TruncatedSeries:
        return cls((), precision)

    @classmethod
    def one(cls, precision: int) -> TruncatedSeries:
        return cls((1,), precision)

    @classmethod
    def monomial(cls, exponent: int, precision: int, coeff: int = 1) -> TruncatedSeries:
        c = [0] * (precision + 1)
        if 0 <= exponent <= precision:
            c[exponent] = coeff
        elif exponent < 0:
            raise ValueError("negative exponent in a power series")
        return cls._wrap(c)

    @classmethod
    def from_dict(cls, terms: Mapping[int, int], precision: int) -> TruncatedSeries:
        c = [0] * (precision + 1)
        for e, v in terms.items():
            if e < 0:
                raise ValueError("negative exponent in a power series")
            if e <= precision:
                c[e] += v
        return cls._wrap(c)

    @classmethod
    def _wrap(cls, c: list[int]) -> TruncatedSeries:
        obj = cls.__new__(cls)
        obj._c = tuple(c)
        return obj

    # basic protocol

    @property
    def precision(self) -> int:
        return len(self._c) - 1

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._c

    def __getitem__(self, i):
        if isinstance(i, slice):
            return self._c[i]
        if i < 0:
            raise IndexError("negative exponent")
        if i > self.precision:
            raise IndexError(f"q^{i} lies beyond precision {self.precision}")
        return self._c[i]

    def __len__(self) -> int:
        return len(self._c)

    def __iter__(self):
        return iter(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, TruncatedSeries):
            n = min(self.precision, other.precision)
            return self._c[: n + 1] == other._c[: n + 1]
        if isinstance(other, int):
            return self._c[0] == other and not any(self._c[1:])
        return NotImplemented

    __hash__ = None  # equality is up to the common precision

    def __repr__(self) -> str:
        terms = []
        for e, v in enumerate(self._c):
            if v:
                terms.append(f"{v}" if e == 0 else f"{v}*q^{e}")
        body = " + ".join(terms) if terms else "0"
        return f"TruncatedSeries({body} + O(q^{self.precision + 1}))"

    def valuation(self) -> int | None:
        for e, v in enumerate(self._c):
            if v:
                return e
        return None

    def truncate(self, precision: int) -> TruncatedSeries:
        if precision > self.precision:
            raise ValueError("cannot raise precision of a truncated series")
        return TruncatedSeries._wrap(list(self._c[: precision + 1]))

    # ring operations

    def _coerce(self, other) -> TruncatedSeries | None:
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, int):
            return TruncatedSeries((other,), self.precision)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = min(self.precision, o.precision)
        return TruncatedSeries._wrap([a + b for a, b in zip(self._c[: n + 1], o._c)])

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries._wrap([-a for a in self._c])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = min(self.precision, o.precision)
        return TruncatedSeries._wrap([a - b for a, b in zip(self._c[: n + 1], o._c)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedSeries._wrap([other * a for a in self._c])
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, e: int) -> TruncatedSeries:
        if e < 0:
            return series_inv(self) ** (-e)
        result = TruncatedSeries.one(self.precision)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # sparse multipliers, all O(precision)

    def shift(self, s: int) -> TruncatedSeries:
        """Multiply by ``q^s`` (``s >= 0``), keeping the precision."""
        if s < 0:
            raise ValueError("shift must be nonnegative")
        n = self.precision
        if s > n:
            return TruncatedSeries.zero(n)
        return TruncatedSeries._wrap([0] * s + list(self._c[: n + 1 - s]))

    def times_one_minus(self, m: int, times: int = 1) -> TruncatedSeries:
        """Multiply by ``(1 - q^m)**times``."""
        if m <= 0:
            raise ValueError("m must be positive")
        c = list(self._c)
        for _ in range(times):
            for i in range(len(c) - 1, m - 1, -1):
                c[i] -= c[i - m]
        return TruncatedSeries._wrap(c)

    def div_one_minus(self, m: int, times: int = 1) -> TruncatedSeries:
        """Multiply by ``(1 - q^m)**(-times)`` (geometric expansion)."""
        if m <= 0:
            raise ValueError("m must be positive")
        c = list(self._c)
        n = len(c)
        for _ in range(times):
            for s in range(m, n, m):
                end = min(s + m, n)
                c[s:end] = [x + y for x, y in zip(c[s:end], c[s - m : end - m])]
        return TruncatedSeries._wrap(c)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product of ``a`` and ``b`` truncated at the smaller precision."""
    n = min(a.precision, b.precision)
    ac, bc = a.coeffs, b.coeffs
    out = [0] * (n + 1)
    # iterate over the sparser operand
    if sum(1 for x in ac[: n + 1] if x) > sum(1 for x in bc[: n + 1] if x):
        ac, bc = bc, ac
    for i in range(n + 1):
        x = ac[i]
        if not x:
            continue
        for j in range(n + 1 - i):
            y = bc[j]
            if y:
                out[i + j] += x * y
    return TruncatedSeries._wrap(out)


def series_inv(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse of a series with constant term +1 or -1."""
    a0 = a.coeffs[0]
    if a0 not in (1, -1):
        raise NonUnitConstantTerm(f"constant term {a0} is not a unit in Z[[q]]")
    n = a.precision
    ac = a.coeffs
    support = [i for i in range(1, n + 1) if ac[i]]
    b = [0] * (n + 1)
    b[0] = a0
    for k in range(1, n + 1):
        s = 0
        for i in support:
            if i > k:
                break
            s += ac[i] * b[k - i]
        b[k] = -a0 * s
    return TruncatedSeries._wrap(b)


def qpochhammer_finite(n: int, N: int) -> TruncatedSeries:
    """``(q;q)_n`` truncated at ``q^N``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    s = TruncatedSeries.one(N)
    for j in range(1, min(n, N) + 1):
        s = s.times_one_minus(j)
    return s


@lru_cache(maxsize=64)
def qpochhammer_infinite(a: int, N: int) -> TruncatedSeries:
    """``(q^a;q)_oo`` truncated at ``q^N``, as the finite product over ``a <= j <= N``."""
    if a < 1:
        raise ValueError("a must be at least 1")
    s = TruncatedSeries.one(N)
    for j in range(a, N + 1):
        s = s.times_one_minus(j)
    return s


def delta_q(a: TruncatedSeries) -> TruncatedSeries:
    """The derivation ``q d/dq``."""
    return TruncatedSeries._wrap([i * x for i, x in enumerate(a.coeffs)])


def binomial(a: int, k: int) -> int:
    """Generalized binomial coefficient ``a(a-1)...(a-k+1)/k!`` for any integer ``a``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    num = 1
    den = 1
    for i in range(k):
        num *= a - i
        den *= i + 1
    return num // den


def sigma(j: int, n: int) -> int:
    """Sum of ``d**j`` over the positive divisors ``d`` of ``n``."""
    if n < 1:
        raise ValueError("n must be positive")
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d**j
            e = n // d
            if e != d:
                total += e**j
        d += 1
    return total


@lru_cache(maxsize=16)
def tau_series(N: int) -> TruncatedSeries:
    """``Delta = q * (q;q)_oo**24``; coefficient ``n`` is Ramanujan's tau(n)."""
    if N < 1:
        return TruncatedSeries.zero(N)
    eta = qpochhammer_infinite(1, N - 1)
    return TruncatedSeries((0,) + (eta**24).coeffs, N)


def rational_mod(x: Fraction | int, m: int) -> int:
    """Reduce a rational with denominator prime to ``m`` into ``0..m-1``."""
    x = Fraction(x)
    den = x.denominator
    try:
        inv = pow(den, -1, m)
    except ValueError:
        raise ValueError(f"{x} is not {m}-integral") from None
    return (x.numerator * inv) % m


class LaurentZSeries:
    """Series in q whose coefficients are Laurent polynomials in z.

    Stored as a map from z-degree to a :class:`TruncatedSeries` in q; all
    stored series share one precision.  Zero slices are dropped.
    """

    __slots__ = ("terms", "precision")

    def __init__(self, terms: Mapping[int, TruncatedSeries], precision: int):
        clean = {}
        for d, s in terms.items():
            s = s if s.precision == precision else s.truncate(precision)
            if any(s.coeffs):
                clean[d] = s
        self.terms: dict[int, TruncatedSeries] = clean
        self.precision = precision

    @classmethod
    def from_q(cls, s: TruncatedSeries) -> LaurentZSeries:
        return cls({0: s}, s.precision)

    def coefficient(self, m: int, n: int) -> int:
        s = self.terms.get(m)
        return 0 if s is None else s[n]

    def degrees(self) -> list[int]:
        return sorted(self.terms)

    def __add__(self, other: LaurentZSeries) -> LaurentZSeries:
        p = min(self.precision, other.precision)
        out = {d: s.truncate(p) for d, s in self.terms.items()}
        for d, s in other.terms.items():
            out[d] = out[d] + s if d in out else s.truncate(p)
        return LaurentZSeries(out, p)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return LaurentZSeries({d: s * other for d, s in self.terms.items()},
                                  min(self.precision, other.precision))
        if isinstance(other, int):
            return LaurentZSeries({d: s * other for d, s in self.terms.items()}, self.precision)
        if not isinstance(other, LaurentZSeries):
            return NotImplemented
        p = min(self.precision, other.precision)
        out: dict[int, TruncatedSeries] = {}
        for d1, s1 in self.terms.items():
            for d2, s2 in other.terms.items():
                prod = series_mul(s1, s2)
                d = d1 + d2
                out[d] = out[d] + prod if d in out else prod
        return LaurentZSeries(out, p)

    __rmul__ = __mul__

    def respects_crank_support(self) -> bool:
        """True when the coefficient of ``z^m q^n`` vanishes for ``|m| > n``."""
        for d, s in self.terms.items():
            v = s.valuation()
            if v is not None and v < abs(d):
                return False
        return True
