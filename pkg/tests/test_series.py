import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sptk.series import (
    LaurentZSeries,
    NonUnitConstantTerm,
    TruncatedSeries,
    binomial,
    delta_q,
    qpochhammer_finite,
    qpochhammer_infinite,
    rational_mod,
    series_inv,
    series_mul,
    sigma,
    tau_series,
)

from conftest import brute_partitions, pentagonal_p


def S(*c, N=None):
    return TruncatedSeries(c, len(c) - 1 if N is None else N)


def naive_product(factors, N):
    """Multiply polynomials (coefficient lists) by schoolbook expansion."""
    out = [1] + [0] * N
    for f in factors:
        new = [0] * (N + 1)
        for i, a in enumerate(out):
            for j, b in enumerate(f):
                if i + j <= N:
                    new[i + j] += a * b
        out = new
    return out


def pentagonal_series(N):
    c = [0] * (N + 1)
    for j in range(-N, N + 1):
        e = j * (3 * j - 1) // 2
        if 0 <= e <= N:
            c[e] += (-1) ** (j % 2)
    return c


class TestMul:
    def test_difference_of_squares(self):
        assert series_mul(S(1, 1, 0), S(1, -1, 0)) == S(1, 0, -1)

    def test_identity(self):
        a = S(3, -1, 4, 1, -5)
        assert a * TruncatedSeries.one(4) == a

    def test_partitions_times_euler_product(self):
        p = pentagonal_p(20)
        got = TruncatedSeries(p, 20) * qpochhammer_infinite(1, 20)
        assert got.coeffs == (1,) + (0,) * 20

    def test_precision_is_min(self):
        assert (S(1, 2, 3) * S(1, 1)).precision == 1
        assert (S(1, 2, 3) + S(1, 1)).precision == 1


class TestInverse:
    def test_geometric(self):
        assert series_inv(S(1, -1, 0, 0)).coeffs == (1, 1, 1, 1)

    def test_partition_count(self):
        assert series_inv(qpochhammer_infinite(1, 10))[10] == 42
        assert sum(1 for _ in brute_partitions(10)) == 42

    def test_involution(self):
        a = S(1, -1, 3, N=12)
        assert series_inv(series_inv(a)) == a

    def test_negative_unit(self):
        a = S(-1, 2, 5, N=8)
        assert a * series_inv(a) == TruncatedSeries.one(8)

    def test_non_unit(self):
        with pytest.raises(NonUnitConstantTerm):
            series_inv(S(2, 1))


class TestPochhammer:
    def test_empty(self):
        assert qpochhammer_finite(0, 5) == TruncatedSeries.one(5)

    def test_two_factors(self):
        assert qpochhammer_finite(2, 5).coeffs == (1, -1, -1, 1, 0, 0)

    def test_finite_agrees_with_infinite_past_precision(self):
        assert qpochhammer_finite(30, 10) == qpochhammer_infinite(1, 10)

    def test_infinite_tail_invisible(self):
        assert qpochhammer_infinite(11, 10) == TruncatedSeries.one(10)

    def test_euler_to_q7(self):
        assert qpochhammer_infinite(1, 7).coeffs == (1, -1, -1, 0, 0, 1, 0, 1)

    def test_from_q2(self):
        want = naive_product([[1, 0, -1], [1, 0, 0, -1], [1, 0, 0, 0, -1]], 4)
        assert qpochhammer_infinite(2, 4).coeffs == tuple(want) == (1, 0, -1, -1, -1)

    @pytest.mark.parametrize("N", [0, 1, 5, 26, 100])
    def test_pentagonal(self, N):
        assert list(qpochhammer_infinite(1, N).coeffs) == pentagonal_series(N)


class TestDeltaQ:
    def test_termwise(self):
        assert delta_q(S(1, 1, 0, 1)).coeffs == (0, 1, 0, 3)

    def test_constant(self):
        assert not any(delta_q(S(7, N=4)).coeffs)

    def test_np(self):
        P = series_inv(qpochhammer_infinite(1, 10))
        assert delta_q(P)[10] == 10 * pentagonal_p(10)[10] == 420


class TestIntegerHelpers:
    @pytest.mark.parametrize(
        "a,k,want",
        [(5, 2, 10), (-1, 2, 1), (-3, 4, 15), (7, 0, 1), (3, 5, 0), (-3, 1, -3)],
    )
    def test_binomial(self, a, k, want):
        assert binomial(a, k) == want

    def test_binomial_falling_factorial_oracle(self):
        from math import factorial, prod

        for a in range(-12, 13):
            for k in range(8):
                assert binomial(a, k) * factorial(k) == prod(a - i for i in range(k))

    @pytest.mark.parametrize("j,n,want", [(1, 6, 12), (3, 2, 9), (1, 1, 1), (11, 12, 1 + 2**11 + 3**11 + 4**11 + 6**11 + 12**11)])
    def test_sigma(self, j, n, want):
        assert sigma(j, n) == want

    def test_sigma_brute(self):
        for n in range(1, 80):
            assert sigma(5, n) == sum(d**5 for d in range(1, n + 1) if n % d == 0)

    def test_tau(self):
        t = tau_series(12)
        # direct expansion of q * prod (1 - q^n)^24
        factors = [[1] + [0] * (n - 1) + [-1] for n in range(1, 12) for _ in range(24)]
        want = naive_product(factors, 11)
        assert t.coeffs == (0,) + tuple(want)
        assert (t[1], t[2], t[3]) == (1, -24, 252)

    def test_tau_multiplicative(self):
        t = tau_series(60)
        for m, n in [(2, 3), (3, 5), (4, 7), (5, 11), (3, 20)]:
            assert t[m * n] == t[m] * t[n]

    def test_rational_mod(self):
        from fractions import Fraction

        assert rational_mod(Fraction(1, 2), 3) == 2
        assert rational_mod(-5, 7) == 2
        with pytest.raises(ValueError):
            rational_mod(Fraction(1, 3), 9)


coeff = st.integers(-20, 20)


def series_st(N=8):
    return st.lists(coeff, min_size=N + 1, max_size=N + 1).map(lambda c: TruncatedSeries(c, N))


def unit_series_st(N=8):
    return st.tuples(st.sampled_from([1, -1]), st.lists(coeff, min_size=N, max_size=N)).map(
        lambda t: TruncatedSeries([t[0]] + t[1], N)
    )


class TestRingLaws:
    @given(series_st(), series_st(), series_st())
    def test_associative(self, a, b, c):
        assert (a * b) * c == a * (b * c)

    @given(series_st(), series_st(), series_st())
    def test_distributive(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @given(series_st(), series_st())
    def test_commutative(self, a, b):
        assert a * b == b * a

    @given(unit_series_st())
    def test_inverse(self, a):
        assert series_mul(a, series_inv(a)) == TruncatedSeries.one(8)

    @given(series_st(), series_st())
    def test_delta_is_derivation(self, a, b):
        assert delta_q(a * b) == delta_q(a) * b + a * delta_q(b)

    @given(st.integers(-30, 30), st.integers(1, 10))
    def test_pascal(self, a, k):
        assert binomial(a, k) == binomial(a - 1, k - 1) + binomial(a - 1, k)

    @settings(max_examples=50)
    @given(series_st(12), st.integers(1, 6), st.integers(1, 3))
    def test_sparse_multipliers(self, a, m, times):
        factor = TruncatedSeries.from_dict({0: 1, m: -1}, 12) ** times
        assert a.times_one_minus(m, times) == a * factor
        assert a.div_one_minus(m, times) == a * series_inv(factor)

    @given(series_st(10), st.integers(0, 12))
    def test_shift(self, a, s):
        assert a.shift(s) == a * TruncatedSeries.monomial(s, 10)


class TestLaurent:
    def test_product_and_support(self):
        N = 6
        z = LaurentZSeries({1: TruncatedSeries.monomial(1, N)}, N)  # z q
        zinv = LaurentZSeries({-1: TruncatedSeries.monomial(1, N)}, N)
        prod = z * zinv
        assert prod.degrees() == [0]
        assert prod.coefficient(0, 2) == 1
        assert prod.respects_crank_support()
        bad = LaurentZSeries({3: TruncatedSeries.one(N)}, N)
        assert not bad.respects_crank_support()

    def test_zero_slices_dropped(self):
        s = LaurentZSeries({2: TruncatedSeries.zero(4), 0: TruncatedSeries.one(4)}, 4)
        assert s.degrees() == [0]

    def test_indexing_past_precision(self):
        with pytest.raises(IndexError):
            TruncatedSeries.one(3)[4]
