"""q-object constructors against independent expansions and enumerations."""

import math

import pytest

from qsip.partitions import counting_series, enumerate_partitions
from qsip.qfactory import (CongruenceProductSpec, DivergentProduct, PochSpec,
                           congruence_product, gaussian_binomial, poch_finite,
                           poch_infinite, theta_sum)
from qsip.series import QSeries

ONES = PochSpec(1, 1)


def pentagonal_expansion(trunc):
    """Euler's expansion of (q; q): signs at generalized pentagonal numbers."""
    coeffs = [0] * (trunc + 1)
    k = 0
    while k * (3 * k - 1) // 2 <= trunc or k * (3 * k + 1) // 2 <= trunc:
        for exp in (k * (3 * k - 1) // 2, k * (3 * k + 1) // 2):
            if exp <= trunc:
                coeffs[exp] += (-1) ** k
        k += 1
    # k = 0 contributes twice above; fix the double count
    coeffs[0] -= 1
    return QSeries(coeffs, trunc=trunc)


class TestPochFinite:
    def test_empty_product(self):
        assert poch_finite(ONES, 0) == QSeries.one()

    def test_two_factors(self):
        assert poch_finite(ONES, 2) == QSeries([1, -1, -1, 1])

    def test_plus_signs(self):
        got = poch_finite(PochSpec(1, 2, sign=-1), 2)
        assert got == QSeries([1, 1, 0, 1, 1])

    def test_zero_offset_allowed_finite(self):
        # (1 + 1)(1 + q), the doubling prefactor of overpartition sums
        got = poch_finite(PochSpec(0, 1, sign=-1), 2)
        assert got == QSeries([2, 2])


class TestPochInfinite:
    def test_pentagonal(self):
        assert poch_infinite(ONES, 10) == pentagonal_expansion(10)

    def test_distinct_parts(self):
        got = poch_infinite(PochSpec(1, 1, sign=-1), 5)
        oracle = counting_series(
            enumerate_partitions(5, lambda p: len(set(p)) == len(p)), 5)
        assert got == oracle
        assert got.int_coefficients(5) == [1, 1, 1, 2, 2, 3]

    def test_beyond_truncation_is_one(self):
        assert poch_infinite(PochSpec(100, 1), 10) == QSeries.one(10)

    def test_divergent(self):
        with pytest.raises(DivergentProduct):
            poch_infinite(PochSpec(0, 1), 10)


class TestGaussianBinomial:
    def test_column_zero(self):
        for a in range(6):
            assert gaussian_binomial(a, 0) == QSeries.one()

    def test_small_value(self):
        assert gaussian_binomial(2, 1, base=2) == QSeries([1, 0, 1])

    def test_zero_extension(self):
        assert gaussian_binomial(3, -1, base=3) == QSeries.zero()
        assert gaussian_binomial(3, 4, base=3) == QSeries.zero()

    @pytest.mark.parametrize("base", [1, 2, 3, 4])
    def test_pascal_recurrences(self, base):
        for a in range(1, 11):
            for b in range(0, a + 1):
                gb = gaussian_binomial(a, b, base)
                down_b = gaussian_binomial(a - 1, b - 1, base)
                keep_b = gaussian_binomial(a - 1, b, base)
                assert gb == down_b + QSeries.monomial(base * b) * keep_b
                assert gb == keep_b + QSeries.monomial(base * (a - b)) * down_b

    def test_symmetry(self):
        for a in range(11):
            for b in range(a + 1):
                assert gaussian_binomial(a, b) == gaussian_binomial(a, a - b)

    def test_counts_at_one(self):
        # evaluating at q = 1 recovers the ordinary binomial coefficient
        for a in range(9):
            for b in range(a + 1):
                total = sum(c.constant_value()
                            for c in gaussian_binomial(a, b).coeffs)
                assert total == math.comb(a, b)


class TestCongruenceProduct:
    def test_all_parts(self):
        spec = CongruenceProductSpec(1, frozenset(), "excluded")
        got = congruence_product(spec, 8)
        oracle = counting_series(enumerate_partitions(8), 8)
        assert got == oracle
        assert got.coefficient(5) == 7

    def test_mod8_allowed(self):
        spec = CongruenceProductSpec(8, frozenset({0, 2, 3, 4, 7}), "allowed")
        assert congruence_product(spec, 10).coefficient(10) == 8

    def test_mod16_allowed(self):
        spec = CongruenceProductSpec(16, frozenset({2, 3, 4, 5, 11, 12, 13, 14}),
                                     "allowed")
        assert congruence_product(spec, 10).coefficient(10) == 7

    def test_inverse_of_euler_product(self):
        spec = CongruenceProductSpec(1, frozenset({0}), "allowed")
        prod = poch_infinite(ONES, 50) * congruence_product(spec, 50)
        assert prod == QSeries.one(50)

    def test_residue_validation(self):
        with pytest.raises(ValueError):
            CongruenceProductSpec(8, frozenset({9}), "allowed")


class TestThetaSum:
    def test_direct_window(self):
        # independent summation over an explicit window
        expected = [0] * 11
        for n in range(-4, 5):
            e = 2 * n * n - n
            if e <= 10:
                expected[e] += 1
        got = theta_sum(2, -1, 10)
        assert got == QSeries(expected, trunc=10)
        assert got.int_coefficients(10) == [1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1]

    def test_sparse_case(self):
        assert theta_sum(8, -2, 6) == QSeries([1, 0, 0, 0, 0, 0, 1], trunc=6)

    def test_constant_term(self):
        for quad, lin in ((1, 0), (2, -1), (5, 3), (8, -2)):
            assert theta_sum(quad, lin, 12).coefficient(0) == 1

    def test_triple_product(self):
        t = 40
        prod = (poch_infinite(PochSpec(4, 4), t)
                * poch_infinite(PochSpec(1, 4, sign=-1), t)
                * poch_infinite(PochSpec(3, 4, sign=-1), t))
        assert theta_sum(2, -1, t) == prod

    def test_triple_product_alternating(self):
        t = 40
        prod = (poch_infinite(PochSpec(4, 4), t)
                * poch_infinite(PochSpec(1, 4), t)
                * poch_infinite(PochSpec(3, 4), t))
        assert theta_sum(2, -1, t, alternating=True) == prod

    def test_triple_product_wide_step(self):
        t = 40
        prod = (poch_infinite(PochSpec(16, 16), t)
                * poch_infinite(PochSpec(6, 16, sign=-1), t)
                * poch_infinite(PochSpec(10, 16, sign=-1), t))
        assert theta_sum(8, -2, t) == prod


def test_distinct_nonmultiples_of_three_product():
    # (1 + q^(3n-1))(1 + q^(3n-2)) over n equals 1 / ((q; q^6)(q^5; q^6))
    t = 40
    lhs = poch_infinite(PochSpec(1, 3, sign=-1), t) \
        * poch_infinite(PochSpec(2, 3, sign=-1), t)
    rhs = (poch_infinite(PochSpec(1, 6), t)
           * poch_infinite(PochSpec(5, 6), t)).inverse(t)
    assert lhs == rhs
