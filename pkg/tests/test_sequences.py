"""Sequence evaluation: recurrence, Binet, fast doubling, negative indices."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from horadam import (
    DomainError,
    RecurrenceParams,
    binet_eval,
    fast_gen_fib,
    gen_fib,
    horadam_eval,
    horadam_range,
    linear_approx_check,
    roots,
)

# parameter pairs used throughout; all have D > 0 and s != 0,
# covering negative s and a perfect-square discriminant (1, 2)
GRID = [(1, 1), (2, 1), (1, 2), (6, -1), (3, 2), (5, 3), (-3, 5), (4, -3)]


def unroll(r, s, count, a=0, b=1):
    """Direct recurrence unrolling, the independent oracle."""
    values = [Fraction(a), Fraction(b)]
    r, s = Fraction(r), Fraction(s)
    while len(values) < count:
        values.append(r * values[-1] + s * values[-2])
    return values[:count]


class TestHoradamEval:
    def test_fibonacci_six(self):
        assert horadam_eval(RecurrenceParams(0, 1, 1, 1), 6) == unroll(1, 1, 7)[6] == 8

    def test_base_case(self):
        assert horadam_eval(RecurrenceParams(0, 1, 7, -2), 0) == 0
        assert horadam_eval(RecurrenceParams(0, 1, 7, -2), 1) == 1

    def test_h_minus_one_is_inverse_s(self):
        assert horadam_eval(RecurrenceParams(0, 1, 1, 1), -1) == 1
        assert horadam_eval(RecurrenceParams(0, 1, 4, 3), -1) == Fraction(1, 3)

    def test_general_seeds(self):
        params = RecurrenceParams(2, 1, 1, 1)  # Lucas numbers
        assert [horadam_eval(params, n) for n in range(7)] == unroll(1, 1, 7, a=2, b=1)

    def test_backward_requires_nonzero_s(self):
        with pytest.raises(DomainError):
            horadam_eval(RecurrenceParams(0, 1, 3, 0), -1)

    @pytest.mark.parametrize("r,s", GRID)
    def test_backward_extension_satisfies_recurrence(self, r, s):
        params = RecurrenceParams(0, 1, r, s)
        values = {n: horadam_eval(params, n) for n in range(-10, 3)}
        for n in range(-10, 1):
            assert values[n + 2] == Fraction(r) * values[n + 1] + Fraction(s) * values[n]


class TestGenFib:
    def test_pell(self):
        assert gen_fib(2, 1, 5) == unroll(2, 1, 6)[5] == 29

    def test_jacobsthal(self):
        assert gen_fib(1, 2, 4) == unroll(1, 2, 5)[4] == 5

    def test_balancing(self):
        assert gen_fib(6, -1, 3) == unroll(6, -1, 4)[3] == 35

    def test_negative_index(self):
        assert gen_fib(1, 1, -1) == 1
        assert gen_fib(1, 1, -2) == -1


class TestRoots:
    def test_golden_pair(self):
        alpha, beta = roots(1, 1)
        assert alpha.rat == Fraction(1, 2) and alpha.irr == Fraction(1, 2)
        assert beta.rat == Fraction(1, 2) and beta.irr == Fraction(-1, 2)
        assert alpha.disc == 5

    def test_perfect_square_disc(self):
        alpha, beta = roots(1, 2)
        assert alpha == 2 and beta == -1

    def test_nonpositive_disc_rejected(self):
        with pytest.raises(DomainError):
            roots(0, -1)
        with pytest.raises(DomainError):
            roots(2, -1)  # D = 0

    @pytest.mark.parametrize("r,s", GRID)
    def test_root_equations(self, r, s):
        alpha, beta = roots(r, s)
        assert alpha + beta == Fraction(r)
        assert alpha * beta == -Fraction(s)
        assert alpha * alpha == Fraction(r) * alpha + Fraction(s)


class TestBinet:
    def test_fibonacci_ten(self):
        assert binet_eval(1, 1, 10) == 55

    def test_n_one_is_one(self):
        for r, s in GRID:
            assert binet_eval(r, s, 1) == 1

    def test_balancing_four(self):
        assert binet_eval(6, -1, 4) == 204

    @pytest.mark.parametrize("r,s", GRID)
    def test_matches_recurrence(self, r, s):
        expected = unroll(r, s, 41)
        for n in range(41):
            assert binet_eval(r, s, n) == expected[n]
        for n in range(-10, 0):
            assert binet_eval(r, s, n) == gen_fib(r, s, n)

    def test_negative_index_requires_nonzero_s(self):
        with pytest.raises(DomainError):
            binet_eval(3, 0, -1)

    def test_disc_must_be_positive(self):
        with pytest.raises(DomainError):
            binet_eval(1, -1, 4)


class TestLinearApproximation:
    def test_fibonacci_five(self):
        assert linear_approx_check(1, 1, 5)

    def test_base_case(self):
        for r, s in GRID:
            assert linear_approx_check(r, s, 1)

    def test_pell_seven(self):
        assert linear_approx_check(2, 1, 7)

    @pytest.mark.parametrize("r,s", GRID)
    def test_full_range(self, r, s):
        assert all(linear_approx_check(r, s, n) for n in range(1, 101))

    def test_requires_positive_n(self):
        with pytest.raises(DomainError):
            linear_approx_check(1, 1, 0)


class TestFastGenFib:
    def test_frozen_pair_at_ninety(self):
        assert fast_gen_fib(1, 1, 90) == (
            2880067194370816120,
            4660046610375530309,
        )

    def test_base_pair(self):
        assert fast_gen_fib(9, -2, 0) == (0, 1)

    def test_jacobsthal_twenty(self):
        expected = unroll(1, 2, 22)
        assert fast_gen_fib(1, 2, 20) == (expected[20], expected[21])

    @pytest.mark.parametrize("r,s", GRID)
    def test_agrees_with_recurrence_up_to_1000(self, r, s):
        expected = unroll(r, s, 1002)
        for n in range(0, 1001, 7):
            assert fast_gen_fib(r, s, n) == (expected[n], expected[n + 1])
        assert fast_gen_fib(r, s, 1000)[0] == expected[1000]

    def test_negative_index_rejected(self):
        with pytest.raises(DomainError):
            fast_gen_fib(1, 1, -1)

    @given(st.integers(0, 400))
    @settings(max_examples=40)
    def test_fibonacci_prefix(self, n):
        table = unroll(1, 1, 402)
        assert fast_gen_fib(1, 1, n) == (table[n], table[n + 1])


class TestCassiniProperty:
    @pytest.mark.parametrize("r,s", GRID)
    def test_cassini_formula(self, r, s):
        h = unroll(r, s, 202)
        for n in range(1, 201):
            assert h[n] ** 2 - h[n - 1] * h[n + 1] == (-Fraction(s)) ** (n - 1)


class TestIntegrality:
    @given(r=st.integers(-9, 9), s=st.integers(-9, 9), n=st.integers(0, 60))
    @settings(max_examples=100)
    def test_integer_params_give_integer_values(self, r, s, n):
        value = gen_fib(r, s, n)
        assert value.denominator == 1


class TestHoradamRange:
    def test_matches_pointwise_eval(self):
        params = RecurrenceParams(3, -2, 1, 4)
        window = horadam_range(params, -6, 9)
        assert [v.index for v in window] == list(range(-6, 10))
        for item in window:
            assert item.value == horadam_eval(params, item.index)

    def test_empty_range_rejected(self):
        with pytest.raises(ValueError):
            horadam_range(RecurrenceParams(0, 1, 1, 1), 5, 4)

    def test_negative_window_requires_nonzero_s(self):
        with pytest.raises(DomainError):
            horadam_range(RecurrenceParams(0, 1, 3, 0), -2, 2)
