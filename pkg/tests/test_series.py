import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wordavoid.series import (
    BadConstantTerm,
    BSeries,
    NonIntegerCoefficient,
    NotRevertible,
    SingularRoot,
    USeries,
    ZeroConstantTerm,
    solve_polynomial,
)


def u(*coeffs, order=None):
    return USeries(coeffs, order=order)


class TestConstruction:
    def test_padding_and_order(self):
        s = u(1, 2, order=4)
        assert s.order == 4
        assert s.coeffs == (1, 2, 0, 0, 0)

    def test_truncates_long_input(self):
        assert USeries([1, 2, 3], order=1).coeffs == (1, 2)

    def test_empty_needs_order(self):
        with pytest.raises(ValueError):
            USeries([])
        assert USeries([], order=2).coeffs == (0, 0, 0)

    def test_rejects_floats_and_bools(self):
        with pytest.raises(TypeError):
            USeries([1.5])
        with pytest.raises(TypeError):
            USeries([True])

    def test_coeff_beyond_order_is_zero(self):
        assert u(1, 2).coeff(7) == 0
        with pytest.raises(ValueError):
            u(1).coeff(-1)


class TestRingOps:
    def test_difference_of_squares(self):
        one_plus = u(1, 1, order=3)
        one_minus = u(1, -1, order=3)
        assert one_plus * one_minus == u(1, 0, -1, 0)

    def test_pow_zero_is_one(self):
        assert u(1, 1) ** 0 == u(1, 0)

    def test_pow_matches_repeated_mul(self):
        s = u(1, 2, 3, order=6)
        assert s**3 == s * s * s

    def test_scalar_ops(self):
        s = u(1, 2, order=2)
        assert 2 * s == u(2, 4, order=2)
        assert s + 1 == u(2, 2, order=2)
        assert 1 - s == u(0, -2, order=2)
        assert s / 2 == USeries([Fraction(1, 2), 1], order=2)

    def test_mixed_orders_truncate(self):
        assert (u(1, 1, order=5) * u(1, order=2)).order == 2


class TestDivision:
    def test_geometric(self):
        assert 1 / u(1, -1, order=5) == u(1, 1, 1, 1, 1, 1)

    def test_powers_of_two(self):
        # oracle: explicit powers of 2
        got = 1 / u(1, -2, order=10)
        assert got == USeries([2**n for n in range(11)])

    def test_identity(self):
        s = u(1, -1, order=4)
        assert s / s == u(1, order=4)

    def test_zero_constant_rejected(self):
        with pytest.raises(ZeroConstantTerm):
            u(1, 1) / u(0, 1)


def binomial_sqrt_coeffs(order):
    # generalized binomial expansion of (1 - 4t)^(1/2)
    out = []
    for n in range(order + 1):
        c = Fraction(1)
        for i in range(n):
            c *= Fraction(1, 2) - i
        c /= math.factorial(n)
        out.append(c * (-4) ** n)
    return out


class TestSqrt:
    def test_sqrt_one(self):
        assert u(1, order=4).sqrt() == u(1, order=4)

    def test_perfect_square(self):
        s = u(1, 1, order=5)
        assert (s * s).sqrt() == s

    def test_against_binomial_expansion(self):
        got = u(1, -4, order=8).sqrt()
        assert got == USeries(binomial_sqrt_coeffs(8))
        assert got.coeffs[:5] == (1, -2, -2, -4, -10)

    def test_needs_unit_constant(self):
        with pytest.raises(BadConstantTerm):
            u(4, 1).sqrt()


class TestSolvePolynomial:
    def test_catalan_equation(self):
        # A = 1 + t A^2; oracle: the Catalan convolution recurrence
        a = solve_polynomial([[-1], [1], [0, -1]], 1, 10)
        cats = [1]
        for _ in range(10):
            cats.append(sum(cats[i] * cats[-1 - i] for i in range(len(cats))))
        assert a == USeries(cats[:11])

    def test_constant_equation(self):
        assert solve_polynomial([[-1], [1]], 1, 5) == u(1, order=5)

    def test_double_root_rejected(self):
        with pytest.raises(SingularRoot):
            solve_polynomial([[1], [-2], [1]], 1, 5)

    def test_wrong_root_rejected(self):
        with pytest.raises(SingularRoot):
            solve_polynomial([[-1], [1]], 2, 5)


class TestReversion:
    def test_identity(self):
        t = u(0, 1, order=6)
        assert t.revert() == t

    def test_moebius_pair(self):
        h = u(0, 1) * (1 / u(1, -1, order=6))
        g = h.revert()
        assert g == u(0, 1) * (1 / u(1, 1, order=6))

    def test_composition_closes(self):
        h = u(0, 1, -1, order=9)
        g = h.revert()
        assert h.compose(g) == u(0, 1, order=9)

    def test_not_revertible(self):
        with pytest.raises(NotRevertible):
            u(1, 1).revert()
        with pytest.raises(NotRevertible):
            u(0, 0, 1).revert()


class TestStructure:
    def test_shift_round_trip(self):
        s = u(1, 2, 3)
        assert s.shift_up().shift_down() == s

    def test_shift_down_needs_zero_head(self):
        with pytest.raises(ValueError):
            u(1, 2).shift_down()

    def test_truncate_only_shrinks(self):
        with pytest.raises(ValueError):
            u(1, 2).truncate(5)

    def test_compose_needs_zero_inner(self):
        with pytest.raises(ValueError):
            u(1, 1).compose(u(1, 1))

    def test_integer_coeffs(self):
        assert u(1, -2, 3).integer_coeffs() == [1, -2, 3]
        with pytest.raises(NonIntegerCoefficient):
            USeries([Fraction(1, 2)]).integer_coeffs()

    def test_text(self):
        assert u(1, 0, -2).text() == "1 + 0*t + -2*t^2"


small_coeffs = st.integers(min_value=-3, max_value=3)


def useries(min_order=0, max_order=7, unit=False):
    def build(coeffs):
        if unit:
            coeffs = [1] + coeffs[1:]
        return USeries(coeffs)

    return st.lists(small_coeffs, min_size=min_order + 1, max_size=max_order + 1).map(
        build
    )


class TestProperties:
    @given(useries(), useries(unit=True))
    def test_div_mul_round_trip(self, a, b):
        n = min(a.order, b.order)
        assert (a / b) * b == a.truncate(n)

    @given(useries(unit=True))
    def test_sqrt_squares_back(self, a):
        s = a.sqrt()
        assert s * s == a

    @given(useries(), useries(), st.integers(min_value=0, max_value=4))
    def test_truncation_stability(self, a, b, m):
        n = min(a.order, b.order)
        if m > n:
            return
        assert (a * b).truncate(m) == a.truncate(m) * b.truncate(m)

    @given(useries(min_order=1))
    def test_revert_closes(self, h):
        if h.coeffs[0] != 0 or h.coeffs[1] == 0:
            return
        g = h.revert()
        assert h.compose(g) == USeries([0, 1], order=h.order)


class TestBSeries:
    def test_pascal_grid(self):
        # oracle: binomial coefficients
        f = BSeries.from_terms({(0, 0): 1}, 6) / BSeries.from_terms(
            {(0, 0): 1, (1, 0): -1, (0, 1): -1}, 6
        )
        for n in range(7):
            for k in range(7):
                assert f.entry(n, k) == math.comb(n + k, k)

    def test_mul_identity(self):
        a = BSeries([[1, 2], [3, 4]])
        one = BSeries.from_terms({(0, 0): 1}, 1)
        assert a * one == a

    def test_avoider_denominator_corner(self):
        denom = BSeries.from_terms(
            {(0, 0): 1, (1, 0): -1, (0, 1): -1, (3, 2): 1}, 7
        )
        f = BSeries.from_terms({(0, 0): 1}, 7) / denom
        assert f.entry(7, 7) == 2232
        assert f.entry(4, 4) == 58

    def test_div_needs_unit_constant(self):
        with pytest.raises(ZeroConstantTerm):
            BSeries([[1]]) / BSeries.from_terms({(1, 0): 1}, 1)

    def test_entry_off_grid_is_zero(self):
        assert BSeries([[1]]).entry(5, 5) == 0

    def test_integer_rows(self):
        assert BSeries([[1, 2], [3, 4]]).integer_rows() == [[1, 2], [3, 4]]
        with pytest.raises(NonIntegerCoefficient):
            BSeries([[Fraction(1, 2)]]).integer_rows()

    def test_from_terms_drops_off_grid(self):
        b = BSeries.from_terms({(0, 0): 1, (9, 9): 5}, 2)
        assert b.entry(0, 0) == 1

    @given(
        st.lists(st.lists(small_coeffs, min_size=3, max_size=3), min_size=3, max_size=3),
        st.lists(st.lists(small_coeffs, min_size=3, max_size=3), min_size=3, max_size=3),
    )
    @settings(max_examples=40)
    def test_div_mul_round_trip(self, a_rows, b_rows):
        b_rows[0][0] = 1
        a, b = BSeries(a_rows), BSeries(b_rows)
        assert (a / b) * b == a
