from __future__ import annotations

import math

import pytest
from hypothesis import given, strategies as st

from weylchar import (
    IntegralityError,
    QFactorRatio,
    QPoly,
    grade_shift,
    one_minus_q,
    q_binomial,
    q_int,
    q_pochhammer,
)


class TestQPoly:
    def test_zero_coefficients_dropped(self):
        assert QPoly({2: 0, 1: 3}).coeffs == {1: 3}
        assert QPoly({0: 1}) - QPoly({0: 1}) == QPoly.zero()

    def test_negative_exponent_rejected(self):
        with pytest.raises(ValueError):
            QPoly({-1: 1})

    def test_arithmetic(self):
        p = QPoly({0: 1, 1: 2})
        q = QPoly({1: -2, 3: 5})
        assert p + q == QPoly({0: 1, 3: 5})
        assert p - p == QPoly.zero()
        assert p * QPoly.q() == QPoly({1: 1, 2: 2})
        assert 3 * p == QPoly({0: 3, 1: 6})
        assert (QPoly.one() + QPoly.q()) ** 2 == QPoly({0: 1, 1: 2, 2: 1})

    def test_specializations(self):
        p = QPoly({0: 1, 2: 2, 3: -1})
        assert p.at_one() == 2
        assert p.constant_term() == 1
        assert p.degree() == 3
        assert QPoly.zero().degree() == -1

    def test_coefficient_list(self):
        assert QPoly({0: 1, 2: 2, 3: -1}).coefficient_list() == [1, 0, 2, -1]
        assert QPoly.zero().coefficient_list() == []

    def test_rendering(self):
        assert str(QPoly({0: 1, 2: 2, 3: -1})) == "1 + 2q^2 - q^3"
        assert str(QPoly.zero()) == "0"
        assert str(QPoly({1: -1})) == "-q"
        assert str(QPoly({0: -2, 1: 1})) == "-2 + q"

    def test_divide_exact(self):
        num = q_pochhammer(3)
        assert num.divide_exact(one_minus_q(2)) * one_minus_q(2) == num
        with pytest.raises(IntegralityError):
            QPoly({0: 1, 1: 1}).divide_exact(one_minus_q(1))
        with pytest.raises(ZeroDivisionError):
            QPoly.one().divide_exact(QPoly.zero())

    @given(st.dictionaries(st.integers(0, 8), st.integers(-9, 9), max_size=6),
           st.dictionaries(st.integers(0, 8), st.integers(-9, 9), max_size=6))
    def test_product_commutes_and_evaluates(self, a, b):
        p, q = QPoly(a), QPoly(b)
        assert p * q == q * p
        assert (p * q).at_one() == p.at_one() * q.at_one()
        assert (p + q).at_one() == p.at_one() + q.at_one()

    @given(st.dictionaries(st.integers(0, 8), st.integers(-9, 9), max_size=6),
           st.integers(1, 5))
    def test_exact_division_round_trip(self, a, k):
        p = QPoly(a)
        assert (p * one_minus_q(k)).divide_exact(one_minus_q(k)) == p


class TestQInt:
    def test_values(self):
        assert q_int(1) == QPoly.one()
        assert q_int(3) == QPoly({0: 1, 1: 1, 2: 1})
        assert q_int(0) == QPoly.zero()
        assert q_int(-2) == QPoly.zero()

    @given(st.integers(0, 30))
    def test_at_one(self, m):
        assert q_int(m).at_one() == max(m, 0)


class TestQBinomial:
    def test_frozen_example(self):
        assert q_binomial(4, 2) == QPoly({0: 1, 1: 1, 2: 2, 3: 1, 4: 1})

    def test_out_of_range(self):
        assert q_binomial(3, 5) == QPoly.zero()
        assert q_binomial(-1, 0) == QPoly.zero()
        assert q_binomial(3, -1) == QPoly.zero()

    @given(st.integers(0, 20), st.integers(0, 20))
    def test_q1_is_binomial(self, n, r):
        assert q_binomial(n, r).at_one() == (math.comb(n, r) if r <= n else 0)

    @given(st.integers(0, 20), st.integers(0, 20))
    def test_symmetry(self, n, r):
        assert q_binomial(n, r) == q_binomial(n, n - r)

    @given(st.integers(1, 16), st.integers(0, 16))
    def test_pascal(self, n, r):
        expected = q_binomial(n - 1, r - 1) + QPoly.q(r) * q_binomial(n - 1, r)
        assert q_binomial(n, r) == expected

    @given(st.integers(0, 12), st.integers(0, 12))
    def test_pochhammer_factorization(self, n, r):
        # [n r] (q;q)_r (q;q)_{n-r} == (q;q)_n
        if r <= n:
            lhs = q_binomial(n, r) * q_pochhammer(r) * q_pochhammer(n - r)
            assert lhs == q_pochhammer(n)


class TestQPochhammer:
    def test_frozen_example(self):
        assert q_pochhammer(2) == QPoly({0: 1, 1: -1, 2: -1, 3: 1})

    def test_base(self):
        assert q_pochhammer(0) == QPoly.one()
        with pytest.raises(ValueError):
            q_pochhammer(-1)

    @given(st.integers(1, 15))
    def test_recurrence(self, m):
        assert q_pochhammer(m) == q_pochhammer(m - 1) * one_minus_q(m)

    @given(st.integers(1, 15))
    def test_vanishes_at_one(self, m):
        assert q_pochhammer(m).at_one() == 0


class TestGradeShift:
    def test_shift(self):
        assert grade_shift(QPoly({0: 1, 2: -3}), 2) == QPoly({2: 1, 4: -3})

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            grade_shift(QPoly.one(), -1)

    @given(st.dictionaries(st.integers(0, 8), st.integers(-9, 9), max_size=6),
           st.integers(0, 6))
    def test_matches_q_power_multiplication(self, a, s):
        p = QPoly(a)
        assert grade_shift(p, s) == p * QPoly.q(s)


class TestQFactorRatio:
    def test_identity_reduce(self):
        r = QFactorRatio.identity()
        assert r.reduce() == r
        assert r.to_qpoly() == QPoly.one()

    def test_reduce_cancels(self):
        r = QFactorRatio(num=(1, 2, 2), den=(2, 3))
        reduced = r.reduce()
        assert sorted(reduced.num.elements()) == [1, 2]
        assert sorted(reduced.den.elements()) == [3]
        assert reduced.reduce() == reduced

    def test_multiplicities_preserved(self):
        r = QFactorRatio(den=(1,)) * QFactorRatio(den=(1,))
        assert sorted(r.den.elements()) == [1, 1]

    def test_to_qpoly_exact(self):
        # (1-q)(1-q^2)/(1-q) = 1 - q^2
        r = QFactorRatio(num=(1, 2), den=(1,))
        assert r.to_qpoly() == QPoly({0: 1, 2: -1})

    def test_to_qpoly_sign_and_power(self):
        r = QFactorRatio(num=(1,), sign=-1, qpower=2)
        assert r.to_qpoly() == QPoly({2: -1, 3: 1})

    def test_to_qpoly_rejects_nonpolynomial(self):
        with pytest.raises(IntegralityError):
            QFactorRatio(den=(1,)).to_qpoly()
        with pytest.raises(IntegralityError):
            QFactorRatio(num=(3,), den=(2,)).to_qpoly()

    def test_division(self):
        r = QFactorRatio(num=(4,)) / QFactorRatio(num=(4,))
        assert r.reduce() == QFactorRatio.identity()

    @given(st.lists(st.integers(1, 6), max_size=4),
           st.lists(st.integers(1, 6), max_size=4))
    def test_product_reduce_consistent(self, a, b):
        # reducing before or after multiplying gives the same reduced form
        r1 = (QFactorRatio(num=a) * QFactorRatio(den=b)).reduce()
        r2 = QFactorRatio(num=a).reduce() * QFactorRatio(den=b).reduce()
        assert r1 == r2.reduce()

    @given(st.integers(0, 6), st.integers(0, 6))
    def test_gaussian_binomial_as_ratio(self, a, b):
        # [a+b a]_q = (q;q)_{a+b} / ((q;q)_a (q;q)_b)
        ratio = QFactorRatio(
            num=range(1, a + b + 1),
            den=list(range(1, a + 1)) + list(range(1, b + 1)),
        )
        assert ratio.to_qpoly() == q_binomial(a + b, a)
