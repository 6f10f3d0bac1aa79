import random
from fractions import Fraction

import pytest

from cliffsteer.appell import appell_poly, pochhammer, t_coeff
from cliffsteer.polynomials import CliffordPolynomial
from cliffsteer.steering import SteeringExpression, SteeringSymbol
from helpers import e, x


class TestPochhammer:
    def test_empty_product(self):
        assert pochhammer(Fraction(7, 3), 0) == 1

    def test_half(self):
        assert pochhammer(Fraction(1, 2), 2) == Fraction(3, 4)

    def test_integer(self):
        assert pochhammer(3, 3) == 60

    def test_negative_index_rejected(self):
        with pytest.raises(ValueError):
            pochhammer(1, -1)


class TestWeights:
    def test_first_order_weights_at_m3(self):
        assert t_coeff(1, 0, 3) == Fraction(2, 3)
        assert t_coeff(1, 1, 3) == Fraction(1, 3)

    def test_weights_sum_to_one(self):
        # consistent with evaluating the polynomial on the real axis
        for m in (2, 3, 4):
            for k in range(0, 6):
                assert sum(t_coeff(k, s, m) for s in range(k + 1)) == 1

    def test_index_validation(self):
        with pytest.raises(ValueError, match="out of range"):
            t_coeff(2, 3, 3)


class TestAppellSequence:
    def test_zeroth_is_one(self):
        for m in (2, 3, 4):
            assert appell_poly(0, m) == CliffordPolynomial.constant(m, 1)

    def test_first_at_m3(self):
        m = 3
        expected = (
            x(m, 0)
            + x(m, 1) * e(m, 1) * Fraction(1, 3)
            + x(m, 2) * e(m, 2) * Fraction(1, 3)
            + x(m, 3) * e(m, 3) * Fraction(1, 3)
        )
        assert appell_poly(1, m) == expected

    def test_vanishing_at_origin(self):
        for m in (2, 3, 4):
            for k in range(1, 7):
                assert not appell_poly(k, m).constant_term()

    def test_left_monogenic(self):
        for m in (2, 3, 4):
            for k in range(0, 7):
                assert not appell_poly(k, m).cr_left()

    def test_derivative_recursion(self):
        for m in (2, 3, 4):
            previous = appell_poly(0, m)
            for k in range(1, 7):
                current = appell_poly(k, m)
                assert current.hypercomplex_d() == previous * k
                previous = current

    def test_alternative_sequence_over_monogenic_seed(self):
        # z^k M(y) with a left monogenic M obeys the same derivative recursion
        m = 4
        mono = x(m, 2, yonly=True) * e(m, 2) - x(m, 3, yonly=True) * e(m, 3)
        for k in range(1, 5):
            zk = SteeringExpression(m, [(SteeringSymbol.power_exp(k, 0), mono)])
            expected = SteeringExpression(m, [(SteeringSymbol.power_exp(k - 1, 0), mono * k)])
            assert zk.hypercomplex_d() == expected
            assert not zk.cr_left()
