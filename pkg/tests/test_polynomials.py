import random
from fractions import Fraction

import pytest
import sympy

from cliffsteer.algebra import Multivector
from cliffsteer.polynomials import (
    CliffordPolynomial,
    dirac_power,
    paravector_power,
    polyharmonic_basis,
)
from helpers import e, random_multivector, random_poly, scalar, x, ymono


class TestRingOperations:
    def test_variables_commute_coefficients_do_not(self):
        m = 4
        p = x(m, 2) * e(m, 1)
        q = x(m, 2) * e(m, 2)
        assert p * q == CliffordPolynomial.monomial(m, {2: 2}, e(m, 1, 2))

    def test_generator_square_inside_polynomials(self):
        m = 4
        p = CliffordPolynomial.constant(m, e(m, 1))
        assert p * p == CliffordPolynomial.constant(m, -1)

    def test_multiplicative_identity(self):
        rng = random.Random(1)
        p = random_poly(rng, 3, range(0, 4))
        assert p * CliffordPolynomial.constant(3, 1) == p

    def test_left_vs_right_multivector_action(self):
        m = 3
        p = CliffordPolynomial.constant(m, e(m, 2))
        assert e(m, 1) * p == CliffordPolynomial.constant(m, e(m, 1, 2))
        assert p * e(m, 1) == CliffordPolynomial.constant(m, -e(m, 1, 2))

    def test_scope_union_on_multiplication(self):
        m = 3
        p = x(m, 2, yonly=True)
        q = x(m, 0)
        assert (p * q).var_scope == frozenset(range(0, m + 1))

    def test_scope_violation_rejected(self):
        with pytest.raises(ValueError, match="outside the declared variable scope"):
            CliffordPolynomial.monomial(3, {0: 1}, 1, var_scope=range(2, 4))


class TestDerivatives:
    def test_partial_examples(self):
        m = 4
        sq = CliffordPolynomial.monomial(m, {2: 2}, 1)
        assert sq.partial(2) == x(m, 2) * 2
        assert x(m, 2).partial(3) == CliffordPolynomial.zero(m)
        p = CliffordPolynomial.monomial(5, {2: 1, 3: 1}, e(5, 5))
        assert p.partial(2) == x(5, 3) * e(5, 5)

    def test_partials_commute(self):
        rng = random.Random(2)
        for _ in range(50):
            m = rng.randint(2, 4)
            p = random_poly(rng, m, range(0, m + 1))
            i, j = rng.randint(0, m), rng.randint(0, m)
            assert p.partial(i).partial(j) == p.partial(j).partial(i)

    def test_dirac_left_examples(self):
        m = 4
        assert x(m, 2).dirac_y("left") == CliffordPolynomial.constant(m, e(m, 2))
        p = CliffordPolynomial.monomial(m, {2: 2}, 1) + CliffordPolynomial.monomial(m, {3: 2}, 1)
        assert p.dirac_y("left").dirac_y("left") == CliffordPolynomial.constant(m, -4)

    def test_dirac_right_example(self):
        m = 4
        p = x(m, 2) * e(m, 2, 3)
        assert p.dirac_y("right") == CliffordPolynomial.constant(m, e(m, 3))

    def test_dirac_twice_is_minus_laplacian(self):
        rng = random.Random(3)
        for _ in range(50):
            m = rng.randint(2, 4)
            p = random_poly(rng, m, range(2, m + 1))
            assert p.dirac_y("left").dirac_y("left") == -p.laplacian(range(2, m + 1))
            assert p.dirac_y("right").dirac_y("right") == -p.laplacian(range(2, m + 1))

    def test_cr_examples(self):
        m = 4
        assert x(m, 0).cr_left() == CliffordPolynomial.constant(m, 1)
        z = x(m, 0) + x(m, 1) * e(m, 1)
        assert not z.cr_left()
        zbar = x(m, 0) - x(m, 1) * e(m, 1)
        assert zbar.cr_left() == CliffordPolynomial.constant(m, 2)

    def test_cr_factorizes_laplacian_both_orders(self):
        rng = random.Random(4)
        for _ in range(60):
            m = rng.randint(2, 4)
            p = random_poly(rng, m, range(0, m + 1))
            conj = p.partial(0)
            for j in range(1, m + 1):
                conj = conj - e(m, j) * p.partial(j)
            lap = p.laplacian(range(0, m + 1))
            assert conj.cr_left() == lap
            conj_after = p.cr_left()
            conj_after = conj_after.partial(0) * 2 - conj_after.cr_left()
            assert conj_after == lap

    def test_laplacian_examples(self):
        m = 4
        p = CliffordPolynomial.monomial(m, {2: 2}, 1) - CliffordPolynomial.monomial(m, {3: 2}, 1)
        assert not p.laplacian(range(2, m + 1))
        sq = CliffordPolynomial.monomial(m, {2: 2}, 1)
        assert sq.laplacian(range(2, m + 1)) == CliffordPolynomial.constant(m, 2)
        quartic = CliffordPolynomial.monomial(m, {2: 4}, 1)
        assert quartic.laplacian().laplacian() == CliffordPolynomial.constant(m, 24)

    def test_absent_variables_contribute_zero(self):
        m = 3
        p = x(m, 2)
        assert not p.laplacian(range(0, 10))  # out-of-range indices ignored


class TestParavectorPowers:
    def test_first_power(self):
        m = 2
        expected = x(m, 0) + x(m, 1) * e(m, 1) + x(m, 2) * e(m, 2)
        assert paravector_power(m, 1) == expected

    def test_x_times_xbar_is_squared_norm(self):
        for m in (2, 3):
            product = paravector_power(m, 1) * paravector_power(m, 1, conjugated=True)
            expected = CliffordPolynomial.zero(m)
            for i in range(m + 1):
                expected = expected + CliffordPolynomial.monomial(m, {i: 2}, 1)
            assert product == expected

    def test_square_expansion(self):
        m = 2
        got = paravector_power(m, 2)
        expected = (
            CliffordPolynomial.monomial(m, {0: 2}, 1)
            - CliffordPolynomial.monomial(m, {1: 2}, 1)
            - CliffordPolynomial.monomial(m, {2: 2}, 1)
            + CliffordPolynomial.monomial(m, {0: 1, 1: 1}, e(m, 1, ) * 2)
            + CliffordPolynomial.monomial(m, {0: 1, 2: 1}, e(m, 2) * 2)
        )
        assert got == expected


def _sympy_kernel_dimension(degree, order, nvars):
    symbols = sympy.symbols(f"t0:{nvars}")
    monos = sorted(
        sympy.polys.monomials.itermonomials(symbols, degree, degree),
        key=sympy.polys.orderings.monomial_key("grlex", symbols),
    )
    lap = lambda f: sum(sympy.diff(f, s, 2) for s in symbols)
    rows = []
    target = sorted(
        sympy.polys.monomials.itermonomials(symbols, degree - 2 * order, degree - 2 * order),
        key=sympy.polys.orderings.monomial_key("grlex", symbols),
    ) if degree - 2 * order >= 0 else []
    columns = []
    for mono in monos:
        image = mono
        for _ in range(order):
            image = sympy.expand(lap(image))
        poly = sympy.Poly(image, *symbols) if image != 0 else None
        col = []
        for tmono in target:
            key = sympy.Poly(tmono, *symbols).monoms()[0]
            col.append(poly.coeff_monomial(key) if poly else 0)
        columns.append(col)
    if not target:
        return len(monos)
    matrix = sympy.Matrix(list(map(list, zip(*columns))))
    return len(matrix.nullspace())


class TestPolyharmonicBasis:
    def test_degree_two_harmonics_in_three_vars(self):
        basis = polyharmonic_basis(2, 1, 4)
        assert len(basis) == 5
        for b in basis:
            assert not b.laplacian()

    def test_degree_one_is_full(self):
        basis = polyharmonic_basis(1, 1, 4)
        assert len(basis) == 3

    def test_biharmonic_quadratics_are_everything(self):
        basis = polyharmonic_basis(2, 2, 4)
        assert len(basis) == 6

    def test_dimension_matches_sympy_oracle(self):
        for degree, order, m in ((3, 1, 4), (4, 1, 4), (4, 2, 4), (5, 2, 4), (3, 1, 3)):
            ours = polyharmonic_basis(degree, order, m)
            assert len(ours) == _sympy_kernel_dimension(degree, order, m - 1)

    def test_every_element_is_annihilated_and_independent(self):
        for degree, order in ((4, 1), (5, 2), (3, 1)):
            basis = polyharmonic_basis(degree, order, 4)
            for b in basis:
                p = b
                for _ in range(order):
                    p = p.laplacian()
                assert not p
            # independence: the scalar coefficient matrix has full rank
            monomials = sorted({mono for b in basis for mono, _ in b.items()})

            def scalar_at(poly, mono):
                for mo, mv in poly.items():
                    if mo == mono:
                        return mv.scalar_part()
                return Fraction(0)

            matrix = sympy.Matrix(
                [[sympy.Rational(scalar_at(b, mono)) for mono in monomials] for b in basis]
            )
            assert matrix.rank() == len(basis)

    def test_value_pattern_scales_basis(self):
        m = 4
        value = e(m, 2, 3)
        basis = polyharmonic_basis(2, 1, m, value=value)
        plain = polyharmonic_basis(2, 1, m)
        assert len(basis) == len(plain)
        for with_value, bare in zip(basis, plain):
            assert with_value == bare * value

    def test_deterministic(self):
        a = polyharmonic_basis(4, 2, 4)
        b = polyharmonic_basis(4, 2, 4)
        assert a == b

    def test_homogeneous(self):
        for b in polyharmonic_basis(3, 1, 4):
            assert b.is_homogeneous()
            assert b.total_degree() == 3


class TestJson:
    def test_roundtrip(self):
        rng = random.Random(9)
        for _ in range(20):
            m = rng.randint(2, 4)
            p = random_poly(rng, m, range(0, m + 1))
            assert CliffordPolynomial.from_obj(p.to_obj()) == p

    def test_vars_field_lists_scope(self):
        p = ymono(4, {2: 1})
        assert p.to_obj()["vars"] == [2, 3, 4]

    def test_monomial_keys_are_strings(self):
        p = CliffordPolynomial.monomial(3, {0: 2, 2: 1}, 1)
        term = p.to_obj()["terms"][0]
        assert term["monomial"] == {"0": 2, "2": 1}
