"""Bracket sign conventions and the bracket axioms.

The fixed convention: for the standard form on one pair, {z1, z2} = -1.
Everything downstream (the first-order star asymmetry, transported
brackets, chart brackets) inherits signs from here, so these oracles are
pinned as literal values.
"""

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from starkit.corpus import random_poly
from starkit.errors import InputError
from starkit.poisson import (PoissonBivector, SymplecticForm,
                             antisymmetry_residual, bilinearity_residual,
                             bivector_from_form, form_from_bivector,
                             jacobi_residual, leibniz_residual,
                             standard_bivector)
from starkit.poly import SparsePoly
from starkit.scalars import ExactComplex

from oracles import bivector_to_sympy, poly_to_sympy, ref_bracket, symbols_for

seeds = st.integers(0, 10_000)


def test_standard_form_matrix():
    form = SymplecticForm.standard(1)
    want = [[ExactComplex(0), ExactComplex(-1)],
            [ExactComplex(1), ExactComplex(0)]]
    assert [list(r) for r in form.matrix] == want


def test_standard_bracket_sign():
    biv = standard_bivector(1)
    z1 = SparsePoly.variable(2, 1)
    z2 = SparsePoly.variable(2, 2)
    assert biv.bracket(z1, z2) == SparsePoly.const(2, -1)
    assert biv.bracket(z2, z1) == SparsePoly.const(2, 1)


def test_bivector_from_form_matches_inverse_transpose():
    form = SymplecticForm.standard(2)
    biv = bivector_from_form(form)
    from starkit import linalg
    want = linalg.transpose(linalg.mat_inv(form.matrix))
    assert [list(r) for r in biv.matrix] == [list(r) for r in want]


def test_form_bivector_round_trip():
    for pairs in (1, 2, 3):
        form = SymplecticForm.standard(pairs)
        assert form_from_bivector(bivector_from_form(form)) == form


def test_nonstandard_form_round_trip():
    # a valid non-block form: antisymmetric, invertible
    form = SymplecticForm([
        [0, 2, 0, 0],
        [-2, 0, 0, 0],
        [0, 0, 0, Fraction(-1, 3)],
        [0, 0, Fraction(1, 3), 0],
    ])
    assert form_from_bivector(bivector_from_form(form)) == form


def test_form_validation():
    with pytest.raises(InputError):
        SymplecticForm([[0, 1], [1, 0]])  # symmetric
    with pytest.raises(InputError):
        SymplecticForm([[0]])  # odd dimension
    with pytest.raises(InputError):
        SymplecticForm([[0, 0], [0, 0]])  # degenerate


@settings(max_examples=30)
@given(seeds, seeds)
def test_bracket_matches_sympy(s1, s2):
    biv = standard_bivector(2)
    f = random_poly(4, 3, s1)
    g = random_poly(4, 3, s2)
    syms = symbols_for(4)
    got = poly_to_sympy(biv.bracket(f, g), syms)
    want = ref_bracket(poly_to_sympy(f, syms), poly_to_sympy(g, syms),
                       bivector_to_sympy(biv), syms)
    assert sympy.simplify(got - want) == 0


@settings(max_examples=25)
@given(seeds, seeds, seeds)
def test_bracket_axioms_on_random_inputs(s1, s2, s3):
    biv = standard_bivector(1)
    f = random_poly(2, 4, s1)
    g = random_poly(2, 4, s2)
    h = random_poly(2, 4, s3)
    assert antisymmetry_residual(biv, f, g).is_zero()
    assert leibniz_residual(biv, f, g, h).is_zero()
    assert jacobi_residual(biv, f, g, h).is_zero()
    assert bilinearity_residual(biv, f, g, h,
                                ExactComplex(Fraction(2, 3), 1)).is_zero()


def test_bracket_axioms_in_dim_four():
    biv = standard_bivector(2)
    f = random_poly(4, 3, 1)
    g = random_poly(4, 3, 2)
    h = random_poly(4, 3, 3)
    assert antisymmetry_residual(biv, f, g).is_zero()
    assert leibniz_residual(biv, f, g, h).is_zero()
    assert jacobi_residual(biv, f, g, h).is_zero()


def test_bracket_of_constants_vanishes():
    biv = standard_bivector(1)
    one = SparsePoly.const(2, 1)
    f = random_poly(2, 3, 17)
    assert biv.bracket(one, f).is_zero()
    assert biv.bracket(f, one).is_zero()


def test_block_structure_makes_distant_pairs_commute():
    biv = standard_bivector(2)
    z1 = SparsePoly.variable(4, 1)
    z4 = SparsePoly.variable(4, 4)
    assert biv.bracket(z1, z4).is_zero()
