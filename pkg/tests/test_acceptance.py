"""Acceptance gate: nine executable criteria, all exact.

Every comparison is an exact equality of rational-complex objects; no
tolerances appear anywhere.  Each criterion is one test and prints one
summary line, so a verbose run reads as a checklist.
"""

import time
from fractions import Fraction
from math import factorial

import pytest

from starkit import atlas, multi, transport
from starkit.corpus import (random_poly_pairs, random_poly_triples,
                            random_sl2_matrices, random_symplectomorphisms,
                            random_translations)
from starkit.errors import InputError
from starkit.moyal import (StarProduct, linear_action_check,
                           translation_equivariance_check, verify_dq_axioms,
                           verify_star_axioms)
from starkit.poisson import (PoissonBivector, SymplecticForm,
                             antisymmetry_residual, jacobi_residual,
                             leibniz_residual, standard_bivector)
from starkit.poly import SparsePoly
from starkit.series import HbarSeries

from conftest import fixture_path


def announce(n, text):
    print(f"criterion {n}: PASS - {text}")


def test_criterion_1_poisson_axioms():
    t0 = time.monotonic()
    total = 0
    for pairs, count in ((1, 60), (2, 60)):
        biv = standard_bivector(pairs)
        dim = 2 * pairs
        for f, g, h in random_poly_triples(dim, count, 4, seed=101 + pairs):
            assert antisymmetry_residual(biv, f, g).is_zero()
            assert leibniz_residual(biv, f, g, h).is_zero()
            assert jacobi_residual(biv, f, g, h).is_zero()
            total += 1
    elapsed = time.monotonic() - t0
    assert total >= 100
    assert elapsed < 10.0, f"took {elapsed:.2f}s"
    announce(1, f"bracket axioms exact on {total} triples "
                f"in {elapsed:.2f}s")


def _no_factorial_star(sp):
    def star_fn(F, G):
        order = min(F.order, G.order)
        coeffs = [SparsePoly.zero(sp.dim) for _ in range(order + 1)]
        for j in range(order + 1):
            if F[j].is_zero():
                continue
            for k in range(order + 1 - j):
                if G[k].is_zero():
                    continue
                top = min(order - j - k, F[j].degree(), G[k].degree())
                for m in range(max(top, 0) + 1):
                    term = sp.coefficient(m, F[j], G[k]).scale(factorial(m))
                    if not term.is_zero():
                        coeffs[j + k + m] = coeffs[j + k + m] + term
        return HbarSeries(coeffs)
    return star_fn


def test_criterion_2_star_axiom_suite_with_mutants():
    t0 = time.monotonic()
    total = 0
    for pairs, count, deg in ((1, 40, 4), (2, 35, 4), (3, 30, 3)):
        sp = StarProduct.standard(pairs, order=6)
        triples = random_poly_triples(2 * pairs, count, deg, seed=7 * pairs)
        rep = verify_star_axioms(sp, triples, order=6)
        assert rep.passed, rep.failures()
        total += len(triples)
    assert total >= 100

    # mutant A: dropping the 1/k! prefactor must break associativity
    sp = StarProduct.standard(1, order=6)
    triples = random_poly_triples(2, 8, 3, seed=77)
    rep = verify_dq_axioms(_no_factorial_star(sp), sp.bracket, triples,
                           order=6, arity=2)
    assert not rep.passed
    assert any(e.name.startswith("associativity") for e in rep.failures())

    # mutant B: flipping the sign of the bivector must break the
    # first-order bracket normalization (it stays associative)
    from starkit import linalg
    flipped = StarProduct(
        PoissonBivector(linalg.mat_neg(sp.bivector.matrix)), order=6)
    rep = verify_dq_axioms(flipped.star_series, sp.bracket, triples,
                           order=6, arity=2)
    assert not rep.passed
    bad = [e.name for e in rep.failures()]
    assert bad and all(n.startswith("first-order-bracket") for n in bad)

    elapsed = time.monotonic() - t0
    assert elapsed < 60.0, f"took {elapsed:.2f}s"
    announce(2, f"star axioms exact on {total} triples through dim 6, "
                f"both mutants caught, in {elapsed:.2f}s")


def test_criterion_3_translation_equivariance():
    sp = StarProduct.standard(1, order=6)
    shifts = random_translations(2, 50, seed=303)
    cases = random_poly_pairs(2, 50, 4, seed=304)
    for shift, (f, g) in zip(shifts, cases):
        rep = translation_equivariance_check(sp, f, g, shift, order=6)
        assert rep.passed, rep.failures()
    announce(3, "translation equivariance exact on 50 seeded cases at "
                "order 6")


def test_criterion_4_symplectic_invariance():
    sp = StarProduct.standard(1, order=4)
    matrices = random_sl2_matrices(20, seed=404)
    assert len(matrices) >= 20
    for idx, S in enumerate(matrices):
        rep = linear_action_check(sp, S, order=4, seed=idx)
        assert rep.passed, rep.failures()
    announce(4, "star invariant under 20 seeded exact symplectic matrices "
                "at order 4")


def test_criterion_5_patching_agreement_with_mutants(square_surface,
                                                     octagon_surface):
    checked = 0
    for surface in (square_surface, octagon_surface):
        for idx, ov in enumerate(surface.overlaps):
            pairs = random_poly_pairs(2, 50, 3, seed=500 + idx)
            for f, g in pairs:
                rep = atlas.overlap_agreement_check(surface, ov, f, g,
                                                    order=6)
                assert rep.passed, (ov.component, rep.failures())
                checked += 1

    f = SparsePoly.variable(2, 1) * SparsePoly.variable(2, 2)
    g = SparsePoly.variable(2, 2) ** 2
    for surface in (square_surface, octagon_surface):
        ov = next(o for o in surface.overlaps if not o.constant.is_zero())
        # corruption 1: the fiber coordinate picks up the base shift
        bad = atlas.ChartMap([[1, 0], [0, 1]], [ov.constant, ov.constant])
        rep = atlas.overlap_agreement_check(surface, ov, f, g, order=6,
                                            transition=bad)
        assert not rep.passed
        # corruption 2: a shear sneaks into the transition
        bad = atlas.ChartMap([[1, 0], [1, 1]],
                             [ov.constant, 0])
        rep = atlas.overlap_agreement_check(surface, ov, f, g, order=6,
                                            transition=bad)
        assert not rep.passed

    announce(5, f"chart products agree on all {checked} overlap cases, "
                "corrupted transitions detected")


def test_criterion_6_stratum_bookkeeping(square_surface, octagon_surface):
    assert square_surface.genus == 1
    assert square_surface.zero_orders() == []
    assert octagon_surface.genus == 2
    assert octagon_surface.zero_orders() == [2]
    for s in (square_surface, octagon_surface):
        assert sum(s.zero_orders()) == 2 * s.genus - 2
    assert square_surface.summary() == "genus 1, zeros [], sum 0 = 2g-2"
    assert octagon_surface.summary() == \
        "genus 2, zeros [order 2], sum 2 = 2g-2"
    announce(6, "square torus is (g=1, no zeros), octagon is (g=2, one "
                "order-2 zero), orders sum to 2g-2")


def test_criterion_7_permutation_equivariance_and_commuting_sums():
    ps3 = multi.ProductSpace(3, order=4)
    pairs3 = random_poly_pairs(6, 3, 2, seed=701)
    for sigma in multi.Permutation.all_of(3):
        for f, g in pairs3:
            rep = multi.equivariance_check(ps3, sigma, f, g, order=4)
            assert rep.passed, (sigma, rep.failures())

    ps4 = multi.ProductSpace(4, order=4)
    pairs4 = random_poly_pairs(8, 2, 2, seed=702)
    from starkit.corpus import random_permutations
    for sigma in random_permutations(4, 5, seed=703):
        for f, g in pairs4:
            rep = multi.equivariance_check(ps4, sigma, f, g, order=4)
            assert rep.passed, (sigma, rep.failures())

    for j in range(1, 5):
        for k in range(1, 5):
            rep = multi.hitchin_commutation_check(ps3, j, k, order=4)
            assert rep.passed, (j, k, rep.failures())
    announce(7, "all of S3 plus seeded S4 act equivariantly at order 4; "
                "power-sum commutators vanish for j,k <= 4")


def test_criterion_8_transported_products():
    form = SymplecticForm.standard(1)
    sp = StarProduct.standard(1, order=4)
    triples = random_poly_triples(2, 3, 3, seed=801)

    from starkit.parsing import parse_poly
    fiber_shear = transport.SymplectoMap(
        [parse_poly("z1", 2), parse_poly("z2 + z1^2", 2)],
        [parse_poly("z1", 2), parse_poly("z2 - z1^2", 2)], 2)
    maps = [fiber_shear] + random_symplectomorphisms(2, seed=802)
    assert len(maps) == 3
    for m in maps:
        gate = transport.check_symplecto(m, form)
        assert gate.passed, gate.failures()
        rep = transport.verify_transported_dq(m, sp, triples, order=4)
        assert rep.passed, rep.failures()

    bad = transport.SymplectoMap(
        [parse_poly("2*z1", 2), parse_poly("z2", 2)],
        [parse_poly("1/2*z1", 2), parse_poly("z2", 2)], 1)
    gate = transport.check_symplecto(bad, form)
    assert not gate.passed
    assert any("residual" in e.detail for e in gate.failures())
    with pytest.raises(InputError, match="map rejected"):
        transport.transported_star(bad, sp, SparsePoly.variable(2, 1),
                                   SparsePoly.variable(2, 2))
    announce(8, "transported products pass the axiom suite for the fiber "
                "shear and two seeded maps; non-symplectic map rejected "
                "with exact residual")


def test_criterion_9_cli_reports_copy_counts(capsys):
    from starkit.cli import main
    assert main(["product-star", "--rank", "2", "--genus", "2",
                 "--order", "2", "q1", "p1"]) == 0
    out1 = capsys.readouterr().out
    assert out1.splitlines()[0] == "delta = 5 (2*delta = 10 coordinates)"
    assert main(["product-star", "--rank", "1", "--genus", "2",
                 "--order", "2", "q1", "p2"]) == 0
    out2 = capsys.readouterr().out
    assert out2.splitlines()[0] == "delta = 2 (2*delta = 4 coordinates)"
    announce(9, "CLI reports delta = 5 for rank 2 genus 2 and delta = 2 "
                "for rank 1 genus 2")
