"""Independent reference implementations used only by the tests.

Everything here goes through sympy and full tensor sums, deliberately
avoiding the multiset enumeration and kernel arithmetic of the package
under test.
"""

from fractions import Fraction
from itertools import product

import sympy


def symbols_for(arity: int):
    return sympy.symbols(f"z1:{arity + 1}")


def exact_to_sympy(c) -> sympy.Expr:
    return sympy.Rational(c.re.numerator, c.re.denominator) \
        + sympy.I * sympy.Rational(c.im.numerator, c.im.denominator)


def poly_to_sympy(f, syms) -> sympy.Expr:
    total = sympy.Integer(0)
    for exps, coeff in f.terms():
        mono = sympy.Integer(1)
        for s, e in zip(syms, exps):
            mono *= s ** e
        total += exact_to_sympy(coeff) * mono
    return sympy.expand(total)


def series_to_sympy(F, syms, h) -> sympy.Expr:
    total = sympy.Integer(0)
    for k, coeff in enumerate(F.coeffs):
        total += poly_to_sympy(coeff, syms) * h ** k
    return sympy.expand(total)


def bivector_to_sympy(biv):
    return [[exact_to_sympy(entry) for entry in row] for row in biv.matrix]


def ref_bracket(fs, gs, pi, syms) -> sympy.Expr:
    total = sympy.Integer(0)
    for a, sa in enumerate(syms):
        for b, sb in enumerate(syms):
            if pi[a][b] == 0:
                continue
            total += pi[a][b] * sympy.diff(fs, sa) * sympy.diff(gs, sb)
    return sympy.expand(total)


def ref_bidiff(k: int, fs, gs, pi, syms) -> sympy.Expr:
    """k-th bidifferential power as a plain sum over index sequences."""
    if k == 0:
        return sympy.expand(fs * gs)
    d = len(syms)
    total = sympy.Integer(0)
    # cache iterated derivatives keyed by the sorted sequence
    dcache_f: dict = {(): fs}
    dcache_g: dict = {(): gs}

    def deriv(cache, base, seq):
        key = tuple(sorted(seq))
        if key not in cache:
            prev = deriv(cache, base, key[:-1])
            cache[key] = sympy.diff(prev, syms[key[-1]])
        return cache[key]

    for aseq in product(range(d), repeat=k):
        fa = deriv(dcache_f, fs, aseq)
        if fa == 0:
            continue
        for bseq in product(range(d), repeat=k):
            w = sympy.Integer(1)
            for a, b in zip(aseq, bseq):
                w *= pi[a][b]
                if w == 0:
                    break
            if w == 0:
                continue
            total += w * fa * deriv(dcache_g, gs, bseq)
    return sympy.expand(total)


def ref_star(fs, gs, pi, syms, order: int, h) -> sympy.Expr:
    total = sympy.Integer(0)
    for k in range(order + 1):
        term = ref_bidiff(k, fs, gs, pi, syms)
        if term == 0:
            continue
        total += (sympy.I / 2) ** k / sympy.factorial(k) * h ** k * term
    return sympy.expand(total)


def frac(text) -> Fraction:
    return Fraction(text)
