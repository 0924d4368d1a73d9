"""Star products for constant bivectors, with axiom verifiers.

The product is the exponential series

    f * g = sum over k >= 0 of  h^k (i/2)^k / k!  B_k(f, g)

where B_k applies the bivector k times:

    B_k(f, g) = sum over index tuples a, b of
                pi[a_1][b_1] ... pi[a_k][b_k]
                (d^k f / dz_a1..dz_ak) (d^k g / dz_b1..dz_bk).

B_0 is the plain product and B_1 the Poisson bracket.  For polynomial
inputs B_k vanishes once k exceeds the degree of either factor, so every
truncation below is exact, not an approximation.

B_k is evaluated by grouping the index tuples: only nonzero entries of pi
contribute, and an unordered choice of k entries with multiplicities m_p
accounts for k! / prod(m_p!) ordered tuples, all with the same derivative
pair.  That turns a (2n)^(2k) sum into a walk over small multisets.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations_with_replacement
from math import factorial

from . import _kernel as K
from . import linalg
from .errors import ArityError, InputError
from .poisson import PoissonBivector, SymplecticForm, bivector_from_form
from .poly import SparsePoly
from .reports import Report
from .scalars import ExactComplex
from .series import HbarSeries


def _half_i_power(k: int) -> tuple:
    """(i/2)^k / k! as a kernel coefficient."""
    d = (1 << k) * factorial(k)
    r = k % 4
    if r == 0:
        return (1, d, 0, 1)
    if r == 1:
        return (0, 1, 1, d)
    if r == 2:
        return (-1, d, 0, 1)
    return (0, 1, -1, d)


class _DerivCache:
    """Iterated partials of one polynomial, keyed by multi-index."""

    def __init__(self, f: SparsePoly):
        self.n = f.arity
        self.table = {(0,) * f.arity: f._terms}

    def get(self, alpha: tuple) -> dict:
        cached = self.table.get(alpha)
        if cached is None:
            var = next(i for i, e in enumerate(alpha) if e)
            parent = alpha[:var] + (alpha[var] - 1,) + alpha[var + 1:]
            cached = K.mdiff(self.get(parent), var)
            self.table[alpha] = cached
        return cached


class StarProduct:
    """Star product attached to a constant Poisson bivector.

    order is the default truncation used when a call does not pass one;
    every truncation of polynomial inputs is exact regardless.
    """

    __slots__ = ("bivector", "dim", "order", "_pairs")

    def __init__(self, bivector: PoissonBivector, order: int = 8):
        if bivector.dim % 2 != 0:
            raise InputError("star products need even dimension")
        if order < 0:
            raise InputError("order must be nonnegative")
        object.__setattr__(self, "bivector", bivector)
        object.__setattr__(self, "dim", bivector.dim)
        object.__setattr__(self, "order", order)
        pairs = tuple(
            ((a, b), bivector.matrix[a][b].to_kernel())
            for a in range(bivector.dim)
            for b in range(bivector.dim)
            if not bivector.matrix[a][b].is_zero())
        object.__setattr__(self, "_pairs", pairs)

    def __setattr__(self, name, value):
        raise AttributeError("StarProduct is immutable")

    @classmethod
    def from_form(cls, form: SymplecticForm, order: int = 8) -> "StarProduct":
        return cls(bivector_from_form(form), order)

    @classmethod
    def standard(cls, pairs: int, order: int = 8) -> "StarProduct":
        return cls.from_form(SymplecticForm.standard(pairs), order)

    def _check_arity(self, *polys) -> None:
        for p in polys:
            if p.arity != self.dim:
                raise ArityError(
                    f"expected arity {self.dim}, got {p.arity}")

    def bracket(self, f: SparsePoly, g: SparsePoly) -> SparsePoly:
        return self.bivector.bracket(f, g)

    def bidiff_power(self, k: int, f: SparsePoly, g: SparsePoly) -> SparsePoly:
        """B_k(f, g), without the (i/2)^k / k! prefactor."""
        self._check_arity(f, g)
        if k < 0:
            raise InputError("bidifferential order must be nonnegative")
        if k == 0:
            return f * g
        if k > f.degree() or k > g.degree():
            return SparsePoly.zero(self.dim)
        return self._bidiff(k, _DerivCache(f), _DerivCache(g))

    def _bidiff(self, k: int, df: _DerivCache, dg: _DerivCache) -> SparsePoly:
        n = self.dim
        kfact = factorial(k)
        acc: dict = {}
        for combo in combinations_with_replacement(self._pairs, k):
            am = [0] * n
            bm = [0] * n
            cprod = K.CONE
            for (a, b), c4 in combo:
                am[a] += 1
                bm[b] += 1
                cprod = K.cmul(cprod, c4)
            fa = df.get(tuple(am))
            if not fa:
                continue
            gb = dg.get(tuple(bm))
            if not gb:
                continue
            denom = 1
            for m in Counter(combo).values():
                denom *= factorial(m)
            weight = K.cmul(cprod, K.qnorm(kfact, denom) + (0, 1))
            K.maddmul(acc, fa, gb, weight)
        return SparsePoly._from_raw(n, acc)

    def coefficient(self, k: int, f: SparsePoly, g: SparsePoly) -> SparsePoly:
        """The h^k coefficient of f * g."""
        return self.bidiff_power(k, f, g).scale(
            ExactComplex.from_kernel(_half_i_power(k)))

    def star(self, f: SparsePoly, g: SparsePoly,
             order: int | None = None) -> HbarSeries:
        """f * g as a series in h, exact through the given order."""
        self._check_arity(f, g)
        if order is None:
            order = self.order
        if order < 0:
            raise InputError("order must be nonnegative")
        coeffs = [SparsePoly.zero(self.dim) for _ in range(order + 1)]
        top = min(order, f.degree(), g.degree())
        if top >= 0:
            coeffs[0] = f * g
            df = _DerivCache(f)
            dg = _DerivCache(g)
            for k in range(1, top + 1):
                coeffs[k] = self._bidiff(k, df, dg).scale(
                    ExactComplex.from_kernel(_half_i_power(k)))
        return HbarSeries(coeffs)

    def star_series(self, F: HbarSeries, G: HbarSeries) -> HbarSeries:
        """Star product of two series, truncated at the smaller order."""
        if F.arity != self.dim or G.arity != self.dim:
            raise ArityError(f"expected arity {self.dim}")
        order = min(F.order, G.order)
        out = [SparsePoly.zero(self.dim) for _ in range(order + 1)]
        for j in range(order + 1):
            fj = F[j]
            if fj.is_zero():
                continue
            for k in range(order + 1 - j):
                gk = G[k]
                if gk.is_zero():
                    continue
                rem = order - j - k
                partial = self.star(fj, gk, rem)
                for m in range(rem + 1):
                    if not partial[m].is_zero():
                        out[j + k + m] = out[j + k + m] + partial[m]
        return HbarSeries(out)

    def commutator(self, f: SparsePoly, g: SparsePoly,
                   order: int | None = None) -> HbarSeries:
        """f * g - g * f through the given order."""
        return self.star(f, g, order) - self.star(g, f, order)

    def invariant_under(self, matrix) -> bool:
        """Whether the linear map preserves the bivector: S pi S^T = pi."""
        S = linalg.as_matrix(matrix)
        if len(S) != self.dim:
            raise ArityError(f"matrix must be {self.dim}x{self.dim}")
        conj = linalg.mat_mul(S, linalg.mat_mul(self.bivector.matrix,
                                                linalg.transpose(S)))
        return conj == self.bivector.matrix


def star_commutator(star: StarProduct, f, g,
                    order: int | None = None) -> HbarSeries:
    return star.commutator(f, g, order)


def translate_poly(f: SparsePoly, shift) -> SparsePoly:
    """f shifted by a constant vector: z -> z + shift."""
    if len(shift) != f.arity:
        raise ArityError(f"shift must have length {f.arity}")
    return f.affine_subst(linalg.identity(f.arity), list(shift))


def translate_series(F: HbarSeries, shift) -> HbarSeries:
    return F.map_coeffs(lambda p: translate_poly(p, shift))


def translation_equivariance_check(star: StarProduct, f, g, shift,
                                   order: int) -> Report:
    """Translating the inputs commutes with the product, exactly."""
    rep = Report("translation equivariance")
    lhs = star.star(translate_poly(f, shift), translate_poly(g, shift), order)
    rhs = translate_series(star.star(f, g, order), shift)
    rep.add("translate-then-star equals star-then-translate", lhs == rhs,
            "" if lhs == rhs else f"difference {lhs - rhs}")
    return rep


def linear_action_check(star: StarProduct, matrix, cases=None,
                        order: int | None = None, seed: int = 0) -> Report:
    """Composition with a bivector-preserving linear map commutes with
    the product: (f o S) * (g o S) = (f * g) o S.

    Maps that move the bivector are rejected up front rather than
    reported, since the identity is not expected to hold for them.
    """
    S = linalg.as_matrix(matrix)
    if len(S) != star.dim:
        raise ArityError(f"matrix must be {star.dim}x{star.dim}")
    if not star.invariant_under(S):
        conj = linalg.mat_mul(S, linalg.mat_mul(star.bivector.matrix,
                                                linalg.transpose(S)))
        residual = linalg.mat_sub(conj, star.bivector.matrix)
        raise InputError(
            "matrix does not preserve the bivector; residual "
            f"{[[str(x) for x in row] for row in residual]}")
    if order is None:
        order = star.order
    if cases is None:
        from .corpus import random_poly_pairs
        cases = random_poly_pairs(star.dim, count=5, max_degree=3, seed=seed)
    rep = Report("linear invariance")
    rep.add("map preserves the bivector", True)
    for idx, (f, g) in enumerate(cases):
        lhs = star.star(f.affine_subst(S), g.affine_subst(S), order)
        rhs = star.star(f, g, order).map_coeffs(lambda p: p.affine_subst(S))
        ok = lhs == rhs
        rep.add(f"equivariance[{idx}]", ok,
                "" if ok else f"difference {lhs - rhs}")
    return rep


def verify_dq_axioms(star_fn, bracket_fn, triples, order: int, arity: int,
                     title: str = "deformation quantization axioms") -> Report:
    """Check the four product axioms on a batch of polynomial triples.

    star_fn takes two HbarSeries of the working order and returns their
    product at that order; bracket_fn takes two polynomials.  Checked per
    triple (f, g, h):

      1. associativity   (f*g)*h = f*(g*h)
      2. unit            1*f = f*1 = f
      3. classical limit (f*g) at h^0 = fg
      4. first order     (f*g - g*f) at h^1 = i {f, g}
    """
    if order < 1:
        raise InputError("axiom checks need order at least 1")
    rep = Report(title)
    one = HbarSeries.from_poly(SparsePoly.const(arity, 1), order)
    ii = ExactComplex(0, 1)
    for idx, (f, g, h) in enumerate(triples):
        F = HbarSeries.from_poly(f, order)
        G = HbarSeries.from_poly(g, order)
        H = HbarSeries.from_poly(h, order)
        fg = star_fn(F, G)
        left = star_fn(fg, H)
        right = star_fn(F, star_fn(G, H))
        rep.add(f"associativity[{idx}]", left == right,
                "" if left == right else f"difference {left - right}")
        unit_ok = star_fn(one, F) == F and star_fn(F, one) == F
        rep.add(f"unit[{idx}]", unit_ok)
        rep.add(f"classical-limit[{idx}]", fg[0] == f * g)
        comm1 = (fg - star_fn(G, F))[1]
        expected = bracket_fn(f, g).scale(ii)
        rep.add(f"first-order-bracket[{idx}]", comm1 == expected,
                "" if comm1 == expected
                else f"got {comm1}, expected {expected}")
    return rep


def verify_star_axioms(star: StarProduct, triples, order: int) -> Report:
    return verify_dq_axioms(star.star_series, star.bracket, triples,
                            order, star.dim)
