"""Sparse multivariate polynomials with exact Gaussian rational coefficients.

A polynomial in m variables z1..zm is a finite map from exponent vectors
(length-m tuples of nonnegative ints) to nonzero ``ExactComplex``
coefficients.  Arithmetic is delegated to the kernel backend (compiled or
pure Python, see ``starkit._kernel``); this module owns validation,
ordering, and the public object API.

Variable indices in the public API are 1-based, matching the z1..zm
naming of the text form.  Term order is graded lexicographic with
z1 > z2 > ... > zm, highest terms first.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from . import _kernel as K
from .errors import ArityError
from .scalars import ExactComplex


def grlex_key(exps):
    return (sum(exps), exps)


def _coerce_coeff(value):
    if isinstance(value, ExactComplex):
        return value.to_kernel()
    if isinstance(value, (int, Fraction)):
        f = Fraction(value)
        return (f.numerator, f.denominator, 0, 1)
    raise ArityError(f"cannot use {value!r} as a polynomial coefficient")


class SparsePoly:
    """Immutable sparse polynomial over the Gaussian rationals."""

    __slots__ = ("arity", "_terms", "_hash")

    def __init__(self, arity: int, terms: Mapping | None = None, *, _raw=None):
        if arity < 1:
            raise ArityError(f"arity must be >= 1, got {arity}")
        object.__setattr__(self, "arity", arity)
        if _raw is not None:
            object.__setattr__(self, "_terms", _raw)
        else:
            raw = {}
            for exps, coeff in (terms or {}).items():
                exps = tuple(exps)
                if len(exps) != arity:
                    raise ArityError(
                        f"exponent vector {exps} has length {len(exps)}, expected {arity}")
                if any(e < 0 or not isinstance(e, int) for e in exps):
                    raise ArityError(f"exponents must be nonnegative ints: {exps}")
                c = _coerce_coeff(coeff)
                if c[0] != 0 or c[2] != 0:
                    raw[exps] = K.cadd(raw[exps], c) if exps in raw else c
            object.__setattr__(self, "_terms", {
                e: c for e, c in raw.items() if c[0] != 0 or c[2] != 0})
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("SparsePoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, arity: int) -> "SparsePoly":
        return cls(arity, _raw={})

    @classmethod
    def const(cls, arity: int, value) -> "SparsePoly":
        c = _coerce_coeff(value)
        if c[0] == 0 and c[2] == 0:
            return cls(arity, _raw={})
        return cls(arity, _raw={(0,) * arity: c})

    @classmethod
    def variable(cls, arity: int, index: int) -> "SparsePoly":
        """The monomial z_index (1-based index)."""
        if not 1 <= index <= arity:
            raise ArityError(f"variable index {index} out of range 1..{arity}")
        exps = tuple(1 if k == index - 1 else 0 for k in range(arity))
        return cls(arity, _raw={exps: K.CONE})

    @classmethod
    def _from_raw(cls, arity: int, raw: dict) -> "SparsePoly":
        return cls(arity, _raw=raw)

    # -- inspection --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1
                                   and (0,) * self.arity in self._terms)

    def constant_value(self) -> ExactComplex:
        """The coefficient of the constant monomial."""
        c = self._terms.get((0,) * self.arity)
        return ExactComplex.from_kernel(c) if c is not None else ExactComplex(0)

    def degree(self) -> int:
        """Total degree; zero polynomial reports -1."""
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def coefficient(self, exps: Sequence[int]) -> ExactComplex:
        c = self._terms.get(tuple(exps))
        return ExactComplex.from_kernel(c) if c is not None else ExactComplex(0)

    def terms(self) -> Iterator[tuple[tuple[int, ...], ExactComplex]]:
        """Terms in descending graded lexicographic order."""
        for exps in sorted(self._terms, key=grlex_key, reverse=True):
            yield exps, ExactComplex.from_kernel(self._terms[exps])

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    # -- ring operations ---------------------------------------------------

    def _check_same_arity(self, other: "SparsePoly"):
        if self.arity != other.arity:
            raise ArityError(
                f"arity mismatch: {self.arity} vs {other.arity}")

    def __add__(self, other):
        if not isinstance(other, SparsePoly):
            other = SparsePoly.const(self.arity, other)
        self._check_same_arity(other)
        return SparsePoly._from_raw(self.arity, K.madd(self._terms, other._terms))

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, SparsePoly):
            other = SparsePoly.const(self.arity, other)
        self._check_same_arity(other)
        return SparsePoly._from_raw(self.arity, K.msub(self._terms, other._terms))

    def __rsub__(self, other):
        return SparsePoly.const(self.arity, other) - self

    def __neg__(self):
        return SparsePoly._from_raw(self.arity, K.mneg(self._terms))

    def __mul__(self, other):
        if isinstance(other, SparsePoly):
            self._check_same_arity(other)
            return SparsePoly._from_raw(self.arity, K.mmul(self._terms, other._terms))
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, value) -> "SparsePoly":
        return SparsePoly._from_raw(self.arity,
                                    K.mscale(self._terms, _coerce_coeff(value)))

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ArityError("polynomial exponents must be nonnegative ints")
        out = SparsePoly.const(self.arity, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    # -- calculus and substitution -----------------------------------------

    def diff(self, var: int) -> "SparsePoly":
        """Exact partial derivative with respect to z_var (1-based)."""
        if not 1 <= var <= self.arity:
            raise ArityError(f"variable index {var} out of range 1..{self.arity}")
        return SparsePoly._from_raw(self.arity, K.mdiff(self._terms, var - 1))

    def subst(self, gs: Sequence["SparsePoly"]) -> "SparsePoly":
        """Replace variable j by gs[j-1], fully expanded.

        gs must have one entry per variable of self; all entries share one
        arity, which becomes the arity of the result.
        """
        if len(gs) != self.arity:
            raise ArityError(
                f"substitution needs {self.arity} polynomials, got {len(gs)}")
        new_arity = gs[0].arity
        for g in gs:
            if g.arity != new_arity:
                raise ArityError("substitution polynomials disagree on arity")
        # cache powers of each substituted polynomial
        pow_cache: list[dict[int, dict]] = [dict() for _ in gs]

        def g_power(j: int, k: int) -> dict:
            cached = pow_cache[j].get(k)
            if cached is None:
                if k == 0:
                    cached = {(0,) * new_arity: K.CONE}
                else:
                    cached = K.mmul(g_power(j, k - 1), gs[j]._terms)
                pow_cache[j][k] = cached
            return cached

        acc: dict = {}
        for exps, coeff in self._terms.items():
            term = {(0,) * new_arity: coeff}
            for j, e in enumerate(exps):
                if e:
                    term = K.mmul(term, g_power(j, e))
            acc = K.madd(acc, term)
        return SparsePoly._from_raw(new_arity, acc)

    def affine_subst(self, matrix, shift=None) -> "SparsePoly":
        """Compose with the affine map v -> A v + c, expanded exactly.

        matrix is arity x arity over ExactComplex (row-major nested
        sequence); shift is a length-arity vector, defaulting to zero.
        """
        m = self.arity
        if len(matrix) != m or any(len(row) != m for row in matrix):
            raise ArityError(f"affine matrix must be {m}x{m}")
        if shift is None:
            shift = [ExactComplex(0)] * m
        if len(shift) != m:
            raise ArityError(f"affine shift must have length {m}")
        gs = []
        for j in range(m):
            raw: dict = {}
            for k in range(m):
                c = _coerce_coeff(matrix[j][k])
                if c[0] != 0 or c[2] != 0:
                    exps = tuple(1 if t == k else 0 for t in range(m))
                    raw[exps] = c
            c0 = _coerce_coeff(shift[j])
            if c0[0] != 0 or c0[2] != 0:
                raw[(0,) * m] = K.cadd(raw.get((0,) * m, K.CZERO), c0)
            gs.append(SparsePoly._from_raw(m, raw))
        return self.subst(gs)

    def eval_at(self, point: Sequence) -> ExactComplex:
        """Evaluate at a point of exact complex coordinates."""
        if len(point) != self.arity:
            raise ArityError(f"point must have length {self.arity}")
        pt = [ExactComplex.coerce(x) for x in point]
        total = ExactComplex(0)
        for exps, coeff in self._terms.items():
            v = ExactComplex.from_kernel(coeff)
            for x, e in zip(pt, exps):
                if e:
                    v = v * x ** e
            total = total + v
        return total

    # -- equality, hashing, repr -------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, ExactComplex)):
            other = SparsePoly.const(self.arity, other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.arity == other.arity and self._terms == other._terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.arity, tuple(sorted(self._terms.items()))))
            object.__setattr__(self, "_hash", h)
        return h

    def __str__(self):
        from .parsing import poly_to_str
        return poly_to_str(self)

    def __repr__(self):
        return f"SparsePoly({self.arity}, {str(self)!r})"
