"""Constant symplectic forms and their Poisson brackets.

A symplectic form on affine 2n-space is stored as its constant coefficient
matrix T, antisymmetric and invertible, meaning the two-form

    omega = sum over a < b of T[a][b] dz_a ^ dz_b.

The standard block on one (base, fiber) pair is dz_2 ^ dz_1, so T is
[[0, -1], [1, 0]] there.  The induced bivector is obtained by the pairing
route below rather than by a closed-form shortcut, so the sign conventions
are fixed in exactly one place:

    v_a   = solution of  T v_a = e_a     (column a of T^-1)
    pi_ab = v_a . (T v_b)

which lands on pi = transpose(T^-1).  The bracket is then

    {f, g} = sum over a, b of pi_ab (df/dz_a) (dg/dz_b)

and {z1, z2} = -1 on the standard pair.  For constant pi the bracket is
bilinear, antisymmetric, a derivation in each slot, and satisfies Jacobi;
the residual helpers below return the exact polynomial that must vanish.
"""

from __future__ import annotations

from . import _kernel as K
from . import linalg
from .errors import ArityError, InputError
from .poly import SparsePoly
from .scalars import ExactComplex


def _check_antisymmetric(mat, what: str) -> None:
    n = len(mat)
    for a in range(n):
        for b in range(n):
            if mat[a][b] != -mat[b][a]:
                raise InputError(f"{what} must be antisymmetric")


class SymplecticForm:
    """Constant-coefficient symplectic form on dimension dim."""

    __slots__ = ("dim", "matrix")

    def __init__(self, matrix):
        mat = linalg.as_matrix(matrix)
        _check_antisymmetric(mat, "a symplectic form")
        if len(mat) % 2 != 0:
            raise InputError("a symplectic form needs even dimension")
        linalg.mat_inv(mat)  # rejects degenerate forms
        object.__setattr__(self, "dim", len(mat))
        object.__setattr__(self, "matrix", mat)

    def __setattr__(self, name, value):
        raise AttributeError("SymplecticForm is immutable")

    @classmethod
    def standard(cls, pairs: int) -> "SymplecticForm":
        """Block sum of dz_{2k} ^ dz_{2k-1} over k = 1..pairs."""
        if pairs < 1:
            raise InputError("need at least one coordinate pair")
        n = 2 * pairs
        rows = [[0] * n for _ in range(n)]
        for k in range(pairs):
            a = 2 * k
            rows[a][a + 1] = -1
            rows[a + 1][a] = 1
        return cls(rows)

    def inverse_matrix(self):
        return linalg.mat_inv(self.matrix)

    def __eq__(self, other):
        return (isinstance(other, SymplecticForm)
                and self.matrix == other.matrix)

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"SymplecticForm({[[str(x) for x in row] for row in self.matrix]})"


class PoissonBivector:
    """Constant antisymmetric bivector; evaluates the bracket."""

    __slots__ = ("dim", "matrix")

    def __init__(self, matrix):
        mat = linalg.as_matrix(matrix)
        _check_antisymmetric(mat, "a bivector")
        object.__setattr__(self, "dim", len(mat))
        object.__setattr__(self, "matrix", mat)

    def __setattr__(self, name, value):
        raise AttributeError("PoissonBivector is immutable")

    def bracket(self, f: SparsePoly, g: SparsePoly) -> SparsePoly:
        """{f, g} = sum pi_ab (df/dz_a)(dg/dz_b)."""
        if f.arity != self.dim or g.arity != self.dim:
            raise ArityError(
                f"bracket needs arity {self.dim}, got {f.arity} and {g.arity}")
        df = [K.mdiff(f._terms, a) for a in range(self.dim)]
        dg = [K.mdiff(g._terms, b) for b in range(self.dim)]
        acc: dict = {}
        for a in range(self.dim):
            if not df[a]:
                continue
            for b in range(self.dim):
                c = self.matrix[a][b]
                if c.is_zero() or not dg[b]:
                    continue
                K.maddmul(acc, df[a], dg[b], c.to_kernel())
        return SparsePoly._from_raw(self.dim, acc)

    def __eq__(self, other):
        return (isinstance(other, PoissonBivector)
                and self.matrix == other.matrix)

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"PoissonBivector({[[str(x) for x in row] for row in self.matrix]})"


def bivector_from_form(form: SymplecticForm) -> PoissonBivector:
    """Invert the form by pairing coordinate gradients through it.

    For each coordinate z_a the constant vector field v_a with
    T v_a = e_a is computed, and pi_ab is read off as v_a . (T v_b).
    """
    theta = form.matrix
    theta_inv = linalg.mat_inv(theta)
    cols = linalg.transpose(theta_inv)  # cols[a] = column a of T^-1
    n = form.dim
    rows = []
    for a in range(n):
        row = []
        for b in range(n):
            tv = linalg.mat_vec(theta, cols[b])
            row.append(sum((x * y for x, y in zip(cols[a], tv)),
                           ExactComplex(0)))
        rows.append(row)
    return PoissonBivector(rows)


def form_from_bivector(biv: PoissonBivector) -> SymplecticForm:
    """Inverse of bivector_from_form: T = (transpose(pi))^-1."""
    return SymplecticForm(linalg.mat_inv(linalg.transpose(biv.matrix)))


def standard_bivector(pairs: int) -> PoissonBivector:
    return bivector_from_form(SymplecticForm.standard(pairs))


# -- axiom residuals (exact polynomials that must vanish) --------------------


def antisymmetry_residual(biv, f, g) -> SparsePoly:
    return biv.bracket(f, g) + biv.bracket(g, f)


def leibniz_residual(biv, f, g, h) -> SparsePoly:
    return biv.bracket(f, g * h) - biv.bracket(f, g) * h - g * biv.bracket(f, h)


def jacobi_residual(biv, f, g, h) -> SparsePoly:
    return (biv.bracket(f, biv.bracket(g, h))
            + biv.bracket(g, biv.bracket(h, f))
            + biv.bracket(h, biv.bracket(f, g)))


def bilinearity_residual(biv, f, g, h, c) -> SparsePoly:
    """{f + c g, h} - {f, h} - c {g, h} for a scalar c."""
    c = ExactComplex.coerce(c)
    return (biv.bracket(f + g.scale(c), h)
            - biv.bracket(f, h)
            - biv.bracket(g, h).scale(c))
