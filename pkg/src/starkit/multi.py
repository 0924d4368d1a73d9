"""Products of quantized planes and the symmetric-group action.

A product space has n copies of the standard (zeta, lambda) pair, with
coordinates interleaved: copy i owns variables z_{2i-1} = zeta_i and
z_{2i} = lambda_i (1-based).  Its bivector is block-diagonal, so distinct
copies star-commute exactly, and the symmetric group acts by relabelling
whole (zeta_i, lambda_i) pairs at once.  The action is on the left:
sigma sends the content of copy i to copy sigma(i), and composing actions
matches composing permutations.
"""

from __future__ import annotations

from itertools import permutations as _all_images
from math import factorial

from .errors import ArityError, InputError
from .moyal import StarProduct
from .poisson import SymplecticForm
from .poly import SparsePoly
from .reports import Report
from .scalars import ExactComplex
from .series import HbarSeries


class ProductSpace:
    """n interleaved (zeta, lambda) pairs with the block-diagonal form."""

    __slots__ = ("copies", "dim", "form", "star")

    def __init__(self, copies: int, order: int = 8):
        if copies < 1:
            raise InputError("need at least one copy")
        object.__setattr__(self, "copies", copies)
        object.__setattr__(self, "dim", 2 * copies)
        form = SymplecticForm.standard(copies)
        object.__setattr__(self, "form", form)
        object.__setattr__(self, "star", StarProduct.from_form(form, order))

    def __setattr__(self, name, value):
        raise AttributeError("ProductSpace is immutable")

    def zeta(self, i: int) -> SparsePoly:
        """Base coordinate of copy i (1-based)."""
        if not 1 <= i <= self.copies:
            raise InputError(f"copy index {i} out of range")
        return SparsePoly.variable(self.dim, 2 * i - 1)

    def lam(self, i: int) -> SparsePoly:
        """Fiber coordinate of copy i (1-based)."""
        if not 1 <= i <= self.copies:
            raise InputError(f"copy index {i} out of range")
        return SparsePoly.variable(self.dim, 2 * i)


def product_star(ps: ProductSpace, f: SparsePoly, g: SparsePoly,
                 order: int | None = None) -> HbarSeries:
    return ps.star.star(f, g, order)


class Permutation:
    """Bijection of {0..n-1}, stored as the image array."""

    __slots__ = ("images",)

    def __init__(self, images):
        imgs = tuple(images)
        if sorted(imgs) != list(range(len(imgs))):
            raise InputError(f"not a permutation: {imgs}")
        object.__setattr__(self, "images", imgs)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(n))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        if not (0 <= i < n and 0 <= j < n):
            raise InputError(f"transposition indices must lie in 0..{n - 1}")
        imgs = list(range(n))
        imgs[i], imgs[j] = imgs[j], imgs[i]
        return cls(imgs)

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other."""
        if self.n != other.n:
            raise InputError("permutation sizes differ")
        return Permutation(tuple(self.images[other.images[i]]
                                 for i in range(self.n)))

    def inverse(self) -> "Permutation":
        imgs = [0] * self.n
        for i, v in enumerate(self.images):
            imgs[v] = i
        return Permutation(imgs)

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images))

    @staticmethod
    def all_of(n: int):
        for imgs in _all_images(range(n)):
            yield Permutation(imgs)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({list(self.images)})"


def permute_poly(sigma: Permutation, f: SparsePoly) -> SparsePoly:
    """Send the (zeta_i, lambda_i) pair of copy i to copy sigma(i)."""
    if f.arity != 2 * sigma.n:
        raise ArityError(
            f"permutation of {sigma.n} copies needs arity {2 * sigma.n}, "
            f"got {f.arity}")
    n = sigma.n
    raw = {}
    for exps, coeff in f._terms.items():
        new = [0] * (2 * n)
        for i in range(n):
            new[2 * sigma.images[i]] = exps[2 * i]
            new[2 * sigma.images[i] + 1] = exps[2 * i + 1]
        raw[tuple(new)] = coeff
    return SparsePoly._from_raw(f.arity, raw)


def equivariance_check(ps: ProductSpace, sigma: Permutation,
                       f: SparsePoly, g: SparsePoly,
                       order: int | None = None) -> Report:
    """Relabelling copies commutes with the product, exactly."""
    rep = Report("symmetric-group equivariance")
    lhs = ps.star.star(permute_poly(sigma, f), permute_poly(sigma, g), order)
    rhs = ps.star.star(f, g, order).map_coeffs(
        lambda p: permute_poly(sigma, p))
    ok = lhs == rhs
    rep.add(f"sigma={list(sigma.images)}", ok,
            "" if ok else f"difference {lhs - rhs}")
    return rep


def symmetrize(f: SparsePoly) -> SparsePoly:
    """Average of f over all relabellings; a projection onto invariants."""
    if f.arity % 2 != 0:
        raise ArityError("symmetrize needs an even arity (pairs of variables)")
    n = f.arity // 2
    total = SparsePoly.zero(f.arity)
    for sigma in Permutation.all_of(n):
        total = total + permute_poly(sigma, f)
    inv = ExactComplex(1) / ExactComplex(factorial(n))
    return total.scale(inv)


def is_symmetric(f: SparsePoly) -> bool:
    if f.arity % 2 != 0:
        raise ArityError("symmetry is defined for even arity")
    n = f.arity // 2
    return all(permute_poly(sigma, f) == f for sigma in Permutation.all_of(n))


def power_sum(ps: ProductSpace, k: int) -> SparsePoly:
    """p_k = sum over copies of lambda_i^k."""
    if k < 1:
        raise InputError("power sums start at k = 1")
    raw = {}
    for i in range(ps.copies):
        exps = [0] * ps.dim
        exps[2 * i + 1] = k
        raw[tuple(exps)] = (1, 1, 0, 1)
    return SparsePoly._from_raw(ps.dim, raw)


def hitchin_commutation_check(ps: ProductSpace, j: int, k: int,
                              order: int | None = None) -> Report:
    """Fiber power sums must commute in both senses, exactly."""
    rep = Report("power-sum commutation")
    pj = power_sum(ps, j)
    pk = power_sum(ps, k)
    br = ps.star.bracket(pj, pk)
    rep.add(f"bracket p{j},p{k} vanishes", br.is_zero(),
            "" if br.is_zero() else f"bracket {br}")
    comm = ps.star.commutator(pj, pk, order)
    rep.add(f"star commutator p{j},p{k} vanishes", comm.is_zero(),
            "" if comm.is_zero() else f"commutator {comm}")
    return rep


class Configuration:
    """n labelled points of the (zeta, lambda) plane with exact entries."""

    __slots__ = ("points",)

    def __init__(self, points):
        pts = tuple((ExactComplex.coerce(z), ExactComplex.coerce(l))
                    for z, l in points)
        if not pts:
            raise InputError("configuration needs at least one point")
        object.__setattr__(self, "points", pts)

    def __setattr__(self, name, value):
        raise AttributeError("Configuration is immutable")

    def __len__(self):
        return len(self.points)


def configuration_check(config: Configuration) -> Report:
    """Pairwise distinctness of the points, flagging any violating pair."""
    rep = Report("configuration distinctness")
    pts = config.points
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            ok = pts[i] != pts[j]
            rep.add(f"points {i} and {j} distinct", ok,
                    "" if ok else f"both equal ({pts[i][0]}, {pts[i][1]})")
    return rep


def moduli_copies(rank: int, genus: int) -> int:
    """Number of copies delta = rank^2 (genus - 1) + 1."""
    if rank < 1 or genus < 1:
        raise InputError("rank and genus must be positive integers")
    return rank * rank * (genus - 1) + 1
