"""Time-ordering maps: T, its scalar part, the generator Sigma, and the
renormalised versions.

T sends a basis word to the circle product of its letters, so it is only well
defined when the circle product is commutative, i.e. when the pairing is
symmetric; asymmetric pairings are a hard error here, never a silent choice
of factor order.  Three independently coded routes compute T (contraction
sum, circle fold, exp of the contraction Laplacian) so drift in any one of
them is caught by the others.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .algebra import Element, Monomial, derivation, sweedler
from .laplace import (
    PairingMatrix,
    circle,
    circle_fold,
    wick_expand,
)
from .renorm import (
    LinearFunctional,
    _modified_monomials,
    _z_monomials,
    circle_renorm,
)
from .scalars import ONE, ZERO, Scalar


class TContext:
    """A symmetric pairing plus an optional renormalisation scheme.

    Time-ordered maps need the circle product to be commutative, which holds
    exactly when the pairing matrix is symmetric.
    """

    def __init__(self, pairing: PairingMatrix, scheme: LinearFunctional | None = None):
        require_symmetric(pairing)
        self.pairing = pairing
        self.scheme = scheme
        self._t_memo: dict[Monomial, Element] = {}
        self._tbar_memo: dict[Monomial, Element] = {}
        self._ts_memo: dict[Monomial, Scalar] = {}
        self._tbars_memo: dict[Monomial, Scalar] = {}

    def require_scheme(self) -> LinearFunctional:
        if self.scheme is None:
            raise ValueError("renormalised time-ordering needs a scheme in the context")
        return self.scheme

    def __repr__(self):
        return f"TContext(pairing={self.pairing!r}, scheme={self.scheme!r})"


def require_symmetric(L: PairingMatrix) -> None:
    if L.symmetric:
        return
    raise ValueError(
        "time-ordering requires a symmetric pairing: the circle product must be "
        "commutative for products of more than two factors to be order independent"
    )


def t_map(u: Element, ctx: TContext) -> Element:
    """T(u): each monomial becomes the circle product of its generators.

    Default route: sum over sets of disjoint pairwise contractions.
    """
    out = Element.zero()
    for mono, coeff in u.items():
        t = ctx._t_memo.get(mono)
        if t is None:
            t = wick_expand(mono.indices(), ctx.pairing)
            ctx._t_memo[mono] = t
        out = out + coeff * t
    return out


def t_map_by_circle_fold(u: Element, ctx: TContext) -> Element:
    """Second route for T: left fold of the circle product."""
    out = Element.zero()
    for mono, coeff in u.items():
        gens = [Element.generator(i) for i in mono.indices()]
        out = out + coeff * circle_fold(gens, ctx.pairing)
    return out


def sigma_apply(u: Element, ctx: TContext) -> Element:
    """The contraction Laplacian: half the pairing-weighted double derivation."""
    L = ctx.pairing
    out = Element.zero()
    for i in range(1, L.dim + 1):
        du = derivation(i, u)
        if not du:
            continue
        for j in range(1, L.dim + 1):
            f = L.entry(i, j)
            if not f:
                continue
            ddu = derivation(j, du)
            if ddu:
                out = out + f * ddu
    return Scalar(Fraction(1, 2)) * out


def exp_sigma(u: Element, ctx: TContext) -> Element:
    """Third route for T: the exponential series of Sigma.

    Sigma lowers grading by two, so the series terminates after at most
    floor(n/2)+1 terms on grading n.
    """
    total = u
    term = u
    k = 1
    while term:
        term = sigma_apply(term, ctx) / k
        total = total + term
        k += 1
    return total


def t_scalar(u: Element, ctx: TContext) -> Scalar:
    """The scalar part of time ordering, by the splitting recursion.

    t(1)=1, t(a)=0 and t(a v rest) contracts a against one factor of rest.
    Vanishes in odd gradings.
    """
    total = ZERO
    for mono, coeff in u.items():
        v = _t_scalar_monomial(mono, ctx)
        if v:
            total = total + coeff * v
    return total


def _t_scalar_monomial(m: Monomial, ctx: TContext) -> Scalar:
    n = m.grading
    if n == 0:
        return ONE
    if n % 2:
        return ZERO
    cached = ctx._ts_memo.get(m)
    if cached is not None:
        return cached
    a = m.counts[0][0]
    rest = m.remove_one(a)
    total = ZERO
    for idx, mult in rest.counts:
        f = ctx.pairing.entry(a, idx)
        if not f:
            continue
        total = total + mult * f * _t_scalar_monomial(rest.remove_one(idx), ctx)
    ctx._ts_memo[m] = total
    return total


def t_closed_form(generators, ctx: TContext) -> Scalar:
    """Perfect-matching sum over an ordered generator list ((2n-1)!! branches).

    Odd lists have no perfect matching and give zero.
    """
    gens = tuple(generators)
    if len(gens) % 2:
        return ZERO

    def match(rest) -> Scalar:
        if not rest:
            return ONE
        first = rest[0]
        total = ZERO
        for pos in range(1, len(rest)):
            f = ctx.pairing.entry(first, rest[pos])
            if not f:
                continue
            total = total + f * match(rest[1:pos] + rest[pos + 1:])
        return total

    return match(gens)


def t_permutation_form(generators, ctx: TContext) -> Scalar:
    """All-permutations form of the scalar t-map: brute-force oracle.

    1/(2^n n!) times the sum over every ordering of products of consecutive
    pairs; exponential cost, for cross-validation only.
    """
    from itertools import permutations

    gens = tuple(generators)
    if len(gens) % 2:
        return ZERO
    n = len(gens) // 2
    total = ZERO
    for sigma in permutations(gens):
        prod = ONE
        for k in range(n):
            prod = prod * ctx.pairing.entry(sigma[2 * k], sigma[2 * k + 1])
            if not prod:
                break
        total = total + prod
    return total / Scalar(2**n * factorial(n))


def tbar_map(u: Element, ctx: TContext) -> Element:
    """Renormalised T: multiplicative from the symmetric product to the
    renormalised circle product."""
    z = ctx.require_scheme()
    out = Element.zero()
    for mono, coeff in u.items():
        t = ctx._tbar_memo.get(mono)
        if t is None:
            t = Element.one()
            for i in mono.indices():
                t = circle_renorm(t, Element.generator(i), z, ctx.pairing)
            ctx._tbar_memo[mono] = t
        out = out + coeff * t
    return out


def tbar_map_by_twist(u: Element, ctx: TContext) -> Element:
    """Second route for the renormalised T: convolution twist of the bare T.

    Tbar(u) = sum zeta(u_(1)) T(u_(2)).
    """
    z = ctx.require_scheme()
    out = Element.zero()
    for u1, u2, coeff in sweedler(u):
        f = z(u1)
        if not f:
            continue
        out = out + (coeff * f) * t_map(Element.from_monomial(u2), ctx)
    return out


def tbar_scalar(u: Element, ctx: TContext) -> Scalar:
    """Scalar part of the renormalised time ordering (splitting recursion
    with the modified pairing)."""
    z = ctx.require_scheme()
    total = ZERO
    for mono, coeff in u.items():
        v = _tbar_scalar_monomial(mono, ctx, z)
        if v:
            total = total + coeff * v
    return total


def _tbar_scalar_monomial(m: Monomial, ctx: TContext, z: LinearFunctional) -> Scalar:
    n = m.grading
    if n == 0:
        return ONE
    if n == 1:
        return ZERO
    cached = ctx._tbars_memo.get(m)
    if cached is not None:
        return cached
    a = Monomial.generator(m.counts[0][0])
    rest = m.remove_one(m.counts[0][0])
    total = ZERO
    for rest1, rest2, weight in rest.splits():
        f = _modified_monomials(a, rest2, z, ctx.pairing)
        if not f:
            continue
        total = total + weight * f * _tbar_scalar_monomial(rest1, ctx, z)
    ctx._tbars_memo[m] = total
    return total


def first_identity_check(u: Element, v: Element, ctx: TContext):
    """Both sides of: T(u) renorm-circle T(v) = sum Z(u1,v1) T(u2) circle T(v2)."""
    z = ctx.require_scheme()
    lhs = circle_renorm(t_map(u, ctx), t_map(v, ctx), z, ctx.pairing)
    rhs = Element.zero()
    v_splits = list(sweedler(v))
    for u1, u2, cu in sweedler(u):
        for v1, v2, cv in v_splits:
            f = _z_monomials(u1, v1, z)
            if not f:
                continue
            rhs = rhs + (cu * cv * f) * circle(
                t_map(Element.from_monomial(u2), ctx),
                t_map(Element.from_monomial(v2), ctx),
                ctx.pairing,
            )
    return lhs, rhs
