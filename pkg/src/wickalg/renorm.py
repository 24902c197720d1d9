"""Renormalisation as a group of functionals acting on the product.

A scheme is a unital linear functional vanishing on the generators; schemes
form a commutative group under convolution through the coproduct.  Out of a
scheme we build the symmetric coupling pairing, the modified Laplace pairing,
and the renormalised circle product -- an associative deformation of the
symmetric product with one free parameter per monomial of grading >= 2.
"""

from __future__ import annotations

from .algebra import Element, Monomial, _accumulate, _wrap, monomial_splits, sweedler
from .laplace import PairingMatrix, pairing_monomials
from .scalars import ONE, ZERO, Scalar


class LinearFunctional:
    """A linear functional on the symmetric algebra with zeta(1)=1, zeta(a)=0.

    Values on gradings 0 and 1 are structural; subclasses provide the rest.
    Evaluation is memoized per monomial (observationally pure).
    """

    def __init__(self):
        self._memo: dict[Monomial, Scalar] = {}

    def _value(self, m: Monomial) -> Scalar:
        raise NotImplementedError

    def __call__(self, m: Monomial) -> Scalar:
        if m.grading == 0:
            return ONE
        if m.grading == 1:
            return ZERO
        cached = self._memo.get(m)
        if cached is None:
            cached = self._value(m)
            self._memo[m] = cached
        return cached

    def on_element(self, u: Element) -> Scalar:
        total = ZERO
        for m, c in u.items():
            v = self(m)
            if v:
                total = total + c * v
        return total

    def inverse(self) -> "LinearFunctional":
        """Convolution inverse, cached on the functional."""
        inv = getattr(self, "_inverse", None)
        if inv is None:
            inv = convolution_inverse(self)
            self._inverse = inv
        return inv


class Scheme(LinearFunctional):
    """A finitely presented functional: stored values on monomials of grading >= 2."""

    def __init__(self, values=None):
        super().__init__()
        table: dict[Monomial, Scalar] = {}
        if values:
            for mono, coeff in values.items():
                if mono.grading < 2:
                    raise ValueError(
                        f"scheme values start at grading 2; got {mono} "
                        f"(unit and generator values are structural)"
                    )
                coeff = Scalar.coerce(coeff)
                if coeff:
                    table[mono] = coeff
        self.values = table

    def _value(self, m: Monomial) -> Scalar:
        return self.values.get(m, ZERO)

    def __repr__(self):
        return f"Scheme({{{', '.join(f'{m}: {c}' for m, c in self.values.items())}}})"


class Functional(LinearFunctional):
    """A functional defined by an arbitrary monomial rule (grading >= 2)."""

    def __init__(self, rule):
        super().__init__()
        self._rule = rule

    def _value(self, m: Monomial) -> Scalar:
        return self._rule(m)


TRIVIAL_SCHEME = Scheme()


def counit_functional() -> Scheme:
    """The convolution unit: 1 on the empty monomial, 0 elsewhere."""
    return Scheme()


def scheme_eval(z: LinearFunctional, u: Element) -> Scalar:
    return z.on_element(u)


def convolve(z1: LinearFunctional, z2: LinearFunctional) -> Functional:
    """(z1 * z2)(u) = sum z1(u_(1)) z2(u_(2)); associative and commutative."""

    def rule(m: Monomial) -> Scalar:
        total = ZERO
        for left, right, weight in monomial_splits(m):
            a = z1(left)
            if not a:
                continue
            b = z2(right)
            if b:
                total = total + weight * (a * b)
        return total

    return Functional(rule)


def convolution_inverse(z: LinearFunctional) -> Functional:
    """The group inverse, by the reduced-coproduct recursion.

    inv(1)=1 and inv(u) = -z(u) - sum' z(u_(1)) inv(u_(2)) where the primed
    sum drops the two trivial splits.  Memoization lives in the returned
    functional, so repeated coupling-pairing calls share subresults.
    """
    box: list[Functional] = []

    def rule(m: Monomial) -> Scalar:
        total = -z(m)
        inv = box[0]
        for left, right, weight in monomial_splits(m):
            if left.grading == 0 or right.grading == 0:
                continue
            a = z(left)
            if not a:
                continue
            b = inv(right)
            if b:
                total = total - weight * (a * b)
        return total

    inv = Functional(rule)
    box.append(inv)
    return inv


def z_pairing(u: Element, v: Element, z: LinearFunctional) -> Scalar:
    """The coupling pairing built from a scheme and its inverse; symmetric."""
    total = ZERO
    v_splits = list(sweedler(v))
    zinv = z.inverse()
    for u1, u2, cu in sweedler(u):
        a = zinv(u1)
        if not a:
            continue
        for v1, v2, cv in v_splits:
            b = zinv(v1)
            if not b:
                continue
            c = z(u2.vee(v2))
            if c:
                total = total + cu * cv * (a * b * c)
    return total


def _z_monomials(m1: Monomial, m2: Monomial, z: LinearFunctional) -> Scalar:
    memo = getattr(z, "_z_memo", None)
    if memo is None:
        memo = {}
        z._z_memo = memo
    key = (m1, m2)
    cached = memo.get(key)
    if cached is None:
        cached = z_pairing(Element.from_monomial(m1), Element.from_monomial(m2), z)
        memo[key] = cached
    return cached


def modified_pairing(
    u: Element, v: Element, z: LinearFunctional, L: PairingMatrix
) -> Scalar:
    """Coupling pairing convolved with the Laplace pairing."""
    total = ZERO
    v_splits = list(sweedler(v))
    for u1, u2, cu in sweedler(u):
        for v1, v2, cv in v_splits:
            if u2.grading != v2.grading:
                continue
            p = pairing_monomials(u2, v2, L)
            if not p:
                continue
            zz = _z_monomials(u1, v1, z)
            if zz:
                total = total + cu * cv * (zz * p)
    return total


def _modified_monomials(
    m1: Monomial, m2: Monomial, z: LinearFunctional, L: PairingMatrix
) -> Scalar:
    memo = getattr(z, "_mod_memo", None)
    if memo is None:
        memo = {}
        z._mod_memo = memo
    key = (m1, m2, L)
    cached = memo.get(key)
    if cached is None:
        cached = modified_pairing(
            Element.from_monomial(m1), Element.from_monomial(m2), z, L
        )
        memo[key] = cached
    return cached


def circle_renorm(
    u: Element, v: Element, z: LinearFunctional, L: PairingMatrix
) -> Element:
    """The renormalised circle product: modified pairing in place of the bare one."""
    out: dict[Monomial, Scalar] = {}
    v_splits = list(sweedler(v))
    for u1, u2, cu in sweedler(u):
        for v1, v2, cv in v_splits:
            p = _modified_monomials(u2, v2, z, L)
            if not p:
                continue
            _accumulate(out, u1.vee(v1), cu * cv * p)
    return _wrap(out)
