"""Laplace pairing, permanents, the circle product and Wick expansion.

A bilinear form on the generators extends uniquely to the whole symmetric
algebra: it vanishes across gradings and is a permanent within a grading.
The circle product deforms the symmetric product by this pairing; with a
symmetric form it is the time-ordered product, with an antisymmetric one the
operator product.  Two independent code paths compute it (coproduct formula
here, contraction enumeration in :func:`wick_expand`) so each validates the
other.
"""

from __future__ import annotations

from itertools import permutations

from .algebra import (
    Element,
    Monomial,
    _accumulate,
    _wrap,
    antipode_sign,
    iterated_coproduct,
    sweedler,
)
from .scalars import ONE, ZERO, Scalar


class PairingMatrix:
    """d x d matrix of generator pairings, entry[i][j] = (e_i|e_j), 1-based.

    No symmetry is assumed unless declared; a declared symmetric matrix is
    validated at construction.
    """

    def __init__(self, entries, symmetric: bool = False):
        rows = [[Scalar.coerce(x) for x in row] for row in entries]
        d = len(rows)
        for row in rows:
            if len(row) != d:
                raise ValueError("pairing matrix must be square")
        if symmetric:
            for i in range(d):
                for j in range(i + 1, d):
                    if rows[i][j] != rows[j][i]:
                        raise ValueError(
                            f"matrix declared symmetric but entry ({i+1},{j+1}) "
                            f"differs from ({j+1},{i+1})"
                        )
        self.rows = rows
        self.dim = d
        self.symmetric = symmetric

    @classmethod
    def from_strings(cls, rows, symmetric: bool = False) -> "PairingMatrix":
        return cls([[Scalar.parse(x) for x in row] for row in rows], symmetric)

    def entry(self, i: int, j: int) -> Scalar:
        if not (1 <= i <= self.dim and 1 <= j <= self.dim):
            raise ValueError(f"generator index out of range: ({i},{j}) with d={self.dim}")
        return self.rows[i - 1][j - 1]

    def scaled(self, factor) -> "PairingMatrix":
        factor = Scalar.coerce(factor)
        return PairingMatrix(
            [[factor * x for x in row] for row in self.rows], self.symmetric
        )

    def __repr__(self):
        return f"PairingMatrix(dim={self.dim}, symmetric={self.symmetric})"


def permanent(matrix) -> Scalar:
    """Exact permanent by Ryser's inclusion-exclusion, O(2^n * n) arithmetic.

    Column subsets are walked in Gray-code order so each step updates the
    running row sums by a single column.
    """
    n = len(matrix)
    if n == 0:
        return ONE
    for row in matrix:
        if len(row) != n:
            raise ValueError("permanent needs a square matrix")
    sums = [ZERO] * n
    total = ZERO
    gray = 0
    for k in range(1, 1 << n):
        next_gray = k ^ (k >> 1)
        flipped = next_gray ^ gray
        col = flipped.bit_length() - 1
        if next_gray & flipped:
            for i in range(n):
                sums[i] = sums[i] + matrix[i][col]
        else:
            for i in range(n):
                sums[i] = sums[i] - matrix[i][col]
        gray = next_gray
        prod = ONE
        for s in sums:
            prod = prod * s
            if not prod:
                break
        if prod:
            if (n - gray.bit_count()) % 2:
                total = total - prod
            else:
                total = total + prod
    return total


def permanent_by_permutations(matrix) -> Scalar:
    """Naive O(n! * n) permutation sum; retained as the independent oracle."""
    n = len(matrix)
    total = ZERO
    for sigma in permutations(range(n)):
        prod = ONE
        for i in range(n):
            prod = prod * matrix[i][sigma[i]]
            if not prod:
                break
        total = total + prod
    return total


def pairing_monomials(m1: Monomial, m2: Monomial, L: PairingMatrix) -> Scalar:
    """(m1|m2): zero across gradings, else the permanent of generator pairings."""
    if m1.grading != m2.grading:
        return ZERO
    if m1.grading == 0:
        return ONE
    rows_idx = m1.indices()
    cols_idx = m2.indices()
    matrix = [[L.entry(i, j) for j in cols_idx] for i in rows_idx]
    return permanent(matrix)


def pairing(u: Element, v: Element, L: PairingMatrix) -> Scalar:
    """Bilinear extension of the generator pairing to whole elements."""
    total = ZERO
    for m1, c1 in u.items():
        for m2, c2 in v.items():
            if m1.grading != m2.grading:
                continue
            p = pairing_monomials(m1, m2, L)
            if p:
                total = total + c1 * c2 * p
    return total


def circle(u: Element, v: Element, L: PairingMatrix) -> Element:
    """The circle product: sum of u_(1) v v_(1) weighted by (u_(2)|v_(2))."""
    out: dict[Monomial, Scalar] = {}
    v_splits = list(sweedler(v))
    for u1, u2, cu in sweedler(u):
        for v1, v2, cv in v_splits:
            if u2.grading != v2.grading:
                continue
            p = pairing_monomials(u2, v2, L)
            if not p:
                continue
            _accumulate(out, u1.vee(v1), cu * cv * p)
    return _wrap(out)


def circle_fold(factors, L: PairingMatrix) -> Element:
    """Left fold of the circle product over a list of elements."""
    out = Element.one()
    for f in factors:
        out = circle(out, f, L)
    return out


def wick_step(u: Element, generator: int, L: PairingMatrix) -> Element:
    """u o e_b computed directly: append b, or contract it against one factor.

    This is the recursion Wick used to build his theorem; it must agree with
    :func:`circle`.
    """
    out: dict[Monomial, Scalar] = {}
    b = Monomial.generator(generator)
    for mono, coeff in u.items():
        _accumulate(out, mono.vee(b), coeff)
        for idx, mult in mono.counts:
            f = L.entry(idx, generator)
            if f:
                _accumulate(out, mono.remove_one(idx), coeff * mult * f)
    return _wrap(out)


def _contraction_terms(indices, L: PairingMatrix, max_pairs):
    """Yield (npairs, coeff, untouched) over all sets of disjoint pair choices.

    The leftmost position is either left alone or contracted against one later
    position; pair factors are taken in position order (i<j), so the expansion
    is well defined for asymmetric pairings too.
    """
    if not indices:
        yield 0, ONE, ()
        return
    first, rest = indices[0], indices[1:]
    for k, coeff, left in _contraction_terms(rest, L, max_pairs):
        yield k, coeff, (first,) + left
    if max_pairs == 0:
        return
    budget = None if max_pairs is None else max_pairs - 1
    for pos, other in enumerate(rest):
        f = L.entry(first, other)
        if not f:
            continue
        for k, coeff, left in _contraction_terms(rest[:pos] + rest[pos + 1:], L, budget):
            yield k + 1, f * coeff, left


def contraction_buckets(indices, L: PairingMatrix, max_pairs=None):
    """Partial-contraction expansion of an ordered generator list, by pair count.

    Returns ``{k: Element}`` where bucket k collects all ways of choosing k
    disjoint position pairs, each contributing prod (a_i|a_j) times the
    symmetric product of the untouched generators.  ``max_pairs`` truncates
    the contraction count (used by the contraction-graded S-matrix identities).
    """
    buckets: dict[int, dict[Monomial, Scalar]] = {}
    for k, coeff, left in _contraction_terms(tuple(indices), L, max_pairs):
        _accumulate(buckets.setdefault(k, {}), Monomial.from_indices(left), coeff)
    return {k: _wrap(table) for k, table in buckets.items()}


def wick_expand(generators, L: PairingMatrix) -> Element:
    """The n-fold circle product as a sum over sets of disjoint contractions."""
    buckets = contraction_buckets(tuple(generators), L)
    out: dict[Monomial, Scalar] = {}
    for table in buckets.values():
        for mono, coeff in table.items():
            _accumulate(out, mono, coeff)
    return _wrap(out)


def recover_vee(u: Element, v: Element, L: PairingMatrix) -> Element:
    """Rebuild u v v from circle products and the antipode."""
    out = Element.zero()
    v_splits = list(sweedler(v))
    for u1, u2, cu in sweedler(u):
        sign = antipode_sign(u1)
        for v1, v2, cv in v_splits:
            p = pairing_monomials(u1, v1, L)
            if not p:
                continue
            coeff = cu * cv * p * sign
            out = out + coeff * circle(
                Element.from_monomial(u2), Element.from_monomial(v2), L
            )
    return out


def recover_pairing(u: Element, v: Element, L: PairingMatrix) -> Element:
    """Rebuild (u|v)*1 from circle products and the antipode."""
    out = Element.zero()
    v_splits = list(sweedler(v))
    for u1, u2, cu in sweedler(u):
        for v1, v2, cv in v_splits:
            head = u1.vee(v1)
            sign = antipode_sign(head)
            prod = circle(Element.from_monomial(u2), Element.from_monomial(v2), L)
            out = out + (cu * cv * sign) * Element.from_monomial(head).vee(prod)
    return out


def circle_distribute(u: Element, v: Element, w: Element, L: PairingMatrix) -> Element:
    """The distributivity expansion of u o (v v w) over a Sweedler triple."""
    out = Element.zero()
    triple = iterated_coproduct(u, 3)
    for (u11, u12, u2), coeff in triple.items():
        left = circle(Element.from_monomial(u11), v, L)
        mid = circle(Element.from_monomial(u12), w, L)
        sign = antipode_sign(u2)
        out = out + (coeff * sign) * left.vee(mid).vee(Element.from_monomial(u2))
    return out
