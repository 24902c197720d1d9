"""The symmetric algebra on d generators and its Hopf structure.

Monomials are multisets of generator indices (the basis words
``e_i1 v ... v e_in``), elements are finite linear combinations with exact
Gaussian-rational coefficients, and the coproduct splits a monomial over all
sub-multisets with binomial multiplicities -- the merged form of the
labelled-position shuffle.  All values are immutable; all operations are pure.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as _iterproduct
from math import comb, factorial

from .scalars import ONE, ZERO, Scalar, display_negative


class Monomial:
    """A multiset of generator indices, e.g. ``{1: 2, 3: 1}`` = e1 v e1 v e3.

    The empty monomial is the algebra unit.  Equality and hashing go through
    the canonical sorted ``(index, multiplicity)`` tuple.
    """

    __slots__ = ("counts", "grading", "_hash")

    def __init__(self, counts=()):
        if isinstance(counts, dict):
            items = counts.items()
        else:
            items = counts
        merged: dict[int, int] = {}
        for idx, mult in items:
            if mult == 0:
                continue
            if not isinstance(idx, int) or idx < 1:
                raise ValueError(f"generator index must be a positive int, got {idx!r}")
            if mult < 0:
                raise ValueError(f"negative multiplicity for generator {idx}")
            merged[idx] = merged.get(idx, 0) + mult
        self.counts = tuple(sorted(merged.items()))
        self.grading = sum(m for _, m in self.counts)
        self._hash = hash(self.counts)

    @classmethod
    def unit(cls) -> "Monomial":
        return _UNIT

    @classmethod
    def generator(cls, index: int) -> "Monomial":
        return cls(((index, 1),))

    @classmethod
    def from_indices(cls, indices) -> "Monomial":
        counts: dict[int, int] = {}
        for i in indices:
            counts[i] = counts.get(i, 0) + 1
        return cls(counts)

    def indices(self) -> tuple[int, ...]:
        """Expanded index list, one entry per copy, sorted."""
        out = []
        for idx, mult in self.counts:
            out.extend([idx] * mult)
        return tuple(out)

    def multiplicity(self, index: int) -> int:
        for idx, mult in self.counts:
            if idx == index:
                return mult
        return 0

    def vee(self, other: "Monomial") -> "Monomial":
        if not other.counts:
            return self
        if not self.counts:
            return other
        merged = dict(self.counts)
        for idx, mult in other.counts:
            merged[idx] = merged.get(idx, 0) + mult
        return Monomial(merged)

    def remove_one(self, index: int) -> "Monomial":
        """The monomial with one copy of ``index`` deleted (must be present)."""
        merged = dict(self.counts)
        if index not in merged:
            raise ValueError(f"generator {index} not in monomial {self}")
        merged[index] -= 1
        return Monomial(merged)

    def splits(self):
        """All ways of cutting the multiset in two, with binomial weights.

        Yields ``(left, right, weight)`` where weight = prod C(k_i, j_i); this
        is the coproduct of the monomial after merging equal labels.
        """
        items = self.counts
        ranges = [range(mult + 1) for _, mult in items]
        for choice in _iterproduct(*ranges):
            weight = 1
            left = []
            right = []
            for (idx, mult), j in zip(items, choice):
                weight *= comb(mult, j)
                if j:
                    left.append((idx, j))
                if mult - j:
                    right.append((idx, mult - j))
            yield Monomial(left), Monomial(right), weight

    def sort_key(self):
        return (-self.grading, self.indices())

    def __eq__(self, other):
        if not isinstance(other, Monomial):
            return NotImplemented
        return self.counts == other.counts

    def __hash__(self):
        return self._hash

    def __str__(self):
        if not self.counts:
            return "1"
        return " v ".join(f"e{i}" for i in self.indices())

    def __repr__(self):
        return f"Monomial({dict(self.counts)!r})"


_UNIT = Monomial()

# Monomial coproducts recur in every pairing/convolution; cache the split lists.
_SPLIT_CACHE: dict[Monomial, tuple] = {}


def monomial_splits(m: Monomial):
    cached = _SPLIT_CACHE.get(m)
    if cached is None:
        cached = tuple(m.splits())
        _SPLIT_CACHE[m] = cached
    return cached


class Element:
    """A finite linear combination of monomials with Scalar coefficients.

    Canonical form: zero coefficients are never stored, so structural
    equality of the term maps is algebra equality.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean: dict[Monomial, Scalar] = {}
        if terms:
            for mono, coeff in terms.items():
                coeff = Scalar.coerce(coeff)
                if coeff:
                    clean[mono] = coeff
        self.terms = clean

    @classmethod
    def zero(cls) -> "Element":
        return cls()

    @classmethod
    def one(cls) -> "Element":
        return cls({_UNIT: ONE})

    @classmethod
    def from_scalar(cls, value) -> "Element":
        return cls({_UNIT: Scalar.coerce(value)})

    @classmethod
    def generator(cls, index: int) -> "Element":
        return cls({Monomial.generator(index): ONE})

    @classmethod
    def from_monomial(cls, mono: Monomial, coeff=ONE) -> "Element":
        return cls({mono: coeff})

    def items(self):
        return self.terms.items()

    def coefficient(self, mono: Monomial) -> Scalar:
        return self.terms.get(mono, ZERO)

    def scalar_part(self) -> Scalar:
        return self.terms.get(_UNIT, ZERO)

    def is_scalar(self) -> bool:
        return all(m.grading == 0 for m in self.terms)

    def max_grading(self) -> int:
        return max((m.grading for m in self.terms), default=0)

    def __add__(self, other):
        if isinstance(other, (Scalar, int, Fraction)):
            other = Element.from_scalar(other)
        if not isinstance(other, Element):
            return NotImplemented
        merged = dict(self.terms)
        for mono, coeff in other.terms.items():
            _accumulate(merged, mono, coeff)
        return _wrap(merged)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (Scalar, int, Fraction)):
            other = Element.from_scalar(other)
        if not isinstance(other, Element):
            return NotImplemented
        merged = dict(self.terms)
        for mono, coeff in other.terms.items():
            _accumulate(merged, mono, -coeff)
        return _wrap(merged)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Element({m: -c for m, c in self.terms.items()})

    def __rmul__(self, scalar):
        scalar = Scalar.coerce(scalar)
        if not scalar:
            return Element.zero()
        return Element({m: scalar * c for m, c in self.terms.items()})

    __mul__ = __rmul__

    def __truediv__(self, scalar):
        scalar = Scalar.coerce(scalar)
        return Element({m: c / scalar for m, c in self.terms.items()})

    def vee(self, other: "Element") -> "Element":
        """The symmetric product: multiset union of monomials, bilinear."""
        if isinstance(other, (Scalar, int, Fraction)):
            return Scalar.coerce(other) * self
        out: dict[Monomial, Scalar] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                _accumulate(out, m1.vee(m2), c1 * c2)
        return _wrap(out)

    def vee_power(self, n: int) -> "Element":
        out = Element.one()
        for _ in range(n):
            out = out.vee(self)
        return out

    def grade_truncate(self, max_grading: int) -> "Element":
        return Element({m: c for m, c in self.terms.items() if m.grading <= max_grading})

    def __eq__(self, other):
        if isinstance(other, (Scalar, int, Fraction)):
            other = Element.from_scalar(other)
        if not isinstance(other, Element):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, key=Monomial.sort_key):
            coeff = self.terms[mono]
            if parts and display_negative(coeff):
                joiner = " - "
                coeff = -coeff
            elif parts:
                joiner = " + "
            else:
                joiner = ""
            if mono.grading == 0:
                body = str(coeff)
            elif coeff == ONE:
                body = str(mono)
            else:
                body = f"{coeff} * {mono}"
            parts.append(joiner + body)
        return "".join(parts)

    def __repr__(self):
        return f"<Element {self}>"


def _accumulate(table: dict, key, coeff) -> None:
    if not coeff:
        return
    prior = table.get(key)
    if prior is None:
        table[key] = coeff
    else:
        total = prior + coeff
        if total:
            table[key] = total
        else:
            del table[key]


def _wrap(table: dict) -> Element:
    e = Element.__new__(Element)
    e.terms = table
    return e


class TensorElement:
    """A linear combination of rank-r tensors of monomials.

    Rank 2 is the coproduct's home; higher ranks realize iterated coproducts
    (Sweedler triples and beyond).  Keys are tuples of Monomials.
    """

    __slots__ = ("terms", "rank")

    def __init__(self, terms=None, rank=2):
        clean: dict[tuple, Scalar] = {}
        if terms:
            for key, coeff in terms.items():
                coeff = Scalar.coerce(coeff)
                if not coeff:
                    continue
                if len(key) != rank:
                    raise ValueError(f"tensor key {key} does not have rank {rank}")
                clean[key] = coeff
        self.terms = clean
        self.rank = rank

    def items(self):
        return self.terms.items()

    def __add__(self, other):
        if not isinstance(other, TensorElement) or other.rank != self.rank:
            return NotImplemented
        merged = dict(self.terms)
        for key, coeff in other.terms.items():
            _accumulate(merged, key, coeff)
        out = TensorElement(rank=self.rank)
        out.terms = merged
        return out

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        scalar = Scalar.coerce(scalar)
        out = TensorElement(rank=self.rank)
        if scalar:
            out.terms = {k: scalar * c for k, c in self.terms.items()}
        return out

    __mul__ = __rmul__

    def vee(self, other: "TensorElement") -> "TensorElement":
        """Slotwise symmetric product (the product on S(V) tensor S(V))."""
        if other.rank != self.rank:
            raise ValueError("rank mismatch in tensor product")
        out: dict[tuple, Scalar] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                key = tuple(a.vee(b) for a, b in zip(k1, k2))
                _accumulate(out, key, c1 * c2)
        t = TensorElement(rank=self.rank)
        t.terms = out
        return t

    def swap(self) -> "TensorElement":
        if self.rank != 2:
            raise ValueError("swap is defined for rank-2 tensors")
        out = TensorElement(rank=2)
        out.terms = {(b, a): c for (a, b), c in self.terms.items()}
        return out

    def expand_slot(self, slot: int) -> "TensorElement":
        """Apply the coproduct to one slot, raising the rank by one."""
        out: dict[tuple, Scalar] = {}
        for key, coeff in self.terms.items():
            for left, right, weight in monomial_splits(key[slot]):
                new_key = key[:slot] + (left, right) + key[slot + 1:]
                _accumulate(out, new_key, coeff * weight)
        t = TensorElement(rank=self.rank + 1)
        t.terms = out
        return t

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=lambda k: tuple(m.sort_key() for m in k))
        parts = []
        for key in keys:
            coeff = self.terms[key]
            body = " (x) ".join(str(m) for m in key)
            if coeff == ONE:
                parts.append(body)
            else:
                parts.append(f"{coeff} * {body}")
        return " + ".join(parts)

    def __repr__(self):
        return f"<TensorElement rank={self.rank} {self}>"


def tensor_product(u: Element, v: Element) -> TensorElement:
    """The simple tensor u (x) v, extended bilinearly."""
    out: dict[tuple, Scalar] = {}
    for m1, c1 in u.items():
        for m2, c2 in v.items():
            _accumulate(out, (m1, m2), c1 * c2)
    t = TensorElement(rank=2)
    t.terms = out
    return t


# ---------------------------------------------------------------------------
# Hopf operations
# ---------------------------------------------------------------------------

def vee(u: Element, v: Element) -> Element:
    return u.vee(v)


def coproduct(u: Element) -> TensorElement:
    """Split every monomial over all sub-multisets with binomial weights."""
    out: dict[tuple, Scalar] = {}
    for mono, coeff in u.items():
        for left, right, weight in monomial_splits(mono):
            _accumulate(out, (left, right), coeff * weight)
    t = TensorElement(rank=2)
    t.terms = out
    return t


def sweedler(u: Element):
    """Iterate the coproduct terms of ``u`` as (left, right, coefficient)."""
    for mono, coeff in u.items():
        for left, right, weight in monomial_splits(mono):
            yield left, right, coeff * weight


def iterated_coproduct(u: Element, depth: int):
    """The (depth-1)-fold coproduct; depth=1 returns ``u`` itself.

    Coassociativity makes the result independent of which slot each
    successive coproduct is applied to; we expand the last slot.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    if depth == 1:
        return u
    t = coproduct(u)
    for _ in range(depth - 2):
        t = t.expand_slot(t.rank - 1)
    return t


def counit(u: Element) -> Scalar:
    return u.scalar_part()


def antipode(u: Element) -> Element:
    """Multiply each grading-n term by (-1)^n."""
    return Element(
        {m: (c if m.grading % 2 == 0 else -c) for m, c in u.items()}
    )


def antipode_sign(m: Monomial) -> int:
    return -1 if m.grading % 2 else 1


def derivation(index: int, u: Element) -> Element:
    """The derivation sending e_j to delta_{ij}, extended by Leibniz."""
    out: dict[Monomial, Scalar] = {}
    for mono, coeff in u.items():
        mult = mono.multiplicity(index)
        if mult:
            _accumulate(out, mono.remove_one(index), mult * coeff)
    return _wrap(out)


def divided_power(index: int, n: int) -> Element:
    """e_index^{v n} / n! as an ordinary element (no separate basis)."""
    if n < 0:
        raise ValueError("divided powers need n >= 0")
    return Element({Monomial(((index, n),)): Scalar(Fraction(1, factorial(n)))})
