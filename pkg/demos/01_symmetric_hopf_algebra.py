"""Tour of the symmetric Hopf algebra: products, coproducts, antipode,
derivations and divided powers, all with exact rational coefficients."""

from fractions import Fraction

from wickalg import (
    Element,
    Scalar,
    antipode,
    coproduct,
    counit,
    derivation,
    divided_power,
    iterated_coproduct,
    vee,
)

a = Element.generator(1)
b = Element.generator(2)
c = Element.generator(3)

# the symmetric product is plain multiset union on basis words
ab = vee(a, b)
print("a v b              =", ab)
print("(a + 2b) v a       =", vee(a + 2 * b, a))
print("1 v (a v b)        =", vee(Element.one(), ab))

# the coproduct splits a word over all sub-multisets
print("\ncoproduct of a v b:")
print("  ", coproduct(ab))
print("coproduct of a v a (note the binomial weight):")
print("  ", coproduct(vee(a, a)))

# iterated coproducts are slot independent (coassociativity)
t = coproduct(vee(ab, c))
assert t.expand_slot(0) == t.expand_slot(1)
print("\n3-fold coproduct of a v b v c has", len(iterated_coproduct(vee(ab, c), 3).terms), "terms")

# counit picks the scalar component; the antipode flips odd gradings
u = Element.from_scalar(Scalar(Fraction(3, 4))) + 2 * a + vee(a, b)
print("\ncounit of 3/4 + 2a + a v b =", counit(u))
print("antipode of a v b v c       =", antipode(vee(ab, c)))

# derivations act by the Leibniz rule
print("\nd/da (a v b) =", derivation(1, ab))
print("d/da (a v a) =", derivation(1, vee(a, a)))

# divided powers a^(n) = a^{v n}/n! multiply binomially
dp2 = divided_power(1, 2)
dp3 = divided_power(1, 3)
print("\na^(2)          =", dp2)
print("a^(2) v a^(3)  =", vee(dp2, dp3), "  (= C(5,2) a^(5))")
