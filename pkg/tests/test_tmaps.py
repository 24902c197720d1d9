from itertools import permutations

import pytest

from conftest import monomials_upto, rand_element, rand_pairing, rand_scheme
from wickalg import (
    Element,
    Monomial,
    PairingMatrix,
    Scalar,
    Scheme,
    TContext,
    TensorElement,
    circle,
    circle_renorm,
    convolve,
    coproduct,
    counit,
    derivation,
    exp_sigma,
    first_identity_check,
    pairing,
    sigma_apply,
    sweedler,
    t_closed_form,
    t_map,
    t_map_by_circle_fold,
    t_permutation_form,
    t_scalar,
    tbar_map,
    tbar_map_by_twist,
    tbar_scalar,
    tensor_product,
    vee,
    wick_expand,
)
from wickalg.renorm import Functional


def e(i):
    return Element.generator(i)


def mono(*indices):
    return Monomial.from_indices(indices)


@pytest.fixture
def ctx(rng):
    L = rand_pairing(rng, 3, symmetric=True)
    return TContext(L, rand_scheme(rng, 3))


def matching_sum_oracle(gens, L):
    """In-test perfect-matching oracle, written as a direct filter over
    permutations per the (2n-1)!! description: sigma(1)<...<sigma(n) and
    sigma(j)<sigma(n+j)."""
    gens = tuple(gens)
    if len(gens) % 2:
        return Scalar(0)
    n = len(gens) // 2
    total = Scalar(0)
    for sigma in permutations(range(len(gens))):
        firsts = sigma[:n]
        if any(firsts[k] >= firsts[k + 1] for k in range(n - 1)):
            continue
        if any(sigma[j] >= sigma[n + j] for j in range(n)):
            continue
        prod = Scalar(1)
        for j in range(n):
            prod = prod * L.entry(gens[sigma[j]], gens[sigma[n + j]])
        total = total + prod
    return total


class TestTContext:
    def test_rejects_asymmetric(self, rng):
        L = rand_pairing(rng, 3, symmetric=False)
        with pytest.raises(ValueError):
            TContext(L)

    def test_scheme_optional(self, rng):
        L = rand_pairing(rng, 2, symmetric=True)
        ctx = TContext(L)
        with pytest.raises(ValueError):
            tbar_map(e(1), ctx)


class TestTMap:
    def test_unit_and_generator(self, ctx):
        assert t_map(Element.one(), ctx) == Element.one()
        assert t_map(e(2), ctx) == e(2)

    def test_pair(self, ctx):
        got = t_map(Element.from_monomial(mono(1, 2)), ctx)
        expected = Element.from_monomial(mono(1, 2)) + ctx.pairing.entry(1, 2) * Element.one()
        assert got == expected

    def test_four_letters_equals_wick_expand(self, ctx):
        u = Element.from_monomial(mono(1, 2, 3, 1))
        assert t_map(u, ctx) == wick_expand((1, 1, 2, 3), ctx.pairing)

    def test_three_routes_agree_to_grading_six(self, rng):
        L = rand_pairing(rng, 2, symmetric=True)
        ctx = TContext(L)
        for m in monomials_upto(2, 6):
            u = Element.from_monomial(m)
            a = t_map(u, ctx)
            b = t_map_by_circle_fold(u, ctx)
            c = exp_sigma(u, ctx)
            assert a == b
            assert a == c

    def test_multiplicative(self, ctx, rng):
        for _ in range(15):
            u = rand_element(rng, 3, 3, terms=2)
            v = rand_element(rng, 3, 3, terms=2)
            assert t_map(vee(u, v), ctx) == circle(
                t_map(u, ctx), t_map(v, ctx), ctx.pairing
            )

    def test_coproduct_identity(self, ctx, rng):
        for _ in range(15):
            u = rand_element(rng, 3, 4)
            lhs = coproduct(t_map(u, ctx))
            rhs1 = TensorElement(rank=2)
            rhs2 = TensorElement(rank=2)
            for u1, u2, c in sweedler(u):
                rhs1 = rhs1 + c * tensor_product(
                    Element.from_monomial(u1), t_map(Element.from_monomial(u2), ctx)
                )
                rhs2 = rhs2 + c * tensor_product(
                    t_map(Element.from_monomial(u1), ctx), Element.from_monomial(u2)
                )
            assert lhs == rhs1
            assert lhs == rhs2


class TestSigma:
    def test_kills_low_grading(self, ctx):
        assert sigma_apply(Element.one(), ctx) == Element.zero()
        assert sigma_apply(e(1), ctx) == Element.zero()

    def test_pair_value(self, ctx):
        # symmetric pairing: half of (e_k|e_l)+(e_l|e_k) collapses to one entry
        got = sigma_apply(Element.from_monomial(mono(1, 2)), ctx)
        assert got == ctx.pairing.entry(1, 2) * Element.one()
        got = sigma_apply(Element.from_monomial(mono(2, 2)), ctx)
        assert got == ctx.pairing.entry(2, 2) * Element.one()

    def test_lowers_grading_by_two(self, ctx, rng):
        for _ in range(10):
            u = rand_element(rng, 3, 5)
            su = sigma_apply(u, ctx)
            gradings = {m.grading for m in u.terms}
            for m in su.terms:
                assert m.grading + 2 in gradings

    def test_extension_formula(self, ctx, rng):
        # Sigma(a v u) = a v Sigma(u) + sum_j (a|e_j) delta_j u
        for _ in range(15):
            u = rand_element(rng, 3, 4)
            k = rng.randint(1, 3)
            a = e(k)
            lhs = sigma_apply(vee(a, u), ctx)
            rhs = vee(a, sigma_apply(u, ctx))
            for j in range(1, 4):
                f = ctx.pairing.entry(k, j)
                if f:
                    rhs = rhs + f * derivation(j, u)
            assert lhs == rhs

    def test_circle_with_generator_formula(self, ctx, rng):
        # a o u = a v u + [Sigma, a] u
        for _ in range(15):
            u = rand_element(rng, 3, 4)
            k = rng.randint(1, 3)
            a = e(k)
            commutator = sigma_apply(vee(a, u), ctx) - vee(a, sigma_apply(u, ctx))
            assert circle(a, u, ctx.pairing) == vee(a, u) + commutator

    def test_exp_sigma_examples(self, ctx):
        assert exp_sigma(Element.one(), ctx) == Element.one()
        got = exp_sigma(Element.from_monomial(mono(1, 2)), ctx)
        expected = Element.from_monomial(mono(1, 2)) + ctx.pairing.entry(1, 2) * Element.one()
        assert got == expected

    def test_exp_sigma_equals_t(self, ctx, rng):
        for _ in range(15):
            u = rand_element(rng, 3, 6)
            assert exp_sigma(u, ctx) == t_map(u, ctx)


class TestScalarT:
    def test_base_cases(self, ctx):
        assert t_scalar(Element.one(), ctx) == 1
        assert t_scalar(e(1), ctx) == 0

    def test_pair(self, ctx):
        assert t_scalar(Element.from_monomial(mono(1, 2)), ctx) == ctx.pairing.entry(1, 2)

    def test_four_point_formula(self, ctx):
        def p(i, j):
            return ctx.pairing.entry(i, j)

        got = t_scalar(Element.from_monomial(mono(1, 2, 3, 3)), ctx)
        # t(a v b v c v d) with (a,b,c,d) = (e1,e2,e3,e3)
        expected = p(1, 2) * p(3, 3) + p(1, 3) * p(2, 3) + p(1, 3) * p(2, 3)
        assert got == expected

    def test_odd_grading_vanishes(self, ctx, rng):
        for _ in range(10):
            g = rng.choice([1, 3, 5])
            m = Monomial.from_indices(rng.choices([1, 2, 3], k=g))
            assert t_scalar(Element.from_monomial(m), ctx) == 0

    def test_equals_counit_of_t(self, ctx, rng):
        for _ in range(15):
            u = rand_element(rng, 3, 4)
            assert t_scalar(u, ctx) == counit(t_map(u, ctx))

    def test_t_from_scalar(self, ctx, rng):
        for _ in range(15):
            u = rand_element(rng, 3, 4)
            acc = Element.zero()
            for u1, u2, c in sweedler(u):
                f = t_scalar(Element.from_monomial(u1), ctx)
                if f:
                    acc = acc + (c * f) * Element.from_monomial(u2)
            assert acc == t_map(u, ctx)

    def test_splitting_recursion_any_factorization(self, ctx, rng):
        for _ in range(15):
            u = rand_element(rng, 3, 3, terms=2)
            v = rand_element(rng, 3, 3, terms=2)
            lhs = t_scalar(vee(u, v), ctx)
            rhs = Scalar(0)
            for u1, u2, cu in sweedler(u):
                for v1, v2, cv in sweedler(v):
                    rhs = rhs + cu * cv * (
                        t_scalar(Element.from_monomial(u1), ctx)
                        * t_scalar(Element.from_monomial(v1), ctx)
                        * pairing(
                            Element.from_monomial(u2), Element.from_monomial(v2), ctx.pairing
                        )
                    )
            assert lhs == rhs


class TestClosedForms:
    def test_single_pair(self, ctx):
        assert t_closed_form((1, 2), ctx) == ctx.pairing.entry(1, 2)
        assert t_closed_form((), ctx) == 1

    def test_odd_defined_zero(self, ctx):
        assert t_closed_form((1, 2, 3), ctx) == 0

    def test_three_matchings(self, ctx):
        def p(i, j):
            return ctx.pairing.entry(i, j)

        got = t_closed_form((1, 2, 3, 1), ctx)
        expected = p(1, 2) * p(3, 1) + p(1, 3) * p(2, 1) + p(1, 1) * p(2, 3)
        assert got == expected

    def test_matches_filtered_permutation_oracle(self, ctx, rng):
        for length in (2, 4, 6):
            gens = tuple(rng.randint(1, 3) for _ in range(length))
            assert t_closed_form(gens, ctx) == matching_sum_oracle(gens, ctx.pairing)

    def test_matches_permutation_form(self, ctx, rng):
        for length in (0, 2, 4, 6):
            gens = tuple(rng.randint(1, 3) for _ in range(length))
            assert t_closed_form(gens, ctx) == t_permutation_form(gens, ctx)

    def test_all_routes_at_eight_letters(self, rng):
        L = rand_pairing(rng, 2, symmetric=True)
        ctx = TContext(L)
        gens = (1, 2, 1, 2, 1, 1, 2, 2)
        rec = t_scalar(Element.from_monomial(Monomial.from_indices(gens)), ctx)
        closed = t_closed_form(gens, ctx)
        brute = t_permutation_form(gens, ctx)
        assert rec == closed == brute

    def test_matching_count_105_at_eight(self):
        ones = PairingMatrix([[Scalar(1)]], symmetric=True)
        ctx = TContext(ones)
        assert t_closed_form((1,) * 8, ctx) == 105
        assert t_closed_form((1,) * 6, ctx) == 15


class TestRenormalisedT:
    def test_base_cases(self, ctx):
        assert tbar_map(Element.one(), ctx) == Element.one()
        assert tbar_map(e(1), ctx) == e(1)

    def test_pair(self, ctx):
        got = tbar_map(Element.from_monomial(mono(1, 2)), ctx)
        expected = (
            Element.from_monomial(mono(1, 2))
            + (ctx.pairing.entry(1, 2) + ctx.scheme(mono(1, 2))) * Element.one()
        )
        assert got == expected

    def test_trivial_scheme_reduces_to_t(self, rng):
        L = rand_pairing(rng, 3, symmetric=True)
        ctx = TContext(L, Scheme())
        for _ in range(10):
            u = rand_element(rng, 3, 4)
            assert tbar_map(u, ctx) == t_map(u, ctx)

    def test_pinter_twist_route_to_grading_six(self, rng):
        L = rand_pairing(rng, 2, symmetric=True)
        ctx = TContext(L, rand_scheme(rng, 2, max_grade=5))
        for m in monomials_upto(2, 6):
            u = Element.from_monomial(m)
            assert tbar_map(u, ctx) == tbar_map_by_twist(u, ctx)

    def test_coproduct_identity(self, ctx, rng):
        for _ in range(10):
            u = rand_element(rng, 3, 4, terms=2)
            lhs = coproduct(tbar_map(u, ctx))
            rhs = TensorElement(rank=2)
            for u1, u2, c in sweedler(u):
                rhs = rhs + c * tensor_product(
                    Element.from_monomial(u1), tbar_map(Element.from_monomial(u2), ctx)
                )
            assert lhs == rhs

    def test_first_identity_examples(self, ctx, rng):
        lhs, rhs = first_identity_check(e(1), e(2), ctx)
        expected = (
            Element.from_monomial(mono(1, 2))
            + (ctx.pairing.entry(1, 2) + ctx.scheme(mono(1, 2))) * Element.one()
        )
        assert lhs == expected
        assert rhs == expected
        for _ in range(5):
            v = rand_element(rng, 3, 3)
            lhs, rhs = first_identity_check(Element.one(), v, ctx)
            assert lhs == t_map(v, ctx)
            assert rhs == t_map(v, ctx)
        for _ in range(10):
            u = rand_element(rng, 3, 3, terms=2)
            v = rand_element(rng, 3, 3, terms=2)
            lhs, rhs = first_identity_check(u, v, ctx)
            assert lhs == rhs

    def test_multiplicative_to_renorm_circle(self, ctx, rng):
        for _ in range(10):
            u = rand_element(rng, 3, 3, terms=2)
            v = rand_element(rng, 3, 3, terms=2)
            assert tbar_map(vee(u, v), ctx) == circle_renorm(
                tbar_map(u, ctx), tbar_map(v, ctx), ctx.scheme, ctx.pairing
            )


class TestRenormalisedScalarT:
    def test_base_cases(self, ctx):
        assert tbar_scalar(Element.one(), ctx) == 1
        assert tbar_scalar(e(3), ctx) == 0

    def test_pair_example(self, ctx):
        got = tbar_scalar(Element.from_monomial(mono(1, 2)), ctx)
        assert got == ctx.pairing.entry(1, 2) + ctx.scheme(mono(1, 2))

    def test_triple_example(self, ctx):
        got = tbar_scalar(Element.from_monomial(mono(1, 2, 3)), ctx)
        assert got == ctx.scheme(mono(1, 2, 3))

    def test_ten_term_four_point(self, rng):
        L = rand_pairing(rng, 4, symmetric=True)
        z = rand_scheme(rng, 4, max_grade=4)
        ctx = TContext(L, z)

        def zz(*idx):
            return z(mono(*idx))

        def p(i, j):
            return L.entry(i, j)

        got = tbar_scalar(Element.from_monomial(mono(1, 2, 3, 4)), ctx)
        expected = (
            zz(1, 2, 3, 4)
            + zz(1, 2) * p(3, 4)
            + zz(1, 3) * p(2, 4)
            + zz(1, 4) * p(2, 3)
            + zz(2, 3) * p(1, 4)
            + zz(2, 4) * p(1, 3)
            + zz(3, 4) * p(1, 2)
            + p(1, 2) * p(3, 4)
            + p(1, 3) * p(2, 4)
            + p(1, 4) * p(2, 3)
        )
        assert got == expected

    def test_equals_counit_of_tbar(self, ctx, rng):
        for _ in range(10):
            u = rand_element(rng, 3, 4)
            assert tbar_scalar(u, ctx) == counit(tbar_map(u, ctx))

    def test_is_convolution_of_scheme_with_t(self, ctx, rng):
        t_fn = Functional(lambda m: t_scalar(Element.from_monomial(m), ctx))
        conv = convolve(ctx.scheme, t_fn)
        for _ in range(10):
            u = rand_element(rng, 3, 4)
            assert tbar_scalar(u, ctx) == conv.on_element(u)

    def test_tbar_map_from_scalar(self, ctx, rng):
        for _ in range(10):
            u = rand_element(rng, 3, 4)
            acc = Element.zero()
            for u1, u2, c in sweedler(u):
                f = tbar_scalar(Element.from_monomial(u1), ctx)
                if f:
                    acc = acc + (c * f) * Element.from_monomial(u2)
            assert acc == tbar_map(u, ctx)
