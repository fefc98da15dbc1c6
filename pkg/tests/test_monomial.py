from itertools import combinations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from idealkit import monomial as mono
from idealkit.monomial import MonomialIdeal
from idealkit.poly import Ring

from strategies import RING, monomial_ideals

I_EX = ["x1^4", "x1^3*x2", "x1^2*x2^2*x3", "x1*x2^3", "x2^4"]


def M(ring, *gens):
    return MonomialIdeal.parse(ring, gens)


def names(ring, supports):
    return [sorted(ring.variables[i] for i in s) for s in supports]


@pytest.fixture
def I_ex(R):
    return MonomialIdeal.parse(R, I_EX)


class TestMinGens:
    def test_divisibility(self, R):
        assert M(R, "x1", "x1^2").gens == ((1, 0, 0, 0, 0, 0),)

    def test_empty(self, R):
        assert mono.min_gens(R, []).is_zero()

    def test_unit(self, R):
        assert M(R, "1", "x1").is_unit()

    def test_square_has_nine(self, I_ex):
        assert len(mono.m_power(I_ex, 2).gens) == 9
        brute = mono.min_gens(I_ex.ring, [tuple(a + b for a, b in zip(g, h))
                                          for g in I_ex.gens for h in I_ex.gens])
        assert brute == mono.m_power(I_ex, 2)

    def test_bad_exponents(self, R):
        with pytest.raises(ValueError):
            MonomialIdeal(R, [(1, 2)])
        with pytest.raises(ValueError):
            MonomialIdeal(R, [(-1, 0, 0, 0, 0, 0)])

    def test_non_monomial_rejected(self, R):
        with pytest.raises(ValueError):
            MonomialIdeal.parse(R, ["x1 + x2"])


class TestOperations:
    def test_intersect(self, R):
        assert M(R, "x1") & M(R, "x2") == M(R, "x1*x2")

    def test_intersect_gives_example_ideal(self, R, I_ex):
        p11 = MonomialIdeal.prime(R, [0, 1]) ** 4
        p12 = M(R, "x1^4", "x1^3*x2", "x1*x2^3", "x2^4", "x3")
        assert p11 & p12 == I_ex

    def test_colon(self, R, I_ex):
        assert mono.m_colon(I_ex, R.parse("x1^2*x2^2").leading_term()[0]) == M(R, "x1", "x2", "x3")
        assert mono.m_colon(M(R, "x1^2*y1", "x2"), M(R, "x1", "x2")) == M(R, "x1*y1", "x2")

    def test_sum_product_power(self, R):
        assert M(R, "x1") + M(R, "y1") == M(R, "x1", "y1")
        assert M(R, "x1", "y1") * M(R, "x2") == M(R, "x1*x2", "x2*y1")
        assert M(R, "x1", "y1") ** 2 == M(R, "x1^2", "x1*y1", "y1^2")
        assert (M(R, "x1") ** 0).is_unit()

    def test_saturate(self, R):
        assert mono.m_saturate(M(R, "x1^2*x2", "x3"), [0]) == M(R, "x2", "x3")

    def test_ring_mismatch(self, R):
        other = Ring(("a",), ("b",))
        with pytest.raises(ValueError):
            M(R, "x1") + MonomialIdeal.parse(other, ["a"])


class TestDecomposition:
    def test_product_of_variables(self, R):
        comps = mono.irreducible_decomposition(M(R, "x1*x2"))
        assert sorted(map(str, comps)) == ["(x1)", "(x2)"]

    def test_embedded(self, R):
        comps = mono.irreducible_decomposition(M(R, "x1^2", "x1*x2"))
        assert sorted(map(str, comps)) == ["(x1)", "(x1^2, x2)"]

    @pytest.mark.parametrize("method", ["incremental", "splitting"])
    def test_example_supports(self, R, I_ex, method):
        supports = {frozenset(q.support()) for q in mono.irreducible_decomposition(I_ex, method)}
        assert names(R, supports) == names(R, [{0, 1}, {0, 1, 2}]) or \
            sorted(map(sorted, supports)) == [[0, 1], [0, 1, 2]]

    def test_primary_of_principal(self, R):
        comps = mono.primary_decomposition(M(R, "x1^2*x2"))
        assert [str(c.component) for c in comps] == ["(x1^2)", "(x2)"]

    def test_example_primary(self, R, I_ex):
        comps = mono.primary_decomposition(I_ex)
        assert [sorted(c.support) for c in comps] == [[0, 1], [0, 1, 2]]
        assert comps[0].component == MonomialIdeal.prime(R, [0, 1]) ** 4
        # the embedded component is not unique; the minimal one is chosen
        assert comps[1].component == M(R, "x1^3", "x2^3", "x3")

    def test_example_square_single_component(self, I_ex):
        comps = mono.primary_decomposition(mono.m_power(I_ex, 2))
        assert len(comps) == 1 and sorted(comps[0].support) == [0, 1]

    def test_associated(self, R, I_ex):
        assert names(R, mono.associated_primes(M(R, "x1*x2"))) == [["x1"], ["x2"]]
        assert names(R, mono.associated_primes(I_ex)) == [["x1", "x2"], ["x1", "x2", "x3"]]
        J = M(R, "y1^4", "y1^3*y2", "y1^2*y2^2*y3", "y1*y2^3", "y2^4")
        assert names(R, mono.associated_primes(J)) == [["y1", "y2"], ["y1", "y2", "y3"]]

    def test_unit_and_zero_rejected(self, R):
        with pytest.raises(ValueError):
            mono.primary_decomposition(MonomialIdeal.unit(R))
        with pytest.raises(ValueError):
            mono.irreducible_decomposition(MonomialIdeal.zero(R))


class TestAssOfPowers:
    def test_principal(self, R):
        a = mono.ass_of_powers(M(R, "x1"), 4)
        assert all(v == [frozenset({0})] for v in a.per_power.values()) and a.stabilized

    def test_example(self, I_ex):
        a = mono.ass_of_powers(I_ex, 3)
        assert a.per_power[1] == [frozenset({0, 1}), frozenset({0, 1, 2})]
        assert a.per_power[2] == a.per_power[3] == [frozenset({0, 1})]
        assert a.first_power(frozenset({0, 1, 2})) == 1
        assert not a.stabilized  # the window [1, 3] still sees the change
        assert mono.ass_of_powers(I_ex, 4).stabilized

    @settings(max_examples=15)
    @given(monomial_ideals(max_gens=3, max_deg=2))
    def test_union_settles(self, I):
        small = mono.ass_of_powers(I, 3)
        big = mono.ass_of_powers(I, 5)
        if small.stabilized:
            assert small.stable == big.stable


class TestIntegralClosure:
    def test_midpoint(self, R):
        assert mono.integral_closure_member((1, 1, 0, 0, 0, 0), M(R, "x1^2", "x2^2"))

    def test_not_integral(self, R):
        assert not mono.integral_closure_member((1, 0, 0, 0, 0, 0), M(R, "x1^2"))

    def test_generators_integral(self, I_ex):
        assert all(mono.integral_closure_member(g, I_ex) for g in I_ex.gens)

    def test_maximal_square_normal(self, R):
        assert mono.is_normal_up_to(M(R, "y1^2", "y1*y2", "y2^2"), 4) == [True] * 4

    def test_not_closed(self, R):
        assert not mono.is_integrally_closed(M(R, "x1^2", "x2^2"))
        assert not mono.is_integrally_closed(M(R, "y1^3", "y2^3"))
        assert mono.integral_closure_member((0, 0, 0, 2, 2, 0), M(R, "y1^3", "y2^3"))

    def test_closure_of_example(self, R, I_ex):
        assert mono.integral_closure(I_ex) == MonomialIdeal.prime(R, [0, 1]) ** 4
        assert mono.is_normal_up_to(I_ex, 3) == [False, True, True]

    @settings(max_examples=25)
    @given(monomial_ideals(max_gens=3, max_deg=3), st.tuples(*[st.integers(0, 3)] * 4),
           st.integers(0, 3))
    def test_monotone_under_divisibility(self, I, m, i):
        bigger = tuple(e + (j == i) for j, e in enumerate(m))
        if mono.integral_closure_member(m, I):
            assert mono.integral_closure_member(bigger, I)

    @settings(max_examples=10)
    @given(monomial_ideals(max_gens=3, max_deg=2))
    def test_closure_contains_and_idempotent(self, I):
        c = mono.integral_closure(I)
        assert c.contains_ideal(I)
        assert mono.integral_closure(c) == c
        # the closure of a square contains the square of the closure
        assert mono.integral_closure(I ** 2).contains_ideal(c ** 2)


# ---------------------------------------------------------------- properties

@settings(max_examples=40)
@given(monomial_ideals(max_gens=4, max_deg=3))
def test_decomposition_intersects_back(I):
    comps = mono.primary_decomposition(I)
    meet = comps[0].component
    for c in comps[1:]:
        meet = meet & c.component
    assert meet == I
    for c in comps:
        assert mono.associated_primes(c.component) == [c.support]


@settings(max_examples=40)
@given(monomial_ideals(max_gens=4, max_deg=3))
def test_methods_agree(I):
    a = {q.gens for q in mono.irreducible_decomposition(I, "incremental")}
    b = {q.gens for q in mono.irreducible_decomposition(I, "splitting")}
    assert a == b


@settings(max_examples=40)
@given(monomial_ideals(max_gens=4, max_deg=3))
def test_ass_three_ways(I):
    irr = sorted({frozenset(q.support()) for q in mono.irreducible_decomposition(I)},
                 key=lambda s: (len(s), sorted(s)))
    assert mono.associated_primes(I) == irr
    assert mono.associated_primes_by_localization(I) == irr


@settings(max_examples=25)
@given(monomial_ideals(max_gens=3, max_deg=3))
def test_ass_by_witness(I):
    ass = set(mono.associated_primes(I))
    supp = sorted(I.support())
    for r in range(1, len(supp) + 1):
        for s in combinations(supp, r):
            assert (mono.colon_witness(I, s) is not None) == (frozenset(s) in ass)


@settings(max_examples=40)
@given(monomial_ideals(max_gens=3), monomial_ideals(max_gens=3))
def test_lattice_laws(I, J):
    assert I + J == J + I and I & J == J & I
    assert (I & J).contains_ideal(I * J)
    assert (I + J).contains_ideal(I) and I.contains_ideal(I & J)
    assert mono.m_colon(I, J).contains_ideal(I)
    assert I.contains_ideal(mono.m_colon(I, J) * J)
