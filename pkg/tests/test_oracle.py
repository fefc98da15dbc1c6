"""The monomial engine against the generic Groebner engine on the same inputs."""

import random

import pytest
from hypothesis import given, settings

from idealkit import monomial as mono
from idealkit.groebner import Ideal, colon, equal, intersect
from idealkit.monomial import MonomialIdeal
from idealkit.randgen import block_ring, random_monomial_ideal

from strategies import RING, monomial_ideals


def G(M: MonomialIdeal) -> Ideal:
    # a fresh generic ideal without the preset basis
    return Ideal(M.ring, [M.ring.monomial(g) for g in M.gens])


def agree(mono_result: MonomialIdeal, generic: Ideal) -> bool:
    return equal(G(mono_result), generic) and MonomialIdeal.from_ideal(generic) == mono_result


def disagreements(I: MonomialIdeal, J: MonomialIdeal) -> list[str]:
    """Names of the operations on which the two engines differ."""
    gI, gJ = G(I), G(J)
    bad = []
    for name, m, g in (("sum", lambda: I + J, lambda: gI + gJ),
                       ("product", lambda: I * J, lambda: gI * gJ),
                       ("power", lambda: mono.m_power(I, 2), lambda: gI ** 2),
                       ("intersect", lambda: I & J, lambda: intersect(gI, gJ)),
                       ("colon", lambda: mono.m_colon(I, J), lambda: colon(gI, gJ))):
        if not agree(m(), g()):
            bad.append(name)
    meet = None
    for c in mono.primary_decomposition(I):
        g = G(c.component)
        meet = g if meet is None else intersect(meet, g)
    if not equal(meet, gI):
        bad.append("primary-decomposition")
    return bad


def check_pair(I: MonomialIdeal, J: MonomialIdeal) -> None:
    assert disagreements(I, J) == []


@settings(max_examples=30)
@given(monomial_ideals(RING, max_gens=3), monomial_ideals(RING, max_gens=3))
def test_engines_agree(I, J):
    check_pair(I, J)


@pytest.mark.parametrize("seed", range(20))
def test_engines_agree_seeded(seed):
    rng = random.Random(seed)
    ring = block_ring(2, 2)
    I = random_monomial_ideal(rng, ring, rng.choice("xy"), 4, 3)
    J = random_monomial_ideal(rng, ring, rng.choice("xy"), 4, 3)
    check_pair(I, J)
