"""Seeded random rings, polynomials and ideals for property suites."""

from __future__ import annotations

import random
from fractions import Fraction

from .groebner import Ideal
from .monomial import MonomialIdeal
from .poly import Polynomial, Ring


def block_ring(a: int, b: int, order: str = "grevlex") -> Ring:
    return Ring(tuple(f"x{i}" for i in range(1, a + 1)),
                tuple(f"y{i}" for i in range(1, b + 1)), order)


def random_exponent(rng: random.Random, ring: Ring, block: str, max_deg: int,
                    min_deg: int = 1) -> tuple[int, ...]:
    idx = list(ring.block_indices(block))
    deg = rng.randint(min_deg, max_deg)
    e = [0] * ring.nvars
    for _ in range(deg):
        e[rng.choice(idx)] += 1
    return tuple(e)


def random_monomial_ideal(rng: random.Random, ring: Ring, block: str,
                          max_gens: int = 5, max_deg: int = 4) -> MonomialIdeal:
    """A proper nonzero monomial ideal in the given block."""
    count = rng.randint(1, max_gens)
    return MonomialIdeal(ring, [random_exponent(rng, ring, block, max_deg) for _ in range(count)])


def random_polynomial(rng: random.Random, ring: Ring, block: str, max_deg: int = 3,
                      max_terms: int = 3, coeff: int = 3) -> Polynomial:
    """A nonzero polynomial with no constant term and small integer coefficients."""
    while True:
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            c = rng.randint(-coeff, coeff)
            if c:
                terms[random_exponent(rng, ring, block, max_deg)] = Fraction(c)
        p = Polynomial(ring, terms)
        if not p.is_zero():
            return p


def random_ideal(rng: random.Random, ring: Ring, block: str, max_gens: int = 3,
                 max_deg: int = 3) -> Ideal:
    """An ideal with at least one non-monomial generator when the block allows it."""
    gens = [random_polynomial(rng, ring, block, max_deg) for _ in range(rng.randint(1, max_gens))]
    if all(g.is_monomial() for g in gens):
        for _ in range(20):
            g = random_polynomial(rng, ring, block, max_deg, max_terms=3)
            if not g.is_monomial():
                gens[0] = g
                break
    return Ideal(ring, gens)


def random_monomial_pair(seed: int, max_vars: int = 3, max_gens: int = 5,
                         max_deg: int = 4) -> tuple[Ring, MonomialIdeal, MonomialIdeal]:
    rng = random.Random(seed)
    ring = block_ring(rng.randint(1, max_vars), rng.randint(1, max_vars))
    return (ring, random_monomial_ideal(rng, ring, "x", max_gens, max_deg),
            random_monomial_ideal(rng, ring, "y", max_gens, max_deg))
