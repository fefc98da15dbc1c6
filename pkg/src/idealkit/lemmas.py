"""Randomized suites for the ideal identities the construction relies on.

Every instance is generated from its own seed string ``suite/seed/index``
so a failure can be replayed on its own.  ``inject_failure`` replaces the
right-hand side R by R*(x1 + y1), which differs from any nonzero ideal; it
exists to check that the harness reports failures.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from . import sumdecomp as sd
from .groebner import Ideal, colon_elem, equal
from .monomial import MonomialIdeal
from .randgen import (block_ring, random_ideal, random_monomial_ideal, random_monomial_pair,
                      random_polynomial)

SUITES = ("disjoint-intersection", "colon-of-sum", "chain-exchange", "power-intersection")


def _same(a, b) -> bool:
    if isinstance(a, MonomialIdeal) and isinstance(b, MonomialIdeal):
        return a == b
    return equal(a.to_ideal(), b.to_ideal())


def _mutate(rhs):
    ring = rhs.ring
    twist = Ideal(ring, [ring.var(ring.x_vars[0]) + ring.var(ring.y_vars[0])])
    return rhs.to_ideal() * twist


def _disjoint_intersection(rng: random.Random):
    ring = block_ring(2, 2)
    I = random_ideal(rng, ring, "x")
    J1, J2 = random_ideal(rng, ring, "y"), random_ideal(rng, ring, "y")
    return (I + J1) & J2, I * J2 + (J1 & J2)


def _colon_of_sum(rng: random.Random):
    ring = block_ring(2, 2)
    I, J = random_ideal(rng, ring, "x"), random_ideal(rng, ring, "y")
    # every nonzero element of a polynomial ring is a nonzerodivisor
    f = random_polynomial(rng, ring, "x", max_deg=2)
    return colon_elem(I + J, f), colon_elem(I, f) + J


def _chain_exchange(rng: random.Random):
    ring = block_ring(2, 2)
    n, r = rng.randint(1, 3), rng.randint(1, 2)
    unit = MonomialIdeal.unit(ring)
    columns = [[unit] + [random_monomial_ideal(rng, ring, "x", 3, 3) for _ in range(n)]
               for _ in range(r)]
    chain = [unit]
    for _ in range(n):
        chain.append(chain[-1] & random_monomial_ideal(rng, ring, "y", 3, 3))
    return sd.intersect_of_sums(columns, chain, n)


def _power_intersection(rng: random.Random):
    ring, I, J = random_monomial_pair(rng.randrange(2 ** 32))
    n = rng.randint(1, 3)
    tA = sd.table_from_monomial(I, "x", n)
    tB = sd.table_from_monomial(J, "y", n)
    pd = sd.power_decomposition(tA, tB, n, verify=False)
    proper = [c.ideal for c in pd.components if not c.unit]
    meet = proper[0]
    for q in proper[1:]:
        meet = meet & q
    return meet, pd.target


_BUILDERS: dict[str, Callable] = {
    "disjoint-intersection": _disjoint_intersection,
    "colon-of-sum": _colon_of_sum,
    "chain-exchange": _chain_exchange,
    "power-intersection": _power_intersection,
}


def instance_seed(suite: str, seed: int, index: int) -> str:
    return f"{suite}/{seed}/{index}"


def check_instance(suite: str, instance: str, inject_failure: bool = False) -> bool:
    lhs, rhs = _BUILDERS[suite](random.Random(instance))
    if inject_failure:
        rhs = _mutate(rhs)
    return _same(lhs, rhs)


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: list[str] = field(default_factory=list)

    @property
    def total(self) -> int:
        return self.passed + len(self.failed)

    @property
    def ok(self) -> bool:
        return not self.failed


@dataclass
class LemmaReport:
    seed: int
    count: int
    suites: list[SuiteResult]

    @property
    def ok(self) -> bool:
        return all(s.ok for s in self.suites)


def verify_lemmas(seed: int = 0, count: int = 25, suites=None,
                  inject_failure: bool = False) -> LemmaReport:
    """Run ``count`` random instances of each suite; failures keep their seed string."""
    if count < 0:
        raise ValueError("count must be >= 0")
    names = list(suites) if suites else list(SUITES)
    for name in names:
        if name not in _BUILDERS:
            raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    results = []
    for name in names:
        res = SuiteResult(name)
        for i in range(count):
            inst = instance_seed(name, seed, i)
            if check_instance(name, inst, inject_failure):
                res.passed += 1
            else:
                res.failed.append(inst)
        results.append(res)
    return LemmaReport(seed, count, results)
