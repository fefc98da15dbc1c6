"""Acceptance criteria, each run at its stated size and time limit.

Every test records one PASS/FAIL line through the ``acceptance`` fixture;
the lines are repeated in the terminal summary.
"""

import random
import time

from idealkit import monomial as mono
from idealkit import sumdecomp as sd
from idealkit.examples import load_problem, run_example
from idealkit.lemmas import verify_lemmas
from idealkit.monomial import MonomialIdeal
from idealkit.randgen import block_ring, random_monomial_ideal, random_monomial_pair

from test_oracle import disagreements

RING = block_ring(3, 3)


def M(*texts, ring=RING) -> MonomialIdeal:
    return MonomialIdeal.parse(ring, texts)


def supports(ring, primes) -> set:
    return {sd._prime_support(P) for P in primes}


def direct_ass(base: MonomialIdeal, n: int) -> set:
    return {frozenset(s) for s in mono.associated_primes(mono.m_power(base, n))}


# the edge ideal of a triangle: its maximal ideal is associated from the square on
TRIANGLE_X = M("x1*x2", "x2*x3", "x1*x3")
TRIANGLE_Y = M("y1*y2", "y2*y3", "y1*y3")
EX2 = load_problem("ex2")
EX2_I, EX2_J = EX2.ideal("I"), EX2.ideal("J")


def test_monomial_pair_example(acceptance):
    t0 = time.perf_counter()
    ring = EX2_I.ring
    everything = frozenset(range(ring.nvars))
    facts = []
    for n in (1, 2, 3):
        tA = sd.table_from_monomial(EX2_I, "x", n)
        tB = sd.table_from_monomial(EX2_J, "y", n)
        pd = sd.power_decomposition(tA, tB, n)
        direct = direct_ass(EX2_I + EX2_J, n)
        facts.append(pd.verified and direct == supports(ring, pd.associated_primes()))
        c22 = next(c for c in pd.components if (c.k, c.l) == (2, 2))
        if n == 1:
            facts.append(len(direct) == 4 and not any(c.redundant for c in pd.components))
        else:
            facts.append(everything not in direct and c22.redundant is True)
    acceptance(1, "monomial pair example, n = 1..3", all(facts),
               f"{sum(facts)}/{len(facts)} facts", time.perf_counter() - t0, 60)


def test_curve_example(acceptance):
    t0 = time.perf_counter()
    doc = run_example("ex1", 1)
    failed = [c["name"] for c in doc["checks"] if not c["passed"]]
    acceptance(2, "monomial ideal with a curve ideal", doc["verdict"] == "PASS" and not failed,
               f"{len(doc['checks']) - len(failed)}/{len(doc['checks'])} checks",
               time.perf_counter() - t0, 300)


def test_components_intersect_to_power(acceptance):
    t0 = time.perf_counter()
    passed = total = 0
    for seed in range(50):
        _, I, J = random_monomial_pair(seed, max_vars=3, max_gens=5, max_deg=4)
        for n in (1, 2, 3):
            tA = sd.table_from_monomial(I, "x", n)
            tB = sd.table_from_monomial(J, "y", n)
            pd = sd.power_decomposition(tA, tB, n, verify=False)
            meet = MonomialIdeal.unit(I.ring)
            for c in pd.components:
                meet = meet & c.ideal
            total += 1
            passed += meet == mono.m_power(I + J, n)
    acceptance(3, "components intersect to (I+J)^n", passed == total == 150,
               f"{passed}/{total}", time.perf_counter() - t0, 120)


def test_general_identity_suites(acceptance):
    t0 = time.perf_counter()
    report = verify_lemmas(seed=0, count=25, suites=["disjoint-intersection", "colon-of-sum"])
    passed = sum(s.passed for s in report.suites)
    total = sum(s.total for s in report.suites)
    acceptance(4, "general-ideal identity suites", report.ok and total == 50,
               f"{passed}/{total}", time.perf_counter() - t0, 300)


def test_engines_agree(acceptance):
    t0 = time.perf_counter()
    failures = []
    for seed in range(100):
        rng = random.Random(f"oracle/{seed}")
        ring = block_ring(2, 2)
        I = random_monomial_ideal(rng, ring, rng.choice("xy"), 4, 3)
        J = random_monomial_ideal(rng, ring, rng.choice("xy"), 4, 3)
        if rng.random() < 0.5:
            # mix the blocks so the ideals are not confined to one side
            I = I * random_monomial_ideal(rng, ring, "y", 2, 2)
        bad = disagreements(I, J)
        if bad:
            failures.append((seed, bad))
    acceptance(5, "monomial engine agrees with the Groebner engine", not failures,
               f"{100 - len(failures)}/100 instances", time.perf_counter() - t0, 300)


FIRST_POWER_PAIRS = [
    (TRIANGLE_X, TRIANGLE_Y),
    (TRIANGLE_X, M("y1")),
    (M("x1"), TRIANGLE_Y),
    (TRIANGLE_X, M("y1^2", "y1*y2")),
    (EX2_I, TRIANGLE_Y),
    (TRIANGLE_X, EX2_J),
    (M("x1*x2"), TRIANGLE_Y),
    (TRIANGLE_X, M("y1^2", "y1*y2", "y2^2")),
    (TRIANGLE_X, M("y1*y2", "y2*y3")),
    (M("x1^2", "x1*x2"), TRIANGLE_Y),
]


def test_first_power_of_sum_primes(acceptance):
    t0 = time.perf_counter()
    seen, checked, wrong = set(), 0, []
    for I, J in FIRST_POWER_PAIRS:
        tA = sd.table_from_monomial(I, "x", 2)
        tB = sd.table_from_monomial(J, "y", 2)
        for P, i in zip(tA.primes, tA.first_power):
            for Q, j in zip(tB.primes, tB.first_power):
                got = sd.first_power_in_sum(I, J, sd._prime_support(P), sd._prime_support(Q), 4)
                checked += 1
                seen.add((i, j))
                if got != sd.first_power_associated(i, j):
                    wrong.append((str(I), str(J), i, j, got))
    ok = not wrong and seen == {(1, 1), (1, 2), (2, 1), (2, 2)}
    acceptance(6, "least power of P+Q is i+j-1", ok,
               f"{checked - len(wrong)}/{checked} prime pairs over {len(FIRST_POWER_PAIRS)} ideal pairs, "
               f"(i,j) seen {sorted(seen)}", time.perf_counter() - t0, 300)


def _stabilized_pairs(count: int):
    hand = [(TRIANGLE_X, TRIANGLE_Y), (EX2_I, EX2_J), (EX2_I, TRIANGLE_Y),
            (TRIANGLE_X, M("y1^2", "y1*y2")), (M("x1^2", "x1*x2"), M("y1*y2", "y2*y3")),
            (TRIANGLE_X, M("y1^2", "y2^2"))]
    pairs = list(hand)
    seed = 0
    while len(pairs) < count * 2:
        _, I, J = random_monomial_pair(10_000 + seed)
        seed += 1
        pairs.append((I, J))
    for I, J in pairs:
        tA = sd.table_from_monomial(I, "x", 6)
        tB = sd.table_from_monomial(J, "y", 6)
        if tA.stabilized and tB.stabilized:
            yield I, J, tA, tB
            count -= 1
            if count == 0:
                return


def test_cardinality_law(acceptance):
    t0 = time.perf_counter()
    total = ok = 0
    for I, J, tA, tB in _stabilized_pairs(20):
        total += 1
        stable = sd.ass_stable_set(tA, tB)
        # cross-check against Ass of the powers of I+J, up to the last first appearance
        last = max(tA.first_power) + max(tB.first_power) - 1
        direct = set()
        for n in range(1, last + 1):
            direct |= direct_ass(I + J, n)
        ok += (stable.size == len(tA.primes) * len(tB.primes)
               and direct == supports(I.ring, stable.primes))
    acceptance(7, "|stable set| = |A(I)| * |A(J)|", ok == total == 20,
               f"{ok}/{total} stabilized pairs", time.perf_counter() - t0, 300)


def test_persistence(acceptance):
    t0 = time.perf_counter()
    J = M("y1^2", "y1*y2", "y2^2")
    j_normal = all(mono.is_normal_up_to(J, 4))
    rng = random.Random("persistence")
    ideals = [EX2_I] + [random_monomial_ideal(rng, RING, "x") for _ in range(9)]
    persistent = sum(sd.persistence_check(I, J, 4).persistent is True for I in ideals)
    ex2 = sd.persistence_check(EX2_I, EX2_J, 4)
    neither_normal = not all(ex2.normal_i) and not all(ex2.normal_j)
    descends = 2 in ex2.descending_steps()
    ok = j_normal and persistent == 10 and neither_normal and descends
    acceptance(8, "ascending Ass chains with a normal J", ok,
               f"J normal to power 4: {j_normal}; {persistent}/10 chains ascend; "
               f"example pair descends at n=2: {descends}", time.perf_counter() - t0, 300)
