"""The two worked examples: a monomial pair, and a monomial ideal with a curve ideal.

``run_example`` returns a report document whose checks restate the known
facts about each example; golden files pin the full document.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from . import monomial as mono
from . import report as rep
from . import sumdecomp as sd
from .groebner import Ideal, PrimeIdeal, equal
from .monomial import MonomialIdeal
from .poly import Ring, substitute
from .problem import ProblemFile, parse_problem

EXAMPLES = ("ex1", "ex2")
SUPPORTED_N = {"ex1": (1,), "ex2": (1, 2, 3)}
GOLDEN_DIR = Path(__file__).with_name("golden")


def load_problem(name: str) -> ProblemFile:
    if name not in EXAMPLES:
        raise ValueError(f"unknown example {name!r}; choose from {', '.join(EXAMPLES)}")
    return parse_problem(resources.files("idealkit").joinpath(f"problems/{name}.txt").read_text())


def golden_path(name: str, n: int) -> Path:
    return GOLDEN_DIR / f"{name}_n{n}.json"


def _labels(primes: list[PrimeIdeal]) -> list[str]:
    return [rep.prime_text(P) for P in primes]


def _ex2(n: int) -> dict:
    prob = load_problem("ex2")
    I, J = prob.ideal("I"), prob.ideal("J")
    doc = rep.new_report("examples run", {"example": "ex2", "n": n}, "monomial")
    checks = doc["checks"]
    tA = sd.table_from_monomial(I, "x", n)
    tB = sd.table_from_monomial(J, "y", n)
    pd = sd.power_decomposition(tA, tB, n)
    L = mono.m_power(I + J, n)
    direct = [frozenset(s) for s in mono.associated_primes(L)]
    built = [sd._prime_support(P) for P in pd.associated_primes()]
    ring = I.ring
    p2q2 = frozenset(ring.index(v) for v in ("x1", "x2", "x3", "y1", "y2", "y3"))
    comp22 = next(c for c in pd.components if (c.k, c.l) == (2, 2))
    doc["results"] = {
        "components": [rep.component_entry(c) for c in pd.components],
        "ass": {str(n): _labels([sd._prime_of_support(ring, sorted(s)) for s in mono._sort_primes(direct)])},
        "upper_bound": {str(n): _labels(sd.ass_upper_bound(tA, tB, n))},
    }
    checks.append(rep.check("components intersect to (I+J)^n", pd.verified))
    checks.append(rep.check("every proper component is primary to its target",
                            all(c.primary_verified for c in pd.components if not c.unit)))
    checks.append(rep.check("construction and direct decomposition give the same Ass",
                            set(direct) == set(built),
                            f"{len(direct)} primes directly, {len(built)} from kept components"))
    if n == 1:
        checks.append(rep.check("I+J has four associated primes", len(direct) == 4))
        checks.append(rep.check("no component is redundant",
                                not any(c.redundant for c in pd.components)))
    else:
        checks.append(rep.check("(x1,x2,x3,y1,y2,y3) is not associated", p2q2 not in direct))
        checks.append(rep.check("component (2,2) is redundant", comp22.redundant is True))
    return doc


def _ex1(n: int) -> dict:
    prob = load_problem("ex1")
    ring = prob.ring
    I, J = prob.ideal("I"), prob.ideal("J")
    doc = rep.new_report("examples run", {"example": "ex1", "n": n}, "general")
    checks = doc["checks"]

    t_ring = Ring(("t",), ())
    t = t_ring.var("t")
    images = {"y1": t ** 3, "y2": t ** 4, "y3": t ** 5}
    vanish = all(substitute(g, images, t_ring).is_zero() for g in J.gens)
    checks.append(rep.check("curve generators vanish at (t^3, t^4, t^5)", vanish))

    Q = PrimeIdeal.assumed(J)
    sym = sd.symbolic_power(Q, 2)
    J2 = J ** 2
    strict = sym.ideal.contains_ideal(J2) and not equal(sym.ideal, J2)
    checks.append(rep.check("second symbolic power strictly contains J^2", strict,
                            f"saturation by y1 stabilised at exponent {sym.exponent}"))

    tA, tB = prob.table("I"), prob.table("J")
    pd = sd.power_decomposition(tA, tB, n)
    proper = [c for c in pd.components if not c.unit]
    target = (I.to_ideal() + J)
    p11 = MonomialIdeal.prime(ring, [0, 1]) ** 4
    p12 = tA.entry(1, 2)
    expected = (J + p11.to_ideal()) & (J + p12.to_ideal())
    checks.append(rep.check("I+J is the meet of J+(x1,x2)^4 and J+p12", equal(expected, target)))
    both = all(not equal(c.ideal.to_ideal(), target) for c in proper) and len(proper) == 2
    checks.append(rep.check("dropping either component breaks the equality", both))
    checks.append(rep.check("no proper component is redundant",
                            all(c.redundant is False for c in proper)))
    stable = sd.ass_stable_set(tA, tB)
    checks.append(rep.check("stable set has four primes", stable.size == 4,
                            f"{stable.size_a} x {stable.size_b}"))
    doc["results"] = {
        "components": [rep.component_entry(c) for c in pd.components],
        "stable_set": _labels(stable.primes),
        "symbolic_power_2": rep.ideal_generators(sym.ideal),
    }
    return doc


def run_example(name: str, n: int | None = None) -> dict:
    if name not in EXAMPLES:
        raise ValueError(f"unknown example {name!r}; choose from {', '.join(EXAMPLES)}")
    n = SUPPORTED_N[name][0] if n is None else n
    if n not in SUPPORTED_N[name]:
        raise ValueError(f"{name} supports n in {SUPPORTED_N[name]}")
    doc = _ex1(n) if name == "ex1" else _ex2(n)
    return rep.finish(doc)


def compare_golden(doc: dict, name: str, n: int, regenerate: bool = False) -> str:
    path = golden_path(name, n)
    body = {k: v for k, v in doc.items() if k not in ("golden", "timings")}
    if regenerate:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(rep.to_json(body))
        return "regenerated"
    if not path.exists():
        return "missing"
    return "match" if json.loads(path.read_text()) == body else "mismatch"
