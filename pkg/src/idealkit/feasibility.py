"""Exact rational linear feasibility by Fourier-Motzkin elimination."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Row = tuple[tuple[Fraction, ...], Fraction]  # a . w >= b


def _normalize(coeffs: Sequence[Fraction], rhs: Fraction) -> Row:
    den = 1
    for c in (*coeffs, rhs):
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    b = int(rhs * den)
    g = 0
    for v in (*ints, b):
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
        b //= g
    return tuple(Fraction(v) for v in ints), Fraction(b)


def _insert(system: dict, coeffs, rhs, hist) -> None:
    old = system.get(coeffs)
    # identical left-hand sides: keep the strongest bound
    if old is None or rhs > old[0] or (rhs == old[0] and len(hist) < len(old[1])):
        system[coeffs] = (rhs, hist)


def _eliminate(rows: list[Row], nvars: int, prune: bool):
    system: dict = {}
    for idx, (a, b) in enumerate(rows):
        _insert(system, a, b, frozenset([idx]))
    stages = []
    for var in range(nvars):
        stages.append(system)
        pos, neg, rest = [], [], {}
        for coeffs, (rhs, hist) in system.items():
            c = coeffs[var]
            if c > 0:
                pos.append((coeffs, rhs, hist))
            elif c < 0:
                neg.append((coeffs, rhs, hist))
            else:
                rest[coeffs] = (rhs, hist)
        system = rest
        for pc, pr, ph in pos:
            for nc, nr, nh in neg:
                hist = ph | nh
                # Chernikov: more than var+2 parents means the row is implied
                if prune and len(hist) > var + 2:
                    continue
                s, t = -nc[var], pc[var]
                coeffs, rhs = _normalize([s * x + t * y for x, y in zip(pc, nc)],
                                         s * pr + t * nr)
                _insert(system, coeffs, rhs, hist)
    return stages, system


def _back_substitute(stages, nvars: int) -> list[Fraction] | None:
    point = [Fraction(0)] * nvars
    for var in range(nvars - 1, -1, -1):
        lo, hi = None, None
        for coeffs, (rhs, _) in stages[var].items():
            c = coeffs[var]
            if not c:
                continue
            bound = (rhs - sum(coeffs[j] * point[j] for j in range(var + 1, nvars))) / c
            if c > 0:
                lo = bound if lo is None else max(lo, bound)
            else:
                hi = bound if hi is None else min(hi, bound)
        if lo is not None and hi is not None and lo > hi:
            return None
        point[var] = lo if lo is not None else (hi if hi is not None and hi < 0 else Fraction(0))
    return point


def solve(rows: Sequence[tuple[Sequence, object]], nvars: int) -> list[Fraction] | None:
    """A point satisfying every ``a . w >= b``, or None if there is none.

    A returned point is checked against the input rows; infeasibility is
    certified by a derived row ``0 >= b`` with ``b > 0``.
    """
    clean = []
    for a, b in rows:
        if len(a) != nvars:
            raise ValueError("row length does not match the number of variables")
        clean.append(_normalize([Fraction(x) for x in a], Fraction(b)))
    if nvars == 0:
        return [] if all(b <= 0 for _, b in clean) else None
    for prune in (True, False):
        stages, final = _eliminate(clean, nvars, prune)
        if any(rhs > 0 for rhs, _ in final.values()):
            return None
        point = _back_substitute(stages, nvars)
        if point is not None and all(
                sum(x * y for x, y in zip(a, point)) >= b for a, b in clean):
            return point
    raise AssertionError("Fourier-Motzkin elimination produced an inconsistent system")


def feasible(rows: Sequence[tuple[Sequence, object]], nvars: int) -> bool:
    return solve(rows, nvars) is not None
