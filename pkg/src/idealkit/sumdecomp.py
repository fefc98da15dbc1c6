"""Primary decompositions and associated primes of powers of I + J.

Here I lives in the x block and J in the y block of a common ring.  Tables
of primary components for the powers of I and of J are combined into
components of (I + J)^n; their intersection is checked against (I + J)^n
directly.

Two regimes are distinguished throughout.  In the *monomial* regime every
ideal is a :class:`~idealkit.monomial.MonomialIdeal` and decompositions,
associated primes and redundancy are all exact.  In the *general* regime
equalities are still decided exactly by Groebner bases, but an associated
prime is only reported when a colon witness has been found.

Prime indices ``k`` and ``l`` are 1-based, matching the labels P1, P2, ...
used in reports.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import product as cartesian
from typing import Iterable, Sequence, Union

from . import monomial as mono
from .groebner import Ideal, PrimeIdeal, Saturation, colon, colon_elem, equal, member, saturate
from .monomial import MonomialIdeal
from .poly import Polynomial, Ring

IdealLike = Union[Ideal, MonomialIdeal]


class VerificationError(RuntimeError):
    """An identity that must hold for valid input failed to hold."""


class UnsupportedPairError(ValueError):
    """Neither prime of a pair is generated by variables."""


def max_workers() -> int:
    """Worker cap from ``IDEALKIT_THREADS`` (0 or unset means one per CPU)."""
    raw = os.environ.get("IDEALKIT_THREADS", "0").strip() or "0"
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"IDEALKIT_THREADS must be an integer, got {raw!r}") from None
    if n < 0:
        raise ValueError("IDEALKIT_THREADS must be >= 0")
    return n or (os.cpu_count() or 1)


# ----------------------------------------------------------------------------
# engine-neutral helpers


def _is_monomial(I: IdealLike) -> bool:
    return isinstance(I, MonomialIdeal)


def _unit(ring: Ring, monomial: bool) -> IdealLike:
    return MonomialIdeal.unit(ring) if monomial else Ideal.unit(ring)


def _is_unit(I: IdealLike) -> bool:
    return I.is_unit()


def _same(a: IdealLike, b: IdealLike) -> bool:
    if _is_monomial(a) and _is_monomial(b):
        return a == b
    return equal(a.to_ideal(), b.to_ideal())


def _intersect_all(ideals: Sequence[IdealLike], ring: Ring) -> IdealLike:
    if not ideals:
        return _unit(ring, True)
    result = ideals[0]
    for q in ideals[1:]:
        result = result & q
    return result


def _power(I: IdealLike, n: int) -> IdealLike:
    return I ** n


def _support_names(I: IdealLike) -> set[str]:
    names = I.ring.variables
    return {names[i] for i in I.support()}


def _prime_of_support(ring: Ring, support: Iterable[int]) -> PrimeIdeal:
    names = ring.variables
    return PrimeIdeal.from_variables(ring, [names[i] for i in support])


def _prime_support(P: PrimeIdeal) -> frozenset[int] | None:
    vs = P.variable_set()
    if vs is None:
        return None
    return frozenset(P.ring.index(v) for v in vs)


def _dedupe_primes(primes: Iterable[PrimeIdeal]) -> list[PrimeIdeal]:
    seen, out = set(), []
    for p in primes:
        key = p.canonical()
        if key not in seen:
            seen.add(key)
            out.append(p)
    return out


# ----------------------------------------------------------------------------
# decomposition tables


@dataclass
class DecompositionTable:
    """Primary components of the powers of one ideal.

    ``rows[m][k-1]`` is the component of the m-th power belonging to prime
    ``primes[k-1]``; it is primary to that prime or the unit ideal.  Row 0
    is all unit ideals.  ``first_power[k-1]`` is the least m >= 1 whose entry
    was proper in the table as supplied (before any filtration).
    """

    block: str
    base: IdealLike
    primes: list[PrimeIdeal]
    rows: list[list[IdealLike]]
    source: str
    first_power: list[int | None]
    filtered: bool = False
    radicals_verified: bool = False
    stabilized: bool | None = None
    window: int | None = None

    @property
    def ring(self) -> Ring:
        return self.base.ring

    @property
    def n_max(self) -> int:
        return len(self.rows) - 1

    @property
    def monomial(self) -> bool:
        return _is_monomial(self.base) and all(_is_monomial(q) for row in self.rows for q in row)

    def entry(self, m: int, k: int) -> IdealLike:
        return self.rows[m][k - 1]

    def column(self, k: int) -> list[IdealLike]:
        return [row[k - 1] for row in self.rows]

    def verify_rows(self) -> None:
        """Check row 0 is unit and that row m intersects to the m-th power."""
        if not all(_is_unit(q) for q in self.rows[0]):
            raise VerificationError("row 0 of a decomposition table must be all unit ideals")
        for m in range(1, len(self.rows)):
            meet = _intersect_all(self.rows[m], self.ring)
            if not _same(meet, _power(self.base, m)):
                raise VerificationError(
                    f"row {m} does not intersect to power {m} of {self.base}")


def _check_block(ring: Ring, block: str, I: IdealLike, what: str) -> None:
    allowed = set(ring.block_indices(block))
    if not I.support() <= allowed:
        raise ValueError(f"{what} uses variables outside the {block} block")


def table_from_monomial(M: MonomialIdeal, block: str, n_max: int, window: int = 3) -> DecompositionTable:
    """Decompose M, M^2, ..., M^n_max and arrange the components by prime.

    Primes are ordered by the first power they are associated to, then by
    size, then by variable order.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    _check_block(M.ring, block, M, "the base ideal")
    decomps = {m: mono.primary_decomposition(mono.m_power(M, m)) for m in range(1, n_max + 1)}
    first: dict[frozenset, int] = {}
    for m in range(1, n_max + 1):
        for c in decomps[m]:
            first.setdefault(c.support, m)
    order = sorted(first, key=lambda s: (first[s], len(s), sorted(s)))
    unit = MonomialIdeal.unit(M.ring)
    rows = [[unit] * len(order)]
    for m in range(1, n_max + 1):
        by_support = {c.support: c.component for c in decomps[m]}
        rows.append([by_support.get(s, unit) for s in order])
    ass = mono.ass_of_powers(M, n_max, window)
    table = DecompositionTable(
        block=block, base=M, primes=[_prime_of_support(M.ring, sorted(s)) for s in order],
        rows=rows, source="computed-monomial", first_power=[first[s] for s in order],
        radicals_verified=True, stabilized=ass.stabilized, window=ass.window)
    table.verify_rows()
    return table


def table_from_components(block: str, base: IdealLike, primes: Sequence[PrimeIdeal],
                          rows: Sequence[Sequence[IdealLike]], verify: bool = True) -> DecompositionTable:
    """Build a table from user-supplied components.

    ``rows`` may omit row 0.  Radicals are checked when both the entry and
    its prime are monomial; otherwise they are taken on trust and the
    table is flagged ``radicals_verified=False``.
    """
    ring = base.ring
    _check_block(ring, block, base, "the base ideal")
    rows = [list(r) for r in rows]
    r = len(primes)
    if any(len(row) != r for row in rows):
        raise ValueError("every row needs one entry per prime")
    monomial_entries = all(_is_monomial(q) for row in rows for q in row)
    if not rows or not all(_is_unit(q) for q in rows[0]):
        rows.insert(0, [_unit(ring, monomial_entries)] * r)
    for row in rows:
        for q in row:
            _check_block(ring, block, q, "a component")
    for P in primes:
        _check_block(ring, block, P.ideal, "a prime")
    first = []
    for k in range(r):
        proper = [m for m in range(1, len(rows)) if not _is_unit(rows[m][k])]
        first.append(proper[0] if proper else None)
    verified = True
    for k, P in enumerate(primes):
        supp = _prime_support(P)
        for m in range(1, len(rows)):
            q = rows[m][k]
            if _is_unit(q):
                continue
            if supp is not None and _is_monomial(q):
                comps = mono.associated_primes(q)
                if comps != [supp]:
                    raise VerificationError(f"entry ({m}, {k + 1}) is not primary to {P}")
            else:
                verified = False
    table = DecompositionTable(block=block, base=base, primes=list(primes), rows=rows,
                               source="user-supplied", first_power=first,
                               radicals_verified=verified)
    if verify:
        table.verify_rows()
    return table


def filtrate_column(column: Sequence[IdealLike]) -> list[IdealLike]:
    """Running intersections: entry m becomes the meet of entries 0..m."""
    out: list[IdealLike] = []
    acc = None
    for q in column:
        acc = q if acc is None else acc & q
        out.append(acc)
    return out


def filtrate(table: DecompositionTable) -> DecompositionTable:
    """Turn every column into a descending chain, keeping row intersections."""
    if table.filtered:
        return table
    r = len(table.primes)
    cols = [filtrate_column(table.column(k)) for k in range(1, r + 1)]
    rows = [[cols[k][m] for k in range(r)] for m in range(len(table.rows))]
    out = DecompositionTable(
        block=table.block, base=table.base, primes=table.primes, rows=rows,
        source=table.source, first_power=table.first_power, filtered=True,
        radicals_verified=table.radicals_verified, stabilized=table.stabilized,
        window=table.window)
    out.verify_rows()
    return out


def is_filtration(column: Sequence[IdealLike]) -> bool:
    if not column or not _is_unit(column[0]):
        return False
    for a, b in zip(column, column[1:]):
        if _is_monomial(a) and _is_monomial(b):
            if not a.contains_ideal(b):
                return False
        elif not a.to_ideal().contains_ideal(b.to_ideal()):
            return False
    return True


# ----------------------------------------------------------------------------
# primes of sums


def min_primes_of_sum(P: PrimeIdeal, Q: PrimeIdeal) -> list[PrimeIdeal]:
    """Minimal primes over P + Q for P in the x block and Q in the y block.

    When one of them is generated by variables, the quotient by P + Q is a
    polynomial ring over a domain, so P + Q is itself prime.  Other pairs
    are refused.
    """
    ring = P.ring
    if not ring.same_variables(Q.ring):
        raise ValueError("primes live in different rings")
    _check_block(ring, "x", P.ideal, "P")
    _check_block(ring, "y", Q.ideal, "Q")
    total = P.ideal + Q.ideal
    if P.is_variable_generated and Q.is_variable_generated:
        names = sorted(P.variable_set() | Q.variable_set(), key=ring.index)
        return [PrimeIdeal.from_variables(ring, names)]
    if P.is_variable_generated or Q.is_variable_generated:
        return [PrimeIdeal(total, "sum-with-variable-block")]
    raise UnsupportedPairError(
        f"cannot certify the minimal primes of {P} + {Q}: neither is generated by variables")


def _sum_label(tA: DecompositionTable, tB: DecompositionTable, k: int, l: int) -> str:
    return f"P{k}+Q{l}"


# ----------------------------------------------------------------------------
# components of (I + J)^n


@dataclass
class SumComponent:
    n: int
    k: int
    l: int
    ideal: IdealLike
    target_prime: PrimeIdeal
    unit: bool
    redundant: bool | None = None
    primary_verified: bool | None = None

    @property
    def label(self) -> str:
        return f"P{self.k}+Q{self.l}"


def _check_pair(tA: DecompositionTable, tB: DecompositionTable) -> None:
    if tA.block != "x" or tB.block != "y":
        raise ValueError("expected a table for the x block and a table for the y block")
    if not tA.ring.same_variables(tB.ring):
        raise ValueError("tables live in different rings")


def _component_ideal(tA: DecompositionTable, tB: DecompositionTable, n: int, k: int, l: int) -> IdealLike:
    monomial = tA.monomial and tB.monomial
    total = None
    for i in range(n + 1):
        p = tA.entry(i, k)
        q = tB.entry(n - i, l)
        if not monomial:
            p, q = p.to_ideal(), q.to_ideal()
        term = p * q
        total = term if total is None else total + term
    return total


def component(tA: DecompositionTable, tB: DecompositionTable, n: int, k: int, l: int) -> SumComponent:
    """The ideal sum_{i=0}^n p_{ik} q_{n-i,l}, filtrating the tables first if needed."""
    _check_pair(tA, tB)
    if n < 1:
        raise ValueError("n must be positive")
    if n > tA.n_max or n > tB.n_max:
        raise ValueError(f"n = {n} exceeds the table depth ({tA.n_max}, {tB.n_max})")
    tA, tB = filtrate(tA), filtrate(tB)
    ideal = _component_ideal(tA, tB, n, k, l)
    target = min_primes_of_sum(tA.primes[k - 1], tB.primes[l - 1])[0]
    return SumComponent(n=n, k=k, l=l, ideal=ideal, target_prime=target, unit=_is_unit(ideal))


@dataclass
class PowerDecomposition:
    n: int
    regime: str
    target: IdealLike
    components: list[SumComponent]
    verified: bool | None

    @property
    def irredundant(self) -> list[SumComponent]:
        return [c for c in self.components if not c.unit and c.redundant is False]

    def associated_primes(self) -> list[PrimeIdeal]:
        """Radicals of the kept components.

        In the monomial regime (components verified primary) this is
        Ass(C/(I+J)^n), as an irredundant primary decomposition with
        distinct radicals is minimal.
        """
        return [c.target_prime for c in self.irredundant]


def _verify_primary(c: SumComponent) -> bool | None:
    if c.unit:
        return None
    supp = _prime_support(c.target_prime)
    if not _is_monomial(c.ideal) or supp is None:
        return None
    return mono.associated_primes(c.ideal) == [supp]


def power_decomposition(tA: DecompositionTable, tB: DecompositionTable, n: int,
                        verify: bool = True) -> PowerDecomposition:
    """All r*s components of (I+J)^n, optionally verified and pruned.

    With ``verify`` the intersection of the components is compared with
    (I+J)^n (raising :class:`VerificationError` on mismatch) and redundant
    components are flagged by leave-one-out testing, visiting (k, l) from
    the largest pair down.
    """
    _check_pair(tA, tB)
    tA, tB = filtrate(tA), filtrate(tB)
    monomial = tA.monomial and tB.monomial
    pairs = list(cartesian(range(1, len(tA.primes) + 1), range(1, len(tB.primes) + 1)))
    workers = min(max_workers(), len(pairs)) or 1
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            comps = list(pool.map(lambda kl: component(tA, tB, n, *kl), pairs))
    else:
        comps = [component(tA, tB, n, k, l) for k, l in pairs]
    base = tA.base + tB.base
    target = _power(base, n)
    if monomial:
        for c in comps:
            c.primary_verified = _verify_primary(c)
    result = PowerDecomposition(n=n, regime="monomial" if monomial else "general",
                                target=target, components=comps, verified=None)
    if not verify:
        return result
    proper = [c for c in comps if not c.unit]
    meet = _intersect_all([c.ideal for c in proper], tA.ring) if proper else _unit(tA.ring, monomial)
    if not _same(meet, target):
        result.verified = False
        raise VerificationError(f"components do not intersect to (I+J)^{n}")
    result.verified = True
    for c in comps:
        if c.unit:
            c.redundant = True
    _flag_redundant(proper, target)
    return result


def _flag_redundant(proper: list[SumComponent], target: IdealLike) -> None:
    # one pass from the largest (k, l) down suffices: a component that cannot
    # be dropped from a family cannot be dropped from any subfamily
    ordered = sorted(proper, key=lambda c: (c.k, c.l))
    if not ordered:
        return
    prefix = [None]
    for c in ordered:
        prefix.append(c.ideal if prefix[-1] is None else prefix[-1] & c.ideal)
    kept_after = None
    for idx in range(len(ordered) - 1, -1, -1):
        c = ordered[idx]
        parts = [x for x in (prefix[idx], kept_after) if x is not None]
        if not parts:
            c.redundant = False
        else:
            others = parts[0] if len(parts) == 1 else parts[0] & parts[1]
            c.redundant = _same(others, target)
        if not c.redundant:
            kept_after = c.ideal if kept_after is None else kept_after & c.ideal


# ----------------------------------------------------------------------------
# associated primes


def _column_primes(table: DecompositionTable, n: int | None = None) -> list[tuple[int, PrimeIdeal]]:
    # with n=None every listed prime counts: a table's primes are the
    # declared union of Ass over all powers
    out = []
    for k, P in enumerate(table.primes, start=1):
        fp = table.first_power[k - 1]
        if n is None or (fp is not None and fp <= n):
            out.append((k, P))
    return out


def ass_upper_bound(tA: DecompositionTable, tB: DecompositionTable, n: int) -> list[PrimeIdeal]:
    """Minimal primes of P + Q over P associated to some I^i and Q to some J^j, i, j <= n."""
    _check_pair(tA, tB)
    if n < 1:
        raise ValueError("n must be positive")
    if n > tA.n_max or n > tB.n_max:
        raise ValueError(f"n = {n} exceeds the table depth")
    primes = []
    for (_, P), (_, Q) in cartesian(_column_primes(tA, n), _column_primes(tB, n)):
        primes.extend(min_primes_of_sum(P, Q))
    return _dedupe_primes(primes)


@dataclass
class StableSet:
    primes: list[PrimeIdeal]
    size: int
    size_a: int
    size_b: int
    provenance_a: str
    provenance_b: str

    @property
    def product_law_holds(self) -> bool:
        return self.size == self.size_a * self.size_b


def _provenance(table: DecompositionTable) -> str:
    if table.source == "user-supplied":
        return "user-supplied"
    return "window-stable" if table.stabilized else "window-unstable"


def ass_stable_set(tA: DecompositionTable, tB: DecompositionTable) -> StableSet:
    """Stable set of associated primes of the powers of I + J.

    The stable sets of I and J are the column primes of the tables; for
    computed tables they are estimates flagged by their stabilization window.
    """
    _check_pair(tA, tB)
    pa, pb = _column_primes(tA), _column_primes(tB)
    primes = []
    for (_, P), (_, Q) in cartesian(pa, pb):
        primes.extend(min_primes_of_sum(P, Q))
    primes = _dedupe_primes(primes)
    return StableSet(primes=primes, size=len(primes), size_a=len(pa), size_b=len(pb),
                     provenance_a=_provenance(tA), provenance_b=_provenance(tB))


def witness_colon(L: IdealLike, P: PrimeIdeal | IdealLike, search_bound: int | None = None) -> Polynomial | None:
    """Search for f with L : f = P.

    Candidates are the generators of L : P, then their monomial multiples in
    degree-lex order up to total degree ``search_bound`` (default: two more
    than the largest generator degree of L).  A returned f proves that P is
    associated to L; None proves nothing.
    """
    prime_ideal = P.ideal if isinstance(P, PrimeIdeal) else P
    ring = L.ring
    if _is_monomial(L) and (_is_monomial(prime_ideal) or prime_ideal.is_monomial()):
        Pm = prime_ideal if _is_monomial(prime_ideal) else MonomialIdeal.from_ideal(prime_ideal)
        return _witness_monomial(L, Pm, search_bound)
    Li = L.to_ideal()
    Pi = prime_ideal.to_ideal()
    if Li.is_unit():
        return None
    if search_bound is None:
        search_bound = 2 + max(g.total_degree() for g in Li.gens)
    base = colon(Li, Pi)
    for f in _candidates(ring, [g for g in base.groebner_basis()], search_bound):
        if member(f, Li):
            continue
        if equal(colon_elem(Li, f), Pi):
            return f
    return None


def _monomials_up_to(ring: Ring, degree: int):
    # degree-lex: by total degree, then lexicographically decreasing
    n = ring.nvars
    for d in range(degree + 1):
        exps = []

        def rec(prefix, left):
            if len(prefix) == n - 1:
                exps.append(tuple(prefix) + (left,))
                return
            for e in range(left, -1, -1):
                rec(prefix + [e], left - e)
        rec([], d)
        for e in exps:
            yield e


def _candidates(ring: Ring, gens: list[Polynomial], bound: int):
    for g in gens:
        yield g
    for g in gens:
        room = bound - g.total_degree()
        for e in _monomials_up_to(ring, room):
            if any(e):
                yield g * ring.monomial(e)


def _witness_monomial(L: MonomialIdeal, P: MonomialIdeal, bound: int | None) -> Polynomial | None:
    ring = L.ring
    if L.is_unit():
        return None
    if bound is None:
        bound = 2 + max(sum(g) for g in L.gens)
    base = mono.m_colon(L, P)
    gens = sorted(base.gens, key=lambda g: (sum(g), tuple(-e for e in g)))
    seen = set()
    for g in gens:
        if not L.contains(g) and mono.m_colon(L, g) == P:
            return ring.monomial(g)
        seen.add(g)
    for g in gens:
        for e in _monomials_up_to(ring, bound - sum(g)):
            w = tuple(a + b for a, b in zip(g, e))
            if w in seen:
                continue
            seen.add(w)
            if not L.contains(w) and mono.m_colon(L, w) == P:
                return ring.monomial(w)
    return None


@dataclass
class AssReport:
    n: int
    regime: str
    computed_ass: list[PrimeIdeal]
    upper_bound: list[PrimeIdeal]
    witnesses: dict[str, Polynomial]
    complete: bool

    @property
    def contained_in_bound(self) -> bool:
        keys = {P.canonical() for P in self.upper_bound}
        return all(P.canonical() in keys for P in self.computed_ass)


def ass_report(tA: DecompositionTable, tB: DecompositionTable, n: int,
               witness_bound: int | None = None) -> AssReport:
    """Ass(C/(I+J)^n) together with the upper bound from the tables.

    Monomial regime: computed exactly by decomposing (I+J)^n.  General
    regime: the primes of the upper bound for which a colon witness is
    found (sound, possibly incomplete).
    """
    bound = ass_upper_bound(tA, tB, n)
    L = _power(tA.base + tB.base, n)
    witnesses: dict[str, Polynomial] = {}
    if tA.monomial and tB.monomial:
        primes = [_prime_of_support(L.ring, sorted(s)) for s in mono.associated_primes(L)]
        for P in primes:
            w = mono.colon_witness(L, _prime_support(P))
            if w is not None:
                witnesses[str(P)] = L.ring.monomial(w)
        return AssReport(n, "monomial", primes, bound, witnesses, complete=True)
    found = []
    for P in bound:
        f = witness_colon(L, P, witness_bound)
        if f is not None:
            witnesses[str(P)] = f
            found.append(P)
    return AssReport(n, "general", found, bound, witnesses, complete=False)


def first_power_associated(i: int, j: int) -> int:
    """Least power of I + J to which P + Q is associated, given the least powers
    i of I and j of J to which P and Q are associated."""
    if i < 1 or j < 1:
        raise ValueError("i and j must be positive")
    return i + j - 1


def first_power_in_sum(I: MonomialIdeal, J: MonomialIdeal, p_support: Iterable[int],
                       q_support: Iterable[int], n_max: int) -> int | None:
    """Least n <= n_max with the prime on p_support ∪ q_support associated to (I+J)^n."""
    s = frozenset(p_support) | frozenset(q_support)
    base = I + J
    for n in range(1, n_max + 1):
        if mono.is_associated(mono.m_power(base, n), s):
            return n
    return None


def symbolic_power(Q: PrimeIdeal, n: int, sat_elem: Polynomial | None = None) -> Saturation:
    """Q^(n) computed as Q^n : f^∞.

    ``f`` must lie outside Q and inside every embedded prime of Q^n.  By
    default it is the first variable of Q's block that is not in Q, which
    suffices when the only possible embedded prime is the block's maximal
    ideal.
    """
    if n < 1:
        raise ValueError("n must be positive")
    ring = Q.ring
    if sat_elem is None:
        supp = Q.ideal.support()
        xs, ys = set(ring.block_indices("x")), set(ring.block_indices("y"))
        block = "x" if supp <= xs else "y" if supp <= ys else None
        if block is None:
            raise ValueError("Q mixes both blocks; pass sat_elem explicitly")
        for i in ring.block_indices(block):
            v = ring.var(ring.variables[i])
            if not member(v, Q.ideal):
                sat_elem = v
                break
        else:
            raise ValueError("every variable of the block lies in Q; pass sat_elem explicitly")
    if member(sat_elem, Q.ideal):
        raise ValueError(f"saturation element {sat_elem} lies in Q")
    return saturate(Q.ideal ** n, sat_elem)


# ----------------------------------------------------------------------------
# persistence


@dataclass
class PersistenceReport:
    regime: str
    ass: dict[int, list[PrimeIdeal]]
    steps: dict[int, bool | None]
    normal_i: list[bool] | None = None
    normal_j: list[bool] | None = None

    @property
    def persistent(self) -> bool | None:
        vals = list(self.steps.values())
        if any(v is False for v in vals):
            return False
        if any(v is None for v in vals):
            return None
        return True

    def descending_steps(self) -> list[int]:
        return [n for n, ok in self.steps.items() if ok is False]


def persistence_check(I: IdealLike, J: IdealLike, n_max: int,
                      tables: tuple[DecompositionTable, DecompositionTable] | None = None,
                      witness_bound: int | None = None) -> PersistenceReport:
    """Whether Ass((I+J)^(n-1)) ⊆ Ass((I+J)^n) for 2 <= n <= n_max.

    Monomial inputs are decided exactly, and normality of I and J up to
    n_max is reported too.  Other inputs need decomposition tables; only
    witnessed primes are tracked and a step with an unwitnessed prime is
    reported as None (unknown).
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    if _is_monomial(I) and _is_monomial(J):
        base = I + J
        ass = {n: [_prime_of_support(base.ring, sorted(s))
                   for s in mono.associated_primes(mono.m_power(base, n))]
               for n in range(1, n_max + 1)}
        steps = {}
        for n in range(2, n_max + 1):
            now = {P.canonical() for P in ass[n]}
            steps[n] = all(P.canonical() in now for P in ass[n - 1])
        return PersistenceReport("monomial", ass, steps,
                                 normal_i=mono.is_normal_up_to(I, n_max),
                                 normal_j=mono.is_normal_up_to(J, n_max))
    if tables is None:
        raise ValueError("non-monomial input needs decomposition tables for candidate primes")
    tA, tB = tables
    ass = {n: ass_report(tA, tB, n, witness_bound).computed_ass for n in range(1, n_max + 1)}
    steps = {}
    for n in range(2, n_max + 1):
        now = {P.canonical() for P in ass[n]}
        steps[n] = True if all(P.canonical() in now for P in ass[n - 1]) else None
    return PersistenceReport("general", ass, steps)


def tilde_column(column: Sequence[IdealLike], n: int) -> list[IdealLike]:
    """Tail sums: entry i becomes I_i + I_{i+1} + ... + I_n."""
    out = [None] * (n + 1)
    acc = None
    for i in range(n, -1, -1):
        acc = column[i] if acc is None else acc + column[i]
        out[i] = acc
    return out


def intersect_of_sums(columns: Sequence[Sequence[IdealLike]], chain: Sequence[IdealLike],
                      n: int) -> tuple[IdealLike, IdealLike]:
    """Both sides of the exchange of intersection and sum over a chain.

    ``columns[k][i]`` are x-block ideals, ``chain`` a descending chain of
    y-block ideals.  Returns (meet_k sum_i I_ik J_{n-i}, sum_i (meet_k tilde I_ik) J_{n-i});
    the two are equal.
    """
    if not columns:
        raise ValueError("need at least one column")
    lhs = None
    for col in columns:
        s = None
        for i in range(n + 1):
            t = col[i] * chain[n - i]
            s = t if s is None else s + t
        lhs = s if lhs is None else lhs & s
    tildes = [tilde_column(col, n) for col in columns]
    rhs = None
    for i in range(n + 1):
        meet = tildes[0][i]
        for t in tildes[1:]:
            meet = meet & t[i]
        term = meet * chain[n - i]
        rhs = term if rhs is None else rhs + term
    return lhs, rhs
