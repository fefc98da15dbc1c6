"""Monomial ideals as antichains of exponent vectors.

Everything here is exact combinatorics on exponent tuples.  Primes of
monomial ideals are generated by variables and are reported as frozensets of
variable indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from operator import le
from itertools import combinations, product as cartesian
from typing import Iterable, Sequence

from .feasibility import feasible
from .groebner import Ideal
from .poly import Monomial, Polynomial, Ring, format_monomial

Support = frozenset  # of variable indices


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(map(le, a, b))


def _lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x > y else y for x, y in zip(a, b))


def _minimize(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    """Divisibility antichain of ``gens``, sorted canonically."""
    cands = sorted(set(gens), key=lambda m: (sum(m), m))
    kept: list[Monomial] = []
    for m in cands:
        for k in kept:
            if all(map(le, k, m)):
                break
        else:
            kept.append(m)
    return tuple(sorted(kept))


class MonomialIdeal:
    """Monomial ideal given by its minimal generators.

    The unit ideal is generated by the zero exponent vector and the zero
    ideal by no generators.  Equality is equality of minimal generators.
    """

    __slots__ = ("ring", "gens")

    def __init__(self, ring: Ring, gens: Iterable[Sequence[int]] = ()):
        gens = [tuple(g) for g in gens]
        for g in gens:
            if len(g) != ring.nvars or any(e < 0 for e in g):
                raise ValueError(f"bad exponent vector {g} for {ring}")
        self.ring = ring
        self.gens: tuple[Monomial, ...] = _minimize(gens)

    @classmethod
    def _from_minimal(cls, ring: Ring, gens: tuple[Monomial, ...]) -> MonomialIdeal:
        obj = object.__new__(cls)
        obj.ring = ring
        obj.gens = gens
        return obj

    @classmethod
    def parse(cls, ring: Ring, texts: Iterable[str]) -> MonomialIdeal:
        return cls.from_polynomials(ring, [ring.parse(t) for t in texts])

    @classmethod
    def from_polynomials(cls, ring: Ring, polys: Iterable[Polynomial]) -> MonomialIdeal:
        gens = []
        for p in polys:
            if p.is_zero():
                continue
            if not p.is_monomial():
                raise ValueError(f"{p} is not a monomial")
            gens.append(next(iter(p.terms)))
        return cls(ring, gens)

    @classmethod
    def from_ideal(cls, ideal: Ideal) -> MonomialIdeal:
        return cls.from_polynomials(ideal.ring, ideal.gens)

    @classmethod
    def unit(cls, ring: Ring) -> MonomialIdeal:
        return cls._from_minimal(ring, ((0,) * ring.nvars,))

    @classmethod
    def zero(cls, ring: Ring) -> MonomialIdeal:
        return cls._from_minimal(ring, ())

    @classmethod
    def prime(cls, ring: Ring, support: Iterable[int]) -> MonomialIdeal:
        gens = []
        for i in support:
            e = [0] * ring.nvars
            e[i] = 1
            gens.append(tuple(e))
        return cls(ring, gens)

    # -- predicates --------------------------------------------------------
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    def is_zero(self) -> bool:
        return not self.gens

    def contains(self, m: Sequence[int]) -> bool:
        m = tuple(m)
        return any(_divides(g, m) for g in self.gens)

    def contains_ideal(self, other: MonomialIdeal) -> bool:
        return all(self.contains(g) for g in other.gens)

    def support(self) -> Support:
        return frozenset(i for g in self.gens for i, e in enumerate(g) if e)

    def equals(self, other) -> bool:
        if isinstance(other, MonomialIdeal):
            return self == other
        return self.to_ideal().equals(other.to_ideal())

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.ring.variables == other.ring.variables and self.gens == other.gens

    def __hash__(self):
        return hash((self.ring.variables, self.gens))

    # -- algebra -----------------------------------------------------------
    def _check(self, other: MonomialIdeal) -> None:
        if self.ring.variables != other.ring.variables:
            raise ValueError("monomial ideals live in different rings")

    def __add__(self, other):
        if isinstance(other, Ideal):
            return self.to_ideal() + other
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return m_sum(self, other)

    def __radd__(self, other):
        if isinstance(other, Ideal):
            return other + self.to_ideal()
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Ideal):
            return self.to_ideal() * other
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return m_product(self, other)

    def __rmul__(self, other):
        if isinstance(other, Ideal):
            return other * self.to_ideal()
        return NotImplemented

    def __and__(self, other):
        if isinstance(other, Ideal):
            return self.to_ideal() & other
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return m_intersect(self, other)

    def __rand__(self, other):
        if isinstance(other, Ideal):
            return other & self.to_ideal()
        return NotImplemented

    def __pow__(self, n: int) -> MonomialIdeal:
        return m_power(self, n)

    def to_ideal(self) -> Ideal:
        ideal = Ideal(self.ring, [self.ring.monomial(g) for g in self.gens])
        if self.ring.order in ("grevlex", "lex"):
            ideal._set_gb(self.ring.order, sorted(ideal.gens, key=lambda p: self.ring.key(
                next(iter(p.terms))), reverse=True))
        return ideal

    def with_ring(self, ring: Ring) -> MonomialIdeal:
        """Re-embed into ``ring``, matching variables by name."""
        idx = [ring.index(v) for v in self.ring.variables]
        gens = []
        for g in self.gens:
            e = [0] * ring.nvars
            for i, k in enumerate(g):
                if k:
                    e[idx[i]] = k
            gens.append(tuple(e))
        return MonomialIdeal(ring, gens)

    def __iter__(self):
        return iter(self.gens)

    def __len__(self):
        return len(self.gens)

    def __str__(self):
        if self.is_unit():
            return "(1)"
        ordered = sorted(self.gens, key=self.ring.key, reverse=True)
        return "(" + ", ".join(format_monomial(self.ring, g) for g in ordered) + ")"

    def __repr__(self):
        return f"MonomialIdeal{self}"


def min_gens(ring: Ring, gens: Iterable[Sequence[int]]) -> MonomialIdeal:
    return MonomialIdeal(ring, gens)


def m_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    I._check(J)
    return MonomialIdeal._from_minimal(I.ring, _minimize(I.gens + J.gens))


def m_product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    I._check(J)
    prods = (tuple(a + b for a, b in zip(g, h)) for g in I.gens for h in J.gens)
    return MonomialIdeal._from_minimal(I.ring, _minimize(prods))


def m_power(I: MonomialIdeal, n: int) -> MonomialIdeal:
    if n < 0:
        raise ValueError("negative power")
    return _power_cached(I, n)


@lru_cache(maxsize=4096)
def _power_cached(I: MonomialIdeal, n: int) -> MonomialIdeal:
    if n == 0:
        return MonomialIdeal.unit(I.ring)
    if n == 1:
        return I
    half = _power_cached(I, n // 2)
    result = m_product(half, half)
    if n % 2:
        result = m_product(result, I)
    return result


def m_intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    I._check(J)
    return MonomialIdeal._from_minimal(I.ring, _minimize(_lcm(g, h) for g in I.gens for h in J.gens))


def m_colon(I: MonomialIdeal, J: MonomialIdeal | Sequence[int]) -> MonomialIdeal:
    """I : J; ``J`` may be a monomial ideal or a single exponent vector."""
    if isinstance(J, MonomialIdeal):
        I._check(J)
        if J.is_zero():
            raise ValueError("colon by the zero ideal")
        result = None
        for m in J.gens:
            K = m_colon(I, m)
            result = K if result is None else m_intersect(result, K)
        return result
    m = tuple(J)
    return MonomialIdeal._from_minimal(
        I.ring, _minimize(tuple(a - b if a > b else 0 for a, b in zip(g, m)) for g in I.gens))


def m_saturate(I: MonomialIdeal, support: Iterable[int]) -> MonomialIdeal:
    """I : (prod of the given variables)^∞ -- drop those variables from every generator."""
    s = set(support)
    return MonomialIdeal(I.ring, (tuple(0 if i in s else e for i, e in enumerate(g)) for g in I.gens))


# ----------------------------------------------------------------------------
# decompositions

# An irreducible monomial ideal (x_i^{a_i} : a_i > 0) is stored as the vector a.


def _irr_contains(a: Monomial, b: Monomial) -> bool:
    """Whether irreducible ideal ``a`` contains irreducible ideal ``b``."""
    return all(0 < ai <= bi for ai, bi in zip(a, b) if bi > 0)


def _minimal_irreducibles(comps: Iterable[Monomial]) -> list[Monomial]:
    comps = sorted(set(comps))
    return [a for a in comps
            if not any(b != a and _irr_contains(a, b) for b in comps)]


@lru_cache(maxsize=200_000)
def _irreducible_split(gens: tuple[Monomial, ...]) -> tuple[Monomial, ...]:
    # I = (I + x_i^a) ∩ (I + g / x_i^a) for a mixed generator g
    best = None
    for g in gens:
        supp = [i for i, e in enumerate(g) if e]
        if len(supp) > 1:
            score = (len(supp), sum(g))
            if best is None or score > best[0]:
                best = (score, g, supp)
    if best is None:
        a = [0] * len(gens[0])
        for g in gens:
            for i, e in enumerate(g):
                if e:
                    a[i] = e
        return (tuple(a),)
    _, g, supp = best
    i = max(supp, key=lambda j: (sum(1 for h in gens if h[j] >= g[j]), -j))
    pure = tuple(g[i] if j == i else 0 for j in range(len(g)))
    rest = tuple(0 if j == i else e for j, e in enumerate(g))
    left = _irreducible_split(_minimize(gens + (pure,)))
    right = _irreducible_split(_minimize(gens + (rest,)))
    return tuple(_minimal_irreducibles(left + right))


@lru_cache(maxsize=4096)
def _irreducible_incremental(gens: tuple[Monomial, ...]) -> tuple[Monomial, ...]:
    # add generators one at a time; a component missing m is refined by
    # each pure power x_i^{m_i} that makes it contain m
    ordered = sorted(gens, key=lambda m: (sum(m), m))
    n = len(ordered[0])
    first = ordered[0]
    comps = [tuple(first[j] if j == i else 0 for j in range(n)) for i in range(n) if first[i]]
    for m in ordered[1:]:
        keep, new = [], set()
        for a in comps:
            if any(0 < a[i] <= m[i] for i in range(n)):
                keep.append(a)
                continue
            for i in range(n):
                if m[i] and (a[i] == 0 or a[i] > m[i]):
                    new.add(a[:i] + (m[i],) + a[i + 1:])
        new -= set(keep)
        pool = keep + list(new)
        comps = keep + [b for b in new
                        if not any(r != b and _irr_contains(b, r) for r in pool)]
    return tuple(_minimal_irreducibles(comps))


def _irreducible(gens: tuple[Monomial, ...], method: str = "incremental") -> tuple[Monomial, ...]:
    if method == "incremental":
        return _irreducible_incremental(gens)
    if method == "splitting":
        return _irreducible_split(gens)
    raise ValueError(f"unknown decomposition method {method!r}")


def _check_proper(M: MonomialIdeal) -> None:
    if M.is_zero():
        raise ValueError("the zero ideal has no monomial decomposition here")
    if M.is_unit():
        raise ValueError("the unit ideal has no primary decomposition")


def irreducible_decomposition(M: MonomialIdeal, method: str = "incremental") -> list[MonomialIdeal]:
    """Irredundant decomposition into ideals generated by pure powers.

    ``method`` is ``"incremental"`` (adds one generator at a time) or
    ``"splitting"`` (recursively splits a mixed generator); both give the
    same, unique, answer.
    """
    _check_proper(M)
    out = []
    for a in _irreducible(M.gens, method):
        gens = [tuple(e if j == i else 0 for j in range(len(a))) for i, e in enumerate(a) if e]
        out.append(MonomialIdeal(M.ring, gens))
    return sorted(out, key=_component_sort_key)


def _component_sort_key(q: MonomialIdeal):
    supp = q.support()
    return (len(supp), sorted(supp), q.gens)


@dataclass(frozen=True)
class MonomialPrimaryComponent:
    component: MonomialIdeal
    support: Support

    def prime(self) -> MonomialIdeal:
        return MonomialIdeal.prime(self.component.ring, sorted(self.support))

    def __str__(self):
        names = self.component.ring.variables
        return f"{self.component} [radical ({', '.join(names[i] for i in sorted(self.support))})]"


def primary_decomposition(M: MonomialIdeal, method: str = "incremental") -> list[MonomialPrimaryComponent]:
    """Minimal primary decomposition: irreducible components grouped by radical."""
    _check_proper(M)
    groups: dict[Support, MonomialIdeal] = {}
    for a in _irreducible(M.gens, method):
        supp = frozenset(i for i, e in enumerate(a) if e)
        q = MonomialIdeal(M.ring, [tuple(e if j == i else 0 for j in range(len(a)))
                                   for i, e in enumerate(a) if e])
        groups[supp] = q if supp not in groups else m_intersect(groups[supp], q)
    return [MonomialPrimaryComponent(q, s)
            for s, q in sorted(groups.items(), key=lambda t: (len(t[0]), sorted(t[0])))]


def _sort_primes(primes: Iterable[Support]) -> list[Support]:
    return sorted(set(primes), key=lambda s: (len(s), sorted(s)))


def associated_primes(M: MonomialIdeal, method: str = "incremental") -> list[Support]:
    """Supports of the minimal primary decomposition (read off the irreducible components)."""
    _check_proper(M)
    return _sort_primes(frozenset(i for i, e in enumerate(a) if e)
                        for a in _irreducible(M.gens, method))


def is_associated(M: MonomialIdeal, support: Iterable[int]) -> bool:
    """Decide whether the prime on ``support`` is associated to M by localizing.

    Setting the other variables to 1 gives M_S; the prime is associated iff
    the maximal ideal on S is associated to M_S, i.e. M_S : m_S != M_S.
    """
    s = frozenset(support)
    if not s:
        return False
    local = m_saturate(M, set(range(M.ring.nvars)) - s)
    if local.is_unit() or local.is_zero():
        return False
    maximal = MonomialIdeal.prime(M.ring, sorted(s))
    return m_colon(local, maximal) != local


def associated_primes_by_localization(M: MonomialIdeal) -> list[Support]:
    """Associated primes by testing every subset of the support variables."""
    _check_proper(M)
    supp = sorted(M.support())
    found = []
    for r in range(1, len(supp) + 1):
        for s in combinations(supp, r):
            if is_associated(M, s):
                found.append(frozenset(s))
    return _sort_primes(found)


def colon_witness(M: MonomialIdeal, support: Iterable[int]) -> Monomial | None:
    """A monomial w with M : w equal to the prime on ``support``, if one exists."""
    prime = MonomialIdeal.prime(M.ring, sorted(support))
    for g in m_colon(M, prime).gens:
        if not M.contains(g) and m_colon(M, g) == prime:
            return g
    return None


@dataclass(frozen=True)
class AssOfPowers:
    per_power: dict[int, list[Support]]
    stable: list[Support]
    stabilized: bool
    window: int

    @property
    def n_max(self) -> int:
        return max(self.per_power)

    def first_power(self, prime: Support) -> int | None:
        for n in sorted(self.per_power):
            if prime in self.per_power[n]:
                return n
        return None


def ass_of_powers(M: MonomialIdeal, n_max: int, window: int = 3) -> AssOfPowers:
    """Ass(M^n) for n <= n_max and the union as an estimate of the stable set.

    ``stabilized`` records whether Ass(M^n) is constant over the last
    ``window`` powers; it is a heuristic, not a proof of stabilization.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    per = {n: associated_primes(m_power(M, n)) for n in range(1, n_max + 1)}
    w = max(1, min(window, n_max))
    tail = [per[n] for n in range(n_max - w + 1, n_max + 1)]
    stabilized = all(t == tail[0] for t in tail)
    stable = _sort_primes(p for ps in per.values() for p in ps)
    return AssOfPowers(per, stable, stabilized, w)


# ----------------------------------------------------------------------------
# integral closure


def integral_closure_member(m: Sequence[int], M: MonomialIdeal) -> bool:
    """Whether the monomial with exponents ``m`` is integral over M.

    m is integral iff its exponent vector lies in the Newton polyhedron
    conv(gens) + R^n_{>=0}.  Otherwise some w >= 0 separates it:
    w . (g - m) >= 1 for every generator g.  We decide that system exactly.
    """
    m = tuple(m)
    if M.is_zero():
        return False
    if M.contains(m):
        return True
    n = M.ring.nvars
    rows = [([1 if j == i else 0 for j in range(n)], 0) for i in range(n)]
    rows += [([g[i] - m[i] for i in range(n)], 1) for g in M.gens]
    return not feasible(rows, n)


def integral_closure(M: MonomialIdeal) -> MonomialIdeal:
    """Integral closure of M.

    Its minimal generators lie in the box bounded by the largest exponent of
    each variable among M's generators (clip a point of the Newton
    polyhedron at the box and it stays inside), so enumerating the box is
    enough.
    """
    if M.is_zero() or M.is_unit():
        return M
    top = [max(g[i] for g in M.gens) for i in range(M.ring.nvars)]
    found = list(M.gens)
    for e in cartesian(*(range(t + 1) for t in top)):
        if not M.contains(e) and integral_closure_member(e, M):
            found.append(e)
    return MonomialIdeal(M.ring, found)


def is_integrally_closed(M: MonomialIdeal) -> bool:
    if M.is_zero() or M.is_unit():
        return True
    top = [max(g[i] for g in M.gens) for i in range(M.ring.nvars)]
    for e in cartesian(*(range(t + 1) for t in top)):
        if not M.contains(e) and integral_closure_member(e, M):
            return False
    return True


def is_normal_up_to(M: MonomialIdeal, n_max: int) -> list[bool]:
    """Entry n-1 says whether M^n is integrally closed, for n = 1..n_max."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    return [is_integrally_closed(m_power(M, n)) for n in range(1, n_max + 1)]
