"""Ideals of a polynomial ring, backed by Buchberger's algorithm.

Polynomials are handled internally as plain ``{exponent tuple: Fraction}``
dictionaries; :class:`Ideal` wraps them with a ring and caches reduced bases.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .poly import Monomial, OrderKey, Polynomial, Ring, RingMismatchError, order_key

Raw = dict  # Monomial -> Fraction


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x > y else y for x, y in zip(a, b))


def _coprime(a: Monomial, b: Monomial) -> bool:
    return not any(x and y for x, y in zip(a, b))


def _leading(p: Raw, key: OrderKey) -> Monomial:
    return max(p, key=key)


def _monic(p: Raw, lm: Monomial) -> Raw:
    c = p[lm]
    if c == 1:
        return p
    inv = 1 / c
    return {m: v * inv for m, v in p.items()}


def _neg_key(key: OrderKey):
    return lambda m: tuple(-k for k in key(m))


def normal_form(f: Raw, basis: Sequence[tuple[Monomial, Raw]], key: OrderKey,
                full: bool = True) -> Raw:
    """Reduce ``f`` modulo ``basis`` (pairs of leading monomial and monic poly).

    With ``full=False`` only the leading term is reduced away.
    """
    neg = _neg_key(key)
    p = dict(f)
    heap = [(neg(m), m) for m in p]
    heapq.heapify(heap)
    out: Raw = {}
    while heap:
        _, m = heapq.heappop(heap)
        c = p.pop(m, None)
        if c is None:
            continue
        for lm, g in basis:
            if _divides(lm, m):
                q = tuple(a - b for a, b in zip(m, lm))
                for gm, gc in g.items():
                    if gm == lm:
                        continue
                    nm = tuple(a + b for a, b in zip(q, gm))
                    v = p.get(nm)
                    if v is None:
                        p[nm] = -c * gc
                        heapq.heappush(heap, (neg(nm), nm))
                    else:
                        v -= c * gc
                        if v:
                            p[nm] = v
                        else:
                            del p[nm]
                break
        else:
            out[m] = c
            if not full:
                out.update(p)
                return out
    return out


def _spoly(f: Raw, lf: Monomial, g: Raw, lg: Monomial) -> Raw:
    lcm = _lcm(lf, lg)
    uf = tuple(a - b for a, b in zip(lcm, lf))
    ug = tuple(a - b for a, b in zip(lcm, lg))
    out: Raw = {}
    for m, c in f.items():
        out[tuple(a + b for a, b in zip(m, uf))] = c
    for m, c in g.items():
        nm = tuple(a + b for a, b in zip(m, ug))
        v = out.get(nm, 0) - c
        if v:
            out[nm] = v
        else:
            out.pop(nm, None)
    return out


def buchberger(polys: Iterable[Raw], key: OrderKey) -> list[Raw]:
    """Reduced Groebner basis of the ideal generated by ``polys``.

    Uses the Gebauer-Moeller pair update (which applies both Buchberger
    criteria) and the normal selection strategy.  The result is monic and
    sorted by decreasing leading monomial.
    """
    G: list[tuple[Monomial, Raw]] = []
    active: list[int] = []
    pairs: list[tuple[Monomial, int, int]] = []

    def update(h: int) -> None:
        nonlocal active, pairs
        hm = G[h][0]
        cands = [(g, _lcm(hm, G[g][0])) for g in active]
        kept = []
        while cands:
            g1, l1 = cands.pop(0)
            if _coprime(hm, G[g1][0]) or (
                    not any(_divides(l2, l1) for _, l2 in cands)
                    and not any(_divides(l2, l1) for _, l2 in kept)):
                kept.append((g1, l1))
        new_pairs = [(l, g, h) for g, l in kept if not _coprime(hm, G[g][0])]
        survivors = []
        for l, a, b in pairs:
            if (_divides(hm, l) and _lcm(G[a][0], hm) != l
                    and _lcm(G[b][0], hm) != l):
                continue
            survivors.append((l, a, b))
        pairs = survivors + new_pairs
        active = [g for g in active if not _divides(hm, G[g][0])] + [h]

    def add(p: Raw) -> bool:
        lm = _leading(p, key)
        if not any(lm):
            return True
        G.append((lm, _monic(p, lm)))
        update(len(G) - 1)
        return False

    for f in polys:
        if not f:
            continue
        nf = normal_form(f, [G[i] for i in active], key)
        if nf and add(nf):
            nvars = len(next(iter(nf)))
            return [{(0,) * nvars: Fraction(1)}]
    while pairs:
        best = min(range(len(pairs)), key=lambda i: (key(pairs[i][0]), pairs[i][1], pairs[i][2]))
        _, a, b = pairs.pop(best)
        s = _spoly(G[a][1], G[a][0], G[b][1], G[b][0])
        nf = normal_form(s, [G[i] for i in active], key)
        if nf and add(nf):
            nvars = len(next(iter(nf)))
            return [{(0,) * nvars: Fraction(1)}]
    # minimal basis, then interreduce
    basis = [G[i] for i in active]
    minimal = [(lm, g) for idx, (lm, g) in enumerate(basis)
               if not any(_divides(om, lm) and (om != lm or j < idx)
                          for j, (om, _) in enumerate(basis) if j != idx)]
    reduced = []
    for idx, (lm, g) in enumerate(minimal):
        others = [t for j, t in enumerate(minimal) if j != idx]
        tail = {m: c for m, c in g.items() if m != lm}
        r = normal_form(tail, others, key)
        r[lm] = Fraction(1)
        reduced.append((lm, r))
    reduced.sort(key=lambda t: key(t[0]), reverse=True)
    return [g for _, g in reduced]


def divide_exact(p: Raw, f: Raw, key: OrderKey) -> Raw:
    """Quotient ``p / f``; raises ``ArithmeticError`` if the division is inexact."""
    lf = _leading(f, key)
    cf = f[lf]
    rest = dict(p)
    q: Raw = {}
    while rest:
        m = _leading(rest, key)
        if not _divides(lf, m):
            raise ArithmeticError("inexact polynomial division")
        t = tuple(a - b for a, b in zip(m, lf))
        c = rest[m] / cf
        q[t] = c
        for fm, fc in f.items():
            nm = tuple(a + b for a, b in zip(t, fm))
            v = rest.get(nm, 0) - c * fc
            if v:
                rest[nm] = v
            else:
                rest.pop(nm, None)
    return q


# ----------------------------------------------------------------------------
# ideals


def _check_same_ring(a: Ring, b: Ring) -> None:
    if not a.same_variables(b):
        raise RingMismatchError(f"{a} vs {b}")


class Ideal:
    """Ideal given by a finite list of generators.

    The reduced Groebner basis for each order is computed on demand and
    cached; the cache never changes the result of any operation.
    """

    def __init__(self, ring: Ring, gens: Iterable[Polynomial | str | int] = ()):
        self.ring = ring
        clean = []
        for g in gens:
            if isinstance(g, str):
                g = ring.parse(g)
            elif isinstance(g, (int, Fraction)):
                g = ring.constant(g)
            else:
                _check_same_ring(ring, g.ring)
                if g.ring != ring:
                    g = Polynomial._raw(ring, g.terms)
            if not g.is_zero():
                clean.append(g)
        self.gens: tuple[Polynomial, ...] = tuple(clean)
        self._gb: dict[str, tuple[Polynomial, ...]] = {}

    @classmethod
    def unit(cls, ring: Ring) -> Ideal:
        return cls(ring, [ring.one()])

    @classmethod
    def zero(cls, ring: Ring) -> Ideal:
        return cls(ring, [])

    # -- Groebner bases ----------------------------------------------------
    def groebner_basis(self, order: str | None = None) -> tuple[Polynomial, ...]:
        order = order or self.ring.order
        if order not in self._gb:
            key = order_key(order, self.ring.nvars)
            gb = buchberger([g.terms for g in self.gens], key)
            self._gb[order] = tuple(Polynomial._raw(self.ring, g) for g in gb)
        return self._gb[order]

    def _set_gb(self, order: str, basis: Sequence[Polynomial]) -> None:
        self._gb.setdefault(order, tuple(basis))

    def _basis_pairs(self) -> list[tuple[Monomial, Raw]]:
        key = self.ring.key
        return [(_leading(g.terms, key), g.terms) for g in self.groebner_basis()]

    def reduce(self, f: Polynomial) -> Polynomial:
        _check_same_ring(self.ring, f.ring)
        return Polynomial._raw(self.ring, normal_form(f.terms, self._basis_pairs(), self.ring.key))

    # -- predicates --------------------------------------------------------
    def is_unit(self) -> bool:
        gb = self.groebner_basis()
        return len(gb) == 1 and gb[0].is_constant()

    def is_zero(self) -> bool:
        return not self.gens

    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.gens)

    def __contains__(self, f: Polynomial) -> bool:
        return member(f, self)

    def contains_ideal(self, other: Ideal) -> bool:
        _check_same_ring(self.ring, other.ring)
        return all(member(g, self) for g in other.gens)

    def equals(self, other) -> bool:
        return equal(self, other)

    def support(self) -> set[int]:
        out: set[int] = set()
        for g in self.gens:
            out |= g.support()
        return out

    # -- operators ---------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return ideal_sum(self, other)

    def __mul__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return product(self, other)

    def __pow__(self, n: int):
        return power(self, n)

    def __and__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return intersect(self, other)

    def to_ideal(self) -> Ideal:
        return self

    def __repr__(self):
        return f"Ideal({str(self)})"

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.gens) + ")"


def groebner_basis(I: Ideal, order: str | None = None) -> tuple[Polynomial, ...]:
    return I.groebner_basis(order)


def member(f: Polynomial, I: Ideal) -> bool:
    return I.reduce(f).is_zero()


def equal(I1: Ideal, I2: Ideal) -> bool:
    _check_same_ring(I1.ring, I2.ring)
    a = I1.groebner_basis()
    b = I2.groebner_basis(I1.ring.order)
    return [g.terms for g in a] == [g.terms for g in b]


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    _check_same_ring(I.ring, J.ring)
    return Ideal(I.ring, I.gens + J.gens)


def product(I: Ideal, J: Ideal) -> Ideal:
    _check_same_ring(I.ring, J.ring)
    return Ideal(I.ring, [f * g for f in I.gens for g in J.gens])


def power(I: Ideal, n: int) -> Ideal:
    if n < 0:
        raise ValueError("negative power")
    result = Ideal.unit(I.ring)
    for _ in range(n):
        gens = dict.fromkeys(f * g for f in result.gens for g in I.gens)
        result = Ideal(I.ring, gens)
    return result


def _eliminate_raw(polys: list[Raw], k: int) -> list[Raw]:
    """Basis of the ideal intersected with the subring free of the first k variables."""
    nvars = len(next(iter(polys[0])))
    gb = buchberger(polys, order_key(f"elim:{k}", nvars))
    return [{m[k:]: c for m, c in g.items()} for g in gb if all(not any(m[:k]) for m in g)]


def eliminate(I: Ideal, variables: Iterable[str]) -> Ideal:
    """Generators of I intersected with the subring without ``variables``.

    The returned ideal still lives in ``I.ring``.
    """
    elim = [I.ring.index(v) for v in variables]
    if not elim or not I.gens:
        return Ideal(I.ring, I.gens)
    keep = [i for i in range(I.ring.nvars) if i not in elim]
    perm = elim + keep
    polys = [{tuple(m[i] for i in perm): c for m, c in g.terms.items()} for g in I.gens]
    out = []
    for g in _eliminate_raw(polys, len(elim)):
        terms = {}
        for m, c in g.items():
            e = [0] * I.ring.nvars
            for pos, i in enumerate(keep):
                e[i] = m[pos]
            terms[tuple(e)] = c
        out.append(Polynomial._raw(I.ring, terms))
    return Ideal(I.ring, out)


def intersect(I1: Ideal, I2: Ideal) -> Ideal:
    """I1 ∩ I2 by eliminating t from t*I1 + (1 - t)*I2."""
    _check_same_ring(I1.ring, I2.ring)
    ring = I1.ring
    if not I1.gens or not I2.gens:
        return Ideal.zero(ring)
    if I1.is_unit():
        return Ideal(ring, I2.gens)
    if I2.is_unit():
        return Ideal(ring, I1.gens)
    polys = []
    for f in I1.gens:
        polys.append({(1,) + m: c for m, c in f.terms.items()})
    for g in I2.gens:
        p = {(0,) + m: c for m, c in g.terms.items()}
        for m, c in g.terms.items():
            p[(1,) + m] = -c
        polys.append(p)
    gens = [Polynomial._raw(ring, g) for g in _eliminate_raw(polys, 1)]
    result = Ideal(ring, gens)
    if ring.order == "grevlex":
        # the eliminated part of a reduced elimination basis is itself reduced
        result._set_gb("grevlex", gens)
    return result


def colon_elem(I: Ideal, f: Polynomial) -> Ideal:
    """I : f, via (I ∩ (f)) / f."""
    _check_same_ring(I.ring, f.ring)
    if f.is_zero():
        raise ValueError("colon by the zero polynomial")
    if f.is_constant():
        return Ideal(I.ring, I.gens)
    K = intersect(I, Ideal(I.ring, [f]))
    key = I.ring.key
    quotients = [Polynomial._raw(I.ring, divide_exact(g.terms, f.terms, key)) for g in K.gens]
    return Ideal(I.ring, quotients)


def colon(I: Ideal, J: Ideal | Polynomial) -> Ideal:
    """I : J = {c : cJ ⊆ I}, the intersection of I : g over generators g of J."""
    if isinstance(J, Polynomial):
        return colon_elem(I, J)
    _check_same_ring(I.ring, J.ring)
    if J.is_zero():
        raise ValueError("colon by the zero ideal")
    result = None
    for g in J.gens:
        K = colon_elem(I, g)
        result = K if result is None else intersect(result, K)
        if result.is_zero():
            break
    return result


class Saturation(NamedTuple):
    ideal: Ideal
    exponent: int


def saturate(I: Ideal, f: Polynomial) -> Saturation:
    """I : f^∞ together with the least M with I : f^M = I : f^(M+1)."""
    if f.is_zero():
        raise ValueError("saturation by the zero polynomial")
    current = I
    m = 0
    while True:
        nxt = colon_elem(current, f)
        if equal(nxt, current):
            return Saturation(current, m)
        current = nxt
        m += 1


# ----------------------------------------------------------------------------
# primes


@dataclass(frozen=True)
class PrimeIdeal:
    """A prime ideal together with the reason it is known to be prime.

    ``certificate`` is ``"variable-generated"``, ``"assumed-prime"`` (taken
    on the user's word) or ``"sum-with-variable-block"``.
    """

    ideal: Ideal
    certificate: str
    name: str | None = None

    def __post_init__(self):
        if self.certificate not in ("variable-generated", "assumed-prime",
                                    "sum-with-variable-block"):
            raise ValueError(f"unknown certificate {self.certificate!r}")
        if self.certificate == "variable-generated":
            if not all(g.is_monomial() and g.total_degree() == 1 for g in self.ideal.gens):
                raise ValueError("a variable-generated prime needs single-variable generators")

    @classmethod
    def from_variables(cls, ring: Ring, names: Iterable[str], name: str | None = None) -> PrimeIdeal:
        names = sorted(set(names), key=ring.index)
        return cls(Ideal(ring, [ring.var(v) for v in names]), "variable-generated", name)

    @classmethod
    def assumed(cls, ideal: Ideal, name: str | None = None) -> PrimeIdeal:
        return cls(ideal, "assumed-prime", name)

    @property
    def ring(self) -> Ring:
        return self.ideal.ring

    @property
    def is_variable_generated(self) -> bool:
        return self.certificate == "variable-generated" or (
            bool(self.ideal.gens)
            and all(g.is_monomial() and g.total_degree() == 1 for g in self.ideal.gens))

    def variable_set(self) -> frozenset[str] | None:
        if not self.is_variable_generated:
            return None
        return frozenset(self.ideal.gens[i].variables()[0] for i in range(len(self.ideal.gens)))

    def canonical(self) -> tuple:
        """Hashable canonical form (the reduced basis) for deduplication."""
        return tuple(tuple(sorted(g.terms.items())) for g in self.ideal.groebner_basis())

    def same_as(self, other: PrimeIdeal) -> bool:
        return self.canonical() == other.canonical()

    def __str__(self):
        return str(self.ideal)
