"""Sparse multivariate polynomials with exact rational coefficients.

A :class:`Ring` names its variables in two blocks (the ``x`` block and the
``y`` block) and carries a default monomial order.  Polynomials map exponent
tuples to nonzero :class:`fractions.Fraction` coefficients.

The text grammar is::

    poly  := term (('+' | '-') term)*
    term  := [coef] ['*'] var['^'e] ('*' var['^'e])*  |  coef
    coef  := a | a/b

For example ``3/2*x1^2*y1 - y2 + 1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Callable, Iterable, Iterator, Mapping

Monomial = tuple[int, ...]
OrderKey = Callable[[Monomial], tuple]


class RingMismatchError(ValueError):
    """Raised when operands live in rings with different variables."""


class PolynomialParseError(ValueError):
    def __init__(self, message: str, column: int):
        super().__init__(f"column {column}: {message}")
        self.message = message
        self.column = column


# ----------------------------------------------------------------------------
# monomial orders


def _lex_key(m: Monomial) -> tuple:
    return m


def _grevlex_key(m: Monomial) -> tuple:
    return (sum(m),) + tuple(-e for e in reversed(m))


def _elim_key(k: int) -> OrderKey:
    def key(m: Monomial) -> tuple:
        head, tail = m[:k], m[k:]
        return ((sum(head),) + tuple(-e for e in reversed(head))
                + (sum(tail),) + tuple(-e for e in reversed(tail)))
    return key


def order_key(order: str, nvars: int) -> OrderKey:
    """Return a sort key for ``order``; larger keys are larger monomials.

    ``order`` is ``"lex"``, ``"grevlex"`` or ``"elim:k"`` (grevlex on the
    first ``k`` variables, ties broken by grevlex on the rest).
    """
    if order == "lex":
        return _lex_key
    if order == "grevlex":
        return _grevlex_key
    if order.startswith("elim:"):
        k = int(order[5:])
        if not 1 <= k <= nvars:
            raise ValueError(f"elimination block {k} out of range for {nvars} variables")
        return _elim_key(k)
    raise ValueError(f"unknown monomial order {order!r}")


# ----------------------------------------------------------------------------
# rings


@dataclass(frozen=True)
class Ring:
    """Polynomial ring over the rationals with variables split into two blocks."""

    x_vars: tuple[str, ...]
    y_vars: tuple[str, ...] = ()
    order: str = "grevlex"

    def __post_init__(self):
        object.__setattr__(self, "x_vars", tuple(self.x_vars))
        object.__setattr__(self, "y_vars", tuple(self.y_vars))
        names = self.x_vars + self.y_vars
        if not names:
            raise ValueError("a ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        for name in names:
            if not _VAR_RE.fullmatch(name):
                raise ValueError(f"invalid variable name {name!r}")
        order_key(self.order, len(names))

    @property
    def variables(self) -> tuple[str, ...]:
        return self.x_vars + self.y_vars

    @property
    def nvars(self) -> int:
        return len(self.x_vars) + len(self.y_vars)

    @cached_property
    def key(self) -> OrderKey:
        return order_key(self.order, self.nvars)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.variables)}

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"unknown variable {name!r}") from None

    def block_indices(self, block: str) -> range:
        if block == "x":
            return range(len(self.x_vars))
        if block == "y":
            return range(len(self.x_vars), self.nvars)
        raise ValueError(f"block must be 'x' or 'y', not {block!r}")

    def block_of(self, name: str) -> str:
        return "x" if self.index(name) < len(self.x_vars) else "y"

    def with_order(self, order: str) -> Ring:
        return Ring(self.x_vars, self.y_vars, order)

    def same_variables(self, other: Ring) -> bool:
        return self.variables == other.variables

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def one(self) -> Polynomial:
        return Polynomial(self, {(0,) * self.nvars: 1})

    def constant(self, c) -> Polynomial:
        return Polynomial(self, {(0,) * self.nvars: c})

    def var(self, name: str) -> Polynomial:
        e = [0] * self.nvars
        e[self.index(name)] = 1
        return Polynomial(self, {tuple(e): 1})

    def monomial(self, exps: Iterable[int], coeff=1) -> Polynomial:
        exps = tuple(exps)
        if len(exps) != self.nvars or any(e < 0 for e in exps):
            raise ValueError(f"bad exponent vector {exps}")
        return Polynomial(self, {exps: coeff})

    def gens(self) -> list[Polynomial]:
        return [self.var(v) for v in self.variables]

    def parse(self, text: str) -> Polynomial:
        return parse_polynomial(self, text)

    def __str__(self):
        return f"QQ[{' '.join(self.x_vars)} | {' '.join(self.y_vars)}] ({self.order})"


# ----------------------------------------------------------------------------
# polynomials


class Polynomial:
    """Immutable sparse polynomial; ``terms`` maps exponent tuples to Fractions."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: Mapping[Monomial, object]):
        self.ring = ring
        clean = {}
        for m, c in terms.items():
            c = c if isinstance(c, Fraction) else Fraction(c)
            if c:
                clean[tuple(m)] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ring: Ring, terms: dict) -> Polynomial:
        # terms already clean: Fraction values, no zeros
        p = object.__new__(cls)
        p.ring = ring
        p.terms = terms
        p._hash = None
        return p

    # -- inspection --------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def support(self) -> set[int]:
        """Indices of variables that occur in some term."""
        return {i for m in self.terms for i, e in enumerate(m) if e}

    def variables(self) -> list[str]:
        names = self.ring.variables
        return [names[i] for i in sorted(self.support())]

    def sorted_terms(self, order: str | None = None) -> list[tuple[Monomial, Fraction]]:
        """Terms in decreasing order under ``order`` (default: the ring's)."""
        key = self.ring.key if order is None else order_key(order, self.ring.nvars)
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading_term(self, order: str | None = None) -> tuple[Monomial, Fraction]:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        key = self.ring.key if order is None else order_key(order, self.ring.nvars)
        m = max(self.terms, key=key)
        return m, self.terms[m]

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self.sorted_terms())

    def __len__(self):
        return len(self.terms)

    # -- arithmetic --------------------------------------------------------
    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if not self.ring.same_variables(other.ring):
                raise RingMismatchError(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m)
            if v is None:
                out[m] = c
            else:
                v += c
                if v:
                    out[m] = v
                else:
                    del out[m]
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return Polynomial._raw(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c) -> Polynomial:
        c = Fraction(c)
        if not c:
            return self.ring.zero()
        return Polynomial._raw(self.ring, {m: v * c for m, v in self.terms.items()})

    def monic(self, order: str | None = None) -> Polynomial:
        if not self.terms:
            return self
        return self.scale(1 / self.leading_term(order)[1])

    def primitive(self) -> Polynomial:
        """Scale to integer coefficients with gcd 1 and positive leading coefficient."""
        if not self.terms:
            return self
        den = 1
        for c in self.terms.values():
            den = den * c.denominator // gcd(den, c.denominator)
        num = 0
        for c in self.terms.values():
            num = gcd(num, c.numerator * (den // c.denominator))
        factor = Fraction(den, num)
        if self.leading_term()[1] < 0:
            factor = -factor
        return self.scale(factor)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring.same_variables(other.ring) and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.variables, frozenset(self.terms.items())))
        return self._hash

    # -- conversions -------------------------------------------------------
    def in_ring(self, ring: Ring) -> Polynomial:
        """Re-embed into a ring that contains all variables occurring here."""
        if ring.variables == self.ring.variables:
            return Polynomial._raw(ring, self.terms)
        names = self.ring.variables
        pos = [ring.index(names[i]) if i in self.support() else None
               for i in range(self.ring.nvars)]
        out = {}
        for m, c in self.terms.items():
            e = [0] * ring.nvars
            for i, k in enumerate(m):
                if k:
                    e[pos[i]] = k
            out[tuple(e)] = c
        return Polynomial._raw(ring, out)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"

    def __str__(self):
        return format_polynomial(self)


def substitute(p: Polynomial, assignment: Mapping[str, Polynomial],
               target: Ring | None = None) -> Polynomial:
    """Replace each variable of ``p`` by its image under ``assignment``.

    Every variable that occurs in ``p`` must be assigned.  Images must all
    live in ``target`` (inferred from the images when omitted).
    """
    names = p.ring.variables
    needed = [names[i] for i in sorted(p.support())]
    missing = [v for v in needed if v not in assignment]
    if missing:
        raise KeyError(f"no image given for {', '.join(missing)}")
    if target is None:
        images = [assignment[v] for v in needed]
        target = images[0].ring if images else p.ring
    for v in needed:
        if not assignment[v].ring.same_variables(target):
            raise RingMismatchError(f"image of {v} is not in {target}")
    powers: dict[tuple[str, int], Polynomial] = {}

    def power(v: str, e: int) -> Polynomial:
        if (v, e) not in powers:
            powers[(v, e)] = assignment[v] ** e
        return powers[(v, e)]

    result = target.zero()
    for m, c in p.terms.items():
        term = target.constant(c)
        for i, e in enumerate(m):
            if e:
                term = term * power(names[i], e)
        result = result + term
    return result


# ----------------------------------------------------------------------------
# text grammar

_VAR_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")
_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<var>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>[-+*^]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN_RE.match(text, pos)
        if not m:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise PolynomialParseError(f"unexpected character {text[col - 1]!r}", col)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind) + 1))
        pos = m.end()
    return tokens


def parse_polynomial(ring: Ring, text: str) -> Polynomial:
    """Parse ``text`` into a polynomial of ``ring``; columns are 1-based."""
    tokens = _tokenize(text)
    end_col = len(text) + 1
    i = 0
    out: dict[Monomial, Fraction] = {}

    def peek():
        return tokens[i] if i < len(tokens) else ("end", "", end_col)

    if not tokens:
        raise PolynomialParseError("empty polynomial", 1)
    first = True
    while True:
        sign = 1
        kind, val, col = peek()
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            i += 1
        elif not first:
            raise PolynomialParseError(f"expected '+' or '-', found {val or 'end'!r}", col)
        first = False
        coeff = Fraction(sign)
        exps = [0] * ring.nvars
        kind, val, col = peek()
        saw_factor = False
        if kind == "num":
            coeff *= Fraction(val)
            i += 1
            saw_factor = True
            kind, val, col = peek()
            if kind == "op" and val == "*":
                i += 1
                kind, val, col = peek()
                if kind != "var":
                    raise PolynomialParseError("expected a variable after '*'", col)
        while kind == "var":
            try:
                idx = ring.index(val)
            except ValueError:
                raise PolynomialParseError(f"unknown variable {val!r}", col) from None
            i += 1
            e = 1
            kind, val, col = peek()
            if kind == "op" and val == "^":
                i += 1
                kind, val, col = peek()
                if kind != "num" or "/" in val:
                    raise PolynomialParseError("expected an integer exponent", col)
                e = int(val)
                i += 1
            exps[idx] += e
            saw_factor = True
            kind, val, col = peek()
            if kind == "op" and val == "*":
                i += 1
                kind, val, col = peek()
                if kind != "var":
                    raise PolynomialParseError("expected a variable after '*'", col)
        if not saw_factor:
            raise PolynomialParseError(f"expected a term, found {val or 'end'!r}", col)
        m = tuple(exps)
        v = out.get(m, 0) + coeff
        if v:
            out[m] = v
        else:
            out.pop(m, None)
        if kind == "end":
            break
    return Polynomial._raw(ring, out)


def format_monomial(ring: Ring, m: Monomial) -> str:
    parts = []
    for name, e in zip(ring.variables, m):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_polynomial(p: Polynomial) -> str:
    if not p.terms:
        return "0"
    out = []
    for idx, (m, c) in enumerate(p.sorted_terms()):
        mono = format_monomial(p.ring, m)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if idx == 0:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(out)
