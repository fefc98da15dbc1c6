"""Problem files: a block ring, the ideals I and J, optional decomposition tables.

Grammar, one statement per line (``#`` starts a comment)::

    ring x1 x2 x3 | y1 y2 y3 order grevlex
    I: x1^4, x1^3*x2, x1^2*x2^2*x3, x1*x2^3, x2^4
    J: y1^3 - y2*y3, y2^2 - y1*y3, y3^2 - y1^2*y2
    prime J Q1: y1^3 - y2*y3, y2^2 - y1*y3, y3^2 - y1^2*y2
    prime J Q2: y1, y2, y3
    component J 1 Q1: y1^3 - y2*y3, y2^2 - y1*y3, y3^2 - y1^2*y2
    param n = 1

``prime`` declares a column of the decomposition table of I or J;
``component T m L`` gives the entry of table T for power m and prime L.
Entries that are not given are the unit ideal (write ``1`` to be explicit).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .groebner import Ideal, PrimeIdeal
from .monomial import MonomialIdeal
from .poly import Polynomial, PolynomialParseError, Ring, format_polynomial, parse_polynomial
from . import sumdecomp as sd

ORDERS = ("grevlex", "lex")
PARAMS = ("n", "nmax", "window", "witness_bound", "seed")
_NAME = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")


class ProblemParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class BlockViolationError(ProblemParseError):
    pass


@dataclass
class ProblemFile:
    ring: Ring
    I: list[Polynomial]
    J: list[Polynomial]
    primes: dict[str, list[tuple[str, list[Polynomial]]]] = field(default_factory=dict)
    components: dict[tuple[str, int, str], list[Polynomial]] = field(default_factory=dict)
    params: dict[str, int] = field(default_factory=dict)

    def ideal(self, name: str):
        """I or J as a monomial ideal when every generator is a monomial."""
        gens = self.I if name == "I" else self.J
        return _as_ideal(self.ring, gens)

    def has_table(self, name: str) -> bool:
        return bool(self.primes.get(name))

    def table(self, name: str, verify: bool = True) -> sd.DecompositionTable:
        block = "x" if name == "I" else "y"
        labels = self.primes.get(name)
        if not labels:
            raise ValueError(f"no decomposition table declared for {name}")
        primes = []
        for label, gens in labels:
            if gens and all(_is_variable(g) for g in gens):
                names = [self.ring.variables[next(iter(g.support()))] for g in gens]
                primes.append(PrimeIdeal.from_variables(self.ring, names, name=label))
            else:
                primes.append(PrimeIdeal.assumed(Ideal(self.ring, gens), name=label))
        depth = max([m for (t, m, _) in self.components if t == name], default=0)
        if depth == 0:
            raise ValueError(f"table for {name} has primes but no components")
        rows = []
        for m in range(1, depth + 1):
            rows.append([_as_ideal(self.ring, self.components.get((name, m, label), [self.ring.one()]))
                         for label, _ in labels])
        return sd.table_from_components(block, self.ideal(name), primes, rows, verify=verify)


def _is_variable(p: Polynomial) -> bool:
    if len(p) != 1:
        return False
    (m, c), = p
    return c == 1 and sum(m) == 1


def _as_ideal(ring: Ring, gens: list[Polynomial]):
    if all(g.is_monomial() for g in gens):
        return MonomialIdeal.from_polynomials(ring, gens)
    return Ideal(ring, gens)


def _split_gens(text: str, offset: int) -> list[tuple[str, int]]:
    # comma-separated pieces with the 1-based column where each starts
    out = []
    start = 0
    for i, ch in enumerate(text + ","):
        if ch == ",":
            piece = text[start:i]
            lead = len(piece) - len(piece.lstrip())
            out.append((piece.strip(), offset + start + lead + 1))
            start = i + 1
    return out


def _parse_gens(ring: Ring, text: str, offset: int, lineno: int, block: str | None,
                what: str) -> list[Polynomial]:
    gens = []
    for piece, col in _split_gens(text, offset):
        if not piece:
            raise ProblemParseError(f"empty generator in {what}", lineno, col)
        try:
            p = parse_polynomial(ring, piece)
        except PolynomialParseError as exc:
            raise ProblemParseError(exc.message, lineno, col + exc.column - 1) from None
        if block is not None:
            allowed = set(ring.block_indices(block))
            bad = sorted(p.support() - allowed)
            if bad:
                name = ring.variables[bad[0]]
                where = col + re.search(rf"\b{re.escape(name)}\b", piece).start()
                raise BlockViolationError(
                    f"{what} may only use {block}-block variables, found {name}", lineno, where)
        if not p.is_zero():
            gens.append(p)
    return gens


def parse_problem(text: str) -> ProblemFile:
    ring = None
    ideals: dict[str, list[Polynomial]] = {}
    primes: dict[str, list[tuple[str, list[Polynomial]]]] = {}
    components: dict[tuple[str, int, str], list[Polynomial]] = {}
    params: dict[str, int] = {}
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        indent = len(line) - len(line.lstrip())
        head = line.split()[0]
        if head == "ring":
            if ring is not None:
                raise ProblemParseError("duplicate ring declaration", lineno, indent + 1)
            ring = _parse_ring(line, lineno)
            continue
        if ring is None:
            raise ProblemParseError("the ring must be declared first", lineno, indent + 1)
        colon_at = line.find(":")
        if head == "param":
            m = re.fullmatch(r"\s*param\s+(\w+)\s*=\s*(-?\d+)\s*", line)
            if not m:
                raise ProblemParseError("expected 'param NAME = INTEGER'", lineno, indent + 1)
            if m.group(1) not in PARAMS:
                raise ProblemParseError(f"unknown parameter {m.group(1)!r}", lineno, m.start(1) + 1)
            params[m.group(1)] = int(m.group(2))
            continue
        if colon_at < 0:
            raise ProblemParseError(f"unknown statement {head!r}", lineno, indent + 1)
        words = line[:colon_at].split()
        body, offset = line[colon_at + 1:], colon_at + 1
        if words in (["I"], ["J"]):
            name = words[0]
            if name in ideals:
                raise ProblemParseError(f"{name} declared twice", lineno, indent + 1)
            ideals[name] = _parse_gens(ring, body, offset, lineno, "x" if name == "I" else "y", name)
        elif words and words[0] == "prime":
            if len(words) != 3 or words[1] not in ("I", "J") or not _NAME.fullmatch(words[2]):
                raise ProblemParseError("expected 'prime I|J LABEL: generators'", lineno, indent + 1)
            table, label = words[1], words[2]
            if any(lab == label for lab, _ in primes.get(table, [])):
                raise ProblemParseError(f"prime {label} declared twice", lineno, indent + 1)
            gens = _parse_gens(ring, body, offset, lineno, "x" if table == "I" else "y",
                               f"prime {label}")
            primes.setdefault(table, []).append((label, gens))
        elif words and words[0] == "component":
            if (len(words) != 4 or words[1] not in ("I", "J") or not words[2].isdigit()
                    or int(words[2]) < 1):
                raise ProblemParseError("expected 'component I|J POWER LABEL: generators'",
                                        lineno, indent + 1)
            table, m, label = words[1], int(words[2]), words[3]
            if not any(lab == label for lab, _ in primes.get(table, [])):
                col = line.find(label, line.find(words[2]) + len(words[2])) + 1
                raise ProblemParseError(f"prime {label} of {table} is not declared", lineno, col)
            components[(table, m, label)] = _parse_gens(
                ring, body, offset, lineno, "x" if table == "I" else "y", f"component {label}")
        else:
            raise ProblemParseError(f"unknown statement {head!r}", lineno, indent + 1)
    if ring is None:
        raise ProblemParseError("missing ring declaration", max(last_line, 1), 1)
    for name in ("I", "J"):
        if name not in ideals:
            raise ProblemParseError(f"missing declaration of {name}", max(last_line, 1), 1)
    return ProblemFile(ring, ideals["I"], ideals["J"], primes, components, params)


def _parse_ring(line: str, lineno: int) -> Ring:
    m = re.fullmatch(r"\s*ring\s+(?P<x>[^|]*)\|(?P<y>[^|]*?)(?:\s+order\s+(?P<order>\S+))?\s*", line)
    if not m:
        raise ProblemParseError("expected 'ring X-VARS | Y-VARS [order ORDER]'", lineno, 1)
    xs, ys = m.group("x").split(), m.group("y").split()
    order = m.group("order") or "grevlex"
    if order not in ORDERS:
        raise ProblemParseError(f"unknown order {order!r}", lineno, m.start("order") + 1)
    for group, names in (("x", xs), ("y", ys)):
        for name in names:
            if not _NAME.fullmatch(name):
                raise ProblemParseError(f"invalid variable name {name!r}", lineno,
                                        line.find(name, m.start(group)) + 1)
    if not xs or not ys:
        raise ProblemParseError("both blocks need at least one variable", lineno, 1)
    seen = set()
    for name in xs + ys:
        if name in seen:
            raise ProblemParseError(f"duplicate variable {name!r}", lineno, line.rfind(name) + 1)
        seen.add(name)
    return Ring(tuple(xs), tuple(ys), order)


def _gens_text(gens: list[Polynomial]) -> str:
    return ", ".join(format_polynomial(g) for g in gens) if gens else "0"


def format_problem(p: ProblemFile) -> str:
    r = p.ring
    lines = [f"ring {' '.join(r.x_vars)} | {' '.join(r.y_vars)} order {r.order}",
             f"I: {_gens_text(p.I)}", f"J: {_gens_text(p.J)}"]
    for table in ("I", "J"):
        for label, gens in p.primes.get(table, []):
            lines.append(f"prime {table} {label}: {_gens_text(gens)}")
        for (t, m, label), gens in sorted(p.components.items(), key=lambda kv: (kv[0][1], kv[0][2])):
            if t == table:
                lines.append(f"component {table} {m} {label}: {_gens_text(gens)}")
    for name in PARAMS:
        if name in p.params:
            lines.append(f"param {name} = {p.params[name]}")
    return "\n".join(lines) + "\n"
