"""Command-line front end.

Exit status: 0 when every check passes, 2 when a verification fails, 1 on
usage errors (bad flags, unreadable or malformed problem files); nothing
is written to stdout in the last case.
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import Callable

from . import examples as ex
from . import monomial as mono
from . import report as rep
from . import sumdecomp as sd
from .groebner import Ideal, PrimeIdeal, equal
from .lemmas import SUITES, verify_lemmas
from .monomial import MonomialIdeal
from .poly import PolynomialParseError, format_polynomial
from .problem import ProblemFile, ProblemParseError, parse_problem

DEFAULTS = {"n": 1, "nmax": 4, "window": 3, "seed": 0}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _param(args, prob: ProblemFile | None, name: str):
    value = getattr(args, name, None)
    if value is None and prob is not None:
        value = prob.params.get(name)
    if value is None:
        value = DEFAULTS.get(name)
    return value


def _load(path: str) -> ProblemFile:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_problem(text)
    except ProblemParseError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _task(prob: ProblemFile, **extra) -> dict:
    r = prob.ring
    task = {"ring": f"{' '.join(r.x_vars)} | {' '.join(r.y_vars)} order {r.order}",
            "I": rep.ideal_generators(prob.ideal("I")),
            "J": rep.ideal_generators(prob.ideal("J"))}
    task.update({k: v for k, v in extra.items() if v is not None})
    return task


def _monomial_pair(prob: ProblemFile, command: str):
    I, J = prob.ideal("I"), prob.ideal("J")
    if not (isinstance(I, MonomialIdeal) and isinstance(J, MonomialIdeal)):
        raise UsageError(f"{command} needs monomial I and J")
    return I, J


def _tables(prob: ProblemFile, depth: int, window: int):
    out = []
    for name, block in (("I", "x"), ("J", "y")):
        if prob.has_table(name):
            out.append(prob.table(name))
            continue
        M = prob.ideal(name)
        if not isinstance(M, MonomialIdeal):
            raise UsageError(f"{name} is not monomial: declare its decomposition table "
                             f"with 'prime' and 'component' lines")
        if M.is_unit() or M.is_zero():
            raise UsageError(f"{name} must be a proper nonzero ideal")
        out.append(sd.table_from_monomial(M, block, depth, window))
    return out


def _labels(primes) -> list[str]:
    return [rep.prime_text(P) for P in primes]


def _support_labels(ring, supports) -> list[str]:
    return [rep.prime_text(sd._prime_of_support(ring, sorted(s))) for s in supports]


# ----------------------------------------------------------------------------
# commands


def cmd_gb(args) -> dict:
    prob = _load(args.file)
    order = args.order or prob.ring.order
    I, J = prob.ideal("I").to_ideal(), prob.ideal("J").to_ideal()
    regime = "monomial" if all(g.is_monomial() for g in prob.I + prob.J) else "general"
    doc = rep.new_report("gb", _task(prob, order=order), regime)
    fmt = lambda K: [format_polynomial(g) for g in K.groebner_basis(order)]
    doc["results"] = {"I": fmt(I), "J": fmt(J), "I+J": fmt(I + J)}
    return doc


def cmd_decompose(args) -> dict:
    prob = _load(args.file)
    n = _param(args, prob, "n")
    I, J = _monomial_pair(prob, "decompose")
    doc = rep.new_report("decompose", _task(prob, n=n), "monomial")
    results = {}
    for label, M in (("I", I), ("J", J), ("I+J", I + J)):
        comps = mono.primary_decomposition(mono.m_power(M, n))
        results[f"({label})^{n}"] = [
            {"radical": rep.prime_text(sd._prime_of_support(M.ring, sorted(c.support))),
             "generators": rep.ideal_generators(c.component)} for c in comps]
        meet = comps[0].component
        for c in comps[1:]:
            meet = meet & c.component
        doc["checks"].append(rep.check(f"components of ({label})^{n} intersect back",
                                       meet == mono.m_power(M, n)))
    doc["results"] = results
    return doc


def cmd_power_decomp(args) -> dict:
    prob = _load(args.file)
    n = _param(args, prob, "n")
    tA, tB = _tables(prob, n, _param(args, prob, "window"))
    try:
        pd = sd.power_decomposition(tA, tB, n, verify=args.verify)
        failure = None
    except sd.VerificationError as exc:
        pd = sd.power_decomposition(tA, tB, n, verify=False)
        failure = str(exc)
    doc = rep.new_report("power-decomp", _task(prob, n=n, verify=args.verify), pd.regime)
    doc["results"]["components"] = [rep.component_entry(c) for c in pd.components]
    if args.verify:
        doc["checks"].append(rep.check("components intersect to (I+J)^n", failure is None,
                                       failure or ""))
        if failure is None and pd.regime == "monomial":
            doc["results"]["ass"] = {str(n): _labels(pd.associated_primes())}
    if pd.regime == "monomial":
        doc["checks"].append(rep.check("every proper component is primary to its target",
                                       all(c.primary_verified for c in pd.components if not c.unit)))
    return doc


def cmd_ass(args) -> dict:
    prob = _load(args.file)
    n = _param(args, prob, "n")
    bound = _param(args, prob, "witness_bound")
    tA, tB = _tables(prob, n, _param(args, prob, "window"))
    r = sd.ass_report(tA, tB, n, bound)
    doc = rep.new_report("ass", _task(prob, n=n, witness_bound=bound, complete=r.complete), r.regime)
    doc["results"] = {"ass": {str(n): _labels(r.computed_ass)},
                      "upper_bound": {str(n): _labels(r.upper_bound)},
                      "witnesses": {rep.prime_text(P): format_polynomial(r.witnesses[str(P)])
                                    for P in r.computed_ass if str(P) in r.witnesses}}
    doc["checks"].append(rep.check("computed Ass lies in the upper bound", r.contained_in_bound))
    return doc


def cmd_ass_powers(args) -> dict:
    prob = _load(args.file)
    nmax, window = _param(args, prob, "nmax"), _param(args, prob, "window")
    tA, tB = _tables(prob, nmax, window)
    regime = "monomial" if tA.monomial and tB.monomial else "general"
    doc = rep.new_report("ass-powers", _task(prob, nmax=nmax, window=window), regime)
    res = doc["results"]
    res["upper_bound"] = {str(n): _labels(sd.ass_upper_bound(tA, tB, n)) for n in range(1, nmax + 1)}
    if regime == "monomial":
        I, J = tA.base, tB.base
        ring = I.ring
        res["ass_I"] = {str(n): _support_labels(ring, mono.associated_primes(mono.m_power(I, n)))
                        for n in range(1, nmax + 1)}
        res["ass_J"] = {str(n): _support_labels(ring, mono.associated_primes(mono.m_power(J, n)))
                        for n in range(1, nmax + 1)}
        res["ass"] = {str(n): _support_labels(ring, mono.associated_primes(mono.m_power(I + J, n)))
                      for n in range(1, nmax + 1)}
        for n in range(1, nmax + 1):
            inside = set(res["ass"][str(n)]) <= set(res["upper_bound"][str(n)])
            doc["checks"].append(rep.check(f"Ass at n={n} lies in the upper bound", inside))
    stable = sd.ass_stable_set(tA, tB)
    res["stable_set"] = {"primes": _labels(stable.primes), "size": stable.size,
                         "size_I": stable.size_a, "size_J": stable.size_b,
                         "provenance_I": stable.provenance_a, "provenance_J": stable.provenance_b}
    doc["checks"].append(rep.check("stable-set size is the product of sizes",
                                   stable.product_law_holds,
                                   f"{stable.size} = {stable.size_a} x {stable.size_b}"))
    return doc


def cmd_symbolic_power(args) -> dict:
    prob = _load(args.file)
    n = _param(args, prob, "n")
    ring = prob.ring
    Q = None
    if args.prime:
        for table in ("I", "J"):
            for label, gens in prob.primes.get(table, []):
                if label == args.prime:
                    Q = prob.table(table, verify=False).primes[
                        [lab for lab, _ in prob.primes[table]].index(label)]
        if Q is None:
            raise UsageError(f"no prime labelled {args.prime!r}")
    else:
        Q = PrimeIdeal.assumed(prob.ideal("J").to_ideal())
    sat = None
    if args.sat:
        try:
            sat = ring.parse(args.sat)
        except PolynomialParseError as exc:
            raise UsageError(f"--sat: {exc}") from None
    result = sd.symbolic_power(Q, n, sat)
    Qn = Q.ideal ** n
    strict = not equal(result.ideal, Qn)
    doc = rep.new_report("symbolic-power", _task(prob, n=n, prime=rep.prime_text(Q),
                                                 sat=args.sat), "general")
    doc["results"] = {"generators": rep.ideal_generators(result.ideal),
                      "exponent": result.exponent, "strictly_contains_power": strict}
    doc["checks"].append(rep.check("contains the ordinary power", result.ideal.contains_ideal(Qn)))
    return doc


def cmd_persistence(args) -> dict:
    prob = _load(args.file)
    nmax = _param(args, prob, "nmax")
    bound = _param(args, prob, "witness_bound")
    I, J = prob.ideal("I"), prob.ideal("J")
    tables = None
    if not (isinstance(I, MonomialIdeal) and isinstance(J, MonomialIdeal)):
        tables = tuple(_tables(prob, nmax, _param(args, prob, "window")))
    r = sd.persistence_check(I, J, nmax, tables, bound)
    doc = rep.new_report("persistence", _task(prob, nmax=nmax), r.regime)
    doc["results"] = {
        "ass": {str(n): _labels(P) for n, P in r.ass.items()},
        "steps": {str(n): ok for n, ok in r.steps.items()},
        "persistent": r.persistent,
    }
    if r.regime == "monomial":
        doc["results"]["normal_I_up_to_nmax"] = r.normal_i
        doc["results"]["normal_J_up_to_nmax"] = r.normal_j
    return doc


def cmd_verify_lemmas(args) -> dict:
    seed, count = _param(args, None, "seed"), args.count
    report = verify_lemmas(seed, count, args.suite, args.inject_failure)
    doc = rep.new_report("verify-lemmas", {"seed": seed, "count": count,
                                           "inject_failure": args.inject_failure})
    doc["results"] = {"suites": [{"name": s.name, "passed": s.passed, "failed": len(s.failed),
                                  "failing_instances": s.failed} for s in report.suites]}
    for s in report.suites:
        doc["checks"].append(rep.check(s.name, s.ok, f"{s.passed}/{s.total} passed"))
    return doc


def cmd_examples(args) -> dict:
    n = args.n if args.n is not None else ex.SUPPORTED_N[args.name][0]
    try:
        doc = ex.run_example(args.name, n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    doc["golden"] = ex.compare_golden(doc, args.name, n, args.regenerate_golden)
    return rep.finish(doc)


# ----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="idealkit", description=(
        "Primary decompositions and associated primes of powers of I + J "
        "for ideals I, J in disjoint sets of variables."))
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--json", action="store_true", help="emit the JSON report")
        p.add_argument("--timings", action="store_true",
                       help="include wall-clock timings (makes output non-deterministic)")

    def with_file(name: str, func: Callable, help: str, *flags: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("file", help="problem file")
        common(p)
        if "n" in flags:
            p.add_argument("--n", type=int, help="power of I + J (default 1)")
        if "nmax" in flags:
            p.add_argument("--nmax", type=int, help="largest power examined (default 4)")
        if "window" in flags:
            p.add_argument("--window", type=int, help="stabilisation window for computed tables")
        if "witness" in flags:
            p.add_argument("--witness-bound", dest="witness_bound", type=int,
                           help="degree bound for the colon-witness search")
        p.set_defaults(func=func)
        return p

    p = with_file("gb", cmd_gb, "reduced Groebner bases of I, J and I+J")
    p.add_argument("--order", choices=["grevlex", "lex"])
    with_file("decompose", cmd_decompose, "primary decompositions of I^n, J^n, (I+J)^n", "n")
    p = with_file("power-decomp", cmd_power_decomp, "components of (I+J)^n from tables",
                  "n", "window")
    p.add_argument("--verify", action=argparse.BooleanOptionalAction, default=True,
                   help="check the intersection and flag redundant components")
    with_file("ass", cmd_ass, "associated primes of (I+J)^n", "n", "window", "witness")
    with_file("ass-powers", cmd_ass_powers, "associated primes of powers up to nmax",
              "nmax", "window")
    p = with_file("symbolic-power", cmd_symbolic_power, "symbolic power by saturation", "n")
    p.add_argument("--prime", help="label of a declared prime (default: J itself)")
    p.add_argument("--sat", help="saturation element (default: first block variable not in Q)")
    with_file("persistence", cmd_persistence, "whether Ass of consecutive powers ascends",
              "nmax", "window", "witness")

    p = sub.add_parser("verify-lemmas", help="randomised identity suites")
    common(p)
    p.add_argument("--seed", type=int)
    p.add_argument("--count", type=int, default=25)
    p.add_argument("--suite", action="append", choices=SUITES)
    p.add_argument("--inject-failure", action="store_true",
                   help="mutate each identity to check that failures are reported")
    p.set_defaults(func=cmd_verify_lemmas)

    p = sub.add_parser("examples", help="reproduce the worked examples")
    esub = p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    run = esub.add_parser("run")
    run.add_argument("name", choices=ex.EXAMPLES)
    run.add_argument("--n", type=int)
    run.add_argument("--regenerate-golden", action="store_true")
    common(run)
    run.set_defaults(func=cmd_examples)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        for name in ("n", "nmax", "window", "count"):
            value = getattr(args, name, None)
            if value is not None and value < (0 if name == "count" else 1):
                parser.error(f"--{name} must be {'non-negative' if name == 'count' else 'positive'}")
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    start = time.perf_counter()
    try:
        doc = args.func(args)
    except UsageError as exc:
        print(f"idealkit: error: {exc}", file=sys.stderr)
        return 1
    except sd.VerificationError as exc:
        doc = rep.new_report(args.command, {"argv": list(argv) if argv is not None else sys.argv[1:]})
        doc["checks"].append(rep.check("input verification", False, str(exc)))
    except (ValueError, KeyError) as exc:
        print(f"idealkit: error: {exc}", file=sys.stderr)
        return 1
    if "golden" not in doc:
        rep.finish(doc)
    if args.timings:
        doc["timings"] = {"total": round(time.perf_counter() - start, 6)}
    sys.stdout.write(rep.to_json(doc) if args.json else rep.render_text(doc))
    return 0 if doc["verdict"] == "PASS" else 2


if __name__ == "__main__":
    sys.exit(main())
