"""Command-line front end.

Every subcommand builds a :class:`CommandResult`; ``--json`` prints its
payload as canonical JSON, otherwise the human text is printed. Exit codes:
0 when every requested check agrees, 1 on a domain error or a failed check,
2 on a usage error.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from typing import Callable

from . import __version__
from .brillnoether import (
    BNProblem,
    brill_noether_number,
    castelnuovo_number,
    enumerate_rho_zero,
    to_castelnuovo_params,
    to_schubert_problem,
)
from .errors import CastelnuovoError, SizeExceededError
from .geometry import QQ, canonical_json, conservation_experiment, finite_field_count, load_instance
from .geometry.fourlines import try_solve_four_lines
from .partitions import (
    DEFAULT_TABLEAU_CAP,
    Partition,
    castelnuovo_factorial,
    enumerate_standard_tableaux,
    hook_length_count,
    rectangle,
)
from .schubert import (
    GrassmannianSpec,
    SchubertProblemInstance,
    castelnuovo_schubert_count,
    intersection_number,
    schubert_power,
)

METHODS = ("formula", "schubert", "tableaux")
TABLE_MAX_GENUS = 30


class UsageError(Exception):
    pass


@dataclass
class CommandResult:
    command: str
    status: str = "ok"
    payload: dict = field(default_factory=dict)
    lines: list[str] = field(default_factory=list)
    exit_code: int = 0

    @property
    def human_text(self) -> str:
        return "\n".join(self.lines) + "\n"

    def json_text(self) -> str:
        return canonical_json({"command": self.command, "status": self.status, "result": self.payload})

    def fail(self, message: str, exit_code: int = 1) -> CommandResult:
        self.status = "error"
        self.exit_code = exit_code
        self.payload["error"] = message
        self.lines.append(f"error: {message}")
        return self


def _flag(value: bool) -> str:
    return "true" if value else "false"


def _problem(g: int, r: int, d: int) -> BNProblem:
    try:
        return BNProblem(g, r, d)
    except CastelnuovoError as exc:
        raise UsageError(str(exc)) from exc


def count_by_method(problem: BNProblem, method: str, cap: int = DEFAULT_TABLEAU_CAP) -> int:
    """The number of g^r_d's of a rho = 0 triple, computed along one route."""
    if method == "formula":
        return castelnuovo_number(problem)
    if problem.g == 0 or problem.k == 0:
        castelnuovo_number(problem)
        return 1
    if method == "schubert":
        return intersection_number(to_schubert_problem(problem))
    if method == "tableaux":
        params = to_castelnuovo_params(problem)
        return enumerate_standard_tableaux(rectangle(params.h, params.k), cap)
    raise UsageError(f"unknown method {method!r}")


def _all_methods(problem: BNProblem, cap: int) -> tuple[dict, dict]:
    values, skipped = {}, {}
    for method in METHODS:
        try:
            values[method] = count_by_method(problem, method, cap)
        except SizeExceededError as exc:
            skipped[method] = str(exc)
    return values, skipped


def cmd_rho(args) -> CommandResult:
    problem = _problem(args.g, args.r, args.d)
    rho = brill_noether_number(problem)
    res = CommandResult("rho", payload={
        "g": problem.g, "r": problem.r, "d": problem.d, "rho": rho, "castelnuovo_case": rho == 0,
    })
    res.lines = [f"g={problem.g} r={problem.r} d={problem.d}", f"rho={rho}", f"castelnuovo-case={_flag(rho == 0)}"]
    return res


def cmd_count(args) -> CommandResult:
    problem = _problem(args.g, args.r, args.d)
    res = CommandResult("count", payload={"g": problem.g, "r": problem.r, "d": problem.d, "method": args.method})
    res.lines.append(f"g={problem.g} r={problem.r} d={problem.d}")
    rho = brill_noether_number(problem)
    res.payload["rho"] = rho
    if rho != 0:
        return res.fail(f"rho={rho}, the count is only finite for rho=0")
    if args.method == "all":
        values, skipped = _all_methods(problem, args.cap)
        agree = len(set(values.values())) == 1
        res.payload.update(counts={m: str(v) for m, v in values.items()},
                           skipped=skipped, agree=agree)
        for method in METHODS:
            res.lines.append(f"{method}={values[method]}" if method in values else f"{method}=skipped")
        res.lines.append(f"agree={_flag(agree)}")
        if not agree:
            return res.fail("methods disagree: " + ", ".join(f"{m}={v}" for m, v in values.items()))
        return res
    try:
        value = count_by_method(problem, args.method, args.cap)
    except SizeExceededError as exc:
        return res.fail(str(exc))
    res.payload["counts"] = {args.method: str(value)}
    res.lines.append(f"{args.method}={value}")
    return res


def cmd_degree(args) -> CommandResult:
    h, k = args.h, args.k
    if h < 1 or k < 1:
        raise UsageError(f"need h >= 1 and k >= 1, got h={h}, k={k}")
    formula = castelnuovo_factorial(h, k)
    res = CommandResult("degree", payload={"h": h, "k": k, "formula": str(formula)})
    res.lines = [f"h={h} k={k}", f"formula={formula}"]
    if h < 2:
        res.payload.update(schubert=None, agree=None)
        res.lines.append("schubert=skipped")
        return res
    schubert = castelnuovo_schubert_count(h, k)
    agree = schubert == formula
    res.payload.update(schubert=str(schubert), agree=agree)
    res.lines += [f"schubert={schubert}", f"agree={_flag(agree)}"]
    if not agree:
        return res.fail(f"formula={formula} but schubert={schubert}")
    return res


def cmd_verify_g13(args) -> CommandResult:
    if args.trials < 1:
        raise UsageError(f"--trials must be positive, got {args.trials}")
    if not 0 <= args.seed < 2**64:
        raise UsageError("--seed must fit in an unsigned 64-bit integer")
    expected = castelnuovo_number(BNProblem(4, 1, 3))
    reports = conservation_experiment(args.seed, args.trials)
    res = CommandResult("verify-g13", payload={"seed": args.seed, "trials": args.trials, "expected": str(expected)})
    res.lines.append(f"seed={args.seed} trials={args.trials} expected={expected}")
    bad = []
    for i, rep in enumerate(reports):
        params = " ".join(str(v) for v in rep.parameters)
        if rep.generic:
            ok = rep.count_with_multiplicity == expected and rep.verified
            if not ok:
                bad.append(i)
            where = "rational" if rep.solutions else rep.extension
            res.lines.append(f"trial {i}: params=[{params}] count={rep.count_with_multiplicity} "
                             f"solutions={where} verified={_flag(rep.verified)}")
        else:
            res.lines.append(f"trial {i}: params=[{params}] degenerate ({rep.reason})")
    generic = sum(r.generic for r in reports)
    res.payload.update(reports=[r.to_json() for r in reports], generic=generic, failures=bad)
    res.lines.append(f"generic={generic} degenerate={len(reports) - generic} failures={len(bad)}")
    if bad:
        return res.fail(f"trials {bad} did not give {expected} verified solutions")
    return res


def cmd_table(args) -> CommandResult:
    if not 1 <= args.g_max <= TABLE_MAX_GENUS:
        raise UsageError(f"g_max must be in [1, {TABLE_MAX_GENUS}], got {args.g_max}")
    rows, failed = [], []
    res = CommandResult("table", payload={"g_max": args.g_max})
    res.lines.append("g r d count formula schubert tableaux agree")
    for g in range(1, args.g_max + 1):
        for problem in enumerate_rho_zero(g):
            values, skipped = _all_methods(problem, args.cap)
            agree = len(set(values.values())) == 1
            if not agree:
                failed.append(str(problem))
            count = values["formula"]
            rows.append({"g": problem.g, "r": problem.r, "d": problem.d, "count": str(count),
                         "methods": {m: str(v) for m, v in values.items()},
                         "skipped": sorted(skipped), "agree": agree})
            cells = [str(values[m]) if m in values else "-" for m in METHODS]
            res.lines.append(f"{problem.g} {problem.r} {problem.d} {count} {' '.join(cells)} {_flag(agree)}")
    res.payload["rows"] = rows
    if failed:
        return res.fail("methods disagree for " + ", ".join(failed))
    return res


def cmd_syt(args) -> CommandResult:
    try:
        shape = Partition(args.parts)
    except CastelnuovoError as exc:
        raise UsageError(str(exc)) from exc
    hook = hook_length_count(shape)
    res = CommandResult("syt", payload={"shape": list(shape.parts), "hook_length": str(hook)})
    res.lines = [f"shape={shape}", f"hook_length={hook}"]
    try:
        enumerated = enumerate_standard_tableaux(shape, args.cap)
    except SizeExceededError:
        res.payload.update(enumerated=None, agree=None)
        res.lines.append("enumerated=skipped")
        return res
    agree = enumerated == hook
    res.payload.update(enumerated=str(enumerated), agree=agree)
    res.lines += [f"enumerated={enumerated}", f"agree={_flag(agree)}"]
    if not agree:
        return res.fail(f"hook length {hook} != enumeration {enumerated}")
    return res


def cmd_schubert_power(args) -> CommandResult:
    try:
        grassmannian = GrassmannianSpec(args.a, args.N)
        problem = SchubertProblemInstance(grassmannian, args.c, args.reps)
    except CastelnuovoError as exc:
        raise UsageError(str(exc)) from exc
    power = schubert_power(grassmannian, args.c, args.reps)
    terms = [{"shape": list(s.parts), "coefficient": str(c)} for s, c in power.items()]
    res = CommandResult("schubert-power", payload={"a": args.a, "N": args.N, "c": args.c, "reps": args.reps,
                                                   "terms": terms})
    res.lines.append(f"G({args.a},{args.N}) sigma_{args.c}^{args.reps}")
    res.lines += [f"{c} * s{s}" for s, c in power.items()] or ["0"]
    if problem.is_zero_dimensional:
        value = intersection_number(problem)
        res.payload["intersection_number"] = str(value)
        res.lines.append(f"intersection_number={value}")
    else:
        res.payload["intersection_number"] = None
    return res


def cmd_solve(args) -> CommandResult:
    try:
        instance = load_instance(args.file)
    except (OSError, CastelnuovoError) as exc:
        raise UsageError(str(exc)) from exc
    res = CommandResult("solve", payload={"a": instance.a, "N": instance.N, "field": repr(instance.field),
                                          "conditions": len(instance.conditions)})
    res.lines.append(f"a={instance.a} N={instance.N} field={instance.field!r} conditions={len(instance.conditions)}")
    if instance.a == 2 and instance.N == 4 and len(instance.conditions) == 4:
        report = try_solve_four_lines(list(instance.conditions))
        res.payload["report"] = report.to_json()
        res.lines.append(f"count={'infinite' if report.infinite else report.count_with_multiplicity} "
                         f"discriminant={report.discriminant} rational_solutions={len(report.solutions)} "
                         f"degenerate={_flag(report.degenerate)}")
        for s in report.solutions:
            res.lines.append("solution: " + " | ".join(" ".join(str(v) for v in row) for row in s.basis))
    if instance.field is not QQ:
        try:
            n = finite_field_count(instance.a, instance.N, instance.conditions, instance.field, args.cap_subspaces)
        except CastelnuovoError as exc:
            return res.fail(str(exc))
        res.payload["finite_field_count"] = str(n)
        res.lines.append(f"finite_field_count={n}")
    return res


COMMANDS: dict[str, Callable] = {
    "rho": cmd_rho, "count": cmd_count, "degree": cmd_degree, "verify-g13": cmd_verify_g13,
    "table": cmd_table, "syt": cmd_syt, "schubert-power": cmd_schubert_power, "solve": cmd_solve,
}


def _global_options(parser: argparse.ArgumentParser, suppress: bool):
    def default(value):
        return argparse.SUPPRESS if suppress else value
    parser.add_argument("--json", action="store_true", default=default(False), help="print canonical JSON")
    parser.add_argument("--seed", type=int, default=default(1), help="experiment seed (unsigned 64-bit)")
    parser.add_argument("--trials", type=int, default=default(20), help="number of experiment trials")
    parser.add_argument("--method", choices=(*METHODS, "all"), default=default("formula"),
                        help="counting route for 'count'")
    parser.add_argument("--cap", type=int, default=default(DEFAULT_TABLEAU_CAP),
                        help="largest shape (in cells) enumerated tableau by tableau")
    parser.add_argument("--cap-subspaces", type=int, default=default(10**7),
                        help="largest finite-field enumeration")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="castelnuovo", description=(
        "Count linear series g^r_d with rho = 0 by three routes and check the nodal degeneration exactly."))
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    _global_options(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_options(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rho", parents=[common], help="Brill-Noether number of (g, r, d)")
    for name in ("g", "r", "d"):
        p.add_argument(name, type=int)
    p = sub.add_parser("count", parents=[common], help="number of g^r_d's when rho = 0")
    for name in ("g", "r", "d"):
        p.add_argument(name, type=int)
    p = sub.add_parser("degree", parents=[common], help="(k(h-1)-1)-planes meeting hk lines")
    p.add_argument("h", type=int)
    p.add_argument("k", type=int)
    sub.add_parser("verify-g13", parents=[common], help="count lines meeting four chords of a twisted cubic")
    p = sub.add_parser("table", parents=[common], help="every rho = 0 count up to a genus")
    p.add_argument("g_max", type=int)
    p = sub.add_parser("syt", parents=[common], help="standard Young tableaux of a shape")
    p.add_argument("parts", type=int, nargs="*")
    p = sub.add_parser("schubert-power", parents=[common], help="sigma_c^reps on G(a, N)")
    for name in ("a", "N", "c", "reps"):
        p.add_argument(name, type=int)
    p = sub.add_parser("solve", parents=[common], help="solve an instance file")
    p.add_argument("file")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = COMMANDS[args.command](args)
    except UsageError as exc:
        parser.exit(2, f"{parser.prog} {args.command}: usage error: {exc}\n")
    except CastelnuovoError as exc:
        result = CommandResult(args.command).fail(str(exc))
    sys.stdout.write(result.json_text() if args.json else result.human_text)
    sys.stdout.flush()
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
