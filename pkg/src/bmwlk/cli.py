"""Command-line front end.

Exit codes: 0 when every check passes, 1 when a mathematical check fails,
2 on invalid input (bad flags, bad ``n``, a parameter point failing the
semisimplicity guard, or a pole).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import ParamSpec, PoleAtSpecialization, RatFunc, guard_check
from .exactla import Matrix
from .lkrep import LKRep, build_cij, det_g1_recursion_check, verify_relations
from .report import Report
from .rootsys import InvalidN, PosRoot, enumerate_roots
from .subspace import (
    GuardViolation,
    check_indecomposable,
    check_prop3,
    check_thm4,
    check_thm5,
    cij_rules_check,
    hecke_equivalence_witness,
    membership_checks,
    scan_conjugate,
    scan_main_theorem,
)

EXIT_OK, EXIT_FAIL, EXIT_INVALID = 0, 1, 2

CHECKS = ("thm4", "thm5", "prop3", "prop4", "prop5", "indecomposable", "hecke", "detrec", "cijrules")


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    n: int
    spec: ParamSpec
    conjugated: bool
    output_path: str | None
    format: str
    r_value: Fraction | None = None


# ---------------------------------------------------------------------------
# parameter parsing

_EXP = re.compile(r"^(?:(\d*)n([+-]\d+)?|([+-]?\d+))$")


def _exponent(text: str, n: int) -> int:
    text = text.strip("()")
    mt = _EXP.match(text)
    if not mt:
        raise UsageError(f"cannot read exponent {text!r}")
    if mt.group(3) is not None:
        return int(mt.group(3))
    coeff = int(mt.group(1)) if mt.group(1) else 1
    return coeff * n + int(mt.group(2) or 0)


def parse_l_eq(text: str, n: int) -> tuple[int, int]:
    """Read a symbolic form such as ``-1/r^(n-3)`` as ``l = sign * r^k``."""
    body = text.replace(" ", "")
    sign = 1
    if body.startswith("-"):
        sign, body = -1, body[1:]
    if body == "1":
        return sign, 0
    inverse = body.startswith("1/")
    if inverse:
        body = body[2:]
    if not body.startswith("r"):
        raise UsageError(f"cannot read --l-eq {text!r}")
    rest = body[1:]
    if rest == "":
        k = 1
    elif rest.startswith("^"):
        k = _exponent(rest[1:], n)
    else:
        raise UsageError(f"cannot read --l-eq {text!r}")
    return sign, -k if inverse else k


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"not a rational number: {text!r}") from exc


# commands that take a bare --r (l ranges over a list, or is tied to r)
_R_ONLY = ("scan", "check")


def build_spec(args: argparse.Namespace, n: int) -> ParamSpec:
    l_txt, r_txt, l_eq = getattr(args, "l", None), getattr(args, "r", None), getattr(args, "l_eq", None)
    if l_eq is not None and l_txt is not None:
        raise UsageError("use either --l or --l-eq, not both")
    if l_eq is not None:
        sign, k = parse_l_eq(l_eq, n)
        if r_txt is None:
            return ParamSpec.lsubst(sign, k, guard_n=n)
        r = _rational(r_txt)
        if r == 0:
            raise UsageError("r must be nonzero")
        return ParamSpec.numeric(sign * r**k, r, guard_n=n)
    if l_txt is None and r_txt is None:
        return ParamSpec.generic(guard_n=n)
    if l_txt is None:
        if getattr(args, "command", None) in _R_ONLY:
            return ParamSpec.generic(guard_n=n)
        raise UsageError("numeric parameters need both --l and --r (or --l-eq)")
    if r_txt is None:
        raise UsageError("--l needs --r")
    l, r = _rational(l_txt), _rational(r_txt)
    if l == 0 or r == 0:
        raise UsageError("l and r must be nonzero")
    return ParamSpec.numeric(l, r, guard_n=n)


def _config(args: argparse.Namespace) -> RunConfig:
    n = args.n
    if n < 3:
        raise InvalidN(f"n must be at least 3, got {n}")
    spec = build_spec(args, n)
    r_value = _rational(args.r) if args.r is not None else None
    if r_value == 0:
        raise UsageError("r must be nonzero")
    if not guard_check(spec, n) or (
        r_value is not None and not guard_check(ParamSpec.numeric(1, r_value), n)
    ):
        raise GuardViolation(f"r = {args.r} violates r^(2k) != 1 for k <= {n}")
    conj = bool(getattr(args, "conjugate", False))
    return RunConfig(args.command, n, spec, conj, args.output, args.format, r_value)


# ---------------------------------------------------------------------------
# serialization


def _ratfunc(x) -> RatFunc:
    return x if isinstance(x, RatFunc) else RatFunc(x)


def matrix_to_json(mat: Matrix, n: int, generator: str) -> str:
    obj = {
        "n": n,
        "basis": [b.label() for b in enumerate_roots(n)],
        "generator": generator,
        "entries": [[_ratfunc(x).to_json() for x in row] for row in mat.tolist()],
    }
    return json.dumps(obj, indent=1) + "\n"


def matrix_from_json(text: str) -> tuple[int, str, Matrix]:
    obj = json.loads(text)
    n = int(obj["n"])
    basis = [PosRoot.parse(s) for s in obj["basis"]]
    if tuple(basis) != enumerate_roots(n):
        raise ValueError("basis labels do not match the root order")
    mat = Matrix([[RatFunc.from_json(e) for e in row] for row in obj["entries"]])
    return n, obj["generator"], mat


def _matrix_pretty(mat: Matrix, n: int, generator: str) -> str:
    labels = [b.label() for b in enumerate_roots(n)]
    cells = [[str(x) for x in row] for row in mat.tolist()]
    width = max(len(s) for s in labels + [c for row in cells for c in row])
    head = " " * width + " | " + " ".join(s.rjust(width) for s in labels)
    lines = [f"matrix of {generator}, n={n}", head, "-" * len(head)]
    for lab, row in zip(labels, cells):
        lines.append(lab.rjust(width) + " | " + " ".join(c.rjust(width) for c in row))
    return "\n".join(lines) + "\n"


def _matrix_csv(mat: Matrix, n: int) -> str:
    buf = io.StringIO()
    w = csv.writer(buf)
    labels = [b.label() for b in enumerate_roots(n)]
    w.writerow([""] + labels)
    for lab, row in zip(labels, mat.tolist()):
        w.writerow([lab] + [str(x) for x in row])
    return buf.getvalue()


_SCAN_FIELDS = ("n", "l", "r", "k_dim", "reducible", "predicted", "agree")


def render_report(report: Report, fmt: str) -> str:
    rows = report.info.get("rows")
    if fmt == "json":
        obj = report.to_dict()
        if rows is not None:
            obj["rows"] = rows
            obj["info"].pop("rows", None)
        return json.dumps(obj, indent=1) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        if rows is not None:
            w = csv.DictWriter(buf, fieldnames=_SCAN_FIELDS)
            w.writeheader()
            w.writerows(rows)
        else:
            w = csv.writer(buf)
            w.writerow(["check", "params", "passed", "detail"])
            for c in report.checks:
                params = ";".join(f"{k}={v}" for k, v in c.params.items())
                w.writerow([c.name, params, c.passed, c.detail])
        return buf.getvalue()
    if rows is not None:
        shown = Report(report.title, report.checks, {k: v for k, v in report.info.items() if k != "rows"})
        table = ["  " + "  ".join(f"{f:>10}" for f in _SCAN_FIELDS)]
        table += ["  " + "  ".join(f"{str(r[f]):>10}" for f in _SCAN_FIELDS) for r in rows]
        return shown.format(verbose=False) + "\n" + "\n".join(table) + "\n"
    return report.format() + "\n"


def _emit(text: str, cfg: RunConfig) -> None:
    if cfg.output_path:
        with open(cfg.output_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# commands


def cmd_relations(cfg: RunConfig) -> int:
    report = verify_relations(LKRep(cfg.n, cfg.spec, cfg.conjugated))
    _emit(render_report(report, cfg.format), cfg)
    return EXIT_OK if report.passed else EXIT_FAIL


_GEN = re.compile(r"^(?:([ge])(\d+)|c(\d+),(\d+))$")


def generator_matrix(rep: LKRep, generator: str) -> Matrix:
    mt = _GEN.match(generator.replace(" ", ""))
    if not mt:
        raise UsageError(f"unknown generator {generator!r}; expected g<i>, e<i> or c<i>,<j>")
    if mt.group(1):
        k = int(mt.group(2))
        if not 1 <= k <= rep.n - 1:
            raise UsageError(f"generator index {k} out of range 1..{rep.n - 1}")
        return rep.G(k) if mt.group(1) == "g" else rep.E(k)
    i, j = int(mt.group(3)), int(mt.group(4))
    if not 1 <= i < j <= rep.n:
        raise UsageError(f"c_ij needs 1 <= i < j <= {rep.n}")
    return build_cij(rep, i, j)


def cmd_matrix(cfg: RunConfig, generator: str) -> int:
    rep = LKRep(cfg.n, cfg.spec, cfg.conjugated)
    mat = generator_matrix(rep, generator)
    if cfg.format == "json":
        text = matrix_to_json(mat, cfg.n, generator)
    elif cfg.format == "csv":
        text = _matrix_csv(mat, cfg.n)
    else:
        text = _matrix_pretty(mat, cfg.n, generator)
    _emit(text, cfg)
    return EXIT_OK


def cmd_scan(cfg: RunConfig, extra_l: Sequence[Fraction]) -> int:
    if cfg.r_value is None:
        raise UsageError("scan needs --r")
    if cfg.spec.mode != "generic":
        raise UsageError("scan ranges over l; pass only --r")
    scan = scan_conjugate if cfg.conjugated else scan_main_theorem
    report = scan(cfg.n, cfg.r_value, extra_l)
    _emit(render_report(report, cfg.format), cfg)
    return EXIT_OK if report.passed else EXIT_FAIL


def run_check(cfg: RunConfig, name: str) -> Report:
    n, spec = cfg.n, cfg.spec
    if name == "thm4":
        return check_thm4(n)
    if name == "thm5":
        return check_thm5(n)
    if name == "prop3":
        return check_prop3(cfg.r_value)
    if name == "prop4":
        return membership_checks(n, ("v1",))
    if name == "prop5":
        return membership_checks(n, ("u1",))
    if spec.mode == "generic" and cfg.r_value is not None and name not in ("prop3",):
        raise UsageError(f"{name} takes --r only together with --l or --l-eq")
    if name == "indecomposable":
        if spec.mode == "generic":
            raise UsageError("indecomposable needs a parameter point (--l/--r or --l-eq)")
        return check_indecomposable(n, spec, cfg.conjugated)
    if name == "hecke":
        return hecke_equivalence_witness(n)
    if name == "detrec":
        return det_g1_recursion_check(n, spec)
    if name == "cijrules":
        return cij_rules_check(n, spec)
    raise UsageError(f"unknown check {name!r}; choose from {', '.join(CHECKS)}")


def cmd_check(cfg: RunConfig, name: str) -> int:
    report = run_check(cfg, name)
    _emit(render_report(report, cfg.format), cfg)
    return EXIT_OK if report.passed else EXIT_FAIL


# ---------------------------------------------------------------------------
# entry point


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def make_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--n", type=int, required=True, help="number of strands (>= 3)")
    common.add_argument("--l", help="numeric value of l, e.g. 2 or -1/3")
    common.add_argument("--r", help="numeric value of r")
    common.add_argument("--l-eq", dest="l_eq", help="l as a form in r, e.g. r, -r^3, 1/r^(2n-3)")
    common.add_argument("--conjugate", action="store_true", help="use the conjugate representation (r -> -1/r)")
    common.add_argument("--format", choices=("pretty", "json", "csv"), default="pretty")
    common.add_argument("--output", help="write to this file instead of stdout")

    parser = _Parser(prog="bmwlk", description="Exact computations with the Lawrence-Krammer representation of the BMW algebra.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("relations", parents=[common], help="verify every BMW relation on the matrices")
    p = sub.add_parser("matrix", parents=[common], help="print the matrix of g<i>, e<i> or c<i>,<j>")
    p.add_argument("--gen", required=True)
    p = sub.add_parser("scan", parents=[common], help="reducibility scan over the exceptional values of l")
    p.add_argument("--extra-l", dest="extra_l", default="", help="comma-separated extra values of l")
    p = sub.add_parser("check", parents=[common], help="run a named verification suite")
    p.add_argument("name", help=", ".join(CHECKS))
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    try:
        cfg = _config(args)
        if args.command == "relations":
            return cmd_relations(cfg)
        if args.command == "matrix":
            return cmd_matrix(cfg, args.gen)
        if args.command == "scan":
            extra = [_rational(x) for x in args.extra_l.split(",") if x.strip()]
            return cmd_scan(cfg, extra)
        return cmd_check(cfg, args.name)
    except (UsageError, InvalidN, GuardViolation, PoleAtSpecialization, ZeroDivisionError) as exc:
        print(f"bmwlk: error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
