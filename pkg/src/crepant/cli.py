"""Command-line front end.

Exit codes: 0 success, 1 verification failures, 2 usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass, field

from .gradedring import GradedClass
from .hodge import hodge_cy3
from .models import euler_polynomial, expand_reference, filter_models, get_model, verify_against_paper

FORMATS = ("text", "json", "latex")


@dataclass
class OutputRecord:
    model: str
    operation: str
    parameters: dict = field(default_factory=dict)
    result: str = ""
    provenance: str = "computed"

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> OutputRecord:
        return cls(**json.loads(text))


class UsageError(Exception):
    pass


def _model(key: str):
    try:
        return get_model(key)
    except KeyError:
        raise UsageError(f"unknown model {key!r}; run 'crepant list' for the catalog") from None


def _render(cls: GradedClass, fmt: str) -> str:
    return cls.to_latex() if fmt == "latex" else cls.to_text()


def _emit(record: OutputRecord, fmt: str, out) -> None:
    if fmt == "json":
        print(record.to_json(), file=out)
    else:
        print(record.result, file=out)


def cmd_list(args, out) -> int:
    models = filter_models(args.pattern)
    if args.format == "json":
        print(json.dumps([
            {"model": m.key, "group": m.group, "algebra": m.algebra, "rank": m.rank,
             "kodaira_fibers": list(m.kodaira_fibers), "steps": len(m.steps)}
            for m in models
        ], sort_keys=True), file=out)
        return 0
    for m in models:
        fibers = ",".join(m.kodaira_fibers)
        print(f"{m.key:<18} {m.group:<9} {m.algebra:<3} fibers={fibers:<24} steps={len(m.steps)}", file=out)
    return 0


def cmd_chi(args, out) -> int:
    model = _model(args.model)
    if args.dim < 1:
        raise UsageError("--dim must be at least 1")
    cls = euler_polynomial(model, args.dim, args.cy)
    record = OutputRecord(model.key, "chi", {"base_dim": args.dim, "cy": args.cy}, _render(cls, args.format))
    _emit(record, args.format, out)
    return 0


def cmd_genfun(args, out) -> int:
    model = _model(args.model)
    if args.order < 1:
        raise UsageError("--order must be at least 1")
    try:
        cls = expand_reference(model, args.order)
    except LookupError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        params = {"order": args.order}
        _emit(OutputRecord(model.key, "genfun", params, cls.to_text(), "fixture"), "json", out)
        return 0
    for w in range(1, args.order + 1):
        print(f"[{w}] {_render(cls.component(w), args.format)}", file=out)
    return 0


def cmd_hodge(args, out) -> int:
    model = _model(args.model)
    pair = hodge_cy3(model)
    if args.format == "latex":
        text = f"{pair.h11.to_latex()} & {pair.h21.to_latex()} & {pair.chi.to_latex()}"
    else:
        text = pair.to_text()
    _emit(OutputRecord(model.key, "hodge", {}, text), args.format, out)
    return 0


def cmd_verify(args, out) -> int:
    try:
        report = verify_against_paper(args.scope, args.order)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        records = [
            asdict(OutputRecord(c.model, "verify",
                                {"table": c.table, "row": c.row, "passed": c.passed, "expected": c.expected},
                                c.computed))
            for c in report.checks
        ]
        print(json.dumps(records, sort_keys=True), file=out)
    else:
        for c in report.checks:
            status = "PASS" if c.passed else "FAIL"
            print(f"{status} {c.table:<13} {c.model:<18} {c.row}", file=out)
            if not c.passed:
                print(f"     expected: {c.expected}\n     computed: {c.computed}", file=out)
        print(f"{len(report)} checks, {len(report.failures)} failures", file=out)
    return 1 if report.failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crepant",
        description="Euler characteristics and Hodge numbers of crepant resolutions of Weierstrass models.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("list", help="list cataloged models")
    p.add_argument("pattern", nargs="?", help="shell-style filter on model keys, e.g. 'E*'")
    fmt(p)
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("chi", help="Euler characteristic over a base of given dimension")
    p.add_argument("--model", required=True)
    p.add_argument("--dim", type=int, required=True, help="dimension of the base")
    p.add_argument("--cy", action="store_true", help="impose the Calabi-Yau condition L = c1")
    fmt(p)
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("genfun", help="expand the closed-form generating function")
    p.add_argument("--model", required=True)
    p.add_argument("--order", type=int, default=4)
    fmt(p)
    p.set_defaults(func=cmd_genfun)

    p = sub.add_parser("hodge", help="Hodge numbers of the Calabi-Yau threefold model")
    p.add_argument("--model", required=True)
    fmt(p)
    p.set_defaults(func=cmd_hodge)

    p = sub.add_parser("verify", help="compare against the stored reference tables")
    p.add_argument("--scope", default="all")
    p.add_argument("--order", type=int, default=5, help="series order for generating-function checks")
    fmt(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"crepant: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
