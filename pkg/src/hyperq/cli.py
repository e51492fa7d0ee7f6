"""Command-line entry point.

Exit codes: 0 when the checked property holds, 1 when it fails on valid
input, 2 on usage or input errors.  Every command ends its report with a
``RESULT:`` line of space-separated ``key=value`` pairs.
"""

import argparse
import sys
from dataclasses import dataclass
from typing import List, Optional

from .errors import ConstraintViolated, HyperqError, IllDefinedProduct, NotALatinSquare
from .families import random_hyperquasigroup
from .fundamental import check_if_subquasigroup, fundamental_quasigroup, pushforward
from .grades import grade_parse
from .hyperstructures import check_axioms, enumerate_subs, format_subset, is_sub_hyperquasigroup
from .ifs import ifs_validate
from .ifsh import LevelChain, build_from_chain, check_ifsh, check_ifsh_via_cuts, level_cuts
from .relations import IfshFamily, classify, describe_partition, verify_equipotence
from .textio import parse_hqg, parse_ifs, serialize_hqg, serialize_ifs, serialize_quasigroup


@dataclass
class CommandOutcome:
    exit_code: int
    report: str


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")

    def exit(self, status=0, message=None):
        # --help lands here; surface the text instead of exiting the process
        raise UsageError(message or self.format_help())


def _flag(value: bool) -> str:
    return "true" if value else "false"


def _result(**fields) -> str:
    return "RESULT: " + " ".join(f"{k}={v}" for k, v in fields.items())


def _limit(args):
    return getattr(args, "limit", None)


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_hqg(path):
    return parse_hqg(_read(path))


def _load_ifs(path):
    mu, lam = parse_ifs(_read(path))
    return ifs_validate(mu, lam)


def _subset(text: str) -> List[int]:
    try:
        values = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        values = [-1]
    if any(v < 0 for v in values):
        raise UsageError(f"bad subset {text!r}; expected comma-separated indices")
    return values


def cmd_check(args):
    h = _load_hqg(args.hqg)
    r = check_axioms(h)
    lines = [
        f"order: {h.order}",
        f"hypergroupoid: {_flag(r.is_hypergroupoid)}",
        f"hyperquasigroup: {_flag(r.is_hyperquasigroup)}",
        f"hypergroup: {_flag(r.is_hypergroup)}",
        f"regular: {_flag(r.is_regular)}",
    ]
    for name, w in r.witnesses.items():
        lines.append(f"{name} fails at {w}")
    lines.append(_result(
        command="check", hypergroupoid=_flag(r.is_hypergroupoid),
        hyperquasigroup=_flag(r.is_hyperquasigroup), hypergroup=_flag(r.is_hypergroup),
        regular=_flag(r.is_regular),
    ))
    return CommandOutcome(0 if r.is_hyperquasigroup else 1, "\n".join(lines))


def cmd_subs(args):
    h = _load_hqg(args.hqg)
    subs = enumerate_subs(h, _limit(args))
    lines = [format_subset(k) for k in subs]
    lines.append(_result(command="subs", count=len(subs)))
    return CommandOutcome(0, "\n".join(lines))


def cmd_ifsh_check(args):
    h = _load_hqg(args.hqg)
    a = _load_ifs(args.ifs)
    verdicts = {}
    if args.method in ("direct", "both"):
        verdicts["direct"] = check_ifsh(h, a, shared_witness=args.shared_witness)
    if args.method in ("cuts", "both"):
        verdicts["cuts"] = check_ifsh_via_cuts(h, a)
    lines = []
    for method, v in verdicts.items():
        status = "holds" if v.holds else f"fails: {v.detail}"
        lines.append(f"{method}: {status}")
        lines.extend(f"note: {n}" for n in v.notes)
    outcomes = {v.holds for v in verdicts.values()}
    if len(outcomes) > 1:
        lines.append("warning: methods disagree")
    holds = all(v.holds for v in verdicts.values())
    first = next((v for v in verdicts.values() if not v.holds), None)
    fields = dict(command="ifsh-check", method=args.method, holds=_flag(holds))
    if first is not None:
        fields["condition"] = first.condition
        fields["witness"] = ",".join(map(str, first.witness))
    lines.append(_result(**fields))
    return CommandOutcome(0 if holds else 1, "\n".join(lines))


def cmd_cuts(args):
    h = _load_hqg(args.hqg)
    a = _load_ifs(args.ifs)
    lines = []
    ok = True
    for t, upper, lower in level_cuts(a):
        parts = []
        for name, cut in (("U", upper), ("L", lower)):
            if cut:
                sub = is_sub_hyperquasigroup(h, cut)
                ok &= sub.holds
                tag = "sub" if sub else "NOT sub"
            else:
                tag = "empty"
            parts.append(f"{name}={format_subset(cut)} ({tag})")
        lines.append(f"t={t}: " + "  ".join(parts))
    lines.append(_result(command="cuts", holds=_flag(ok)))
    return CommandOutcome(0 if ok else 1, "\n".join(lines))


def cmd_chain(args):
    h = _load_hqg(args.hqg)
    levels = []
    for level in args.level:
        t, sep, subset = level.partition(":")
        if not sep:
            raise UsageError(f"bad --level {level!r}; expected <grade>:<subset>")
        levels.append((grade_parse(t), h.subset_mask(_subset(subset))))
    chain = LevelChain.from_levels(levels)
    try:
        a = build_from_chain(h, chain)
    except ConstraintViolated as exc:
        return CommandOutcome(1, f"{exc}\n" + _result(command="chain", valid="false", element=exc.element))
    verdict = check_ifsh(h, a)
    return CommandOutcome(
        0, serialize_ifs(a) + "\n" + _result(command="chain", valid="true", ifsh=_flag(verdict.holds))
    )


def cmd_classify(args):
    h = _load_hqg(args.hqg)
    family = IfshFamily(h, [_load_ifs(p) for p in args.ifs])
    alpha = grade_parse(args.alpha)
    part = classify(family, alpha, args.rel)
    lines = describe_partition(part)
    lines.append(_result(command="classify", rel=args.rel, alpha=alpha, classes=len(part)))
    return CommandOutcome(0, "\n".join(lines))


def cmd_equipotence(args):
    h = _load_hqg(args.hqg)
    report = verify_equipotence(h, grade_parse(args.alpha), _limit(args))
    lines = list(report.lines())
    lines.append(_result(command="equipotence", alpha=report.alpha, subs=report.subs,
                         passed=_flag(report.passed)))
    return CommandOutcome(0 if report.passed else 1, "\n".join(lines))


def _quotient_failure(command, exc):
    return CommandOutcome(1, f"{exc}\n" + _result(command=command, quasigroup="false"))


def cmd_fundamental(args):
    h = _load_hqg(args.hqg)
    try:
        result = fundamental_quasigroup(h)
    except (IllDefinedProduct, NotALatinSquare) as exc:
        return _quotient_failure("fundamental", exc)
    lines = [f"regular: {_flag(result.is_regular)}"]
    for c, members in enumerate(result.partition.classes):
        lines.append(f"class {c}: {{{','.join(map(str, members))}}}")
    lines.append(serialize_quasigroup(result.quasigroup))
    lines.append(_result(command="fundamental", classes=len(result.partition),
                         regular=_flag(result.is_regular)))
    return CommandOutcome(0, "\n".join(lines))


def cmd_pushforward(args):
    h = _load_hqg(args.hqg)
    a = _load_ifs(args.ifs)
    try:
        result, pushed = pushforward(h, a)
    except (IllDefinedProduct, NotALatinSquare) as exc:
        return _quotient_failure("pushforward", exc)
    verdict = check_if_subquasigroup(result.quasigroup, pushed)
    lines = [
        f"regular: {_flag(result.is_regular)}",
        f"source ifsh: {_flag(check_ifsh(h, a).holds)}",
        "note: lambda is pushed forward by the classwise minimum",
        serialize_ifs(pushed),
        "subquasigroup: " + ("holds" if verdict else f"fails: {verdict.detail}"),
        _result(command="pushforward", classes=len(result.partition), holds=_flag(verdict.holds)),
    ]
    return CommandOutcome(0 if verdict else 1, "\n".join(lines))


def cmd_random(args):
    if args.order < 1:
        raise UsageError("--order must be at least 1")
    h, attempts = random_hyperquasigroup(args.order, seed=args.seed, regular=args.regular)
    header = f"# random order={args.order} seed={args.seed} regular={_flag(args.regular)} attempts={attempts}"
    return CommandOutcome(0, header + "\n" + serialize_hqg(h))


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--limit", type=int, default=argparse.SUPPRESS,
                        help="enumeration order cap (default $HYPERQ_LIMIT or 12)")
    parser = _Parser(prog="hyperq", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", parents=[common], help="decide the hypergroupoid axioms")
    p.add_argument("hqg")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("subs", parents=[common], help="list all sub-hyperquasigroups")
    p.add_argument("hqg")
    p.set_defaults(func=cmd_subs)

    p = sub.add_parser("ifsh-check", parents=[common], help="decide whether an IF set is an IFSH")
    p.add_argument("hqg")
    p.add_argument("ifs")
    p.add_argument("--method", choices=("direct", "cuts", "both"), default="direct")
    p.add_argument("--shared-witness", action="store_true",
                   help="require one (y, z) pair to witness conditions 2 and 4 together")
    p.set_defaults(func=cmd_ifsh_check)

    p = sub.add_parser("cuts", parents=[common], help="show level cuts at every critical threshold")
    p.add_argument("hqg")
    p.add_argument("ifs")
    p.set_defaults(func=cmd_cuts)

    p = sub.add_parser("chain", parents=[common], help="build an IF set from a chain of subsets")
    p.add_argument("hqg")
    p.add_argument("--level", action="append", required=True, metavar="GRADE:SUBSET")
    p.set_defaults(func=cmd_chain)

    p = sub.add_parser("classify", parents=[common], help="partition IFSHs by a level relation")
    p.add_argument("hqg")
    p.add_argument("ifs", nargs="+")
    p.add_argument("--alpha", required=True)
    p.add_argument("--rel", choices=("U", "L", "R"), required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("equipotence", parents=[common], help="check the quotient cardinalities")
    p.add_argument("hqg")
    p.add_argument("--alpha", required=True)
    p.set_defaults(func=cmd_equipotence)

    p = sub.add_parser("fundamental", parents=[common], help="beta* classes and the quotient quasigroup")
    p.add_argument("hqg")
    p.set_defaults(func=cmd_fundamental)

    p = sub.add_parser("pushforward", parents=[common], help="push an IF set onto the fundamental quasigroup")
    p.add_argument("hqg")
    p.add_argument("ifs")
    p.set_defaults(func=cmd_pushforward)

    p = sub.add_parser("random", parents=[common], help="seeded random hyperquasigroup in HQG format")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--regular", action="store_true")
    p.set_defaults(func=cmd_random)
    return parser


def run(argv: Optional[List[str]] = None) -> CommandOutcome:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        return CommandOutcome(2, str(exc).rstrip("\n"))
    except (HyperqError, OSError) as exc:
        return CommandOutcome(2, f"error: {exc}\n" + _result(error=type(exc).__name__))


def main(argv: Optional[List[str]] = None) -> int:
    outcome = run(argv)
    stream = sys.stdout if outcome.exit_code in (0, 1) else sys.stderr
    print(outcome.report, file=stream)
    return outcome.exit_code


if __name__ == "__main__":
    sys.exit(main())
