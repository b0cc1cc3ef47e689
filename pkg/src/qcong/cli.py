"""Command line interface: ``qcong expand | oracle | check-identity | verify | primes``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .dissection import IDENTITY_IDS, verify_identity, verify_p_dissection
from .errors import QCongError, ResourceError
from .oracle import RegularDistinctSpec, count_distinct_regular
from .qproducts import grs_generating
from .reports import FAIL, PASS, SKIPPED, VerificationReport
from .series import ZZ, IntegersMod
from .theorems import PROOF_STEP_IDS, THEOREM_IDS, qualifying_primes, verify_all, verify_proof_step
from .theorems.engine import resolve_budget, summarize
from .theorems.registry import PRIME_CONDITIONS

EXIT_OK = 0
EXIT_FAIL = 2
EXIT_USAGE = 64
EXIT_INTERNAL = 70

DEFAULT_EXPAND_N = 20
DEFAULT_IDENTITY_ORDER = 500
DEFAULT_PRIME_LIMIT = 50


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {value}")
    return value


def _natural(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0: {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qcong", description="q-series expansion and bounded congruence verification")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("expand", help="list a_{r,s}(n) from the product formula")
    p.add_argument("r", type=_positive)
    p.add_argument("s", type=_positive)
    p.add_argument("n_max", type=_natural, nargs="?", help=f"last index (default {DEFAULT_EXPAND_N})")
    p.add_argument("-N", "--order", type=_positive, help="number of coefficients (overrides n_max)")
    p.add_argument("--modulus", type=_positive, help="reduce coefficients mod M")
    p.add_argument("--budget", type=_positive)

    p = sub.add_parser("oracle", help="compare the series with direct partition counting")
    p.add_argument("r", type=_positive)
    p.add_argument("s", type=_positive)
    p.add_argument("n_max", type=_natural)

    p = sub.add_parser("check-identity", help="check a named identity to a given order")
    p.add_argument("id", help=f"one of {', '.join(IDENTITY_IDS)}, u10-<p>, or a proof step id")
    p.add_argument("order", type=_positive, nargs="?")
    p.add_argument("-N", "--order", dest="order_flag", type=_positive)

    p = sub.add_parser("verify", help="verify a theorem's registered claims")
    p.add_argument("theorem", help=f"'all' or one of {', '.join(THEOREM_IDS)}")
    p.add_argument("--profile", choices=("quick", "full"), default="quick")
    p.add_argument("--n-max", type=_natural)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", metavar="PATH")
    p.add_argument("--budget", type=_positive)

    p = sub.add_parser("primes", help="primes meeting a theorem's Legendre hypothesis")
    p.add_argument("family", nargs="?", help=f"one of {', '.join(PRIME_CONDITIONS)} (default: all)")
    p.add_argument("--limit", type=_positive, default=DEFAULT_PRIME_LIMIT)
    return parser


def _write(text: str, path: str | None = None):
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- commands -------------------------------------------------------------

def cmd_expand(args) -> int:
    order = args.order or (DEFAULT_EXPAND_N if args.n_max is None else args.n_max) + 1
    if args.order and args.n_max is not None and args.n_max + 1 != args.order:
        raise UsageError("give either n_max or --order, not both")
    if order > resolve_budget(args.budget, "full"):
        raise ResourceError(f"order {order} exceeds the budget")
    ring = ZZ if args.modulus is None else IntegersMod(args.modulus)
    series = grs_generating(args.r, args.s, order, ring)
    _write("".join(f"{n}\t{c}\n" for n, c in enumerate(series.tolist())))
    return EXIT_OK


def cmd_oracle(args) -> int:
    spec = RegularDistinctSpec(args.r, args.s)
    counts = count_distinct_regular(spec, args.n_max).values
    series = grs_generating(args.r, args.s, args.n_max + 1).tolist()
    lines = []
    bad = 0
    for n, (a, b) in enumerate(zip(series, counts)):
        ok = a == b
        bad += not ok
        lines.append(f"{n}\t{a}\t{b}\t{'OK' if ok else 'MISMATCH'}\n")
    _write("".join(lines))
    return EXIT_FAIL if bad else EXIT_OK


def _identity_report(identity: str, order: int | None) -> VerificationReport:
    if identity in IDENTITY_IDS:
        return verify_identity(identity, order or DEFAULT_IDENTITY_ORDER)
    if identity.startswith("u10-"):
        try:
            p = int(identity[4:])
        except ValueError:
            raise UsageError(f"bad prime in {identity!r}") from None
        return verify_p_dissection(p, order or p * p + 50)
    if identity in PROOF_STEP_IDS:
        return verify_proof_step(identity, order or 300)
    raise UsageError(f"unknown identity {identity!r}; known: {', '.join(IDENTITY_IDS)}, "
                     f"u10-<p>, {', '.join(PROOF_STEP_IDS)}")


def cmd_check_identity(args) -> int:
    if args.order and args.order_flag and args.order != args.order_flag:
        raise UsageError("conflicting orders")
    report = _identity_report(args.id, args.order or args.order_flag)
    lines = [f"{report.outcome}\t{args.id}\torder={report.order}\t{report.claim}\n"]
    for ce in report.counterexamples:
        if "exponent" in ce:
            lines.append(f"first difference at q^{ce['exponent']}\tlhs={ce['lhs']}\trhs={ce['rhs']}\n")
        else:
            lines.append("\t".join(f"{k}={v}" for k, v in ce.items()) + "\n")
    _write("".join(lines))
    return EXIT_OK if report.passed else EXIT_FAIL


def _params_text(params: dict) -> str:
    return ",".join(f"{k}={v}" for k, v in params.items()) or "-"


def format_text(reports: list[VerificationReport]) -> str:
    lines = ["outcome\tfamily\tparams\tn_checked\torder\tclaim\n"]
    for r in reports:
        lines.append(f"{r.outcome}\t{r.family}\t{_params_text(r.params)}\t{r.n_checked}\t{r.order}\t{r.claim}\n")
        if r.outcome == SKIPPED:
            lines.append(f"\treason: {r.reason}\n")
        for ce in r.counterexamples:
            lines.append("\t" + "\t".join(f"{k}={v}" for k, v in ce.items()) + "\n")
    c = summarize(reports)
    lines.append(f"total {len(reports)}: {c[PASS]} PASS, {c[FAIL]} FAIL, {c[SKIPPED]} SKIPPED\n")
    return "".join(lines)


def format_json(reports: list[VerificationReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True) + "\n"


def cmd_verify(args) -> int:
    theorem = args.theorem
    if theorem != "all" and theorem not in THEOREM_IDS:
        raise UsageError(f"unknown theorem {theorem!r}; known: all, {', '.join(THEOREM_IDS)}")
    budget = resolve_budget(args.budget, args.profile)
    reports = verify_all(args.profile, theorem=theorem, n_max=args.n_max, budget=budget)
    text = format_json(reports) if args.format == "json" else format_text(reports)
    _write(text, args.out)
    return EXIT_FAIL if any(r.outcome == FAIL for r in reports) else EXIT_OK


def cmd_primes(args) -> int:
    if args.limit < 7:
        raise UsageError("--limit must be >= 7")
    families = [args.family] if args.family else list(PRIME_CONDITIONS)
    lines = []
    for fam in families:
        try:
            primes = qualifying_primes(fam, args.limit)
        except KeyError:
            raise UsageError(f"unknown family {fam!r}") from None
        lines.append(f"{fam}\t{' '.join(map(str, primes))}\n")
    _write("".join(lines))
    return EXIT_OK


COMMANDS = {
    "expand": cmd_expand,
    "oracle": cmd_oracle,
    "check-identity": cmd_check_identity,
    "verify": cmd_verify,
    "primes": cmd_primes,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except ResourceError as exc:
        print(f"qcong: resource limit: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except QCongError as exc:
        # Invalid mathematical input such as non-coprime (r, s).
        print(f"qcong: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001 - last-resort exit code
        print(f"qcong: internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
