"""Command-line front end.

Subcommands: verify (main-theorem certificates), tables (mod-2 s/r tables),
funnel (partition and generator systems), unit (group-ring gamma vector of
a word), identities (congruence identity reports).  All JSON output is
deterministic for a fixed seed; timing fields are zeroed unless --timing
is given.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .circular_units import eval_word, parse_word
from .congruence import galois_transport_check, q_power_identities, verify_main_theorem
from .cyclotomic import Level
from .errors import (
    DisagreementError,
    IndexOutOfRange,
    InternalInconsistency,
    LevelTooSmall,
    NotIntegral,
)
from .funnel import generator_system, build_partition
from .group_ring import u_chi1
from .real_basis import r_table_tokens, s_table_tokens
from .version import TOOL_VERSION

DEFAULT_WALK = (4, 5, 6, 7)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad usage; the contract here is 1."""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(message)


def _dump(document, path: str | None) -> None:
    text = json.dumps(document, indent=2)
    if path is None:
        print(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def _level_arg(n: int) -> Level:
    try:
        return Level(n)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None


# ---------------------------------------------------------------------- #
# subcommands


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.n is None:
        ns = list(DEFAULT_WALK)
    else:
        level = _level_arg(args.n)
        if level.n < 4:
            raise _UsageError(f"verification needs n >= 4, got {level.n}")
        if level.n >= 8 and not args.explore:
            raise _UsageError(
                f"n={level.n} is outside the certified range 4..7; pass --explore"
            )
        ns = [level.n]
    certificates = []
    all_trivial = True
    for n in ns:
        cert = verify_main_theorem(Level(n), seed=args.seed)
        certificates.append(cert.to_json_dict(include_timing=args.timing))
        all_trivial = all_trivial and cert.trivial_only
        print(
            f"n={n}: verdict={certificates[-1]['verdict']} "
            f"rank={cert.system.rank} nullity={cert.system.nullity} "
            f"method={cert.method}",
            file=sys.stderr,
        )
    document = certificates[0] if len(certificates) == 1 else certificates
    _dump(document, args.json)
    return 0 if all_trivial else 2


def _cmd_tables(args: argparse.Namespace) -> int:
    level = _level_arg(args.n)
    s_tokens = s_table_tokens(level)
    r_tokens = r_table_tokens(level)
    print(f"s_j mod 2 at 2^{level.n} = {level.order}, j = 0..{len(s_tokens) - 1}:")
    print(" ".join(s_tokens))
    print(f"r_j mod 2 at 2^{level.n} = {level.order}, j = 0..{len(r_tokens) - 1}:")
    print(" ".join(r_tokens))
    if args.json is not None:
        _dump(
            {"n": level.n, "s_table": s_tokens, "r_table": r_tokens},
            args.json,
        )
    return 0


def _labeled_word_dict(lw) -> dict:
    return {
        "label": lw.label,
        "k": lw.k,
        "j": lw.j,
        "exponent": lw.exponent,
        "word": lw.word.to_json_dict(),
        "word_text": lw.word.render(),
    }


def _cmd_funnel(args: argparse.Namespace) -> int:
    level = _level_arg(args.n)
    partition = build_partition(level)
    system = generator_system(level)
    document = {
        "n": level.n,
        "partition": {
            "A": [list(s) for s in partition.A_sets],
            "B": [list(s) for s in partition.B_sets],
        },
        "f_generators": [_labeled_word_dict(lw) for lw in system.f_gens],
        "sqrt_over_f_generators": [
            _labeled_word_dict(lw) for lw in system.sqrt_gens
        ],
    }
    _dump(document, args.json)
    return 0


def _cmd_unit(args: argparse.Namespace) -> int:
    level = _level_arg(args.n)
    try:
        word = parse_word(level, args.word)
    except (ValueError, IndexOutOfRange) as exc:
        raise _UsageError(f"bad word {args.word!r}: {exc}") from None
    beta = eval_word(word)
    try:
        image = u_chi1(beta)
    except NotIntegral as exc:
        _dump(
            {
                "n": level.n,
                "word": word.render(),
                "integral": False,
                "error": "NotIntegral",
                "detail": str(exc),
            },
            args.json,
        )
        return 2
    _dump(
        {
            "n": level.n,
            "word": word.render(),
            "gammas": [str(c) for c in image.coeffs],
        },
        args.json,
    )
    return 0


def _print_check_lines(n: int, checks: Sequence[dict]) -> None:
    for c in checks:
        status = "PASS" if c["passed"] else "FAIL"
        where = f" k={c['k']}" if "k" in c else ""
        print(f"[n={n}] {status} {c['name']}{where}: {c['lhs']} == {c['rhs']}")


def _cmd_identities(args: argparse.Namespace) -> int:
    if args.n is None:
        ns = list(DEFAULT_WALK)
    else:
        level = _level_arg(args.n)
        if level.n < 4:
            raise _UsageError(f"identity reports need n >= 4, got {level.n}")
        ns = [level.n]
    reports = []
    ok = True
    for n in ns:
        level = Level(n)
        power_report = q_power_identities(level)
        _print_check_lines(n, power_report["checks"])
        ok = ok and power_report["all_passed"]
        transport_report = None
        if n >= 5:
            transport_report = galois_transport_check(level)
            for t in transport_report["transports"]:
                status = "PASS" if t["passed"] else "FAIL"
                print(f"[n={n}] {status} transport {t['label']}: {t['value']}")
            ok = ok and transport_report["all_passed"]
        reports.append(
            {"n": n, "q_power": power_report, "transport": transport_report}
        )
    if args.json is not None:
        _dump(reports if len(reports) > 1 else reports[0], args.json)
    return 0 if ok else 2


# ---------------------------------------------------------------------- #
# entry point


def _build_parser() -> _Parser:
    parser = _Parser(prog="circunits", description=__doc__)
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {TOOL_VERSION}"
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("verify", help="verify the main theorem, emit certificates")
    p.add_argument("--n", type=int, default=None, help="single level (default: 4..7)")
    p.add_argument("--json", metavar="PATH", default=None, help="write JSON here")
    p.add_argument("--explore", action="store_true", help="allow n >= 8")
    p.add_argument("--seed", type=int, default=0, help="seed for spot checks")
    p.add_argument(
        "--timing", action="store_true", help="report real elapsed_ms values"
    )
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("tables", help="print the mod-2 s- and r-tables")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", metavar="PATH", default=None)
    p.set_defaults(func=_cmd_tables)

    p = sub.add_parser("funnel", help="print the partition and generator systems")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", metavar="PATH", default=None)
    p.set_defaults(func=_cmd_funnel)

    p = sub.add_parser("unit", help="group-ring gamma vector of a word")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--word", required=True, help="e.g. 'd1^4' or 'a^3 * d1^-2'")
    p.add_argument("--json", metavar="PATH", default=None)
    p.set_defaults(func=_cmd_unit)

    p = sub.add_parser("identities", help="run the congruence identity reports")
    p.add_argument("--n", type=int, default=None, help="single level (default: 4..7)")
    p.add_argument("--json", metavar="PATH", default=None)
    p.set_defaults(func=_cmd_identities)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except LevelTooSmall as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (DisagreementError, InternalInconsistency) as exc:
        print(f"internal disagreement: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
