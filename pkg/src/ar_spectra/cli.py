"""Command-line front end: matrices, spectra, pairing tables, words, claims.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 size cap.
The environment variable AR_SPECTRA_NMAX overrides the default build cap;
an explicit --max-n flag wins over the environment.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .caps import SizeCapError
from .matrices import (
    build_a_recursive,
    build_b_recursive,
    conjugate,
    mobius_matrix,
    permute_conjugate,
    zeta_matrix,
)
from .oracle import CLAIM_FAMILIES, DEFAULT_ORACLE_DIM, run_claims
from .permutation import (
    format_table,
    membership_word,
    pairing_as_permutation,
    pairing_table,
    pairing_table_closed,
    thue_morse_word,
)
from .spectrum import DEFAULT_DIGITS, report_plain, report_structured, spectrum

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_CAP = 3


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ar-spectra",
        description="Exact matrices, conjugated forms, pairing tables, and spectra.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--format",
            choices=("plain", "structured"),
            default="plain",
            help="plain text or a single JSON document",
        )
        p.add_argument("--output", metavar="PATH", help="write to a file instead of stdout")

    p = sub.add_parser("matrix", help="print a matrix of the family")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--which", choices=("A", "B"), default="A")
    p.add_argument(
        "--variant",
        choices=("raw", "conjugated", "blocked", "U", "U-inverse"),
        default="raw",
        help="raw build, its conjugated form, the block-paired form, "
        "or the conjugating matrix itself",
    )
    p.add_argument("--max-n", type=int, help="override the build size cap")
    common(p)

    p = sub.add_parser("spectrum", help="eigenvalue report from the composition formula")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--which", choices=("A", "B"), default="A")
    p.add_argument(
        "--precision", type=int, default=DEFAULT_DIGITS,
        help="significant digits for the decimal approximations",
    )
    common(p)

    p = sub.add_parser("sigma", help="the pairing table over subsets")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("recursive", "closed"), default="recursive")
    p.add_argument(
        "--as-permutation", action="store_true",
        help="print the table as ranks instead of the pair layout",
    )
    p.add_argument("--max-n", type=int, help="override the build size cap")
    common(p)

    p = sub.add_parser("thue-morse", help="parity-sequence words and membership columns")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--word", type=int, metavar="M", help="the M-th doubling word")
    group.add_argument(
        "--sigma-word", action="store_true",
        help="membership column of element --j down the size --n table",
    )
    p.add_argument("--n", type=int)
    p.add_argument("--j", type=int)
    common(p)

    p = sub.add_parser("verify", help="run the claim suite and report outcomes")
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument(
        "--only", metavar="CLAIM",
        help="restrict to one claim id or family, e.g. anti-triangular or support-B",
    )
    p.add_argument("--oracle-cap", type=int, default=DEFAULT_ORACLE_DIM,
                   help="max dimension for brute-force polynomial claims")
    p.add_argument("--max-n", type=int, help="override the build size cap")
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    common(p)

    return parser


def _resolved_max_n(args) -> int | None:
    flag = getattr(args, "max_n", None)
    if flag is not None:
        return flag
    env = os.environ.get("AR_SPECTRA_NMAX")
    if env is None:
        return None
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"AR_SPECTRA_NMAX must be an integer, got {env!r}") from None


def cmd_matrix(args) -> tuple[str, int]:
    max_n = _resolved_max_n(args)
    n = args.n
    build = build_a_recursive if args.which == "A" else build_b_recursive
    if args.variant == "U":
        m = zeta_matrix(n, max_n=max_n)
    elif args.variant == "U-inverse":
        m = mobius_matrix(n, max_n=max_n)
    else:
        m = build(n, max_n=max_n)
        if args.variant in ("conjugated", "blocked"):
            m = conjugate(m, zeta_matrix(n, max_n=max_n), mobius_matrix(n, max_n=max_n))
        if args.variant == "blocked":
            m = permute_conjugate(m, pairing_table(n, max_n=max_n))
    if args.format == "plain":
        return m.to_text(), EXIT_OK
    doc = {
        "command": "matrix",
        "n": n,
        "which": args.which,
        "variant": args.variant,
        "dim": m.dim,
        "rows": m.rows(),
    }
    return json.dumps(doc, indent=2) + "\n", EXIT_OK


def cmd_spectrum(args) -> tuple[str, int]:
    report = spectrum(args.n, args.which, digits=args.precision)
    if args.format == "plain":
        return report_plain(report), EXIT_OK
    return report_structured(report), EXIT_OK


def cmd_sigma(args) -> tuple[str, int]:
    if args.n < 1:
        raise UsageError("sigma needs --n >= 1 (the pair layout is undefined at n=0)")
    max_n = _resolved_max_n(args)
    build = pairing_table if args.method == "recursive" else pairing_table_closed
    table = build(args.n, max_n=max_n)
    if args.format == "plain":
        if args.as_permutation:
            return " ".join(str(p) for p in pairing_as_permutation(table)) + "\n", EXIT_OK
        return format_table(table), EXIT_OK
    doc: dict = {"command": "sigma", "n": args.n, "method": args.method}
    if args.as_permutation:
        doc["permutation"] = list(pairing_as_permutation(table))
    else:
        doc["pairs"] = [
            {
                "index": t + 1,
                "odd": list(table.values[2 * t].elements()),
                "even": list(table.values[2 * t + 1].elements()),
            }
            for t in range(len(table.values) // 2)
        ]
    return json.dumps(doc, indent=2) + "\n", EXIT_OK


def cmd_thue_morse(args) -> tuple[str, int]:
    if args.sigma_word:
        if args.n is None or args.j is None:
            raise UsageError("--sigma-word needs both --n and --j")
        word = membership_word(args.n, args.j)
        params = {"n": args.n, "j": args.j}
    else:
        word = thue_morse_word(args.word)
        params = {"m": args.word}
    if args.format == "plain":
        return word + "\n", EXIT_OK
    doc = {"command": "thue-morse", **params, "word": word}
    return json.dumps(doc, indent=2) + "\n", EXIT_OK


def cmd_verify(args) -> tuple[str, int]:
    if args.n_max < 0:
        raise UsageError("--n-max must be non-negative")
    max_n = _resolved_max_n(args)
    outcomes = run_claims(
        args.n_max,
        only=args.only,
        oracle_dim=args.oracle_cap,
        max_n=max_n,
        inject_fault=args.inject_fault,
    )
    if args.only is not None and not outcomes:
        raise UsageError(
            f"--only {args.only!r} matched no claims; families: "
            + ", ".join(CLAIM_FAMILIES)
        )
    ok = all(o.passed for o in outcomes)
    status = EXIT_OK if ok else EXIT_VERIFY
    if args.format == "plain":
        text = "".join(o.line() + "\n" for o in outcomes)
        return text, status
    doc = {
        "command": "verify",
        "n_max": args.n_max,
        "all_pass": ok,
        "claims": [
            {"claim": o.claim, "n": o.n, "pass": o.passed, "witness": o.witness}
            for o in outcomes
        ],
    }
    return json.dumps(doc, indent=2) + "\n", status


_COMMANDS = {
    "matrix": cmd_matrix,
    "spectrum": cmd_spectrum,
    "sigma": cmd_sigma,
    "thue-morse": cmd_thue_morse,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else EXIT_OK
    try:
        text, status = _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SizeCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    raise SystemExit(main())
