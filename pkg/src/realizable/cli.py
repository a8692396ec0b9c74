"""Command-line front end.

Subcommands compose through b-files on stdin/stdout, so pipelines like
``realizable gen fiblike 1 --terms 900 | realizable sample --monomial 2 |
realizable scale --mult 5 | realizable check`` work termwise-exactly.

Exit codes, everywhere: 0 = consistent / pass, 1 = counterexample found,
2 = usage or data error.  A clean verdict always means "consistent up to
the horizon": these are necessary-condition checks that can refute
realizability but never prove it.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Sequence as ArgSeq

from . import seqio
from .construct import (
    DEFAULT_POINT_CAP,
    InconsistentPrefixError,
    explicit_permutation,
    realize_cycle_type,
)
from .local import check_everywhere_local, check_local, support_primes
from .realizability import check_realizable, orbit_counts
from .sequences import (
    LinearRecurrence,
    Seq,
    euler_abs_sequence,
    fibonacci_like,
    irregular_primes,
    linear_recurrence_terms,
    stirling_row_sequence,
    tau_beta_sequences,
)
from .transforms import (
    ExplicitTable,
    IntPolynomial,
    Monomial,
    minimal_multiplier,
    required_source_length,
    sample,
    scale,
    term_power,
    time_change_value,
)

__all__ = ["main", "run", "build_parser"]

ENV_POINT_CAP = "REALIZE_POINT_CAP"


# ---------------------------------------------------------------- helpers


def _read_input(path: str) -> Seq:
    if path == "-":
        return seqio.parse_bfile(sys.stdin.read())
    with open(path, "r", encoding="ascii") as fh:
        return seqio.parse_bfile(fh.read())


def _write_output(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="ascii") as fh:
            fh.write(text)


def _horizon(a: Seq, terms: int | None) -> int:
    if terms is None:
        return len(a)
    if terms < 1:
        raise ValueError("--terms must be >= 1")
    return terms


def _csv_ints(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(f) for f in text.split(","))
    except ValueError:
        raise ValueError(f"{what} must be a comma-separated list of integers") from None


def _describe_failure(first_failure: tuple[int, str] | None) -> str:
    if first_failure is None:
        return ""
    n, condition = first_failure
    names = {"D": "(D)", "S": "(S)", "both": "(D) and (S)"}
    return f"fails {names[condition]} at n={n}"


# ------------------------------------------------------------ subcommands


def _cmd_gen(args: argparse.Namespace) -> int:
    N = args.terms
    if N < 1:
        raise ValueError("--terms must be >= 1")
    family = args.family
    if family == "fiblike":
        a = fibonacci_like(args.c, N)
    elif family == "linrec":
        rec = LinearRecurrence(
            _csv_ints(args.coeffs, "--coeffs"), _csv_ints(args.init, "--init")
        )
        a = linear_recurrence_terms(rec, N)
    elif family == "stirling":
        a = stirling_row_sequence(args.kind, args.k, N)
    elif family == "euler":
        a = euler_abs_sequence(N)
    elif family == "bernoulli-tau":
        a = tau_beta_sequences(N)[0]
    else:  # bernoulli-beta
        a = tau_beta_sequences(N)[1]
    _write_output(seqio.format_bfile(a), args.out)
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    a = _read_input(args.input)
    N = _horizon(a, args.terms)
    report = check_realizable(a, N)
    if args.json:
        _write_output(seqio.dumps_doc(seqio.realizability_doc(report)), args.out)
    elif report.consistent:
        _write_output(
            f"consistent up to N={N} (necessary conditions only: a horizon "
            "check can refute realizability, never prove it)\n",
            args.out,
        )
    else:
        n, _ = report.first_failure
        record = report.records[n - 1]
        detail = f"Dold value {record.dold_value}, residue {record.dold_mod_n} mod {n}"
        _write_output(
            f"{_describe_failure(report.first_failure)} ({detail}); verdict: "
            f"{report.verdict}\n",
            args.out,
        )
    return 0 if report.consistent else 1


def _cmd_orbits(args: argparse.Namespace) -> int:
    a = _read_input(args.input)
    N = _horizon(a, args.terms)
    counts = orbit_counts(a, N)
    if args.json:
        _write_output(seqio.dumps_doc(seqio.orbit_counts_doc(counts)), args.out)
    else:
        _write_output(
            "".join(f"{n} {counts[n]}\n" for n in range(1, N + 1)), args.out
        )
    good = all(b.denominator == 1 and b >= 0 for b in counts)
    return 0 if good else 1


def _cmd_local(args: argparse.Namespace) -> int:
    a = _read_input(args.input)
    N = _horizon(a, args.terms)
    if args.prime is not None:
        reports = [check_local(a, args.prime, N)]
        trailer = ""
    else:
        reports = check_everywhere_local(a, N)
        support = [str(r.prime) for r in reports]
        trailer = (
            f"support primes: {' '.join(support) if support else '(none)'}; every "
            "prime outside the support has all-ones p-part and is trivially "
            "consistent\n"
        )
    if args.json:
        _write_output(seqio.dumps_doc(seqio.local_doc(N, reports)), args.out)
    else:
        lines = []
        for r in reports:
            if r.consistent:
                lines.append(f"p={r.prime}: consistent up to N={N}\n")
            else:
                lines.append(
                    f"p={r.prime}: {_describe_failure(r.report.first_failure)}\n"
                )
        _write_output("".join(lines) + trailer, args.out)
    return 0 if all(r.consistent for r in reports) else 1


def _cmd_sample(args: argparse.Namespace) -> int:
    a = _read_input(args.input)
    if args.monomial is not None:
        if args.monomial < 1:
            raise ValueError("--monomial exponent must be >= 1")
        h = Monomial(args.monomial)
    else:
        with open(args.table, "r", encoding="ascii") as fh:
            h = ExplicitTable(seqio.parse_bfile(fh.read()).terms)
    if args.terms is not None:
        N = args.terms
        if N < 1:
            raise ValueError("--terms must be >= 1")
    else:
        N = _default_sample_horizon(h, len(a))
    _write_output(seqio.format_bfile(sample(a, h, N)), args.out)
    return 0


def _default_sample_horizon(h: Monomial | ExplicitTable, have: int) -> int:
    """Largest N whose sampling indices all fit in the source prefix."""
    limit = len(h.values) if isinstance(h, ExplicitTable) else have
    N = 0
    for n in range(1, limit + 1):
        if time_change_value(h, n) > have:
            break
        N = n
    if N == 0:
        raise ValueError(
            f"source prefix too short even for N=1 "
            f"(needs {required_source_length(h, 1)} terms)"
        )
    return N


def _cmd_power(args: argparse.Namespace) -> int:
    a = _read_input(args.input)
    N = _horizon(a, args.terms)
    coeffs = _csv_ints(args.poly, "--poly")
    _write_output(seqio.format_bfile(term_power(a, IntPolynomial(coeffs), N)), args.out)
    return 0


def _cmd_scale(args: argparse.Namespace) -> int:
    a = _read_input(args.input)
    _write_output(seqio.format_bfile(scale(a, args.mult)), args.out)
    return 0


def _cmd_multiplier(args: argparse.Namespace) -> int:
    a = _read_input(args.input)
    N = _horizon(a, args.terms)
    mult = minimal_multiplier(a, N)
    report = check_realizable(a, N)
    if args.json:
        _write_output(seqio.dumps_doc(seqio.multiplier_doc(report, mult)), args.out)
    else:
        _write_output(
            f"minimal multiplier for condition (D) up to N={N}: {mult.multiplier}\n"
            f"sign condition (S) holds: {'yes' if mult.sign_ok else 'no'}\n",
            args.out,
        )
    return 0 if mult.multiplier == 1 and mult.sign_ok else 1


def _cmd_realize(args: argparse.Namespace) -> int:
    a = _read_input(args.input)
    N = _horizon(a, args.terms)
    try:
        ct = realize_cycle_type(a, N)
    except InconsistentPrefixError as err:
        print(f"not realizable: {err}", file=sys.stderr)
        return 1
    doc = seqio.cycle_type_doc(ct)
    if args.explicit is not None:
        cap = args.explicit
        if cap == -1:  # flag given without a value: env var, then built-in default
            cap = int(os.environ.get(ENV_POINT_CAP, DEFAULT_POINT_CAP))
        if cap < 0:
            raise ValueError("--explicit cap must be >= 0")
        doc = {"cycle_type": doc, "permutation": explicit_permutation(ct, cap)}
    _write_output(seqio.dumps_doc(doc), args.out)
    return 0


def _cmd_irregular(args: argparse.Namespace) -> int:
    primes = irregular_primes(args.upto)
    _write_output((" ".join(str(p) for p in primes) + "\n") if primes else "", args.out)
    return 0


# ----------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="realizable",
        description=(
            "Exact horizon tests for realizability of integer sequences as "
            "periodic-point counts, plus the transforms and constructions "
            "around them.  Sequences travel as b-files ('n a_n' lines)."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add_io(p: argparse.ArgumentParser, with_terms: bool = True) -> None:
        p.add_argument(
            "input",
            nargs="?",
            default="-",
            help="input b-file path, or - for stdin (default)",
        )
        if with_terms:
            p.add_argument(
                "--terms",
                type=int,
                metavar="N",
                help="horizon (default: input length)",
            )
        p.add_argument("--out", metavar="PATH", help="write output here, not stdout")

    gen = sub.add_parser("gen", help="generate a named sequence family as a b-file")
    genfam = gen.add_subparsers(dest="family", required=True, metavar="FAMILY")
    for name, configure in (
        ("fiblike", lambda p: p.add_argument("c", type=int, help="second term")),
        (
            "linrec",
            lambda p: (
                p.add_argument("--coeffs", required=True, help="a_1,...,a_k"),
                p.add_argument("--init", required=True, help="u_1,...,u_k"),
            ),
        ),
        (
            "stirling",
            lambda p: (
                p.add_argument("kind", type=int, choices=(1, 2)),
                p.add_argument("k", type=int, help="column index k >= 1"),
            ),
        ),
        ("euler", lambda p: None),
        ("bernoulli-tau", lambda p: None),
        ("bernoulli-beta", lambda p: None),
    ):
        fam = genfam.add_parser(name)
        configure(fam)
        fam.add_argument("--terms", type=int, required=True, metavar="N")
        fam.add_argument("--out", metavar="PATH")
        fam.set_defaults(func=_cmd_gen)

    check = sub.add_parser("check", help="test conditions (D) and (S) up to a horizon")
    add_io(check)
    check.add_argument("--json", action="store_true", help="full report document")
    check.set_defaults(func=_cmd_check)

    orbits = sub.add_parser("orbits", help="orbit counts D_n(a)/n as exact rationals")
    add_io(orbits)
    orbits.add_argument("--json", action="store_true")
    orbits.set_defaults(func=_cmd_orbits)

    local = sub.add_parser("local", help="p-part realizability at one or all primes")
    add_io(local)
    group = local.add_mutually_exclusive_group(required=True)
    group.add_argument("--prime", type=int, metavar="P")
    group.add_argument(
        "--all", action="store_true", help="every support prime of the prefix"
    )
    local.add_argument("--json", action="store_true")
    local.set_defaults(func=_cmd_local)

    samp = sub.add_parser("sample", help="time change a_n -> a_{h(n)}")
    add_io(samp)
    hgroup = samp.add_mutually_exclusive_group(required=True)
    hgroup.add_argument("--monomial", type=int, metavar="K", help="h(n) = n^K")
    hgroup.add_argument(
        "--table", metavar="PATH", help="b-file of values h(1), h(2), ..."
    )
    samp.set_defaults(func=_cmd_sample)

    power = sub.add_parser("power", help="termwise powers a_n -> a_n^{h(n)}")
    add_io(power)
    power.add_argument(
        "--poly",
        required=True,
        metavar="C0,C1,...",
        help="coefficients of h, constant term first, all >= 0",
    )
    power.set_defaults(func=_cmd_power)

    sc = sub.add_parser("scale", help="multiply every term by a constant")
    add_io(sc, with_terms=False)
    sc.add_argument("--mult", type=int, required=True, metavar="C")
    sc.set_defaults(func=_cmd_scale)

    mult = sub.add_parser(
        "multiplier", help="least C making (C a_n) satisfy condition (D)"
    )
    add_io(mult)
    mult.add_argument("--json", action="store_true")
    mult.set_defaults(func=_cmd_multiplier)

    real = sub.add_parser(
        "realize", help="cycle type (and optionally a permutation) realizing the prefix"
    )
    add_io(real)
    real.add_argument(
        "--explicit",
        type=int,
        nargs="?",
        const=-1,
        metavar="CAP",
        help=(
            "also emit a successor array when total points <= CAP "
            f"(no value: ${ENV_POINT_CAP} or {DEFAULT_POINT_CAP})"
        ),
    )
    real.set_defaults(func=_cmd_realize)

    irr = sub.add_parser("irregular", help="irregular primes up to a bound")
    irr.add_argument("--upto", type=int, required=True, metavar="P")
    irr.add_argument("--out", metavar="PATH")
    irr.set_defaults(func=_cmd_irregular)

    return parser


def main(argv: ArgSeq[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:  # argparse prints usage itself; exit code 2 on misuse
        return int(exit_.code or 0)
    try:
        return args.func(args)
    except BrokenPipeError:
        return 0
    except (ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


def run() -> None:
    raise SystemExit(main())
