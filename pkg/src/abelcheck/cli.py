"""Command-line entry point.

Exit status: 0 when every check passes, 1 when a counterexample or an
unrefuted decomposition is found, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Optional, Sequence

from .ogden import (
    CaseTargeted,
    Decomposition,
    ExhaustiveWindow,
    RandomSample,
    SearchConfig,
    WitnessIndex,
    classify,
    cond_A,
    cond_B,
    prescribed_i,
    refute,
    verify_theorem_instance,
)
from .witness import MAX_N, WitnessSpec, build_witness, lemma3_report
from .words import alt_power_violations, to_runs

log = logging.getLogger("abelcheck")

OK, FOUND, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(obj: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(obj, sort_keys=True))
        return
    for key, value in obj.items():
        if isinstance(value, (dict, list)):
            value = json.dumps(value, sort_keys=True)
        print(f"{key}: {value}")


def _n(value: str) -> int:
    n = int(value)
    if not 1 <= n <= MAX_N:
        raise argparse.ArgumentTypeError(f"n must lie in 1..{MAX_N}")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="abelcheck", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--format", choices=("text", "ascii", "json"), default="json")
        return p

    p = add("lemma3", "count 1s of z_n against the closed forms")
    p.add_argument("--n", type=_n, required=True)

    p = add("lemma8", "check alt(w^k) >= k-1 over all short uneven words")
    p.add_argument("--max-length", type=int, default=10)
    p.add_argument("--max-k", type=int, default=6)

    p = add("witness", "print z_n (ASCII, or run-length JSON with --format json)")
    p.add_argument("--n", type=_n, required=True)

    p = add("classify", "classify and refute one decomposition of z_n")
    p.add_argument("--n", type=_n, required=True)
    p.add_argument("--cuts", type=int, nargs=4, required=True, metavar="I")
    p.add_argument("--max-small-i", type=int, default=8)

    p = add("ogden-verify", "refute every enumerated decomposition of z_n")
    p.add_argument("--n", type=_n, required=True)
    p.add_argument("--window", type=int, default=None)
    p.add_argument("--samples", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--case-targeted", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--max-small-i", type=int, default=8)
    return parser


def _lemma3(args) -> int:
    if args.n < 3:
        raise UsageError("lemma3 needs n >= 3")
    report = lemma3_report(args.n)
    _emit(report.to_json(), args.format)
    return OK if report.ok else FOUND


def _lemma8(args) -> int:
    checked, failures = alt_power_violations(args.max_length, args.max_k)
    _emit(
        {
            "maxLength": args.max_length,
            "maxK": args.max_k,
            "unevenWordsChecked": checked,
            "violations": [{"word": w, "k": k} for w, k in failures],
        },
        args.format,
    )
    return FOUND if failures else OK


def _witness(args) -> int:
    z = build_witness(args.n)
    if args.format == "json":
        print(json.dumps([[symbol, length] for symbol, length in to_runs(z)]))
    else:
        print(z)
    return OK


def _classify(args) -> int:
    spec = WitnessSpec(args.n)
    index = WitnessIndex(spec)
    try:
        d = Decomposition(*args.cuts)
        d.check_bounds(index.length)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if d.pumped_size == 0:
        raise UsageError("v and x are both empty")
    label = classify(spec, d, index.z)
    out = {
        "n": args.n,
        "cuts": list(d.cuts),
        "case": label.to_json(),
        "prescribedI": prescribed_i(label, args.n),
        "condA": cond_A(spec, d),
        "condB": cond_B(spec, d),
        "refutation": None,
    }
    status = OK
    if out["condA"] and out["condB"]:
        ref = refute(index, d, SearchConfig(max_small_i=args.max_small_i), label)
        out["refutation"] = ref.to_json() if ref else None
        status = OK if ref else FOUND
    _emit(out, args.format)
    return status


def _ogden_verify(args) -> int:
    strategies = []
    if args.window is not None:
        strategies.append(ExhaustiveWindow(args.window))
    if args.samples:
        strategies.append(RandomSample(args.seed, args.samples))
    if args.case_targeted:
        strategies.append(CaseTargeted())
    if not strategies:
        strategies.append(ExhaustiveWindow(40))
    if args.workers < 1:
        raise UsageError("--workers must be >= 1")
    report = verify_theorem_instance(
        args.n, strategies, SearchConfig(max_small_i=args.max_small_i), workers=args.workers
    )
    if report["subThresholdWarning"]:
        log.warning("n=%d is below the proof threshold; results are exploratory", args.n)
    _emit(report, args.format)
    return FOUND if report["unrefuted"] else OK


COMMANDS = {
    "lemma3": _lemma3,
    "lemma8": _lemma8,
    "witness": _witness,
    "classify": _classify,
    "ogden-verify": _ogden_verify,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    if args.format == "ascii":
        args.format = "text"
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"abelcheck: error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
