"""Command-line interface.

Subcommands: analyze, reduce, enumerate, verify, dot.  Failure paths write
diagnostics to stderr only; exit codes are 2 for malformed codes, 3 for
unrealizable codes, 4 for budget refusals, 5 for file I/O problems, 6 for an
unknown check id, and 1 when a verify run finds violations.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import chords, enumeration, invariants, moves, planar, verify
from .errors import BudgetExceeded, MalformedCode, NotRealizable

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_MALFORMED = 2
EXIT_NOT_REALIZABLE = 3
EXIT_BUDGET = 4
EXIT_IO = 5
EXIT_UNKNOWN_CHECK = 6

ARNOLD_GUARD_N = 12


def _fail(code: int, message: str) -> int:
    print(message, file=sys.stderr)
    return code


def _analysis_obj(code_text: str, with_arnold: bool) -> dict:
    cd = chords.parse_code(code_text)
    p = planar.realize(cd)
    canon = chords.canonicalize(cd).text
    member, _ = moves.in_S(p)
    obj = {
        "code": canon,
        "n": p.n,
        "x": chords.count_x(cd),
        "tr": chords.count_tr(cd),
        "realizable": True,
        "face_degrees": sorted(f.degree for f in p.faces),
        "monogons": len(planar.monogons(p)),
        "strong_bigons": len(planar.strong_bigons(p)),
        "reduced": planar.is_reduced(p),
        "prime_factors": [
            chords.canonicalize(f.code).text for f in planar.prime_decompose(p)
        ],
        "in_S": member,
    }
    if with_arnold:
        obj["arnold"] = invariants.format_rational(invariants.arnold_invariant(p))
    return obj


def _format_analysis(obj: dict) -> str:
    lines = []
    for key, val in obj.items():
        if isinstance(val, bool):
            shown = "true" if val else "false"
        elif isinstance(val, list):
            shown = json.dumps(val)
        elif key == "code":
            shown = val if val else "(U)"
        else:
            shown = str(val)
        lines.append(f"{key + ':':<15}{shown}")
    return "\n".join(lines)


def _cmd_analyze(args) -> int:
    if args.infile is not None:
        try:
            with open(args.infile, "r", encoding="utf-8") as fh:
                code_texts = [ln for ln in fh.read().splitlines() if ln.strip()]
        except OSError as exc:
            return _fail(EXIT_IO, f"cannot read {args.infile}: {exc}")
    else:
        code_texts = [args.code if args.code is not None else ""]
    results = []
    for text in code_texts:
        try:
            cd = chords.parse_code(text)
        except MalformedCode as exc:
            return _fail(EXIT_MALFORMED, f"malformed code {text!r}: {exc}")
        if args.arnold and cd.n > ARNOLD_GUARD_N and not args.force:
            return _fail(
                EXIT_BUDGET,
                f"refusing the 2^{cd.n} resolution sweep for n={cd.n} > "
                f"{ARNOLD_GUARD_N}; pass --force to proceed",
            )
        try:
            results.append(_analysis_obj(text, args.arnold))
        except NotRealizable as exc:
            return _fail(EXIT_NOT_REALIZABLE, str(exc))
    if args.json:
        payload = results[0] if args.infile is None else results
        print(json.dumps(payload, indent=2))
    else:
        print("\n\n".join(_format_analysis(obj) for obj in results))
    return EXIT_OK


def _cmd_reduce(args) -> int:
    try:
        cd = chords.parse_code(args.code)
    except MalformedCode as exc:
        return _fail(EXIT_MALFORMED, f"malformed code {args.code!r}: {exc}")
    try:
        p = planar.realize(cd)
    except NotRealizable as exc:
        return _fail(EXIT_NOT_REALIZABLE, str(exc))
    if chords.count_tr(cd) == 0:
        trace = moves.reduce_no_triple(p)
    else:
        member, trace = moves.in_S(p)
        if not member:
            print(f"{chords.canonicalize(cd).text}: not in S")
            return EXIT_OK
    print(f"start: {trace.start.text or '(U)'}")
    for mv, code in trace.steps:
        print(f"  {mv} -> {code.text or '(U)'}")
    print(f"terminal: {trace.terminal.text or '(U)'}")
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    ns = [0] if args.n == 0 else list(range(1, args.n + 1))
    budget = enumeration.enumeration_budget()
    if args.n > budget:
        return _fail(
            EXIT_BUDGET,
            f"n={args.n} exceeds the enumeration budget {budget} "
            f"(set {enumeration.BUDGET_ENV} to raise it)",
        )
    records = []
    try:
        for n in ns:
            curves = enumeration.enumerate_curves(n)
            for p in curves:
                records.append(
                    enumeration.build_record(p, with_arnold=n <= args.arnold_max)
                )
            print(f"n={n}: {len(curves)}")
    except BudgetExceeded as exc:
        return _fail(EXIT_BUDGET, str(exc))
    try:
        enumeration.write_dataset(records, args.out)
    except OSError as exc:
        return _fail(EXIT_IO, f"cannot write {args.out}: {exc}")
    print(f"wrote {args.out} ({len(records)} records)")
    return EXIT_OK


def _cmd_verify(args) -> int:
    ids = list(verify.CHECK_IDS) if args.all else [args.check]
    if not args.all and args.check not in verify.CHECK_IDS:
        return _fail(
            EXIT_UNKNOWN_CHECK,
            f"unknown check {args.check!r}; known: {', '.join(verify.CHECK_IDS)}",
        )
    try:
        reports = [verify.run_check(cid, args.max_n) for cid in ids]
    except BudgetExceeded as exc:
        return _fail(EXIT_BUDGET, str(exc))
    if args.json:
        payload = (
            reports[0].to_json_obj()
            if not args.all
            else [r.to_json_obj() for r in reports]
        )
        print(json.dumps(payload, indent=2))
    else:
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            print(
                f"{status} {r.check_id} (max_n={r.max_n}, "
                f"curves_tested={r.curves_tested})"
            )
            for code, detail in r.violations:
                print(f"  violation: {code}: {detail}")
    for r in reports:
        print(f"{r.check_id}: elapsed {r.elapsed:.2f}s", file=sys.stderr)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_VIOLATIONS


def _cmd_dot(args) -> int:
    try:
        cd = chords.parse_code(args.code)
    except MalformedCode as exc:
        return _fail(EXIT_MALFORMED, f"malformed code {args.code!r}: {exc}")
    m = 2 * cd.n
    lines = ["graph chord_diagram {", "  layout=circo;"]
    for t in range(m):
        lines.append(f'  p{t} [label="{cd.word[t]}"];')
    for t in range(m):
        lines.append(f"  p{t} -- p{(t + 1) % m};")
    for v in range(1, cd.n + 1):
        i, j = cd.positions(v)
        lines.append(f"  p{i} -- p{j} [style=dashed];")
    lines.append("}")
    print("\n".join(lines))
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knotproj",
        description="Combinatorics of spherical knot projections.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_an = sub.add_parser("analyze", help="pattern counts, faces, and invariants")
    p_an.add_argument("code", nargs="?", default=None, help="Gauss code (quoted)")
    p_an.add_argument("--arnold", action="store_true", help="also average a2")
    p_an.add_argument("--json", action="store_true")
    p_an.add_argument("--force", action="store_true", help="lift the n>12 arnold guard")
    p_an.add_argument("--in", dest="infile", default=None, help="batch file, one code per line")

    p_re = sub.add_parser("reduce", help="greedy 1b/s2b reduction or S-membership")
    p_re.add_argument("code")

    p_en = sub.add_parser("enumerate", help="write the curve dataset up to n")
    p_en.add_argument("n", type=int)
    p_en.add_argument("--out", required=True)
    p_en.add_argument(
        "--arnold-max",
        type=int,
        default=enumeration.DEFAULT_ARNOLD_MAX_N,
        help="compute arnold only for n at most this (default 6)",
    )

    p_ve = sub.add_parser("verify", help="run machine checks over the enumeration")
    group = p_ve.add_mutually_exclusive_group(required=True)
    group.add_argument("--check", help="one of: " + ", ".join(verify.CHECK_IDS))
    group.add_argument("--all", action="store_true")
    p_ve.add_argument("--max-n", type=int, default=6)
    p_ve.add_argument("--json", action="store_true")

    p_dot = sub.add_parser("dot", help="chord diagram as Graphviz source")
    p_dot.add_argument("code")

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    handler = {
        "analyze": _cmd_analyze,
        "reduce": _cmd_reduce,
        "enumerate": _cmd_enumerate,
        "verify": _cmd_verify,
        "dot": _cmd_dot,
    }[args.command]
    return handler(args)


if __name__ == "__main__":
    raise SystemExit(main())
