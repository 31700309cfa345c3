"""Command-line front end: ``symprat reduce|report|face|table|verify|braid``.

Exit codes: 0 success, 1 verification or golden-table mismatch, 2 bad input
(parse or range), 3 precondition failure (not reduced, square <= 0, ...).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Sequence

from . import braid
from .cone import FaceLabel, sample_face
from .cremona import NotReducedError, ReductionError, is_reduced, reduce, reduced_violations
from .lattice import SymplecticVector, parse_class
from .roots import ConsistencyError
from .smcg import full_report
from .tables import compare_with_golden, regenerate_tables
from .verify import DEFAULT_SEED, run_all

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_PRECONDITION = 0, 1, 2, 3


class CLIError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _json(data) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False)


def _md_cell(value) -> str:
    return str(value).replace("|", "\\|")


def _kv_markdown(pairs: list[tuple[str, object]]) -> str:
    lines = ["| field | value |", "|---|---|"]
    lines += [f"| {k} | {_md_cell(v)} |" for k, v in pairs]
    return "\n".join(lines)


def _kv_plain(pairs: list[tuple[str, object]]) -> str:
    width = max(len(k) for k, _ in pairs)
    return "\n".join(f"{k:<{width}}  {v}" for k, v in pairs)


# -- reduce -------------------------------------------------------------------


def cmd_reduce(args) -> int:
    try:
        A = parse_class(args.vector)
    except ValueError as exc:
        raise CLIError(str(exc), EXIT_INPUT) from exc
    try:
        tr = reduce(A)
    except ReductionError as exc:
        raise CLIError(str(exc), EXIT_PRECONDITION) from exc
    if args.format == "json":
        _emit(_json(tr.to_json()))
        return EXIT_OK
    moves = [json.dumps(m.to_json()) for m in tr.steps]
    if args.format == "markdown":
        lines = [f"**input** `{A}` = {A.to_json()}", ""]
        if tr.negated:
            lines.append("negated to make the H-coefficient positive")
        lines += ["| step | move |", "|---|---|"] + [f"| {i} | `{m}` |" for i, m in enumerate(moves, 1)]
        lines += ["", f"**reduced** `{tr.output}` = {tr.output.to_json()}"]
        _emit("\n".join(lines))
    else:
        lines = [f"input:   {A.to_json()}  ({A})"]
        if tr.negated:
            lines.append("negated: yes")
        lines.append("moves:   " + ("(identity)" if not moves else " ".join(moves)))
        lines.append(f"reduced: {tr.output.to_json()}  ({tr.output})")
        _emit("\n".join(lines))
    return EXIT_OK


# -- report -------------------------------------------------------------------


def _render_report(rep, fmt: str) -> str:
    data = rep.to_json()
    if fmt == "json":
        return _json(data)
    pairs = []
    for key, value in data.items():
        if value is None:
            continue
        if key == "omega":
            value = str(rep.vector)
        elif key == "pi0":
            value = f"1 -> {value['kernel']} -> pi0(Symp_h) -> {value['quotient']} -> 1" if value else None
            if value is None:
                continue
        pairs.append((key, value))
    return _kv_markdown(pairs) if fmt == "markdown" else _kv_plain(pairs)


def _report(w: SymplecticVector, fmt: str) -> int:
    try:
        rep = full_report(w)
    except (NotReducedError, ConsistencyError) as exc:
        raise CLIError(str(exc), EXIT_PRECONDITION) from exc
    except ValueError as exc:
        raise CLIError(str(exc), EXIT_INPUT) from exc
    _emit(_render_report(rep, fmt))
    return EXIT_OK


def cmd_report(args) -> int:
    try:
        w = SymplecticVector.parse(args.omega)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise CLIError(f"cannot parse {args.omega!r}: {exc}", EXIT_INPUT) from exc
    if not 2 <= w.k <= 5:
        raise CLIError(f"reports are produced for 2 <= k <= 5, got k = {w.k}", EXIT_INPUT)
    if args.auto_reduce:
        try:
            w = reduce(w).output
        except ReductionError as exc:
            raise CLIError(str(exc), EXIT_PRECONDITION) from exc
    if not is_reduced(w):
        raise CLIError(f"{w} is not reduced: violates {'; '.join(reduced_violations(w))}", EXIT_PRECONDITION)
    return _report(w, args.format)


def cmd_face(args) -> int:
    try:
        label = FaceLabel.parse(args.face, args.k)
    except ValueError as exc:
        raise CLIError(str(exc), EXIT_INPUT) from exc
    rng = None if args.seed is None else random.Random(args.seed)
    return _report(sample_face(label, rng), args.format)


# -- tables and verification -----------------------------------------------------


def cmd_table(args) -> int:
    if args.k not in (2, 3, 4, 5):
        raise CLIError(f"tables exist for k in 2..5, got {args.k}", EXIT_INPUT)
    table = regenerate_tables(args.k)
    if args.format == "json":
        _emit(_json(table.to_json()))
    elif args.format == "markdown":
        _emit(table.to_markdown())
    else:
        _emit(table.to_plain())
    diffs = compare_with_golden(args.k)
    if diffs:
        sys.stderr.write(f"table for k={args.k} differs from the golden copy:\n")
        for d in diffs:
            sys.stderr.write(f"  {d}\n")
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_verify(args) -> int:
    seed = DEFAULT_SEED if args.seed is None else args.seed
    results = run_all(seed)
    if args.format == "json":
        _emit(_json([{"criterion": r.number, "title": r.title, "pass": r.ok, "detail": r.detail} for r in results]))
    elif args.format == "markdown":
        rows = [f"| {r.number} | {r.title} | {'PASS' if r.ok else 'FAIL'} | {r.detail} |" for r in results]
        _emit("\n".join(["| # | criterion | result | detail |", "|---|---|---|---|", *rows]))
    else:
        _emit("\n".join(r.line() for r in results))
    return EXIT_OK if all(r.ok for r in results) else EXIT_MISMATCH


# -- braid --------------------------------------------------------------------


def cmd_braid(args) -> int:
    if not 2 <= args.n <= 6:
        raise CLIError(f"n must be in 2..6, got {args.n}", EXIT_INPUT)
    pres = braid.pure_braid_presentation(args.n, args.quotient)
    sigma = braid.sphere_braid_presentation(args.n)
    free, torsion = braid.pure_braid_ab_rank(args.n, args.quotient)
    smith = braid.pure_braid_smith(args.n, args.quotient)
    data = {
        "n": args.n,
        "quotient_full_twist": args.quotient,
        "generators": {
            braid.pair_name(p): sigma.format_word(braid.pure_generator(*p, args.n)) for p in braid.pairs(args.n)
        },
        "relators": [pres.format_word(r) for r in pres.relators],
        "smith_diagonal": smith.diagonal,
        "ab_free_rank": free,
        "ab_torsion": list(torsion),
    }
    if args.generating:
        try:
            cands = [braid.parse_pair(s) for s in args.generating.split(",")]
            data["spans_abelianization"] = braid.check_generating_in_ab(cands, args.n, args.quotient)
        except ValueError as exc:
            raise CLIError(str(exc), EXIT_INPUT) from exc
    if args.format == "json":
        _emit(_json(data))
        return EXIT_OK
    group = f"PB_{args.n}(S^2)" + ("/<tau>" if args.quotient else "")
    ab = " + ".join(([f"Z^{free}"] if free else []) + [f"Z/{t}" for t in torsion]) or "0"
    pairs = [(name, word) for name, word in data["generators"].items()]
    pairs += [(f"R{i}", r) for i, r in enumerate(data["relators"], 1)]
    pairs += [("Smith diagonal", data["smith_diagonal"]), (f"Ab({group})", ab)]
    if "spans_abelianization" in data:
        pairs.append(("spans Ab", data["spans_abelianization"]))
    _emit(_kv_markdown(pairs) if args.format == "markdown" else _kv_plain(pairs))
    return EXIT_OK


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "markdown", "plain"), default="plain")
    common.add_argument("--seed", type=int, default=None, help="seed for sampled representatives")

    p = argparse.ArgumentParser(prog="symprat", description="Reduced symplectic forms on rational surfaces.")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("reduce", parents=[common], help="reduce an integral class 'a;b1,...,bk'")
    r.add_argument("vector")
    r.set_defaults(func=cmd_reduce)

    rep = sub.add_parser("report", parents=[common], help="invariants of a form 'nu|c1,...,ck'")
    rep.add_argument("omega")
    rep.add_argument("--auto-reduce", action="store_true", help="reduce the vector first")
    rep.set_defaults(func=cmd_report)

    f = sub.add_parser("face", parents=[common], help="report on a sampled point of a face, e.g. MOA")
    f.add_argument("face")
    f.add_argument("-k", type=int, default=5)
    f.set_defaults(func=cmd_face)

    t = sub.add_parser("table", parents=[common], help="regenerate the face table for X_k")
    t.add_argument("k", type=int)
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", parents=[common], help="run the acceptance checks")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("braid", parents=[common], help="pure sphere braid group abelianization")
    b.add_argument("n", type=int)
    b.add_argument("--quotient", action="store_true", help="divide by the full twist")
    b.add_argument("--generating", help="comma-separated A_ij to test, e.g. A12,A13")
    b.set_defaults(func=cmd_braid)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors with code 2
        return int(exc.code or 0)
    try:
        return args.func(args)
    except CLIError as exc:
        sys.stderr.write(f"symprat: {exc}\n")
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
