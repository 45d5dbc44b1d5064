"""Command-line interface.

Subcommands: ``generate``, ``solve``, ``verify``, ``spectrum``, ``export-web``.

Exit codes are a stable contract:

* 0 -- success / unique solution
* 1 -- I/O or document error
* 2 -- refused: geometry/pattern fails its uniqueness predicate
* 3 -- multiple solutions
* 4 -- no solution
"""

from __future__ import annotations

import argparse
import json
import secrets
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__, document
from .generator import GenConfig, GenMode, PredicateError, generate_with_mode
from .linalg import chess_spectrum, triangle_spectrum, triangle_uniqueness_predicate
from .model import Geometry, GridKind, OpenPattern, PatternKind
from .solver import (
    IndeterminateError,
    Method,
    Status,
    brute_force_solutions,
    linear_solve_opening,
    verify_table,
)

EXIT_OK = 0
EXIT_IO = 1
EXIT_REFUSED = 2
EXIT_MULTIPLE = 3
EXIT_NONE = 4


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="papersweeper",
        description="Generate, solve, and verify printable minesweeper puzzles "
        "with guaranteed-unique solutions.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="generate a puzzle document")
    gen.add_argument("--rows", type=int, required=True)
    gen.add_argument("--cols", type=int, required=True)
    gen.add_argument(
        "--geometry", choices=[k.value for k in GridKind], default="square"
    )
    gen.add_argument(
        "--pattern", choices=["chess", "top-row"], default="chess"
    )
    gen.add_argument(
        "--mode", choices=[m.value for m in GenMode], default="bernoulli"
    )
    gen.add_argument("--seed", type=int, default=None, help="64-bit seed; generated and printed when omitted")
    gen.add_argument("--p", type=str, default="1/2", help="mine probability (fraction or decimal)")
    gen.add_argument("--output", "-o", type=Path, default=None, help="output path (default stdout)")
    gen.add_argument("--no-solution", action="store_true", help="omit the solution from the document")
    gen.add_argument("--force", action="store_true", help="generate even when uniqueness is not guaranteed")
    gen.set_defaults(func=_cmd_generate)

    solve = sub.add_parser("solve", help="solve a puzzle document and print the grid")
    solve.add_argument("input", type=Path)
    solve.add_argument("--method", choices=["auto", "brute", "linear"], default="auto")
    solve.set_defaults(func=_cmd_solve)

    verify = sub.add_parser("verify", help="check that a document has exactly one solution")
    verify.add_argument("input", type=Path)
    verify.set_defaults(func=_cmd_verify)

    spectrum = sub.add_parser("spectrum", help="report the uniqueness spectrum for a grid size")
    spectrum.add_argument("--rows", type=int, required=True)
    spectrum.add_argument("--cols", type=int, required=True)
    spectrum.add_argument(
        "--geometry", choices=[k.value for k in GridKind], default="square"
    )
    spectrum.add_argument("--json", action="store_true", help="emit JSON instead of text")
    spectrum.set_defaults(func=_cmd_spectrum)

    export = sub.add_parser("export-web", help="bundle documents for the web player")
    export.add_argument("inputs", type=Path, nargs="+")
    export.add_argument("--outdir", type=Path, required=True)
    export.set_defaults(func=_cmd_export_web)
    return parser


def _parse_probability(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad probability {text!r}") from exc


def _cmd_generate(args: argparse.Namespace) -> int:
    seed = args.seed
    if seed is None:
        seed = secrets.randbits(64)
        print(f"seed: {seed}", file=sys.stderr)
    try:
        p = _parse_probability(args.p)
        cfg = GenConfig(
            geometry=Geometry(GridKind(args.geometry), args.rows, args.cols),
            pattern=OpenPattern(PatternKind(args.pattern)),
            p=p,
            seed=seed,
            mode=GenMode(args.mode),
            allow_nonunique=args.force,
        )
        opening, mask = generate_with_mode(cfg)
    except PredicateError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except (ValueError, argparse.ArgumentTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    doc = document.PuzzleDocument(
        geometry=cfg.geometry,
        pattern=cfg.pattern,
        opening=opening,
        solution=None if args.no_solution else mask,
        provenance={
            "mode": cfg.mode.value,
            "seed": seed,
            "p": str(p),
            "version": __version__,
        },
    )
    text = document.dumps(doc)
    if args.output is None:
        sys.stdout.write(text)
        return EXIT_OK
    try:
        args.output.write_text(text)
    except OSError as exc:
        print(f"cannot write {args.output}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def _load(path: Path) -> document.PuzzleDocument:
    try:
        return document.loads(path.read_text())
    except OSError as exc:
        raise SystemExit(_io_error(f"cannot read {path}: {exc}"))
    except document.DocumentError as exc:
        raise SystemExit(_io_error(f"bad document {path}: {exc}"))


def _io_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_IO


def _cmd_solve(args: argparse.Namespace) -> int:
    doc = _load(args.input)
    opening = doc.opening
    if args.method == "brute":
        report = brute_force_solutions(opening)
    elif args.method == "linear":
        report = linear_solve_opening(opening)
    else:
        report = linear_solve_opening(opening)
        if report.status is Status.UNDERDETERMINED:
            report = brute_force_solutions(opening)
    if report.status is Status.UNIQUE:
        sys.stdout.write(document.render_grid(opening, report.mask))
        return EXIT_OK
    if report.status is Status.NONE:
        print("no solution satisfies these clues", file=sys.stderr)
        return EXIT_NONE
    if report.status is Status.UNDERDETERMINED:
        print(
            f"linear system is underdetermined (kernel dimension {report.kernel_dim}); "
            "rerun with --method auto or brute",
            file=sys.stderr,
        )
        return EXIT_MULTIPLE
    suffix = "" if report.count_is_exact else " or more"
    print(f"{report.count}{suffix} solutions exist", file=sys.stderr)
    for w in report.witnesses:
        sys.stdout.write(document.render_grid(opening, w))
        sys.stdout.write("\n")
    return EXIT_MULTIPLE


def _cmd_verify(args: argparse.Namespace) -> int:
    doc = _load(args.input)
    try:
        ok, report = verify_table(doc.opening)
    except IndeterminateError as exc:
        return _io_error(str(exc))
    method = report.method.value
    if ok:
        print(f"unique solution ({method})")
        return EXIT_OK
    if report.status is Status.NONE:
        print(f"no solution ({method})")
        return EXIT_NONE
    suffix = "" if report.count_is_exact else "+"
    print(f"multiple solutions: {report.count}{suffix} found ({method})")
    return EXIT_MULTIPLE


def _cmd_spectrum(args: argparse.Namespace) -> int:
    m, n = args.rows, args.cols
    try:
        if args.geometry == GridKind.SQUARE_MOORE.value:
            report = chess_spectrum(m, n)
        else:
            report = triangle_spectrum(m, n)
    except ValueError as exc:
        return _io_error(str(exc))
    if args.json:
        payload = {
            "geometry": {"kind": args.geometry, "rows": m, "cols": n},
            "has_zero": report.has_zero,
            "zero_witnesses": [list(w) for w in report.zero_witnesses],
        }
        if report.min_abs_multiplier is not None:
            payload["min_abs_multiplier"] = report.min_abs_multiplier
        print(json.dumps(payload, sort_keys=True))
        return EXIT_OK
    if args.geometry == GridKind.SQUARE_MOORE.value:
        if report.has_zero:
            witnesses = ", ".join(f"({k},{l})" for k, l in report.zero_witnesses)
            print(f"zero eigenvalue at (k,l) = {witnesses}; some mine sets are ambiguous")
        else:
            print("no zero eigenvalue; unique for all M")
    else:
        print(f"min multiplier: {report.min_abs_multiplier:.6g}")
        if report.has_zero:
            witnesses = ", ".join(f"({k},{l})" for k, l in report.zero_witnesses)
            print(f"zero multiplier at (k,l) = {witnesses}")
        elif triangle_uniqueness_predicate(m, n):
            print("multiplier bounded away from zero; unique for all M")
    return EXIT_OK


def _cmd_export_web(args: argparse.Namespace) -> int:
    try:
        args.outdir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        return _io_error(f"cannot create {args.outdir}: {exc}")
    index = []
    for path in args.inputs:
        doc = _load(path)
        name = path.stem + ".json"
        try:
            (args.outdir / name).write_text(document.dumps(doc))
        except OSError as exc:
            return _io_error(f"cannot write {args.outdir / name}: {exc}")
        index.append(
            {
                "file": name,
                "kind": doc.geometry.kind.value,
                "rows": doc.geometry.rows,
                "cols": doc.geometry.cols,
                "has_solution": doc.solution is not None,
            }
        )
    try:
        (args.outdir / "index.json").write_text(
            json.dumps({"puzzles": index}, sort_keys=True, indent=2) + "\n"
        )
    except OSError as exc:
        return _io_error(f"cannot write index: {exc}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else EXIT_IO


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
