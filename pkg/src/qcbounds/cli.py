"""Command-line interface.

Column indices on the command line and in reports are 1-based.

Exit codes: 0 success, 1 verification failed, 2 parse/validation error,
3 I/O error, 4 construction precondition failed, 5 search infeasible.
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
from typing import Optional, Sequence, Union

from qcbounds import bounds as bnd
from qcbounds.code import (
    CodewordPoly,
    ExponentMatrix,
    WeightMatrix,
    avg_weight,
    codeword_weight,
    expand,
    failing_rows,
    binary_syndrome,
    random_exponents,
    sort_columns_ascending,
    weight_of,
)
from qcbounds.construct import ConstructionError, construct_with_trace
from qcbounds.formats import (
    ParseError,
    codeword_from_json,
    codeword_to_json,
    format_grid,
    parse_codeword,
    parse_matrix,
)
from qcbounds.oracle import (
    DEFAULT_DIM_CAP,
    DISTANCE_UNDEFINED,
    HARD_DIM_CAP,
    INFEASIBLE,
    nullspace,
    minimum_weight_word,
)

log = logging.getLogger("qcbounds")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_PARSE = 2
EXIT_IO = 3
EXIT_CONSTRUCTION = 4
EXIT_INFEASIBLE = 5


class CliError(Exception):
    def __init__(self, code: int, msg: str):
        self.code = code
        super().__init__(msg)


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(EXIT_IO, f"cannot read {path}: {exc.strerror or exc}") from None


def _parse(fn, text: str, path: str):
    try:
        return fn(text)
    except ParseError as exc:
        raise CliError(EXIT_PARSE, f"{path}: {exc}") from None
    except ValueError as exc:
        raise CliError(EXIT_PARSE, f"{path}: {exc}") from None


def _load(args) -> Union[WeightMatrix, ExponentMatrix]:
    mat = _parse(parse_matrix, _read(args.input), args.input)
    if isinstance(mat, ExponentMatrix):
        if args.s is not None and args.s != mat.s:
            raise CliError(EXIT_PARSE, f"--s {args.s} conflicts with s={mat.s} in {args.input}")
        return mat
    if args.random_exponents:
        if args.s is None:
            raise CliError(EXIT_PARSE, "--random-exponents needs --s")
        try:
            return random_exponents(mat, args.s, random.Random(args.seed))
        except ValueError as exc:
            raise CliError(EXIT_PARSE, str(exc)) from None
    return mat


def _load_code(args) -> ExponentMatrix:
    mat = _load(args)
    if isinstance(mat, WeightMatrix):
        raise CliError(
            EXIT_PARSE, "this command needs an exponent matrix (or --s with --random-exponents)"
        )
    return mat


def _columns(args) -> Optional[tuple[int, ...]]:
    if args.J is None:
        return None
    try:
        J = tuple(int(tok) - 1 for tok in args.J.split(",") if tok.strip())
    except ValueError:
        raise CliError(EXIT_PARSE, f"--J must be comma-separated integers, got {args.J!r}") from None
    return J


def _fmt_cols(cols: Sequence[int]) -> str:
    return "{" + ",".join(str(j + 1) for j in cols) + "}"


def _emit(args, text: str) -> None:
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise CliError(EXIT_IO, f"cannot write {args.output}: {exc.strerror or exc}") from None
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# -- subcommands --------------------------------------------------------------


def cmd_expand(args) -> int:
    em = _load_code(args)
    H = expand(em)
    if args.format == "json":
        _emit(args, _dump({"rows": H.rows, "cols": H.cols, "bits": H.to_lists()}))
    else:
        _emit(args, format_grid(H))
    return EXIT_OK


def cmd_bounds(args) -> int:
    mat = _load(args)
    if isinstance(mat, WeightMatrix):
        if args.s is None:
            raise CliError(EXIT_PARSE, "a weight matrix input needs --s")
        summary = bnd.summarize(mat, args.s)
    else:
        summary = bnd.summarize(mat)
    for w in summary.warnings:
        log.warning(w)
    report = summary.to_json()
    if args.format == "text":
        lines = [f"{k}: {'UNAVAILABLE' if v is None and k.startswith('bound') else v}"
                 for k, v in report.items() if k != "warnings"]
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit(args, _dump(report))
    return EXIT_OK


def cmd_codeword(args) -> int:
    em = _load_code(args)
    J = _columns(args)
    if em.n < em.m + 1:
        raise CliError(EXIT_CONSTRUCTION, f"need n >= m+1 = {em.m + 1} columns, got {em.n}")
    try:
        c = construct_with_trace(em, bnd.default_columns(em) if J is None else J)
    except ConstructionError as exc:
        raise CliError(EXIT_CONSTRUCTION, str(exc)) from None
    try:
        bnd.verify_construction(em, c)
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED
    w = codeword_weight(c.word)

    scan = None
    if args.scan_J:
        scan, truncated = bnd.scan_column_sets(em)

    if args.format == "json":
        report = {
            "J": [j + 1 for j in c.columns],
            "codeword": codeword_to_json(c.word),
            "rendered": str(c.word),
            "weight": w,
            "verified": True,
            "fallback": c.fallback,
        }
        if c.fallback:
            report["minor_order"] = c.order
            report["minor_rows"] = [i + 1 for i in c.minor.rows]
            report["minor_cols"] = [j + 1 for j in c.minor.cols]
            report["support_cols"] = [j + 1 for j in c.support_columns]
        if scan is not None:
            report["scan_beyond_paper"] = {
                "J": [j + 1 for j in scan.columns],
                "codeword": codeword_to_json(scan.word),
                "weight": codeword_weight(scan.word),
                "truncated": truncated,
            }
        _emit(args, _dump(report))
        return EXIT_OK

    lines = [f"J = {_fmt_cols(c.columns)}"]
    if c.fallback:
        lines.append(
            f"fallback: all {em.m}x{em.m} minors on J vanish; nonzero minor of order "
            f"{c.order} on rows {_fmt_cols(c.minor.rows)}, columns {_fmt_cols(c.minor.cols)}; "
            f"support {_fmt_cols(c.support_columns)}"
        )
    lines.append(f"{c.word}, weight {w}, VERIFIED")
    if scan is not None:
        note = " (truncated)" if truncated else ""
        lines.append(
            f"beyond-paper scan{note}: J = {_fmt_cols(scan.columns)}, {scan.word}, "
            f"weight {codeword_weight(scan.word)}, VERIFIED"
        )
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_mindist(args) -> int:
    em = _load_code(args)
    if args.dim_cap > HARD_DIM_CAP:
        raise CliError(EXIT_PARSE, f"--dim-cap may not exceed {HARD_DIM_CAP}")
    H = expand(em)
    res = minimum_weight_word(H, args.dim_cap)
    if res is INFEASIBLE:
        dim = nullspace(H).dim
        raise CliError(
            EXIT_INFEASIBLE,
            f"nullspace dimension {dim} exceeds dim cap {args.dim_cap}; try a smaller s",
        )
    if res is DISTANCE_UNDEFINED:
        _emit(args, "DISTANCE_UNDEFINED: the code has no nonzero codeword\n")
        return EXIT_OK

    D, bits = res
    word = CodewordPoly.from_bits(bits, em.n, em.s)
    ok = not failing_rows(em, word)
    summary = bnd.summarize(em)
    checks = []
    for name, value in (
        ("bound_simple", summary.simple_bound),
        ("bound_det_product", summary.det.bound if summary.det else None),
        ("bound_det_paper", summary.det.paper_bound_ceiling if summary.det else None),
        ("bound_constructive", summary.constructive_bound),
    ):
        if value is not None:
            checks.append((name, value, D <= value))
    ok = ok and all(c[2] for c in checks)

    if args.format == "json":
        _emit(args, _dump({
            "D": D,
            "codeword": codeword_to_json(word),
            "verified": ok,
            "bounds": {name: {"value": v, "holds": h} for name, v, h in checks},
        }))
    else:
        lines = [f"D = {D}", f"codeword: {word}"]
        lines += [f"D <= {name} ({v}): {str(h).lower()}" for name, v, h in checks]
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK if ok else EXIT_FAILED


def ddist_rows(wm: WeightMatrix) -> list[tuple[int, object]]:
    sorted_wm, _ = sort_columns_ascending(wm)
    return [(t, avg_weight(sorted_wm, 2, t)) for t in range(2, wm.n + 1)]


def cmd_ddist(args) -> int:
    mat = _parse(parse_matrix, _read(args.input), args.input)
    wm = weight_of(mat) if isinstance(mat, ExponentMatrix) else mat
    out = ["t,avg_weight_2_t"] + [f"{t},{v}" for t, v in ddist_rows(wm)]
    _emit(args, "\n".join(out) + "\n")
    return EXIT_OK


def _parse_any_codeword(text: str) -> CodewordPoly:
    if text.lstrip().startswith("{"):
        try:
            obj = json.loads(text)
            return codeword_from_json(obj.get("codeword", obj))
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise ParseError(f"bad codeword JSON: {exc}") from None
    return parse_codeword(text)


def cmd_check(args) -> int:
    em = _load_code(args)
    if not args.codeword:
        raise CliError(EXIT_PARSE, "check needs --codeword PATH")
    c = _parse(_parse_any_codeword, _read(args.codeword), args.codeword)
    if c.n != em.n or c.s != em.s:
        raise CliError(
            EXIT_PARSE,
            f"codeword (n={c.n}, s={c.s}) does not match matrix (n={em.n}, s={em.s})",
        )
    bad = failing_rows(em, c)
    if not bad:
        _emit(args, "VERIFIED\n")
        return EXIT_OK
    bits = binary_syndrome(em, c)
    first_bin = (bits & -bits).bit_length() - 1
    _emit(
        args,
        f"FAILED: check row {bad[0] + 1} of H(x) is nonzero "
        f"(first failing row of H: {first_bin + 1})\n",
    )
    return EXIT_FAILED


COMMANDS = {
    "expand": cmd_expand,
    "bounds": cmd_bounds,
    "codeword": cmd_codeword,
    "mindist": cmd_mindist,
    "ddist": cmd_ddist,
    "check": cmd_check,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcbounds",
        description="Minimum-distance bounds and codeword constructions for type-1 QC LDPC codes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", required=True, help="matrix file")
    common.add_argument("--s", type=int, help="circulant size for weight-matrix inputs")
    common.add_argument("--random-exponents", action="store_true",
                        help="instantiate a weight matrix with random exponents (uses --seed)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--J", help="comma-separated 1-based column indices")
    common.add_argument("--dim-cap", type=int, default=DEFAULT_DIM_CAP)
    common.add_argument("--format", choices=("text", "json", "csv"))
    common.add_argument("--output", help="write the result here instead of stdout")
    common.add_argument("--scan-J", action="store_true",
                        help="also try every column set of size m+1 and report the lightest as an extra line")
    common.add_argument("--codeword", help="codeword file (check command)")
    helps = {
        "expand": "write the expanded binary parity-check matrix",
        "bounds": "report the minimum-distance upper bounds as JSON",
        "codeword": "build a low-weight codeword from determinants",
        "mindist": "exact minimum distance by exhaustive enumeration",
        "ddist": "CSV of the mean sorted column weight over columns 2..t",
        "check": "verify a codeword against the matrix",
    }
    for name, text in helps.items():
        sub.add_parser(name, parents=[common], help=text)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    if args.format is None:
        args.format = "json" if args.command == "bounds" else "text"
    try:
        return COMMANDS[args.command](args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
