"""Plain-text and JSON file formats.

Matrix files start with a header line (``m n`` for 0/1 grids, ``m n s`` for
exponent matrices, where -1 marks a zero circulant) followed by one line per
row. Lines starting with ``#`` and blank lines are ignored in matrix files.

Codeword files start with ``n s`` and then hold exactly one line per block,
listing that block's exponents; an empty line is a zero block. Trailing zero
blocks may be omitted.
"""

from __future__ import annotations

from importlib import resources
from typing import Union

from qcbounds.code import (
    ABSENT,
    BinaryMatrix,
    CodewordPoly,
    ExponentMatrix,
    WeightMatrix,
)


class ParseError(ValueError):
    def __init__(self, msg: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {msg}" if line is not None else msg)


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append((no, line))
    return out


def _ints(line: str, no: int) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise ParseError(f"expected integers, got {line!r}", no) from None


def _grid(lines: list[tuple[int, str]], rows: int, cols: int) -> list[list[int]]:
    if len(lines) != rows:
        where = lines[-1][0] if lines else None
        raise ParseError(f"expected {rows} matrix rows, found {len(lines)}", where)
    grid = []
    for no, line in lines:
        vals = _ints(line, no)
        if len(vals) != cols:
            raise ParseError(f"expected {cols} entries, found {len(vals)}", no)
        grid.append(vals)
    return grid


def _header(lines: list[tuple[int, str]]) -> tuple[int, list[int]]:
    if not lines:
        raise ParseError("empty file")
    no, line = lines[0]
    head = _ints(line, no)
    if len(head) not in (2, 3) or any(v < 1 for v in head):
        raise ParseError(f"header must be 'm n' or 'm n s' with positive values, got {line!r}", no)
    return no, head


def parse_grid(text: str) -> BinaryMatrix:
    lines = _content_lines(text)
    no, head = _header(lines)
    if len(head) != 2:
        raise ParseError("0/1 grid header must be 'rows cols'", no)
    grid = _grid(lines[1:], *head)
    for (row_no, _), row in zip(lines[1:], grid):
        if any(v not in (0, 1) for v in row):
            raise ParseError("entries must be 0 or 1", row_no)
    return BinaryMatrix.from_lists(grid)


def parse_weight_matrix(text: str) -> WeightMatrix:
    return WeightMatrix(parse_grid(text).to_lists())


def parse_exponent_matrix(text: str) -> ExponentMatrix:
    lines = _content_lines(text)
    no, head = _header(lines)
    if len(head) != 3:
        raise ParseError("exponent matrix header must be 'm n s'", no)
    m, n, s = head
    grid = _grid(lines[1:], m, n)
    entries = []
    for (row_no, _), row in zip(lines[1:], grid):
        for a in row:
            if a != -1 and not 0 <= a < s:
                raise ParseError(f"exponent {a} outside [0, {s}) and not -1", row_no)
        entries.append([ABSENT if a == -1 else a for a in row])
    try:
        return ExponentMatrix(s, entries)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def parse_matrix(text: str) -> Union[WeightMatrix, ExponentMatrix]:
    """Weight or exponent matrix, told apart by the header length."""
    lines = _content_lines(text)
    _, head = _header(lines)
    return parse_weight_matrix(text) if len(head) == 2 else parse_exponent_matrix(text)


def format_grid(bm: Union[BinaryMatrix, WeightMatrix]) -> str:
    rows = bm.entries if isinstance(bm, WeightMatrix) else bm.to_lists()
    out = [f"{len(rows)} {len(rows[0])}"]
    out += [" ".join(str(v) for v in row) for row in rows]
    return "\n".join(out) + "\n"


def format_exponent_matrix(em: ExponentMatrix) -> str:
    out = [f"{em.m} {em.n} {em.s}"]
    out += [" ".join("-1" if a is ABSENT else str(a) for a in row) for row in em.entries]
    return "\n".join(out) + "\n"


def parse_codeword(text: str) -> CodewordPoly:
    raw = text.splitlines()
    idx = 0
    while idx < len(raw) and (not raw[idx].strip() or raw[idx].lstrip().startswith("#")):
        idx += 1
    if idx == len(raw):
        raise ParseError("empty codeword file")
    head = _ints(raw[idx], idx + 1)
    if len(head) != 2 or head[0] < 1 or head[1] < 1:
        raise ParseError("codeword header must be 'n s'", idx + 1)
    n, s = head
    body = raw[idx + 1 :]
    extra = [i for i in range(n, len(body)) if body[i].strip()]
    if extra:
        raise ParseError(f"more than {n} block lines", idx + 2 + extra[0])
    blocks = []
    for b in range(n):
        no = idx + 2 + b
        exps = _ints(body[b], no) if b < len(body) else []
        for e in exps:
            if not 0 <= e < s:
                raise ParseError(f"exponent {e} outside [0, {s})", no)
        if len(set(exps)) != len(exps):
            raise ParseError("repeated exponent in block", no)
        blocks.append(exps)
    return CodewordPoly.from_exponents(s, blocks)


def format_codeword(c: CodewordPoly) -> str:
    out = [f"{c.n} {c.s}"] + [" ".join(map(str, b.exponents())) for b in c.blocks]
    return "\n".join(out) + "\n"


def codeword_to_json(c: CodewordPoly) -> dict:
    return {"n": c.n, "s": c.s, "blocks": [b.exponents() for b in c.blocks]}


def codeword_from_json(obj: dict) -> CodewordPoly:
    c = CodewordPoly.from_exponents(obj["s"], obj["blocks"])
    if c.n != obj["n"]:
        raise ParseError(f"'n' is {obj['n']} but {c.n} blocks were given")
    return c


def exponent_matrix_to_json(em: ExponentMatrix) -> dict:
    return {
        "m": em.m,
        "n": em.n,
        "s": em.s,
        "entries": [[-1 if a is ABSENT else a for a in row] for row in em.entries],
    }


def exponent_matrix_from_json(obj: dict) -> ExponentMatrix:
    return ExponentMatrix(
        obj["s"], [[ABSENT if a == -1 else a for a in row] for row in obj["entries"]]
    )


def bundled(name: str) -> str:
    """Path of a fixture shipped in ``qcbounds/data``."""
    return str(resources.files("qcbounds") / "data" / name)
