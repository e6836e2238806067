import random

import pytest

from qcbounds.code import ABSENT, ExponentMatrix, PolyMatrix
from qcbounds.ring import CyclicPoly

X = ABSENT


@pytest.fixture
def example1():
    """H(x) = [[0, x^2, x], [1, 0, x^2]] with s = 3."""
    return ExponentMatrix(3, [[X, 2, 1], [0, X, 2]])


EXAMPLE1_EXPANDED = [
    [0, 0, 0, 0, 1, 0, 0, 0, 1],
    [0, 0, 0, 0, 0, 1, 1, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 1, 0],
    [1, 0, 0, 0, 0, 0, 0, 1, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, 1],
    [0, 0, 1, 0, 0, 0, 1, 0, 0],
]


def poly(s, *exps):
    return CyclicPoly.from_support(s, exps)


def random_poly_matrix(rng: random.Random, q: int, s: int, density: float = 0.7) -> PolyMatrix:
    return PolyMatrix.from_masks(
        s, [[rng.getrandbits(s) if rng.random() < density else 0 for _ in range(q)] for _ in range(q)]
    )


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
