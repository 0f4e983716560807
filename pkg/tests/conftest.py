from fractions import Fraction

import pytest

from colourgl import GradedSignature, defining_rep, graded_tensor_square

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def dense_mul(a, b):
    """Schoolbook product of nested lists; oracle for sparse products."""
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    return [[sum((a[i][t] * b[t][j] for t in range(k)), Fraction(0)) for j in range(m)] for i in range(n)]


@pytest.fixture(scope="session")
def sig1111():
    return GradedSignature(1, 1, 1, 1)


@pytest.fixture(scope="session")
def tensor1111(sig1111):
    return graded_tensor_square(defining_rep(sig1111))
