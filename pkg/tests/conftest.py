import itertools

import numpy as np
import pytest

ACCEPTANCE_LINES: list[str] = []


def all_codewords(code) -> np.ndarray:
    """Every codeword of a small code, one per row (message order, last symbol fastest)."""
    F = code.spec
    T = F.np_tables()
    add, mul = T["add"], T["mul"]
    G = np.array(code.generator_matrix(), dtype=add.dtype).reshape(-1, code.n)
    msgs = np.array(list(itertools.product(range(F.order), repeat=G.shape[0])), dtype=np.int64)
    words = np.zeros((len(msgs), code.n), dtype=add.dtype)
    for i in range(G.shape[0]):
        words = add[words, mul[msgs[:, i][:, None], G[i][None, :]]]
    return words


@pytest.fixture
def acceptance_log():
    def log(number: int, ok: bool, detail: str) -> None:
        ACCEPTANCE_LINES.append(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}")

    return log


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
