from functools import cache

import pytest
from hypothesis import strategies as st

from spechtres.resolution import build_complex


@cache
def complex_for(n: int, d: int):
    return build_complex(n, d)


@pytest.fixture(scope="session")
def built():
    """Shared cache of built complexes, keyed by (n, d)."""
    return complex_for


@st.composite
def partitions(draw, max_n=7):
    n = draw(st.integers(min_value=1, max_value=max_n))
    parts = []
    remaining = n
    while remaining:
        part = draw(st.integers(min_value=1, max_value=min(remaining, parts[-1] if parts else remaining)))
        parts.append(part)
        remaining -= part
    return tuple(parts)


@st.composite
def fillings(draw, shape):
    n = sum(shape)
    values = draw(st.permutations(range(1, n + 1)))
    rows, k = [], 0
    for length in shape:
        rows.append(tuple(values[k : k + length]))
        k += length
    return tuple(rows)


ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def record():
    """Store one acceptance outcome; reported by :func:`pytest_terminal_summary`."""

    def _record(criterion: int, ok: bool, detail: str) -> None:
        ACCEPTANCE[criterion] = (ok, detail)
        print(f"criterion {criterion}: {'PASS' if ok else 'FAIL'}  {detail}")

    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}")
