from __future__ import annotations

import time
from pathlib import Path

import pytest

from erections import random_matroid, truncation
from erections.corpus import NAMED

DATA = Path(__file__).parent / "data"

RANDOM_INTENSITIES = (0.0, 0.15, 0.3, 0.45, 0.6, 0.75)


def random_spec(seed: int) -> tuple[int, int, float]:
    """(n, seed, intensity) for the seeded random corpus, n in 3..9."""
    return 3 + seed % 7, seed, RANDOM_INTENSITIES[seed % len(RANDOM_INTENSITIES)]


@pytest.fixture(scope="session")
def named():
    return {name: build() for name, build in NAMED.items()}


@pytest.fixture(scope="session")
def random_corpus():
    return [random_matroid(*random_spec(s)) for s in range(500)]


@pytest.fixture(scope="session")
def random_rank3(random_corpus):
    """Rank-3 truncations of the random corpus (each distinct matroid once)."""
    seen, out = set(), []
    for m in random_corpus:
        if m.rank < 3:
            continue
        t = m if m.rank == 3 else truncation(m, 2)
        if t not in seen:
            seen.add(t)
            out.append(t)
    return out


_ACCEPTANCE: list[tuple[str, bool, str]] = []
_START = time.perf_counter()
SUITE_BUDGET = 600.0


@pytest.fixture
def criterion():
    """Record one acceptance line; the summary is printed at the end of the run."""

    def record(label: str, ok: bool, detail: str = ""):
        _ACCEPTANCE.append((label, bool(ok), detail))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} {label} {detail}".rstrip())
    elapsed = time.perf_counter() - _START
    ok = elapsed < SUITE_BUDGET
    terminalreporter.write_line(
        f"{'PASS' if ok else 'FAIL'} 8 suite runtime {elapsed:.0f}s (budget {SUITE_BUDGET:.0f}s)"
    )
