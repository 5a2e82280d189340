import time
from pathlib import Path

import pytest

from weightgen import genfunc_c2, lie_rank2

GOLDEN = Path(__file__).parent / "golden"

_acceptance_lines: list[str] = []


def clear_caches():
    lie_rank2._freudenthal_table.cache_clear()
    lie_rank2._weyl_character.cache_clear()
    genfunc_c2._SERIES_CACHE.clear()


class Criterion:
    """Times one acceptance criterion from a cold cache and records a status line."""

    def __init__(self, number: int, title: str, budget: float):
        self.number, self.title, self.budget = number, title, budget
        self.detail = ""

    def __enter__(self):
        clear_caches()
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        ok = exc_type is None and elapsed < self.budget
        status = "PASS" if ok else "FAIL"
        why = ""
        if exc_type is not None:
            why = f" [{exc_type.__name__}: {str(exc).splitlines()[0] if str(exc) else ''}]"
        elif not ok:
            why = f" [over budget {self.budget:g}s]"
        line = f"criterion {self.number:>2} {status}  {self.title}  ({elapsed:.2f}s){why}"
        if self.detail:
            line += f"  {self.detail}"
        _acceptance_lines.append(line)
        print(line)
        if exc_type is None:
            assert elapsed < self.budget, f"criterion {self.number} took {elapsed:.2f}s (budget {self.budget}s)"
        return False


@pytest.fixture
def criterion():
    return Criterion


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_acceptance_lines, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
