from __future__ import annotations

from pathlib import Path

import pytest

from gcqc.pauli import parse_pauli
from gcqc.stabilizer import StabilizerCode

FIXTURES = Path(__file__).resolve().parents[1] / "src" / "gcqc" / "fixtures"

_acceptance_results: list[tuple[str, str, str]] = []


def P(text: str):
    return parse_pauli(text)


def code(n: int, gens: str, pairs=None) -> StabilizerCode:
    """``gens`` is whitespace separated; ``pairs`` is a list of ``(X̄, Z̄)`` strings."""
    parsed = [(P(x), P(z)) for x, z in pairs] if pairs is not None else None
    return StabilizerCode.build(n, [P(g) for g in gens.split()], parsed)


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def example1_inner() -> StabilizerCode:
    return code(4, "XXXX ZZZZ", [("XIXI", "ZZII"), ("XXII", "ZIZI")])


@pytest.fixture
def example2_inner() -> StabilizerCode:
    return code(4, "ZZZZ ZZII", [("IZZZ", "XXXX"), ("IZIZ", "IIXX")])


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is not None and report.when == "call":
        label, title = marker.args
        _acceptance_results.append((label, "PASS" if report.passed else "FAIL", title))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for label, verdict, title in sorted(_acceptance_results):
        terminalreporter.write_line(f"{label} {verdict}  {title}")
