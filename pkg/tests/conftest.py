import functools

import pytest

from burnside.groups import parse_group_spec
from burnside.lattice import build_lattice

CORPUS = (
    [f"cyclic:{n}" for n in range(1, 17)]
    + ["abelian:2,2", "abelian:2,4", "abelian:2,2,2"]
    + [f"elementary:{p}:{n}" for p in (2, 3) for n in (1, 2, 3)]
    + [f"dihedral:{n}" for n in range(3, 9)]
    + ["quaternion:8", "symmetric:3", "symmetric:4", "alternating:4", "alternating:5"]
)

SMALL = ["cyclic:1", "cyclic:2", "cyclic:6", "abelian:2,2", "dihedral:4", "quaternion:8",
         "symmetric:3", "alternating:4"]


@functools.lru_cache(maxsize=None)
def lattice(spec: str):
    L = build_lattice(parse_group_spec(spec))
    L.marks
    return L


@pytest.fixture(autouse=True)
def _isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("BURNSIDE_CACHE_DIR", str(tmp_path / "cache"))


_criteria: dict[int, list[bool]] = {}


def pytest_runtest_logreport(report):
    for key, value in report.user_properties:
        if key == "criterion" and report.when == "call":
            _criteria.setdefault(value, []).append(report.passed)
        if key == "criterion" and report.when == "setup" and not report.passed:
            _criteria.setdefault(value, []).append(False)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        ok = all(_criteria[n])
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}")
