"""Shared fixtures and the acceptance-criteria summary hook."""

import pytest

from swalg.swsym import build_generators

# registry filled by tests/test_acceptance.py; printed after the run
ACCEPTANCE: dict[int, tuple[str, bool]] = {}


def record_acceptance(number: int, name: str, passed: bool) -> None:
    ACCEPTANCE[number] = (name, passed)


@pytest.fixture(scope="session")
def gs2():
    return build_generators(2)


@pytest.fixture(scope="session")
def gs3():
    return build_generators(3)


@pytest.fixture(scope="session")
def gs4():
    return build_generators(4)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        name, passed = ACCEPTANCE[number]
        verdict = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"ACCEPTANCE {number}. {name}: {verdict}")
