from __future__ import annotations

import pytest

from golay24 import reference
from golay24.builder import golay_family
from golay24.codec import build_trellis
from golay24.component import build_systematic

_ACCEPTANCE: dict[str, str] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(label): exit criterion, reported in the summary")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    label = dict(report.user_properties).get("acceptance")
    if label:
        _ACCEPTANCE[label] = "PASS" if report.passed else "FAIL"


def pytest_collection_modifyitems(items):
    for item in items:
        marker = item.get_closest_marker("acceptance")
        if marker:
            item.user_properties.append(("acceptance", marker.args[0]))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_ACCEPTANCE, key=lambda s: int(s.split()[0].rstrip("."))):
        terminalreporter.write_line(f"{_ACCEPTANCE[label]}  {label}")


@pytest.fixture(scope="session")
def example_p():
    return reference.EXAMPLE_PARITY


@pytest.fixture(scope="session")
def example_choices():
    return reference.EXAMPLE_CHOICES


@pytest.fixture(scope="session")
def seed_code(example_p):
    return build_systematic(example_p)


@pytest.fixture(scope="session")
def family(example_p, example_choices):
    return golay_family(example_p, example_choices)


@pytest.fixture(scope="session")
def golay(family):
    """Example seed with its first companion."""
    return family[0]


@pytest.fixture(scope="session")
def trellis(golay):
    return build_trellis(golay)
