import math

import pytest

from billiards import NormalizedGrid

_acceptance: dict[int, tuple[str, str]] = {}


def coprime_grids(limit: int, ordered: bool = False) -> list[NormalizedGrid]:
    """Every coprime p x q with sides up to ``limit``; ``ordered`` keeps only q <= p."""
    return [
        NormalizedGrid(p, q)
        for p in range(1, limit + 1)
        for q in range(1, (p if ordered else limit) + 1)
        if math.gcd(p, q) == 1
    ]


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, text): numbered exit criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    marker = report.user_properties and dict(report.user_properties).get("acceptance")
    if marker:
        number, text = marker
        _acceptance[number] = ("PASS" if report.passed else "FAIL", text)


@pytest.hookimpl(tryfirst=True)
def pytest_runtest_setup(item):
    marker = item.get_closest_marker("acceptance")
    if marker:
        item.user_properties.append(("acceptance", tuple(marker.args)))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        status, text = _acceptance[number]
        terminalreporter.write_line(f"[{status}] criterion {number}: {text}")
