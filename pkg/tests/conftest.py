from __future__ import annotations

import itertools

import pytest

from opcoalg.fincat import Arrow
from opcoalg.instances import PointedSets, build_pointed_sets


class SquashedPointed(PointedSets):
    """Pointed sets whose tensor of morphisms forgets everything once a slot is collapsed.

    The result is not a monoidal category; it exists to exercise fault detection.
    """

    name = "squashed"

    def tensor_arrows(self, arrows):
        out = super().tensor_arrows(arrows)
        if any(f.cod == 1 and f.dom > 1 for f in arrows):
            return Arrow(out.dom, out.cod, (0,) * out.dom)
        return out


@pytest.fixture(scope="session")
def pointed3():
    return build_pointed_sets(3)


@pytest.fixture(scope="session")
def pointed4():
    return build_pointed_sets(4)


def pointed_maps(a, b):
    """Independent enumeration of basepoint-preserving maps as tables."""
    return [(0,) + t for t in itertools.product(range(b), repeat=a - 1)]


_CRITERIA = {}


def pytest_runtest_logreport(report):
    name = report.nodeid.rsplit("::", 1)[-1]
    if "test_acceptance.py" in report.nodeid and name.startswith("test_ac"):
        if report.when == "call" or report.outcome != "passed":
            _CRITERIA[name] = _CRITERIA.get(name, "PASS") if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_CRITERIA):
        number = int(name[7:9])
        label = name[10:].replace("_", " ")
        terminalreporter.write_line(f"AC{number:<2} {_CRITERIA[name]}  {label}")
