import math
import sys

import pytest

from bryophylla.canonical import classify_region, make_canonical, RegionLabel

_SKIP = {RegionLabel.DegeneratePhi, RegionLabel.Rone_AB_CD, RegionLabel.RminusOne_BD}


def valid_grid(n=50, margin=0.02):
    """n x n points of (0, pi)^2 away from the loci where no bryophyllum exists."""
    pts = []
    for i in range(n):
        phi = margin + (math.pi - 2 * margin) * i / (n - 1)
        for j in range(n):
            psi = margin + (math.pi - 2 * margin) * j / (n - 1)
            if classify_region(phi, psi, eps=1e-6) in _SKIP:
                continue
            pts.append((phi, psi))
    return pts


@pytest.fixture(scope="session")
def farey_b():
    return make_canonical(math.pi / 2, math.pi / 5)


@pytest.fixture(scope="session")
def peano():
    return make_canonical(math.pi / 2, math.pi / 4)


@pytest.fixture(scope="session")
def point_l():
    return make_canonical(2 * math.pi / 3, math.pi / 6)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
