import math

import hypothesis
import pytest
from hypothesis import strategies as st

from pedal_kernel.geom_core import Point, Triangle
from pedal_kernel.sampling import triangle_from_angles

hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.register_profile("thorough", max_examples=1000, deadline=None)
hypothesis.settings.load_profile("default")

FIVE_DEG = math.radians(5.0)


@st.composite
def triangles(draw, theta_min=FIVE_DEG):
    """Triangles with all angles >= theta_min, randomly placed."""
    free = math.pi - 3 * theta_min
    u = draw(st.floats(0.0, 1.0))
    v = draw(st.floats(0.0, 1.0))
    if u + v > 1.0:
        u, v = 1.0 - u, 1.0 - v
    al = theta_min + free * u
    be = theta_min + free * v
    ga = math.pi - al - be
    scale = draw(st.floats(0.1, 10.0))
    rot = draw(st.floats(0.0, 2 * math.pi))
    sx = draw(st.floats(-5.0, 5.0))
    sy = draw(st.floats(-5.0, 5.0))
    tri = triangle_from_angles((al, be, ga))
    c, s = math.cos(rot), math.sin(rot)
    moved = [Point(scale * (c * p.x - s * p.y) + sx, scale * (s * p.x + c * p.y) + sy) for p in tri.vertices]
    return Triangle(*moved)


@st.composite
def angle_triples(draw, theta_min=FIVE_DEG):
    free = math.pi - 3 * theta_min
    u = draw(st.floats(0.0, 1.0))
    v = draw(st.floats(0.0, 1.0))
    if u + v > 1.0:
        u, v = 1.0 - u, 1.0 - v
    a = theta_min + free * u
    b = theta_min + free * v
    return a, b, math.pi - a - b


@pytest.fixture
def tri345():
    # A=(0,3), B=(0,0), C=(4,0): right angle at B
    return Triangle(Point(0.0, 3.0), Point(0.0, 0.0), Point(4.0, 0.0))


@pytest.fixture
def scalene():
    return Triangle.from_sides(4.0, 6.0, 5.0)


@pytest.fixture
def equilateral():
    return Triangle.from_sides(1.0, 1.0, 1.0)


ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture
def report_criterion(request):
    """Record one PASS/FAIL line for an acceptance criterion."""
    lines = request.config.stash.setdefault(ACCEPTANCE, [])

    def record(number: int, ok: bool, detail: str) -> None:
        line = f"{'PASS' if ok else 'FAIL'}  criterion {number:2d}: {detail}"
        lines.append((number, line))
        print(line)

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(ACCEPTANCE, [])
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(lines):
        terminalreporter.write_line(line)
