from pathlib import Path

import numpy as np
import pytest
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from pixmark import BitPayload, GrayImage

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def random_image(rng, h, w):
    return GrayImage(rng.integers(0, 256, (h, w)))


def random_payload(rng, n):
    return BitPayload(rng.integers(0, 2, n))


def images(min_side=1, max_side=24, even=False):
    """Hypothesis strategy for GrayImage."""
    step = 2 if even else 1
    lo = max(min_side, step)
    side = st.integers(lo // step, max_side // step).map(lambda k: k * step)
    shape = st.tuples(side, side)
    return shape.flatmap(lambda s: arrays(np.uint8, s)).map(GrayImage)


ACCEPTANCE_LINES = []


@pytest.fixture
def criterion(request):
    """Record a PASS/FAIL line for an acceptance criterion.

    The returned callable takes a boolean and a short detail string; the
    line is kept even when the test fails so the summary stays complete.
    """
    label = request.node.function.__doc__.strip().splitlines()[0]

    def record(passed, detail=""):
        line = f"{'PASS' if passed else 'FAIL'}  {label}  {detail}".rstrip()
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert passed, line

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
