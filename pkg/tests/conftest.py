import random
import sys
from pathlib import Path

from hypothesis import HealthCheck, settings, strategies as st

from sl3webs.tableau import partitions, random_standard

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def shapes(draw, max_rows=3, max_size=12, min_size=0):
    size = draw(st.integers(min_size, max_size))
    return draw(st.sampled_from(list(partitions(size, max_rows))))


@st.composite
def tableaux(draw, max_rows=3, max_size=12, min_size=0):
    shape = draw(shapes(max_rows, max_size, min_size))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_standard(shape, random.Random(seed))


@st.composite
def nkk_tableaux(draw, max_size=12):
    """Tableaux of shape (n, k, k): rows k, k, n from the bottom, n <= k."""
    k = draw(st.integers(1, max_size // 2))
    n = draw(st.integers(0, min(k, max_size - 2 * k)))
    shape = (k, k, n) if n else (k, k)
    return random_standard(shape, random.Random(draw(st.integers(0, 2**32 - 1))))


ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
