import os
import sys

import pytest
from hypothesis import HealthCheck, settings, strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from gpcheck.errors import GaussError  # noqa: E402
from gpcheck.gauss import GaussParagraph  # noqa: E402
from gpcheck.generate import label  # noqa: E402

settings.register_profile(
    "default", deadline=None, max_examples=150, derandomize=True,
    suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow],
)
settings.load_profile("default")


@st.composite
def paragraphs(draw, max_letters=7, max_words=3):
    n_words = draw(st.integers(1, max_words))
    k = draw(st.integers(n_words, max(n_words, max_letters)))
    tokens = draw(st.permutations([label(a) for a in range(k) for _ in range(2)]))
    cuts = sorted(draw(st.sets(st.integers(1, 2 * k - 1), min_size=n_words - 1, max_size=n_words - 1)))
    bounds = [0] + cuts + [2 * k]
    words = [tuple(tokens[a:b]) for a, b in zip(bounds, bounds[1:])]
    try:
        return GaussParagraph(tuple(words))
    except GaussError:
        from hypothesis import assume
        assume(False)


# one line per acceptance criterion, shown after the run
RESULTS: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(RESULTS, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)


def P(*pairs):
    from gpcheck.partition import WordWisePartition
    return WordWisePartition.from_lists(pairs)


@pytest.fixture
def mkP():
    return P
