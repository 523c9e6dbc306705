import os
import sys

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from qhh import QQ, Field, MonomialAlgebra, Quiver, SubalgebraPair, load  # noqa: E402
from qhh.errors import NotFiniteDimensional  # noqa: E402
from qhh.quiver import Arrow  # noqa: E402

FIXTURES = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "fixtures")

# lines collected by test_acceptance, echoed after the run
ACCEPTANCE_LINES = []

settings.register_profile("default", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda l: int(l.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)


def fixture_path(name):
    return os.path.join(FIXTURES, name)


def load_fixture(name, field=QQ):
    return load(fixture_path(name), field)


@pytest.fixture
def notsolv():
    return load_fixture("notsolv.quiv")


@pytest.fixture
def example2():
    return load_fixture("example2.quiv")


def make_algebra(n, arrows, relations=(), field=QQ, name="A"):
    """Algebra on vertices 1..n; arrows as (name, s, t); relations as name tuples."""
    q = Quiver(range(1, n + 1), [Arrow(a, s, t) for a, s, t in arrows])
    return MonomialAlgebra(q, relations, field, name)


def kronecker(n, field=QQ):
    return make_algebra(2, [(f"a{i}", 1, 2) for i in range(1, n + 1)], (), field)


def bouquet(n, field=QQ):
    arrows = [(f"a{i}", 1, 1) for i in range(1, n + 1)]
    rels = [(x, y) for x, _, _ in arrows for y, _, _ in arrows]
    return make_algebra(1, arrows, rels, field)


@st.composite
def algebras(draw, max_vertices=4, max_arrows=5, field=QQ, loops=True):
    n = draw(st.integers(1, max_vertices))
    ends = st.tuples(st.integers(1, n), st.integers(1, n))
    if not loops:
        ends = ends.filter(lambda e: e[0] != e[1])
    pairs = draw(st.lists(ends, max_size=max_arrows)) if (loops or n > 1) else []
    arrows = [(f"x{i}", s, t) for i, (s, t) in enumerate(pairs, 1)]
    twos = [(a, b) for a, _, t in arrows for b, s, _ in arrows if t == s]
    keep = draw(st.lists(st.booleans(), min_size=len(twos), max_size=len(twos)))
    rels = [p for p, k in zip(twos, keep) if k]
    try:
        alg = make_algebra(n, arrows, rels, field)
        if alg.dim > 30:
            raise NotFiniteDimensional("too large for a quick test")
        return alg
    except NotFiniteDimensional:
        return make_algebra(n, arrows, twos, field)


@st.composite
def pairs(draw, **kw):
    alg = draw(algebras(**kw))
    names = alg.quiver.arrow_names
    mask = draw(st.lists(st.booleans(), min_size=len(names), max_size=len(names)))
    return SubalgebraPair.from_arrows(alg, [n for n, m in zip(names, mask) if m])


fields = st.sampled_from([QQ, Field(2), Field(3)])
