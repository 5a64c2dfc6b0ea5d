from hypothesis import HealthCheck, assume, settings
from hypothesis import strategies as st

from basiccovers.graph import from_edges, strip_isolated

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


@st.composite
def bipartite_graphs(draw, max_side=4, min_edges=1, connected=False):
    """Random bipartite graph on sides 1..a and a+1..a+b, isolated vertices stripped."""
    a = draw(st.integers(1, max_side))
    b = draw(st.integers(1, max_side))
    pairs = [(i, a + j) for i in range(1, a + 1) for j in range(1, b + 1)]
    chosen = draw(st.lists(st.sampled_from(pairs), min_size=min_edges, unique=True))
    G, _ = strip_isolated(from_edges(a + b, chosen))
    if connected:
        assume(G.is_connected())
    return G


@st.composite
def trees(draw, max_n=9):
    n = draw(st.integers(2, max_n))
    parents = [draw(st.integers(1, v - 1)) for v in range(2, n + 1)]
    return from_edges(n, [(p, v) for v, p in zip(range(2, n + 1), parents)])


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
