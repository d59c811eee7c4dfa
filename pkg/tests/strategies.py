"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from oddgraceful import FamilySpec, Graph, min_path_order


@st.composite
def small_graphs(draw, max_vertices=8, min_vertices=0):
    """Arbitrary simple graphs with random edge orientation and order."""
    n = draw(st.integers(min_vertices, max_vertices))
    pool = [(a, b) for a in range(n) for b in range(a + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pool), unique=True, max_size=len(pool))) if pool else []
    edges = []
    for a, b in chosen:
        if draw(st.booleans()):
            a, b = b, a
        edges.append((a, b))
    return Graph(n, tuple(edges))


@st.composite
def family_specs(draw, max_cycle=20, extra_path=8, below_bound=False):
    """Cycle/path pairs, by default at or above the minimum path order."""
    m = draw(st.sampled_from(range(4, max_cycle + 1, 2)))
    lo = min_path_order(m)
    if below_bound:
        n = draw(st.integers(2, max(2, lo - 1)))
    else:
        n = draw(st.integers(lo, lo + extra_path))
    return FamilySpec(m, n)
