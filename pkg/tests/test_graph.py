import pytest
from hypothesis import given
from hypothesis import strategies as st

from oddgraceful import (
    FamilySpec,
    Graph,
    InvalidParameterError,
    ValidationError,
    connected_components,
    make_cycle,
    make_path,
    make_union,
)


def test_make_path_single_vertex():
    g = make_path(1)
    assert g.vertex_count == 1
    assert g.edges == ()


def test_make_path_one_edge():
    assert make_path(2).edges == ((0, 1),)


def test_make_path_five():
    assert make_path(5).edges == ((0, 1), (1, 2), (2, 3), (3, 4))


def test_make_path_rejects_zero():
    with pytest.raises(InvalidParameterError):
        make_path(0)


def test_make_cycle_triangle():
    assert make_cycle(3).edges == ((0, 1), (1, 2), (2, 0))


@pytest.mark.parametrize("length", [4, 10])
def test_make_cycle_counts(length):
    g = make_cycle(length)
    assert g.vertex_count == length
    assert g.edge_count == length


def test_make_cycle_rejects_small():
    with pytest.raises(InvalidParameterError):
        make_cycle(2)


@pytest.mark.parametrize(
    "m, n, vertices, edges",
    [(4, 3, 7, 6), (8, 7, 15, 14), (6, 5, 11, 10)],
)
def test_make_union_counts(m, n, vertices, edges):
    g = make_union(FamilySpec(m, n))
    assert g.vertex_count == vertices
    assert g.edge_count == edges
    assert g.edge_count == FamilySpec(m, n).edge_count


def test_make_union_layout():
    # Cycle edges first in ring order, then the path chain.
    g = make_union(FamilySpec(4, 3))
    assert g.edges == ((0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6))


def test_union_components_recover_family():
    g = make_union(FamilySpec(8, 5))
    comps = connected_components(g)
    assert [len(c) for c in comps] == [8, 5]
    cycle, path = comps
    cycle_degrees = sorted(g.degree(v) for v in cycle)
    path_degrees = sorted(g.degree(v) for v in path)
    assert cycle_degrees == [2] * 8
    assert path_degrees == [1, 1, 2, 2, 2]


def test_builders_are_deterministic():
    spec = FamilySpec(10, 9)
    assert make_union(spec) == make_union(spec)
    assert make_cycle(6) == make_cycle(6)


@given(st.integers(4, 30).filter(lambda m: m % 2 == 0), st.integers(2, 30))
def test_union_edge_count_formula(m, n):
    assert make_union(FamilySpec(m, n)).edge_count == m + n - 1


@pytest.mark.parametrize("m, n", [(3, 5), (2, 5), (7, 4), (4, 1), (4, 0)])
def test_family_spec_rejects_bad_orders(m, n):
    with pytest.raises(InvalidParameterError):
        FamilySpec(m, n)


def test_family_spec_derived_quantities():
    spec = FamilySpec(8, 7)
    assert spec.edge_count == 14
    assert spec.half_cycle == 4


def test_graph_rejects_self_loop():
    with pytest.raises(ValidationError):
        Graph(3, ((0, 0),))


def test_graph_rejects_duplicate_edge_either_orientation():
    with pytest.raises(ValidationError):
        Graph(3, ((0, 1), (1, 0)))


def test_graph_rejects_endpoint_out_of_range():
    with pytest.raises(ValidationError):
        Graph(2, ((0, 2),))
    with pytest.raises(ValidationError):
        Graph(2, ((-1, 0),))


def test_graph_rejects_negative_vertex_count():
    with pytest.raises(ValidationError):
        Graph(-1, ())


def test_graph_is_immutable():
    g = make_path(3)
    with pytest.raises(AttributeError):
        g.vertex_count = 5


def test_adjacency():
    g = make_cycle(4)
    assert g.adjacency == ((1, 3), (0, 2), (1, 3), (2, 0))
    assert g.degree(0) == 2
