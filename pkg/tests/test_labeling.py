import pytest
from hypothesis import given, settings

from oddgraceful import (
    DuplicateEdgeWeight,
    DuplicateVertexLabel,
    EdgeWeightEven,
    EdgeWeightSetMismatch,
    FamilySpec,
    Graph,
    IncompleteLabelingError,
    Labeling,
    VertexLabelOutOfRange,
    complement_labeling,
    edge_weights,
    label_closed_form,
    make_path,
    make_union,
    verify_odd_graceful,
)
from oddgraceful.construct import BoundPolicy

from strategies import family_specs

# Verified fixture for the smallest family instance: cycle labels then path labels.
C4_P3_LABELS = Labeling((0, 11, 2, 7, 1, 4, 3))


def test_edge_weights_single_edge():
    g = make_path(2)
    assert edge_weights(g, Labeling((0, 1))) == [((0, 1), 1)]


def test_edge_weights_family_instance():
    g = make_union(FamilySpec(4, 3))
    weights = [w for _, w in edge_weights(g, C4_P3_LABELS)]
    assert weights == [11, 9, 5, 7, 3, 1]


def test_edge_weights_order_matches_edges():
    g = make_union(FamilySpec(4, 3))
    assert [e for e, _ in edge_weights(g, C4_P3_LABELS)] == list(g.edges)


def test_edge_weight_zero_on_constant_edge():
    g = make_path(2)
    assert edge_weights(g, Labeling((5, 5))) == [((0, 1), 0)]
    report = verify_odd_graceful(g, Labeling((5, 5)))
    assert not report.ok


def test_edge_weights_requires_total_labeling():
    with pytest.raises(IncompleteLabelingError):
        edge_weights(make_path(3), Labeling((0, 1)))
    with pytest.raises(IncompleteLabelingError):
        verify_odd_graceful(make_path(3), Labeling((0, 1)))


def test_verify_accepts_family_fixture():
    report = verify_odd_graceful(make_union(FamilySpec(4, 3)), C4_P3_LABELS)
    assert report.ok
    assert report.violations == ()


def test_verify_accepts_two_vertex_path():
    assert verify_odd_graceful(make_path(2), Labeling((0, 1))).ok


def test_duplicate_label_below_minimum_path_order():
    # The (10, 6) construction collides on label 8 and nothing else.
    spec = FamilySpec(10, 6)
    labeling = label_closed_form(spec, BoundPolicy.FORCE)
    report = verify_odd_graceful(make_union(spec), labeling)
    assert not report.ok
    assert report.violations == (DuplicateVertexLabel(8, (8, 15)),)


def test_out_of_range_label_reported_per_vertex():
    g = make_path(2)  # q = 1 so labels must be 0 or 1
    report = verify_odd_graceful(g, Labeling((0, 2)))
    assert VertexLabelOutOfRange(1, 2) in report.violations


def test_negative_label_is_out_of_range():
    report = verify_odd_graceful(make_path(2), Labeling((-1, 0)))
    assert VertexLabelOutOfRange(0, -1) in report.violations


def test_even_weight_reported_with_edge():
    g = make_path(3)
    report = verify_odd_graceful(g, Labeling((0, 2, 3)))
    assert EdgeWeightEven((0, 1), 2) in report.violations


def test_duplicate_weight_reported_with_edges():
    g = make_path(3)  # q = 2, weights must be {1, 3}
    report = verify_odd_graceful(g, Labeling((1, 0, 1)))
    kinds = {type(v) for v in report.violations}
    assert DuplicateVertexLabel in kinds  # label 1 reused
    assert DuplicateEdgeWeight in kinds
    dup = next(v for v in report.violations if isinstance(v, DuplicateEdgeWeight))
    assert dup.weight == 1
    assert dup.edges == ((0, 1), (1, 2))


def test_weight_set_mismatch_lists_missing_and_extra():
    g = make_path(3)
    report = verify_odd_graceful(g, Labeling((0, 2, 3)))
    mismatch = next(v for v in report.violations if isinstance(v, EdgeWeightSetMismatch))
    assert mismatch.missing == (3,)
    assert mismatch.extra == (2,)


def test_all_violations_enumerated_not_just_first():
    g = make_union(FamilySpec(4, 3))
    # Duplicate label, even weights, and a set mismatch at once.
    report = verify_odd_graceful(g, Labeling((0, 11, 2, 7, 0, 4, 3)))
    kinds = {type(v) for v in report.violations}
    assert DuplicateVertexLabel in kinds
    assert len(report.violations) >= 2


def test_empty_graph_verifies():
    assert verify_odd_graceful(Graph(0), Labeling(())).ok


def test_single_vertex_cannot_be_labeled():
    # With no edges the admissible label range is empty.
    report = verify_odd_graceful(make_path(1), Labeling((0,)))
    assert not report.ok
    assert VertexLabelOutOfRange(0, 0) in report.violations


def test_verifier_is_pure():
    g = make_union(FamilySpec(4, 3))
    assert verify_odd_graceful(g, C4_P3_LABELS) == verify_odd_graceful(g, C4_P3_LABELS)


def test_report_consistency_enforced():
    from oddgraceful import VerifyReport

    with pytest.raises(ValueError):
        VerifyReport(True, (DuplicateVertexLabel(0, (0, 1)),))
    with pytest.raises(ValueError):
        VerifyReport(False, ())


@settings(max_examples=60)
@given(family_specs())
def test_parity_law_on_accepted_labelings(spec):
    # Odd weights force opposite label parity across every edge.
    g = make_union(spec)
    labeling = label_closed_form(spec)
    assert verify_odd_graceful(g, labeling).ok
    for a, b in g.edges:
        assert (labeling[a] + labeling[b]) % 2 == 1


@settings(max_examples=60)
@given(family_specs())
def test_complement_closure(spec):
    g = make_union(spec)
    labeling = label_closed_form(spec)
    mirrored = complement_labeling(labeling, g.edge_count)
    assert verify_odd_graceful(g, mirrored).ok
    assert mirrored != labeling
