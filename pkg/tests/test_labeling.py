import pytest
from hypothesis import given
from hypothesis import strategies as st

from cordial.errors import InvalidLabelingError, PreconditionError
from cordial.graph import Multigraph, complete, counterexample1, cycle, edgeless
from cordial.labeling import (
    augmenting_edges,
    augmenting_vertex_labels,
    deficit_report,
    edges_needed,
    induced_edge_labeling,
    induced_tensor_labeling,
    is_friendly,
    vertices_needed,
)


@st.composite
def labeled_multigraphs(draw, max_n=9, max_m=20):
    n = draw(st.integers(2, max_n))
    pair = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] != p[1])
    g = Multigraph(n, draw(st.lists(pair, max_size=max_m)))
    f = tuple(draw(st.lists(st.integers(0, 1), min_size=n, max_size=n)))
    return g, f


def friendly_labelings(n):
    return st.permutations([0] * (n // 2) + [1] * (n - n // 2))


@pytest.mark.parametrize(
    "g, f, expected",
    [
        (complete(2), (0, 1), (0, 1)),
        (cycle(4), (0, 0, 1, 1), (2, 2)),
        (complete(3), (0, 0, 1), (1, 2)),
    ],
)
def test_induced_edge_labeling(g, f, expected):
    assert induced_edge_labeling(g, f) == expected


def test_parallel_edges_count_with_multiplicity():
    g = Multigraph(3, [(0, 1), (0, 1), (1, 2)])
    assert induced_edge_labeling(g, (0, 1, 1)) == (1, 2)


def test_length_mismatch():
    with pytest.raises(InvalidLabelingError):
        induced_edge_labeling(cycle(4), (0, 1))
    with pytest.raises(InvalidLabelingError):
        deficit_report(cycle(4), (0, 1, 2, 0))


@pytest.mark.parametrize(
    "f, friendly",
    [((0, 0, 1, 1), True), ((0, 0, 0, 1), False), ((0, 0, 0, 1, 1), True)],
)
def test_is_friendly(f, friendly):
    assert is_friendly(edgeless(len(f)), f) is friendly


class TestDeficitReport:
    def test_counterexample1_labeling(self):
        g, _ = counterexample1()
        rep = deficit_report(g, (0, 1, 1, 1, 0, 0, 1, 0))
        assert (rep.zeros_e, rep.ones_e) == (9, 9)
        assert (rep.zeros_v, rep.ones_v) == (4, 4)
        assert rep.friendly and rep.cordial

    def test_k4(self):
        rep = deficit_report(complete(4), (0, 0, 1, 1))
        assert rep.deficit == 2
        assert rep.friendly and not rep.cordial

    def test_edgeless(self):
        rep = deficit_report(edgeless(3), (0, 0, 1))
        assert rep.deficit == 0 and rep.cordial

    @given(labeled_multigraphs())
    def test_counting_invariants(self, gf):
        g, f = gf
        rep = deficit_report(g, f)
        assert rep.zeros_e + rep.ones_e == g.m
        assert rep.zeros_v + rep.ones_v == g.n
        if rep.cordial:
            assert rep.friendly and rep.deficit <= 1

    @given(labeled_multigraphs())
    def test_complement_invariance(self, gf):
        g, f = gf
        flipped = tuple(1 - x for x in f)
        a, b = deficit_report(g, f), deficit_report(g, flipped)
        assert (a.zeros_e, a.ones_e) == (b.zeros_e, b.ones_e)
        assert (a.zeros_v, a.ones_v) == (b.ones_v, b.zeros_v)


class TestEdgesNeeded:
    @pytest.mark.parametrize(
        "g, f, expected",
        [
            (complete(4), (0, 0, 1, 1), 1),
            (cycle(4), (0, 0, 1, 1), 0),
            # equal-label edges 3 + 1 = 4, cross edges 6
            (complete(5), (0, 0, 0, 1, 1), 1),
        ],
    )
    def test_examples(self, g, f, expected):
        assert edges_needed(g, f) == expected
        assert len(augmenting_edges(g, f)) == expected

    def test_requires_friendly(self):
        with pytest.raises(PreconditionError):
            edges_needed(complete(4), (0, 0, 0, 1))

    def test_witness_is_lexicographically_first_pair(self):
        # K4 with 0011 has 2 zero-edges vs 4 one-edges; first equal-labeled pair is (0, 1)
        assert augmenting_edges(complete(4), (0, 0, 1, 1)) == [(0, 1)]

    def test_impossible_augmentation(self):
        # two vertices, triple edge: the only friendly labeling needs 0-labeled edges
        g = Multigraph(2, [(0, 1)] * 3)
        with pytest.raises(PreconditionError):
            augmenting_edges(g, (0, 1))

    @given(st.data())
    def test_witness_makes_labeling_cordial(self, data):
        g, _ = data.draw(labeled_multigraphs(max_n=9, max_m=25).filter(lambda gf: gf[0].n >= 3))
        f = data.draw(friendly_labelings(g.n))
        extra = augmenting_edges(g, f)
        assert all(u != v for u, v in extra)
        assert deficit_report(g.add_edges(extra), f).cordial


class TestVerticesNeeded:
    def test_k4_three_one(self):
        assert vertices_needed(complete(4), (0, 0, 0, 1)) == 1
        assert augmenting_vertex_labels(complete(4), (0, 0, 0, 1)) == (1,)

    def test_cordial_needs_none(self):
        assert vertices_needed(cycle(4), (0, 0, 1, 1)) == 0

    def test_k7_five_two(self):
        f = (0,) * 5 + (1,) * 2
        rep = deficit_report(complete(7), f)
        assert (rep.zeros_e, rep.ones_e) == (11, 10)
        assert vertices_needed(complete(7), f) == 2

    def test_requires_small_deficit(self):
        with pytest.raises(PreconditionError):
            vertices_needed(complete(4), (0, 0, 1, 1))

    @given(labeled_multigraphs())
    def test_witness_makes_labeling_cordial(self, gf):
        g, f = gf
        if deficit_report(g, f).deficit > 1:
            return
        extra = augmenting_vertex_labels(g, f)
        assert deficit_report(g.add_isolated(len(extra)), f + extra).cordial


class TestInducedTensorLabeling:
    def test_single_pair(self):
        assert induced_tensor_labeling((1,), (1,)) == (0,)

    def test_c4_k3_counts(self):
        f = induced_tensor_labeling((0, 0, 1, 1), (0, 0, 1), cycle(4), complete(3))
        assert len(f) == 12
        assert f.count(0) == 2 * 2 + 2 * 1
        assert f.count(1) == 6

    def test_all_zero_left_factor_copies_right(self):
        h = (0, 1, 1, 0, 1)
        assert induced_tensor_labeling((0, 0, 0), h) == h * 3

    def test_mismatch(self):
        with pytest.raises(InvalidLabelingError):
            induced_tensor_labeling((0, 1), (0, 1), cycle(4), complete(2))
