import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cordial.errors import InvalidArgumentError, InvalidSpecError, ParseError, UnsupportedInputError
from cordial.graph import (
    JoinSpec,
    Multigraph,
    PartSpec,
    bipartition,
    complete,
    complete_multipartite,
    compositions,
    counterexample1,
    cycle,
    edgeless,
    is_bipartite,
    is_connected,
    lee_liu_join,
    path,
    star,
    tensor_product,
)
from cordial.io import format_edge_list, format_labeling, parse_edge_list, parse_labeling

part_sizes = st.lists(st.integers(1, 6), min_size=1, max_size=6)


@st.composite
def multigraphs(draw, max_n=8, max_m=16):
    n = draw(st.integers(2, max_n))
    pair = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] != p[1])
    return Multigraph(n, draw(st.lists(pair, max_size=max_m)))


class TestMultigraph:
    def test_loops_rejected(self):
        with pytest.raises(InvalidArgumentError):
            Multigraph(3, [(1, 1)])

    def test_endpoint_range(self):
        with pytest.raises(InvalidArgumentError):
            Multigraph(3, [(0, 3)])

    def test_equality_ignores_edge_order_and_orientation(self):
        a = Multigraph(3, [(0, 1), (2, 1), (0, 1)])
        b = Multigraph(3, [(1, 2), (1, 0), (1, 0)])
        assert a == b
        assert a.m == 3
        assert not a.is_simple()

    def test_equality_is_label_sensitive(self):
        assert path(3) != Multigraph(3, [(0, 2), (1, 2)])

    def test_relabel(self):
        g = path(3).relabel([2, 0, 1])
        assert g == Multigraph(3, [(2, 0), (0, 1)])
        with pytest.raises(InvalidArgumentError):
            path(3).relabel([0, 0, 1])


class TestPartSpec:
    def test_derived_fields(self):
        spec = PartSpec([1, 2, 3, 4, 5])
        assert spec.k == 3
        assert spec.total == 15
        assert [list(b) for b in PartSpec([2, 1]).blocks] == [[0, 1], [2]]

    @pytest.mark.parametrize("sizes", [[], [0], [2, -1]])
    def test_invalid(self, sizes):
        with pytest.raises(InvalidSpecError):
            PartSpec(sizes)

    def test_parse(self):
        assert PartSpec.parse("1, 3,5").sizes == (1, 3, 5)
        with pytest.raises(InvalidSpecError):
            PartSpec.parse("1,x")


class TestGenerators:
    def test_k4(self):
        g = complete_multipartite([1, 1, 1, 1])
        assert (g.n, g.m) == (4, 6)
        assert g == complete(4)

    def test_k23(self):
        g = complete_multipartite([2, 3])
        assert (g.n, g.m) == (5, 6)

    def test_135_against_direct_count(self):
        g = complete_multipartite([1, 3, 5])
        part_of = [0] + [1] * 3 + [2] * 5
        direct = sum(1 for u, v in itertools.combinations(range(9), 2) if part_of[u] != part_of[v])
        assert direct == 23
        assert (g.n, g.m) == (9, 23)

    def test_no_intra_part_edges(self):
        spec = PartSpec([2, 3, 1])
        block_of = {v: i for i, b in enumerate(spec.blocks) for v in b}
        assert all(block_of[u] != block_of[v] for u, v in complete_multipartite(spec).edges)

    @given(part_sizes)
    def test_edge_count_formula(self, sizes):
        g = complete_multipartite(sizes)
        total = sum(sizes)
        assert g.m == (total * total - sum(s * s for s in sizes)) // 2
        assert g.is_simple()

    def test_simple_families(self):
        assert complete(4).m == 6
        assert cycle(4).m == 4
        assert path(1).m == 0
        assert path(5).m == 4
        assert edgeless(3).m == 0
        assert star(4).m == 4

    @pytest.mark.parametrize("maker, n", [(cycle, 2), (complete, 0), (path, 0), (edgeless, 0)])
    def test_bad_sizes(self, maker, n):
        with pytest.raises(InvalidArgumentError):
            maker(n)

    def test_compositions(self):
        assert sorted(compositions(3)) == [(1, 1, 1), (1, 2), (2, 1), (3,)]
        assert sum(1 for _ in compositions(12)) == 2**11
        assert list(compositions(0)) == []


class TestJoin:
    def test_counterexample_instance(self):
        spec = JoinSpec([{0, 1}, {1, 2}], [{0, 1}, {2, 3}])
        g = lee_liu_join(complete(4), cycle(4), spec)
        assert (g.n, g.m) == (8, 6 + 4 + 4 + 4)

    def test_empty_spec_is_disjoint_union(self):
        g = lee_liu_join(complete(3), path(2), JoinSpec())
        assert g == Multigraph(5, [(0, 1), (0, 2), (1, 2), (3, 4)])

    def test_single_edge(self):
        g = lee_liu_join(Multigraph(1), Multigraph(1), JoinSpec([{0}], [{0}]))
        assert g == complete(2)

    def test_overlapping_parts(self):
        with pytest.raises(InvalidSpecError):
            JoinSpec([{0}, {1}], [{0, 1}, {1, 2}])

    def test_subset_out_of_range(self):
        with pytest.raises(InvalidSpecError):
            lee_liu_join(complete(2), complete(2), JoinSpec([{5}], [{0}]))

    @given(multigraphs(), multigraphs(), st.data())
    @settings(max_examples=60)
    def test_edge_count_identity(self, g, h, data):
        ell = data.draw(st.integers(0, 3))
        h_vertices = data.draw(st.permutations(range(h.n)))
        cuts = sorted(data.draw(st.lists(st.integers(0, h.n), min_size=ell, max_size=ell)))
        h_parts, start = [], 0
        for c in cuts:
            h_parts.append(set(h_vertices[start:c]) if c > start else set())
            start = max(start, c)
        g_subsets = [data.draw(st.sets(st.integers(0, g.n - 1))) for _ in range(ell)]
        joined = lee_liu_join(g, h, JoinSpec(g_subsets, h_parts))
        assert joined.m == g.m + h.m + sum(len(a) * len(b) for a, b in zip(g_subsets, h_parts))

    def test_counterexample1_layout(self):
        g, names = counterexample1()
        assert names == ("a", "b", "c", "d", "A", "B", "C", "D")
        a, b, c, d, A, B, C, D = range(8)
        # H = C4 on a-b-c-d, G = K4 on A..D
        for u, v in [(a, b), (b, c), (c, d), (a, d), (A, B), (A, C), (A, D), (B, C), (B, D), (C, D)]:
            assert (min(u, v), max(u, v)) in g.edges
        for u, v in [(A, a), (A, b), (B, a), (B, b), (B, c), (B, d), (C, c), (C, d)]:
            assert (min(u, v), max(u, v)) in g.edges
        assert g.m == 18


class TestTensorProduct:
    def test_k2_k2_is_two_disjoint_edges(self):
        g = tensor_product(complete(2), complete(2))
        # (0,0)-(1,1) and (0,1)-(1,0)
        assert g == Multigraph(4, [(0, 3), (1, 2)])

    def test_c4_k3(self):
        g = tensor_product(cycle(4), complete(3))
        assert (g.n, g.m) == (12, 24)

    def test_edgeless_factor(self):
        assert tensor_product(cycle(5), edgeless(3)).m == 0

    def test_definition(self):
        g1, g2 = path(3), complete(3)
        prod = tensor_product(g1, g2)
        adj1 = {frozenset(e) for e in g1.edges}
        adj2 = {frozenset(e) for e in g2.edges}
        expected = set()
        for (u1, u2), (v1, v2) in itertools.combinations(itertools.product(range(3), range(3)), 2):
            if frozenset((u1, v1)) in adj1 and frozenset((u2, v2)) in adj2:
                expected.add(tuple(sorted((u1 * 3 + u2, v1 * 3 + v2))))
        assert set(prod.edges) == expected
        assert prod.is_simple()

    def test_multigraph_rejected(self):
        with pytest.raises(UnsupportedInputError):
            tensor_product(Multigraph(2, [(0, 1), (0, 1)]), complete(2))

    @given(st.integers(1, 5), st.integers(1, 5), st.data())
    @settings(max_examples=40)
    def test_commuting_counts(self, n1, n2, data):
        def simple(n):
            pairs = list(itertools.combinations(range(n), 2))
            return Multigraph(n, data.draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else [])

        g1, g2 = simple(n1), simple(n2)
        a, b = tensor_product(g1, g2), tensor_product(g2, g1)
        assert (a.n, a.m) == (b.n, b.m)
        assert a.m == 2 * g1.m * g2.m


class TestPredicates:
    def test_c4(self):
        assert is_bipartite(cycle(4))
        assert bipartition(cycle(4)) == (frozenset({0, 2}), frozenset({1, 3}))

    def test_k3(self):
        assert not is_bipartite(complete(3))
        assert bipartition(complete(3)) is None

    def test_connectivity(self):
        assert not is_connected(edgeless(2))
        assert is_connected(edgeless(1))
        assert is_connected(path(4))
        assert not is_connected(tensor_product(complete(2), complete(2)))

    def test_vertex_zero_on_x_side(self):
        x, y = bipartition(star(3).relabel([3, 0, 1, 2]))
        assert 0 in x


class TestEdgeListFormat:
    def test_round_trip_is_byte_identical(self):
        g, names = counterexample1()
        text = format_edge_list(g, names)
        parsed, parsed_names = parse_edge_list(text)
        assert parsed == g
        assert format_edge_list(parsed, parsed_names) == text

    @given(multigraphs())
    def test_round_trip_property(self, g):
        text = format_edge_list(g)
        parsed, names = parse_edge_list(text)
        assert parsed == g and names == {}
        assert format_edge_list(parsed) == text

    def test_multiplicity_and_comments(self):
        g, names = parse_edge_list("# header comment\n3 3\n#name 2 hub\n0 1\n# mid\n0 1\n1 2\n")
        assert g.multiplicities()[(0, 1)] == 2
        assert names == {2: "hub"}

    @pytest.mark.parametrize(
        "text, lineno",
        [
            ("3 2\n0 1\n1 x\n", 3),
            ("3 1\n1 1\n", 2),
            ("3 1\n0 3\n", 2),
            ("x\n", 1),
            ("3 1\n#name two 0\n0 1\n", 2),
        ],
    )
    def test_errors_carry_line_numbers(self, text, lineno):
        with pytest.raises(ParseError) as info:
            parse_edge_list(text)
        assert info.value.lineno == lineno
        assert f"line {lineno}" in str(info.value)

    def test_edge_count_mismatch(self):
        with pytest.raises(ParseError):
            parse_edge_list("3 2\n0 1\n")

    def test_labeling_format(self):
        assert format_labeling((0, 1, 1)) == "011\n"
        assert parse_labeling("011\n") == (0, 1, 1)
        with pytest.raises(ParseError):
            parse_labeling("012\n")
        with pytest.raises(ParseError):
            parse_labeling("01\n10\n")
