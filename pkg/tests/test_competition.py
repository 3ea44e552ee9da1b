"""Competition-style operators, checked against a walk-counting reference."""

import pytest
from hypothesis import given

from dcmkit import (
    Digraph,
    GraphFormatError,
    Multigraph,
    SimpleGraph,
    competition_graph,
    competition_multigraph,
    double_competition_graph,
    double_competition_multigraph,
    reverse,
    simple_graph_from_json,
    simple_graph_to_json,
)
from strategies import digraphs

PATH_PAIR = Digraph(4, {(1, 2), (1, 3), (2, 4), (3, 4)})


def dcm_reference(d):
    """Multiplicity of {x,y} counted over explicit arc pairs, no set algebra."""
    mult = {}
    for x in range(1, d.n + 1):
        for y in range(x + 1, d.n + 1):
            prey = sum(1 for k in range(1, d.n + 1) if d.has_arc(x, k) and d.has_arc(y, k))
            enemies = sum(1 for k in range(1, d.n + 1) if d.has_arc(k, x) and d.has_arc(k, y))
            if prey * enemies:
                mult[(x, y)] = prey * enemies
    return Multigraph(d.n, mult)


def cm_reference(d):
    mult = {}
    for x in range(1, d.n + 1):
        for y in range(x + 1, d.n + 1):
            prey = sum(1 for k in range(1, d.n + 1) if d.has_arc(x, k) and d.has_arc(y, k))
            if prey:
                mult[(x, y)] = prey
    return Multigraph(d.n, mult)


class TestDoubleCompetitionMultigraph:
    def test_path_pair(self):
        m = double_competition_multigraph(PATH_PAIR)
        assert m.edges() == ((2, 3, 1),)

    def test_two_loops_two_cross_arcs(self):
        d = Digraph(2, {(1, 1), (1, 2), (2, 1), (2, 2)})
        assert double_competition_multigraph(d).multiplicity(1, 2) == 4

    def test_arcless(self):
        assert double_competition_multigraph(Digraph(3)).edges() == ()

    @given(digraphs(max_n=5))
    def test_matches_walk_counting(self, d):
        assert double_competition_multigraph(d) == dcm_reference(d)

    @given(digraphs(max_n=5))
    def test_invariant_under_reversal(self, d):
        assert double_competition_multigraph(reverse(d)) == double_competition_multigraph(d)


class TestCompetitionMultigraph:
    def test_one_common_prey(self):
        d = Digraph(3, {(1, 3), (2, 3)})
        assert competition_multigraph(d).multiplicity(1, 2) == 1

    def test_two_common_prey(self):
        d = Digraph(4, {(1, 3), (1, 4), (2, 3), (2, 4)})
        assert competition_multigraph(d).multiplicity(1, 2) == 2

    def test_arcless(self):
        assert competition_multigraph(Digraph(3)).edges() == ()

    @given(digraphs(max_n=5))
    def test_matches_walk_counting(self, d):
        assert competition_multigraph(d) == cm_reference(d)

    @given(digraphs(max_n=4))
    def test_monotone_under_arc_addition(self, d):
        base = competition_multigraph(d)
        for u in range(1, d.n + 1):
            for v in range(1, d.n + 1):
                grown = competition_multigraph(Digraph(d.n, d.arcs | {(u, v)}))
                for x in range(1, d.n + 1):
                    for y in range(x + 1, d.n + 1):
                        assert grown.multiplicity(x, y) >= base.multiplicity(x, y)


class TestSimpleGraphVariants:
    def test_competition_graph_shared_prey(self):
        g = competition_graph(Digraph(3, {(1, 3), (2, 3)}))
        assert g.sorted_edges() == [(1, 2)]

    def test_competition_graph_arcless(self):
        assert competition_graph(Digraph(3)).sorted_edges() == []

    def test_double_competition_graph_path_pair(self):
        assert double_competition_graph(PATH_PAIR).sorted_edges() == [(2, 3)]

    def test_double_competition_graph_one_sided(self):
        g = double_competition_graph(Digraph(3, {(1, 3), (2, 3)}))
        assert g.sorted_edges() == []

    @given(digraphs(max_n=5))
    def test_cg_is_support_of_cm(self, d):
        m = competition_multigraph(d)
        g = competition_graph(d)
        assert g.sorted_edges() == [(x, y) for x, y, _ in m.edges()]

    @given(digraphs(max_n=5))
    def test_dcg_is_support_of_dcm(self, d):
        m = double_competition_multigraph(d)
        g = double_competition_graph(d)
        assert g.sorted_edges() == [(x, y) for x, y, _ in m.edges()]


class TestProductLaw:
    @given(digraphs(max_n=5))
    def test_dcm_factors_through_reversal(self, d):
        dcm = double_competition_multigraph(d)
        forward = competition_multigraph(d)
        backward = competition_multigraph(reverse(d))
        for x in range(1, d.n + 1):
            for y in range(x + 1, d.n + 1):
                assert dcm.multiplicity(x, y) == forward.multiplicity(x, y) * backward.multiplicity(x, y)


class TestReverse:
    def test_flips_arcs(self):
        assert reverse(Digraph(2, {(1, 2)})) == Digraph(2, {(2, 1)})

    @given(digraphs())
    def test_involution(self, d):
        assert reverse(reverse(d)) == d


class TestSimpleGraphJson:
    def test_round_trip(self):
        g = SimpleGraph(3, {(1, 2), (2, 3)})
        assert simple_graph_from_json(simple_graph_to_json(g)) == g

    @pytest.mark.parametrize(
        "text",
        [
            '{"n": 2, "edges": [[2, 1]]}',
            '{"n": 2, "edges": [[1, 1]]}',
            '{"n": 2, "edges": [[1, 3]]}',
            '{"n": 2, "edges": [[1, 2], [1, 2]]}',
        ],
    )
    def test_malformed_documents_rejected(self, text):
        with pytest.raises(GraphFormatError):
            simple_graph_from_json(text)
