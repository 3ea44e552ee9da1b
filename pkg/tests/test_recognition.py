"""Recognition by exhaustive enumeration: counts, witnesses, catalogs, bounds."""

import pytest
from hypothesis import given, settings

from dcmkit import (
    Digraph,
    DigraphClass,
    Multigraph,
    catalog,
    class_member,
    class_size,
    double_competition_multigraph,
    enumerate_digraphs,
    is_acyclic,
    recognize,
    verify_certificate,
)
from dcmkit.recognition import bound_ceiling
from strategies import digraphs

ALL_CLASSES = list(DigraphClass)


class TestEnumeration:
    @pytest.mark.parametrize(
        "n,digraph_class,expected",
        [
            (1, DigraphClass.ARBITRARY, 2),
            (2, DigraphClass.ARBITRARY, 16),
            (3, DigraphClass.ARBITRARY, 512),
            (2, DigraphClass.LOOPLESS, 4),
            (3, DigraphClass.LOOPLESS, 64),
            (2, DigraphClass.REFLEXIVE, 4),
            (3, DigraphClass.REFLEXIVE, 64),
            (1, DigraphClass.ACYCLIC, 1),
            (2, DigraphClass.ACYCLIC, 3),
        ],
    )
    def test_counts(self, n, digraph_class, expected):
        assert sum(1 for _ in enumerate_digraphs(n, digraph_class)) == expected

    def test_two_vertex_dags_exactly(self):
        dags = {d.arcs for d in enumerate_digraphs(2, DigraphClass.ACYCLIC)}
        assert dags == {frozenset(), frozenset({(1, 2)}), frozenset({(2, 1)})}

    def test_dag_count_matches_filtering(self):
        # trusted only after rederiving from the unrestricted enumeration
        by_filter = sum(1 for d in enumerate_digraphs(3, DigraphClass.ARBITRARY) if is_acyclic(d))
        by_class = sum(1 for _ in enumerate_digraphs(3, DigraphClass.ACYCLIC))
        assert by_filter == by_class == 25

    @pytest.mark.parametrize("digraph_class", ALL_CLASSES)
    def test_no_duplicates_and_membership(self, digraph_class):
        seen = set()
        for d in enumerate_digraphs(3, digraph_class):
            assert d.arcs not in seen
            seen.add(d.arcs)
            assert class_member(d, digraph_class)

    @pytest.mark.parametrize("digraph_class", ALL_CLASSES)
    def test_class_size_agrees(self, digraph_class):
        for n in (1, 2, 3):
            size = class_size(n, digraph_class)
            if size is not None:
                assert sum(1 for _ in enumerate_digraphs(n, digraph_class)) == size

    def test_over_cap_refused(self):
        with pytest.raises(ValueError):
            next(enumerate_digraphs(6, DigraphClass.ARBITRARY))


class TestRecognize:
    def test_empty_multigraph_arbitrary(self):
        result = recognize(Multigraph(3), "arbitrary")
        assert result.recognized
        assert result.witness_digraph == Digraph(3)

    def test_empty_multigraph_reflexive(self):
        # loops alone produce no common out-neighbors between distinct vertices
        result = recognize(Multigraph(3), "reflexive")
        assert result.recognized
        assert class_member(result.witness_digraph, DigraphClass.REFLEXIVE)

    def test_single_edge_acyclic(self):
        result = recognize(Multigraph(4, {(2, 3): 1}), "acyclic")
        assert result.recognized
        assert double_competition_multigraph(result.witness_digraph) == Multigraph(4, {(2, 3): 1})
        assert is_acyclic(result.witness_digraph)

    def test_mult_four_edge_two_vertices(self):
        m = Multigraph(2, {(1, 2): 4})
        negative = recognize(m, "loopless")
        assert not negative.recognized
        assert negative.witness_digraph is None
        assert negative.witness_certificate is None
        assert negative.digraphs_examined == 4
        positive = recognize(m, "arbitrary")
        assert positive.recognized
        assert positive.witness_digraph == Digraph(2, {(1, 1), (1, 2), (2, 1), (2, 2)})

    def test_witness_certificate_verifies(self):
        m = Multigraph(4, {(2, 3): 1})
        for digraph_class in ALL_CLASSES:
            result = recognize(m, digraph_class)
            assert result.recognized
            report = verify_certificate(m, result.witness_certificate, digraph_class)
            assert report.accepted

    def test_deterministic_witness(self):
        m = Multigraph(3, {(1, 2): 1})
        first = recognize(m, "arbitrary")
        second = recognize(m, "arbitrary")
        assert first == second

    @settings(max_examples=40)
    @given(digraphs(max_n=3))
    def test_complete_on_actual_dcms(self, d):
        m = double_competition_multigraph(d)
        result = recognize(m, "arbitrary")
        assert result.recognized
        assert double_competition_multigraph(result.witness_digraph) == m

    @pytest.mark.parametrize("digraph_class", ALL_CLASSES)
    def test_complete_per_class_n2(self, digraph_class):
        for d in enumerate_digraphs(2, digraph_class):
            result = recognize(double_competition_multigraph(d), digraph_class)
            assert result.recognized

    def test_accepted_certificate_implies_recognized(self):
        # reverse direction of the characterizations: reconstruct any
        # accepted certificate, then the class and the multigraph agree
        from dcmkit import canonical_family, reconstruct_digraph

        for digraph_class in ALL_CLASSES:
            for d in enumerate_digraphs(2, digraph_class):
                family = canonical_family(d)
                m = double_competition_multigraph(d)
                if verify_certificate(m, family, digraph_class).accepted:
                    rebuilt = reconstruct_digraph(family)
                    if class_member(rebuilt, digraph_class):
                        assert recognize(m, digraph_class).recognized


class TestCatalog:
    def test_one_vertex_arbitrary(self):
        rows = catalog(1, "arbitrary")
        assert len(rows) == 1
        assert rows[0].edges == ()
        assert rows[0].count == 2

    def test_two_vertex_loopless(self):
        rows = catalog(2, "loopless")
        assert len(rows) == 1
        assert rows[0].edges == ()
        assert rows[0].count == 4

    @pytest.mark.parametrize("digraph_class", ALL_CLASSES)
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_counts_partition_class(self, n, digraph_class):
        rows = catalog(n, digraph_class)
        total = sum(row.count for row in rows)
        assert total == sum(1 for _ in enumerate_digraphs(n, digraph_class))

    def test_rows_sorted_and_deterministic(self):
        first = catalog(3, "arbitrary")
        second = catalog(3, "arbitrary")
        assert first == second
        keys = [row.edges for row in first]
        assert keys == sorted(keys)

    def test_rows_are_recognizable(self):
        for row in catalog(2, "acyclic"):
            m = Multigraph(2, {(x, y): k for x, y, k in row.edges})
            assert recognize(m, "acyclic").recognized


class TestBounds:
    def test_default_bound_refuses_n5(self):
        with pytest.raises(ValueError, match="exceeds the recognition bound"):
            recognize(Multigraph(5), "arbitrary")

    def test_bound_six_refused(self):
        with pytest.raises(ValueError, match="ceiling"):
            recognize(Multigraph(3), "arbitrary", bound=6)

    def test_bound_five_streams(self):
        # the arcless digraph realizes the empty multigraph immediately,
        # so the streaming path returns without an exhaustive sweep
        result = recognize(Multigraph(5), "acyclic", bound=5)
        assert result.recognized
        assert result.digraphs_examined == 1

    def test_env_ceiling_lowers(self, monkeypatch):
        monkeypatch.setenv("DCMKIT_MAX_N", "3")
        assert bound_ceiling() == 3
        with pytest.raises(ValueError):
            recognize(Multigraph(4), "arbitrary")
        assert recognize(Multigraph(3), "arbitrary").recognized

    def test_env_ceiling_clamped_to_hard_cap(self, monkeypatch):
        monkeypatch.setenv("DCMKIT_MAX_N", "99")
        assert bound_ceiling() == 5

    def test_env_ceiling_garbage_rejected(self, monkeypatch):
        monkeypatch.setenv("DCMKIT_MAX_N", "many")
        with pytest.raises(ValueError):
            bound_ceiling()

    def test_bad_bound_rejected(self):
        with pytest.raises(ValueError):
            recognize(Multigraph(2), "arbitrary", bound=0)
