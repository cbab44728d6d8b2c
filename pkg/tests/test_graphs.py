"""Graph construction and enumeration, checked against exhaustive oracles."""

import pytest

from coverideals import (
    CapacityError,
    ClusterDescriptor,
    Graph,
    build_ht,
    build_odd_cycle,
    chromatic_number,
    enumerate_induced_odd_cycles,
    enumerate_minimal_vertex_covers,
    enumerate_r_clusters,
    induced_subgraph,
    is_induced_odd_cycle,
    minimum_coloring,
    minimum_vertex_cover_size,
    minimum_vertex_covers,
    neighbors,
    vertex_tuple,
)
from coverideals.graphs import validate_cluster

from conftest import (
    oracle_induced_odd_cycles,
    oracle_minimal_vertex_covers,
    oracle_minimum_cover_size,
)


class TestGraphBasics:
    def test_rejects_self_loop(self):
        with pytest.raises(ValueError):
            Graph(["a"], ["x"], [("a", "a")])

    def test_rejects_unknown_endpoint(self):
        with pytest.raises(ValueError):
            Graph(["a", "b"], ["x", "x"], [("a", "c")])

    def test_rejects_duplicate_names(self):
        with pytest.raises(ValueError):
            Graph(["a", "a"], ["x", "x"], [])

    def test_rejects_bad_kind(self):
        with pytest.raises(ValueError):
            Graph(["a"], ["z"], [])

    def test_deduplicates_edges(self):
        g = Graph(["a", "b"], ["x", "x"], [("a", "b"), ("b", "a")])
        assert g.n_edges == 1

    def test_vertex_order_is_construction_order(self):
        g = Graph(["b", "a"], ["x", "y"], [("a", "b")])
        assert g.vertices == ("b", "a")
        assert g.kind("a") == "y"


class TestBuildHt:
    def test_h1_counts(self):
        g = build_ht(1)
        assert g.n_vertices == 6 and g.n_edges == 8

    def test_h2_counts_and_y2(self):
        g = build_ht(2)
        assert g.n_vertices == 9 and g.n_edges == 14
        assert neighbors(g, ["y2"]) == ("x4", "x5", "x6", "x7")

    def test_h4_y4(self):
        g = build_ht(4)
        assert g.n_vertices == 19
        assert neighbors(g, ["y4"]) == ("x12", "x13", "x14", "x15")

    def test_counts_follow_family_definition(self):
        # t > 1: a (4t-1)-cycle, 3 edges at the first hub, 4 at each other
        for t in range(2, 6):
            g = build_ht(t)
            assert g.n_vertices == 5 * t - 1
            assert g.n_edges == (4 * t - 1) + 3 + 4 * (t - 1)

    def test_rejects_nonpositive(self):
        for bad in (0, -3):
            with pytest.raises(ValueError):
                build_ht(bad)

    def test_y1_neighbors(self):
        for t in (1, 2, 3):
            assert neighbors(build_ht(t), ["y1"]) == ("x1", "x2", "x3")

    def test_chromatic_number_three(self):
        for t in (1, 2, 3, 4):
            assert chromatic_number(build_ht(t)) == 3


class TestBuildOddCycle:
    @pytest.mark.parametrize("k", [3, 5, 7])
    def test_counts(self, k):
        g = build_odd_cycle(k)
        assert g.n_vertices == k and g.n_edges == k

    @pytest.mark.parametrize("bad", [2, 4, 1, -5])
    def test_rejects(self, bad):
        with pytest.raises(ValueError):
            build_odd_cycle(bad)


class TestInducedSubgraph:
    def test_h1_triangle(self, h1):
        sub = induced_subgraph(h1, ["x1", "x2", "y1"])
        assert sub.n_vertices == 3 and sub.n_edges == 3

    def test_h1_nonadjacent_pair(self, h1):
        sub = induced_subgraph(h1, ["x1", "x3"])
        assert sub.n_edges == 0

    def test_h2_seven_cycle_chord_free(self, h2):
        verts = ["y1", "x1", "x7", "x6", "x5", "x4", "x3"]
        sub = induced_subgraph(h2, verts)
        assert sub.n_edges == 7
        # chord-freeness by exhaustive pair check
        cycle_pairs = {frozenset(e) for e in sub.edges}
        assert len(cycle_pairs) == 7
        assert all(len(sub.adjacent(v)) == 2 for v in sub.vertices)

    def test_rejects_foreign_vertex(self, h1):
        with pytest.raises(ValueError):
            induced_subgraph(h1, ["x1", "nope"])

    def test_order_inherited(self, h2):
        sub = induced_subgraph(h2, ["y1", "x3", "x1"])
        assert sub.vertices == ("x1", "x3", "y1")


class TestNeighbors:
    def test_y1(self, h1):
        assert neighbors(h1, ["y1"]) == ("x1", "x2", "x3")

    def test_everything(self, h1):
        assert neighbors(h1, h1.vertices) == ()

    def test_rejects_foreign(self, h1):
        with pytest.raises(ValueError):
            neighbors(h1, ["zz"])


class TestMinimalVertexCovers:
    def test_single_edge(self, k2):
        assert enumerate_minimal_vertex_covers(k2) == (("a",), ("b",))

    def test_c5_matches_oracle(self, c5):
        got = {frozenset(c) for c in enumerate_minimal_vertex_covers(c5)}
        assert got == oracle_minimal_vertex_covers(c5)
        assert all(len(c) == 3 for c in minimum_vertex_covers(c5))
        assert len(minimum_vertex_covers(c5)) == 5

    def test_h1_matches_oracle(self, h1):
        got = {frozenset(c) for c in enumerate_minimal_vertex_covers(h1)}
        assert got == oracle_minimal_vertex_covers(h1)
        assert minimum_vertex_cover_size(h1) == 4
        assert ("x1", "x3", "x4", "y1") in enumerate_minimal_vertex_covers(h1)

    def test_h2_matches_oracle(self, h2):
        got = {frozenset(c) for c in enumerate_minimal_vertex_covers(h2)}
        assert got == oracle_minimal_vertex_covers(h2)

    def test_every_cover_is_minimal(self, h2):
        covers = enumerate_minimal_vertex_covers(h2)
        for cover in covers:
            s = set(cover)
            assert all(u in s or v in s for u, v in h2.edges)
            for v in cover:
                smaller = s - {v}
                assert not all(a in smaller or b in smaller for a, b in h2.edges)

    def test_capacity_guard(self):
        big = Graph([f"v{i}" for i in range(40)], ["x"] * 40, [])
        with pytest.raises(CapacityError):
            enumerate_minimal_vertex_covers(big)
        assert enumerate_minimal_vertex_covers(big, max_vertices=64) == ((),)

    def test_deterministic(self, h2):
        assert enumerate_minimal_vertex_covers(h2) == enumerate_minimal_vertex_covers(h2)


class TestMinimumCoverSize:
    @pytest.mark.parametrize("k", [3, 5, 7, 9])
    def test_odd_cycles(self, k):
        assert minimum_vertex_cover_size(build_odd_cycle(k)) == (k + 1) // 2

    def test_edgeless(self):
        g = Graph(["a", "b"], ["x", "x"], [])
        assert minimum_vertex_cover_size(g) == 0

    def test_y1_block(self, h2):
        sub = induced_subgraph(h2, ("y1",) + neighbors(h2, ["y1"]))
        assert minimum_vertex_cover_size(sub) == 2
        assert minimum_vertex_covers(sub) == (("x2", "y1"),)

    def test_yi_blocks(self):
        for t, i in ((2, 2), (3, 2), (3, 3)):
            g = build_ht(t)
            y = f"y{i}"
            sub = induced_subgraph(g, (y,) + neighbors(g, [y]))
            assert minimum_vertex_cover_size(sub) == 3
            assert all(y in c for c in minimum_vertex_covers(sub))

    def test_matches_oracle(self, h1, c5):
        for g in (h1, c5):
            assert minimum_vertex_cover_size(g) == oracle_minimum_cover_size(g)


class TestChromaticNumber:
    def test_h1(self, h1):
        assert chromatic_number(h1) == 3

    def test_edgeless(self):
        assert chromatic_number(Graph(["a", "b"], ["x", "x"], [])) == 1

    def test_h3(self):
        assert chromatic_number(build_ht(3)) == 3

    def test_even_cycle(self):
        g = Graph(["a", "b", "c", "d"], ["x"] * 4, [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])
        assert chromatic_number(g) == 2

    def test_coloring_is_proper_witness(self, h2):
        coloring = minimum_coloring(h2)
        assert len(set(coloring.values())) == 3
        assert all(coloring[u] != coloring[v] for u, v in h2.edges)

    def test_capacity_guard(self):
        big = Graph([f"v{i}" for i in range(33)], ["x"] * 33, [])
        with pytest.raises(CapacityError):
            chromatic_number(big)


class TestInducedOddCycles:
    def test_c5_has_only_itself(self, c5):
        assert enumerate_induced_odd_cycles(c5) == (c5.vertices,)

    def test_h1_matches_oracle(self, h1):
        got = enumerate_induced_odd_cycles(h1)
        assert {frozenset(c) for c in got} == oracle_induced_odd_cycles(h1)
        assert len(got) == 4

    def test_h2_matches_oracle(self, h2):
        got = enumerate_induced_odd_cycles(h2)
        assert {frozenset(c) for c in got} == oracle_induced_odd_cycles(h2)
        assert len(got) == 7

    def test_all_results_are_chordless_odd(self, h2):
        for cyc in enumerate_induced_odd_cycles(h2):
            assert len(cyc) % 2 == 1
            assert is_induced_odd_cycle(h2, cyc)
            sub = induced_subgraph(h2, cyc)
            assert sub.n_edges == len(cyc)
            assert all(len(sub.adjacent(v)) == 2 for v in cyc)

    def test_deterministic(self, h2):
        assert enumerate_induced_odd_cycles(h2) == enumerate_induced_odd_cycles(h2)


class TestRClusters:
    def test_h1_single_cluster(self, h1):
        clusters = enumerate_r_clusters(h1, 1)
        assert clusters == (
            ClusterDescriptor(cycle=("x1", "x2", "x3", "x4", "x5"), ys=("y1",)),
        )

    def test_h2_r2_forced(self, h2):
        clusters = enumerate_r_clusters(h2, 2)
        assert len(clusters) == 1
        assert clusters[0].cycle == ("x1", "x2", "x3", "x4", "x5", "x6", "x7")
        assert clusters[0].ys == ("y1", "y2")

    def test_h2_r1(self, h2):
        assert len(enumerate_r_clusters(h2, 1)) == 3

    def test_h4_contains_worked_cluster(self):
        g = build_ht(4)
        expected_cycle = vertex_tuple(
            g, ("x1", "x2", "x3", "x4", "y2", "x7", "x8", "y3", "x11", "x12", "x13", "x14", "x15")
        )
        hits = [
            c for c in enumerate_r_clusters(g, 2)
            if c.cycle == expected_cycle and set(c.ys) == {"y1", "y4"}
        ]
        assert len(hits) == 1

    def test_too_many_ys_yields_empty(self, h2):
        assert enumerate_r_clusters(h2, 3) == ()

    def test_cluster_invariants(self, h2):
        for r in (1, 2):
            for cluster in enumerate_r_clusters(h2, r):
                validate_cluster(h2, cluster)
                assert cluster.r == r
                assert set(neighbors(h2, cluster.ys)) <= set(cluster.cycle)

    def test_rejects_bad_r(self, h2):
        with pytest.raises(ValueError):
            enumerate_r_clusters(h2, 0)
