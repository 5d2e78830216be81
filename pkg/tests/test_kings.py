"""Eccentricities, r-kings, the degree-based finder, and census audits."""

import pytest
from hypothesis import given, settings

import bruteforce
from instances import chorded_path, complete, cycle, d4, long_tournament, path, two_cycles
from qk import INF, Digraph, build
from qk.errors import NotQuasiTransitiveInput, NotSemicomplete, VertexOutOfRange
from qk.kings import (
    all_eccentricities,
    all_r_kings,
    census,
    degree_threshold_vertices,
    find_kplus1_king_fast,
    has_unique_initial_component,
    out_eccentricity,
    semicomplete_two_king,
)
from qk.qt import GenConfig, compose, random_qt
from strategies import digraphs


class TestEccentricity:
    def test_four_vertex_instance(self):
        assert all_eccentricities(d4()) == (2, INF, INF, INF)

    def test_single_vertex(self):
        assert out_eccentricity(build(1, []), 0) == 0

    def test_chorded_path(self):
        assert all_eccentricities(chorded_path(2)) == (3, 2, 2, 3)

    def test_out_of_range(self):
        with pytest.raises(VertexOutOfRange):
            out_eccentricity(d4(), 4)

    @given(digraphs())
    def test_matches_distance_rows(self, d):
        rows = bruteforce.floyd_distances(d)
        for v in range(d.n):
            assert out_eccentricity(d, v) == max(rows[v])


class TestRKings:
    def test_four_vertex_unique_five_king(self):
        assert all_r_kings(d4(), 5) == (0,)

    def test_four_vertex_two_king(self):
        assert all_r_kings(d4(), 2) == (0,)

    def test_complete_one_kings(self):
        assert all_r_kings(complete(4), 1) == (0, 1, 2, 3)

    def test_radius_zero(self):
        assert all_r_kings(build(1, []), 0) == (0,)
        assert all_r_kings(complete(3), 0) == ()

    def test_cycle_exact_kings(self):
        # an m-cycle has every vertex at eccentricity m-1, so exactly m
        # (m-1)-kings and no (m-2)-king
        for m in range(3, 8):
            assert all_r_kings(cycle(m), m - 1) == tuple(range(m))
            assert all_r_kings(cycle(m), m - 2) == ()

    def test_negative_radius(self):
        with pytest.raises(ValueError):
            all_r_kings(d4(), -1)

    @given(digraphs())
    def test_matches_bruteforce(self, d):
        for r in range(d.n + 1):
            assert all_r_kings(d, r) == bruteforce.r_kings(d, r)

    @given(digraphs())
    def test_monotone_in_radius(self, d):
        prev: tuple[int, ...] = ()
        for r in range(d.n + 2):
            cur = all_r_kings(d, r)
            assert set(prev) <= set(cur)
            prev = cur


class TestUniqueInitial:
    def test_four_vertex_instance(self):
        assert has_unique_initial_component(d4()) == (True, (0,))

    def test_two_disjoint_cycles(self):
        assert has_unique_initial_component(two_cycles()) == (False, None)

    def test_strong_digraph(self):
        assert has_unique_initial_component(cycle(5)) == (True, (0, 1, 2, 3, 4))


class TestFastFinder:
    def test_four_vertex_instance(self):
        assert find_kplus1_king_fast(d4(), 4) == 0

    def test_chorded_path(self):
        # vertex 2 is the unique out-degree maximum of the (strong) digraph
        assert find_kplus1_king_fast(chorded_path(2), 2) == 2

    def test_no_king_without_unique_initial(self):
        assert find_kplus1_king_fast(two_cycles(), 2) is None

    def test_rejects_non_quasi_transitive(self):
        # a bare path has a unique initial component but its source sits at
        # eccentricity n-1, so the degree argument's guarantee breaks
        with pytest.raises(NotQuasiTransitiveInput):
            find_kplus1_king_fast(path(6), 2)

    def test_k_validation(self):
        with pytest.raises(ValueError):
            find_kplus1_king_fast(d4(), 1)

    def test_threshold_vertices_chorded_path(self):
        # cutoff = max_degree - k = 2 - 2 = 0, so every vertex with an
        # outgoing arc qualifies; all four are 3-kings
        assert degree_threshold_vertices(chorded_path(2), 2) == (0, 1, 2, 3)

    def test_threshold_vertices_not_unique(self):
        assert degree_threshold_vertices(two_cycles(), 2) == ()

    def test_threshold_vertices_are_kings_on_generated_input(self):
        for k in (2, 3, 4):
            for seed in range(15):
                d = random_qt(GenConfig(n=8, k=k, arc_prob=0.3, seed=seed))
                for v in degree_threshold_vertices(d, k):
                    assert out_eccentricity(d, v) <= k + 1


class TestSemicompleteTwoKing:
    def test_dominant_source(self):
        t = build(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
        assert semicomplete_two_king(t) == 0

    def test_three_cycle(self):
        assert semicomplete_two_king(cycle(3)) == 0

    def test_digon(self):
        assert semicomplete_two_king(build(2, [(0, 1), (1, 0)])) == 0

    def test_long_tournament(self):
        assert semicomplete_two_king(long_tournament(7)) == 5

    def test_rejects_missing_pair(self):
        with pytest.raises(NotSemicomplete) as exc:
            semicomplete_two_king(path(3))
        assert (exc.value.u, exc.value.v) == (0, 2)

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            semicomplete_two_king(build(0, []))

    def test_random_tournaments(self):
        import random

        rng = random.Random(99)
        for _ in range(40):
            n = rng.randint(1, 8)
            arcs = []
            for u in range(n):
                for v in range(u + 1, n):
                    arcs.append((u, v) if rng.random() < 0.5 else (v, u))
            t = build(n, arcs)
            king = semicomplete_two_king(t)
            assert out_eccentricity(t, king) <= 2


class TestCensus:
    def test_four_vertex_instance(self):
        rep = census(d4(), 4)
        assert rep.kings_by_radius[5] == (0,)
        assert rep.unique_initial and rep.initial_component == (0,)
        assert rep.fast_king == 0
        assert rep.max_out_degree == 2
        assert rep.max_out_degree_vertices == (1,)
        tags = [row.tag for row in rep.counting_audit]
        assert tags == ["small-component-exact", "even-disjunction"]
        assert not rep.failed_audits

    def test_cycle_boundary_count(self):
        # a (k+1)-cycle is strong with |C| = k+1: exactly k+1 k-kings
        for k in (2, 3, 4, 5):
            rep = census(cycle(k + 1), k)
            row = next(r for r in rep.counting_audit if r.tag == "boundary-exact")
            assert row.passed and row.observed == k + 1
            assert not rep.failed_audits

    def test_no_two_king_blowup(self):
        # replace every 2-king of a strong 5-tournament by two non-adjacent
        # vertices: the result is quasi-transitive, has no 2-king, and gets
        # exactly seven 3-kings
        q = long_tournament(5)
        double = build(2, [])
        d, _ = compose(q, [build(1, []), build(1, []), double, double, double])
        rep = census(d, 2)
        assert rep.kings_by_radius[2] == ()
        assert rep.kings_by_radius[3] == (1, 2, 3, 4, 5, 6, 7)
        tags = {row.tag: row for row in rep.counting_audit}
        assert tags["quasi-transitive-four"].passed
        assert tags["quasi-transitive-seven"].passed
        assert tags["quasi-transitive-seven"].observed == 7
        assert rep.fast_king == 4

    def test_tournament_exactly_four_three_kings(self):
        rep = census(long_tournament(6), 2)
        row = next(
            r for r in rep.counting_audit if r.tag == "quasi-transitive-four"
        )
        assert row.passed and row.observed == 4

    def test_multiple_initial_components(self):
        rep = census(two_cycles(), 3)
        assert not rep.unique_initial
        assert rep.initial_component is None
        assert rep.fast_king is None
        assert rep.counting_audit == ()

    def test_checked_mode_rejects(self):
        with pytest.raises(NotQuasiTransitiveInput):
            census(path(4), 2, checked=True)

    def test_checked_mode_accepts(self):
        assert census(d4(), 4, checked=True).fast_king == 0

    def test_k_validation(self):
        with pytest.raises(ValueError):
            census(d4(), 1)

    @given(digraphs())
    @settings(deadline=None)
    def test_report_invariants(self, d):
        if d.n == 0:
            return
        rep = census(d, 3)
        assert len(rep.ecc_out) == d.n
        for r in range(1, 5):
            assert set(rep.kings_by_radius[r]) <= set(rep.kings_by_radius[r + 1])
        assert rep.kings_by_radius[4] == all_r_kings(d, 4)
        if rep.fast_king is not None:
            assert rep.unique_initial
            assert rep.fast_king in rep.kings_by_radius[4]
        if not rep.unique_initial:
            assert rep.fast_king is None and rep.counting_audit == ()

    def test_generated_instances_pass_all_audits(self):
        for k in (2, 3, 4, 5):
            for seed in range(25):
                d = random_qt(GenConfig(n=7, k=k, arc_prob=0.25, seed=seed))
                rep = census(d, k)
                assert not rep.failed_audits, (k, seed, rep.failed_audits)
