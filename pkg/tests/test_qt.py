"""Recognition, closure generation and composition."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import bruteforce
from instances import chorded_path, complete, cycle, d4, long_tournament, path
from qk import InstanceTooLarge, build, reverse
from qk.qt import (
    FORWARD,
    RANDOM,
    GenConfig,
    certify_qt,
    compose,
    has_k_path,
    is_k_quasi_transitive,
    qt_closure,
    random_qt,
)
from qk.errors import ArityMismatch


class TestHasKPath:
    def test_d4_three_arcs(self):
        assert has_k_path(d4(), 0, 3, 3)

    def test_same_vertex_never(self):
        assert not has_k_path(d4(), 0, 0, 1)
        assert not has_k_path(cycle(4), 0, 0, 4)

    def test_cycle_spans_k(self):
        for k in range(2, 7):
            assert has_k_path(cycle(k + 1), 0, k, k)

    def test_too_long_for_vertex_count(self):
        assert not has_k_path(d4(), 0, 3, 4)

    def test_cap(self, monkeypatch):
        monkeypatch.setenv("QK_ENUM_CAP", "3")
        with pytest.raises(InstanceTooLarge):
            has_k_path(d4(), 0, 3, 2)

    @given(st.data())
    def test_matches_sequence_scan(self, data):
        from strategies import digraphs

        g = data.draw(digraphs(max_n=6))
        k = data.draw(st.integers(min_value=1, max_value=4))
        expected = {(p[0], p[-1]) for p in bruteforce.sequence_paths(g, k)}
        for u in range(g.n):
            for v in range(g.n):
                assert has_k_path(g, u, v, k) == ((u, v) in expected)


class TestRecognition:
    def test_d4_is_4qt(self):
        assert is_k_quasi_transitive(d4(), 4) == []

    def test_d4_not_2qt(self):
        vs = is_k_quasi_transitive(d4(), 2)
        assert [v.path for v in vs] == [(0, 1, 2), (0, 1, 3)]

    def test_cycle_is_kqt(self):
        for k in range(2, 7):
            assert is_k_quasi_transitive(cycle(k + 1), k) == []

    def test_chorded_path_is_kqt(self):
        for k in range(2, 7):
            assert is_k_quasi_transitive(chorded_path(k), k) == []

    def test_tournament_is_kqt_for_every_k(self):
        g = long_tournament(7)
        for k in range(2, 7):
            assert is_k_quasi_transitive(g, k) == []

    def test_violations_revalidate(self):
        g = path(6)
        vs = is_k_quasi_transitive(g, 2)
        assert vs and all(v.holds_in(g) for v in vs)
        assert all(v.u == v.path[0] and v.v == v.path[-1] for v in vs)

    def test_cap(self, monkeypatch):
        monkeypatch.setenv("QK_ENUM_CAP", "3")
        with pytest.raises(InstanceTooLarge):
            is_k_quasi_transitive(d4(), 2)

    @given(st.data())
    @settings(max_examples=60)
    def test_complete_against_sequence_scan(self, data):
        from strategies import digraphs

        g = data.draw(digraphs(max_n=6))
        k = data.draw(st.integers(min_value=2, max_value=4))
        got = [v.path for v in is_k_quasi_transitive(g, k)]
        assert got == bruteforce.sequence_violations(g, k)
        assert certify_qt(g, k) == (not got)

    @given(st.data())
    @settings(max_examples=40)
    def test_reverse_preserves_recognition(self, data):
        from strategies import digraphs

        g = data.draw(digraphs(max_n=6))
        k = data.draw(st.integers(min_value=2, max_value=3))
        assert (is_k_quasi_transitive(g, k) == []) == (
            is_k_quasi_transitive(reverse(g), k) == []
        )


class TestClosure:
    def test_forward_path_example(self):
        g = qt_closure(path(3), 2, rule=FORWARD)
        assert sorted(g.arcs()) == [(0, 1), (0, 2), (1, 2)]

    def test_already_qt_unchanged(self):
        g = d4()
        assert qt_closure(g, 4, rule=RANDOM, seed=7) == g

    def test_empty_unchanged(self):
        g = build(5, [])
        assert qt_closure(g, 2) == g

    def test_monotone_and_certified(self):
        g = long_tournament(6)
        closed = qt_closure(g, 3, seed=1)
        assert set(g.arcs()) <= set(closed.arcs())
        assert is_k_quasi_transitive(closed, 3) == []

    def test_deterministic(self):
        base = build(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 4)])
        a = qt_closure(base, 2, rule=RANDOM, seed=42)
        b = qt_closure(base, 2, rule=RANDOM, seed=42)
        assert a == b

    @given(st.data())
    @settings(max_examples=40, deadline=None)
    def test_closure_reaches_fixpoint(self, data):
        from strategies import digraphs

        g = data.draw(digraphs(max_n=7))
        k = data.draw(st.integers(min_value=2, max_value=3))
        seed = data.draw(st.integers(min_value=0, max_value=2**32))
        closed = qt_closure(g, k, rule=RANDOM, seed=seed)
        assert set(g.arcs()) <= set(closed.arcs())
        assert is_k_quasi_transitive(closed, k) == []


class TestRandomQt:
    def test_prob_zero_empty(self):
        g = random_qt(GenConfig(n=6, k=2, arc_prob=0.0, seed=5))
        assert g.arc_count == 0

    def test_prob_one_complete(self):
        g = random_qt(GenConfig(n=5, k=3, arc_prob=1.0, seed=5))
        assert g == complete(5)

    def test_deterministic(self):
        cfg = GenConfig(n=8, k=2, arc_prob=0.3, seed=123)
        assert random_qt(cfg) == random_qt(cfg)

    def test_output_is_qt(self):
        for seed in range(5):
            g = random_qt(GenConfig(n=7, k=3, arc_prob=0.25, seed=seed))
            assert is_k_quasi_transitive(g, 3) == []

    def test_bad_config_rejected(self):
        with pytest.raises(ValueError):
            GenConfig(n=4, k=1, arc_prob=0.5, seed=0)
        with pytest.raises(ValueError):
            GenConfig(n=4, k=2, arc_prob=1.5, seed=0)
        with pytest.raises(ValueError):
            GenConfig(n=4, k=2, arc_prob=0.5, seed=0, orientation_rule="SIDEWAYS")


class TestCompose:
    def test_single_vertex_identity(self):
        h = d4()
        g, blocks = compose(build(1, []), [h])
        assert g == h
        assert blocks == (0, 0, 0, 0)

    def test_digon_of_singletons(self):
        one = build(1, [])
        g, _ = compose(build(2, [(0, 1), (1, 0)]), [one, one])
        assert sorted(g.arcs()) == [(0, 1), (1, 0)]

    def test_arc_blowup(self):
        g, blocks = compose(build(2, [(0, 1)]), [build(2, []), build(1, [])])
        assert sorted(g.arcs()) == [(0, 2), (1, 2)]
        assert blocks == (0, 0, 1)

    def test_arity_mismatch(self):
        with pytest.raises(ArityMismatch):
            compose(build(2, [(0, 1)]), [build(1, [])])

    @given(st.data())
    @settings(max_examples=30)
    def test_counts(self, data):
        from strategies import digraphs

        q = data.draw(digraphs(max_n=4))
        parts = [data.draw(digraphs(max_n=3)) for _ in range(q.n)]
        g, blocks = compose(q, parts)
        assert g.n == sum(h.n for h in parts)
        cross = sum(parts[i].n * parts[j].n for i, j in q.arcs())
        assert g.arc_count == sum(h.arc_count for h in parts) + cross
        assert len(blocks) == g.n
