"""Hypothesis strategies for random digraphs."""

from __future__ import annotations

from hypothesis import strategies as st

from qk import Digraph, build


@st.composite
def digraphs(draw, max_n: int = 8) -> Digraph:
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    return build(n, chosen)
