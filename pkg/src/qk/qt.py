"""Recognition of k-quasi-transitivity, arc-closure generation, composition.

A digraph is k-quasi-transitive when every directed path of exactly k arcs
(k+1 pairwise-distinct vertices) from u to v forces an arc between u and v in
at least one direction.  "Path" always means vertex-distinct path, never a
walk.

Path enumeration is exact DFS with an instance-size cap: worst-case blowup
becomes an explicit InstanceTooLarge instead of a hang.  The default cap of
64 vertices can be overridden with the QK_ENUM_CAP environment variable
(read at call time).
"""

from __future__ import annotations

import os
import random
from collections import deque
from dataclasses import dataclass

from .digraph import Digraph, build
from .errors import ArityMismatch, InstanceTooLarge, VertexOutOfRange

RANDOM = "RANDOM"
FORWARD = "FORWARD"

DEFAULT_ENUM_CAP = 64

_MASK64 = (1 << 64) - 1


def mix_seed(*parts: int) -> int:
    """Deterministic 64-bit hash of integer parts (splitmix64 finalizer),
    so nearby seed tuples land on unrelated generator states."""
    x = 0x9E3779B97F4A7C15
    for p in parts:
        x = (x + (p & _MASK64) * 0xBF58476D1CE4E5B9) & _MASK64
        x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
        x ^= x >> 31
    return x


def enum_cap() -> int:
    return int(os.environ.get("QK_ENUM_CAP", str(DEFAULT_ENUM_CAP)))


def _require_enumerable(n: int) -> None:
    cap = enum_cap()
    if n > cap:
        raise InstanceTooLarge(n, cap)


@dataclass(frozen=True)
class QtViolation:
    """A length-k path whose endpoints are non-adjacent both ways."""

    path: tuple[int, ...]

    @property
    def u(self) -> int:
        return self.path[0]

    @property
    def v(self) -> int:
        return self.path[-1]

    def holds_in(self, d: Digraph) -> bool:
        """Re-validate this witness against d."""
        p = self.path
        if len(set(p)) != len(p):
            return False
        if not all(d.has_arc(p[i], p[i + 1]) for i in range(len(p) - 1)):
            return False
        return not d.adjacent(p[0], p[-1])


@dataclass(frozen=True)
class GenConfig:
    """Parameters for random instance generation.

    arc_prob seeds an Erdos-Renyi-style loop-free digraph, which is then
    closed under the k-quasi-transitivity condition with the given
    orientation rule.  Fully deterministic given seed.
    """

    n: int
    k: int
    arc_prob: float
    seed: int
    orientation_rule: str = RANDOM

    def __post_init__(self) -> None:
        if self.k < 2:
            raise ValueError("k must be >= 2")
        if not 0.0 <= self.arc_prob <= 1.0:
            raise ValueError("arc_prob must be in [0, 1]")
        if self.orientation_rule not in (RANDOM, FORWARD):
            raise ValueError(f"unknown orientation rule {self.orientation_rule!r}")


def _dist_to_target(succ: list[set[int]], n: int, target: int) -> list[float]:
    """Hop counts TO target (BFS over reversed adjacency built on the fly)."""
    pred: list[list[int]] = [[] for _ in range(n)]
    for x in range(n):
        for y in succ[x]:
            pred[y].append(x)
    dist: list[float] = [float("inf")] * n
    dist[target] = 0
    q = deque([target])
    while q:
        x = q.popleft()
        nd = dist[x] + 1
        for y in pred[x]:
            if dist[y] == float("inf"):
                dist[y] = nd
                q.append(y)
    return dist


def _k_path_exists(succ: list[set[int]], n: int, u: int, v: int, k: int) -> bool:
    """Exact DFS for a k-arc vertex-distinct path u -> v over set adjacency."""
    if u == v:
        return False
    back = _dist_to_target(succ, n, v)
    if back[u] > k:
        return False
    visited = [False] * n
    visited[u] = True

    def walk(x: int, rem: int) -> bool:
        for y in succ[x]:
            if y == v:
                if rem == 1:
                    return True
                continue
            if rem == 1 or visited[y] or back[y] > rem - 1:
                continue
            visited[y] = True
            if walk(y, rem - 1):
                return True
            visited[y] = False
        return False

    return walk(u, k)


def has_k_path(d: Digraph, u: int, v: int, k: int) -> bool:
    """True iff a directed path with exactly k arcs runs from u to v.

    Exhaustive and exact (depth-bounded DFS with a visited set); distances
    to the target prune branches that cannot finish in time.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    for x in (u, v):
        if not (0 <= x < d.n):
            raise VertexOutOfRange(x, d.n)
    _require_enumerable(d.n)
    return _k_path_exists([set(row) for row in d.adj], d.n, u, v, k)


def is_k_quasi_transitive(d: Digraph, k: int) -> list[QtViolation]:
    """All witnesses against k-quasi-transitivity; empty list means yes.

    Enumerates every length-k path by DFS in lexicographic path order and
    reports each one whose endpoints have no arc in either direction.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    _require_enumerable(d.n)
    violations: list[QtViolation] = []
    pathbuf = [0] * (k + 1)
    visited = [False] * d.n

    def extend(x: int, depth: int) -> None:
        if depth == k:
            if not d.adjacent(pathbuf[0], x):
                violations.append(QtViolation(tuple(pathbuf)))
            return
        for y in d.adj[x]:
            if not visited[y]:
                visited[y] = True
                pathbuf[depth + 1] = y
                extend(y, depth + 1)
                visited[y] = False

    for s in range(d.n):
        visited[s] = True
        pathbuf[0] = s
        extend(s, 0)
        visited[s] = False
    return violations


def qt_closure(d: Digraph, k: int, rule: str = RANDOM, seed: int = 0) -> Digraph:
    """Add arcs until the digraph is k-quasi-transitive.

    Scans unordered non-adjacent pairs in lexicographic order; whenever some
    k-arc path joins a pair, one arc is added between its endpoints (FORWARD:
    from the path's first vertex to its last; RANDOM: seeded coin between the
    two orientations).  Passes repeat until one full pass finds nothing, so
    the result is certified k-quasi-transitive.  Terminates because the arc
    count strictly grows and is bounded by n(n-1).
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    if rule not in (RANDOM, FORWARD):
        raise ValueError(f"unknown orientation rule {rule!r}")
    _require_enumerable(d.n)
    rng = random.Random(seed)
    n = d.n
    succ = [set(row) for row in d.adj]
    while True:
        added = False
        for u in range(n):
            for v in range(u + 1, n):
                if v in succ[u] or u in succ[v]:
                    continue
                if _k_path_exists(succ, n, u, v, k):
                    a, b = u, v
                elif _k_path_exists(succ, n, v, u, k):
                    a, b = v, u
                else:
                    continue
                if rule == RANDOM and rng.random() >= 0.5:
                    a, b = b, a
                succ[a].add(b)
                added = True
        if not added:
            return Digraph(n, tuple(tuple(sorted(row)) for row in succ))


def random_qt(cfg: GenConfig) -> Digraph:
    """Seed an Erdos-Renyi loop-free digraph, then close it under the
    k-quasi-transitivity condition.  Deterministic per seed."""
    rng = random.Random(cfg.seed)
    arcs = [
        (u, v)
        for u in range(cfg.n)
        for v in range(cfg.n)
        if u != v and rng.random() < cfg.arc_prob
    ]
    base = build(cfg.n, arcs)
    return qt_closure(base, cfg.k, cfg.orientation_rule, seed=rng.getrandbits(64))


def compose(q: Digraph, parts: list[Digraph]) -> tuple[Digraph, tuple[int, ...]]:
    """Blow-up composition: replace vertex i of q by parts[i].

    The result has the disjoint union of the parts as vertices, all part
    arcs, and every arc from block i to block j when (i, j) is an arc of q.
    Returns (digraph, block_of) with block_of mapping new vertex id -> block.
    """
    if len(parts) != q.n:
        raise ArityMismatch(q.n, len(parts))
    offsets: list[int] = []
    total = 0
    for h in parts:
        offsets.append(total)
        total += h.n
    arcs: list[tuple[int, int]] = []
    block_of: list[int] = []
    for i, h in enumerate(parts):
        block_of.extend([i] * h.n)
        off = offsets[i]
        arcs.extend((off + a, off + b) for a, b in h.arcs())
    for i, j in q.arcs():
        arcs.extend(
            (offsets[i] + a, offsets[j] + b)
            for a in range(parts[i].n)
            for b in range(parts[j].n)
        )
    return build(total, arcs), tuple(block_of)


def certify_qt(d: Digraph, k: int) -> bool:
    """Cheap yes/no recognition via the pair scan (no violation list).

    Equivalent to `not is_k_quasi_transitive(d, k)` but avoids enumerating
    every length-k path on dense instances.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    _require_enumerable(d.n)
    succ = [set(row) for row in d.adj]
    for u in range(d.n):
        for v in range(u + 1, d.n):
            if v in succ[u] or u in succ[v]:
                continue
            if _k_path_exists(succ, d.n, u, v, k) or _k_path_exists(
                succ, d.n, v, u, k
            ):
                return False
    return True
