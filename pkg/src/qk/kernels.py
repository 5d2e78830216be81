"""(k,l)-kernels: verification, construction, exhaustive search, and a
randomized hunt for a k-quasi-transitive digraph with no (k+1,k)-kernel.

A (k,l)-kernel is a vertex set S that is k-independent (every two distinct
members sit at directed distance >= k in BOTH directions) and l-absorbent
(every outside vertex reaches some member within l steps).  The headline
construction: in a k-quasi-transitive digraph, picking one maximum
out-degree vertex inside each initial strong component of the REVERSED
digraph yields a (k+2, k+1)-kernel.  Whether (k+1, k) is always attainable
is open; hunt_conjecture searches for a refutation.
"""

from __future__ import annotations

import itertools
import random as _random
from dataclasses import dataclass

from .digraph import Digraph, build, distances_from, induced, reverse, strong_components
from .errors import InstanceTooLarge, NotQuasiTransitiveInput, VertexOutOfRange
from .qt import GenConfig, certify_qt, mix_seed, random_qt

VERIFIED = "VERIFIED"
REFUTED = "REFUTED"


@dataclass(frozen=True)
class KernelCertificate:
    """Outcome of checking one candidate set against one (k, l) pair.

    witness is an ordered pair (u, v) with d(u, v) < k when independence
    fails, else a vertex outside the set that no member absorbs within l,
    else None.
    """

    candidate: tuple[int, ...]
    k: int
    l: int
    independent: bool
    absorbent: bool
    witness: tuple[int, int] | int | None

    @property
    def verified(self) -> bool:
        return self.independent and self.absorbent

    @property
    def status(self) -> str:
        return VERIFIED if self.verified else REFUTED


def verify_kernel(d: Digraph, candidate, k: int, l: int) -> KernelCertificate:
    """BFS-check that candidate is a (k, l)-kernel of d.

    Scans independence over ordered member pairs in sorted order, then
    absorbency over outside vertices in id order, so the reported witness
    is deterministic.
    """
    if k < 1 or l < 1:
        raise ValueError("kernel radii must be >= 1")
    s = tuple(sorted(set(candidate)))
    for v in s:
        if not (0 <= v < d.n):
            raise VertexOutOfRange(v, d.n)
    rows = {v: distances_from(d, v) for v in s}
    independent, ind_witness = True, None
    for u in s:
        for v in s:
            if u != v and rows[u][v] < k:
                independent, ind_witness = False, (u, v)
                break
        if not independent:
            break
    rev = reverse(d)
    # d(z, v) for all z at once, per member v
    into = {v: distances_from(rev, v) for v in s}
    absorbent, abs_witness = True, None
    members = set(s)
    for z in range(d.n):
        if z in members:
            continue
        if not any(into[v][z] <= l for v in s):
            absorbent, abs_witness = False, z
            break
    return KernelCertificate(
        candidate=s,
        k=k,
        l=l,
        independent=independent,
        absorbent=absorbent,
        witness=ind_witness if ind_witness is not None else abs_witness,
    )


def construct_kplus2_kernel(d: Digraph, k: int) -> tuple[int, ...]:
    """A (k+2, k+1)-kernel of a k-quasi-transitive digraph.

    Takes one maximum out-degree vertex (smallest id on ties, degree
    measured within the component) from each initial strong component of
    the reversed digraph.  The result is verified before being returned;
    failure means the input was not k-quasi-transitive and raises
    NotQuasiTransitiveInput.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    if d.n == 0:
        return ()
    rev = reverse(d)
    cond = strong_components(rev)
    picks = []
    for idx in cond.initial:
        comp = cond.components[idx]
        sub, remap = induced(rev, comp)
        degs = {orig: sub.out_degree(new) for orig, new in remap.items()}
        dmax = max(degs.values())
        picks.append(min(v for v, dv in degs.items() if dv == dmax))
    s = tuple(sorted(picks))
    cert = verify_kernel(d, s, k + 2, k + 1)
    if not cert.verified:
        raise NotQuasiTransitiveInput(
            f"candidate {s} failed {cert.status} with witness {cert.witness}; "
            f"input is not {k}-quasi-transitive"
        )
    return s


def exhaustive_kernel_search(
    d: Digraph, k: int, l: int, cap: int = 20
) -> tuple[int, ...] | None:
    """Smallest (k, l)-kernel, lexicographically first among that size,
    or None if no subset qualifies.

    Complete search over all vertex subsets in size-then-lex order, with
    pairwise-independence and bitmask-absorbency tables precomputed so each
    subset costs O(|S|^2).  Refuses instances larger than cap.
    """
    if k < 1 or l < 1:
        raise ValueError("kernel radii must be >= 1")
    if d.n > cap:
        raise InstanceTooLarge(d.n, cap)
    n = d.n
    rows = [distances_from(d, v) for v in range(n)]
    pair_ok = [
        [rows[u][v] >= k and rows[v][u] >= k for v in range(n)] for u in range(n)
    ]
    absorb = [0] * n
    for v in range(n):
        for z in range(n):
            if rows[z][v] <= l:
                absorb[v] |= 1 << z
    full = (1 << n) - 1
    for size in range(n + 1):
        for comb in itertools.combinations(range(n), size):
            if all(pair_ok[u][v] for u, v in itertools.combinations(comb, 2)):
                mask = 0
                for v in comb:
                    mask |= absorb[v]
                if mask == full:
                    return comb
    return None


@dataclass(frozen=True)
class Counterexample:
    """A digraph the hunt flagged: k-quasi-transitive, yet no
    (radii[0], radii[1])-kernel exists."""

    k: int
    radii: tuple[int, int]
    n: int
    arcs: tuple[tuple[int, int], ...]
    trial: int
    seed: int


def recheck_counterexample(ce: Counterexample) -> bool:
    """Independent re-verification of a hunt hit: rebuild the digraph,
    re-certify quasi-transitivity, and re-run the complete kernel search."""
    d = build(ce.n, list(ce.arcs))
    if not certify_qt(d, ce.k):
        return False
    return exhaustive_kernel_search(d, ce.radii[0], ce.radii[1], cap=ce.n) is None


@dataclass(frozen=True)
class HuntLedger:
    k: int
    radii: tuple[int, int]
    trials: int
    n_max: int
    base_seed: int
    kernels_found: int
    size_histogram: dict[int, int]
    counterexamples: tuple[Counterexample, ...]

    @property
    def refuted(self) -> bool:
        return bool(self.counterexamples)


def hunt_conjecture(
    k: int,
    trials: int = 500,
    n_max: int = 9,
    base_seed: int = 0,
    radii: tuple[int, int] | None = None,
    n_min: int = 4,
) -> HuntLedger:
    """Randomized search for a k-quasi-transitive digraph with no
    (k+1, k)-kernel (radii overrides the target pair).

    Each trial draws an order in [n_min, n_max] and an arc density around
    the sparse regime (expected degree 0.5..2.5), generates a
    k-quasi-transitive digraph, and runs the complete kernel search.  A
    trial with no kernel is recheck_counterexample'd before it is recorded.
    Fully deterministic in (k, trials, n_max, base_seed, radii, n_min).
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    if trials < 0:
        raise ValueError("trials must be >= 0")
    if not (1 <= n_min <= n_max):
        raise ValueError("need 1 <= n_min <= n_max")
    if n_max > 16:
        raise InstanceTooLarge(n_max, 16)
    rr = (k + 1, k) if radii is None else (int(radii[0]), int(radii[1]))
    if rr[0] < 1 or rr[1] < 1:
        raise ValueError("kernel radii must be >= 1")
    found = 0
    hist: dict[int, int] = {}
    hits: list[Counterexample] = []
    for t in range(trials):
        seed = mix_seed(base_seed, k, t)
        rng = _random.Random(seed)
        n = rng.randint(n_min, n_max)
        p = min(1.0, rng.uniform(0.5, 2.5) / n)
        d = random_qt(GenConfig(n=n, k=k, arc_prob=p, seed=rng.getrandbits(64)))
        kernel = exhaustive_kernel_search(d, rr[0], rr[1], cap=n_max)
        if kernel is None:
            ce = Counterexample(
                k=k, radii=rr, n=d.n, arcs=tuple(d.arcs()), trial=t, seed=seed
            )
            if not recheck_counterexample(ce):
                raise AssertionError(f"hunt hit failed recheck: {ce}")
            hits.append(ce)
        else:
            found += 1
            hist[len(kernel)] = hist.get(len(kernel), 0) + 1
    return HuntLedger(
        k=k,
        radii=rr,
        trials=trials,
        n_max=n_max,
        base_seed=base_seed,
        kernels_found=found,
        size_histogram=dict(sorted(hist.items())),
        counterexamples=tuple(hits),
    )
