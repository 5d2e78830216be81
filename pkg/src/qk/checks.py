"""Structural checkers: re-verify the k-quasi-transitive theory on corpora.

Every checker takes a digraph known (by construction) to be
k-quasi-transitive and confirms one structural fact about it, reporting a
Violation for each concrete failure instead of asserting.  A violation on
generated input means either the generator or the checked fact is wrong,
and both are worth knowing about.

A note on quantification: several facts range over every minimum-length
u->v path.  A vertex x lies at position j of SOME minimum u->v path iff
d(u,x) = j and d(x,v) = d(u,v) - j, and two positions j1 < j2 are realized
by x, y on a COMMON minimum path iff additionally d(x,y) = j2 - j1 (a walk
of length d(u,v) through them cannot repeat a vertex).  That turns
every-path quantifiers into distance-matrix scans with no path
enumeration.
"""

from __future__ import annotations

import dataclasses
import random as _random
import time
from dataclasses import dataclass

from .digraph import Digraph, INF, build, distance_matrix, distances_from, reverse, strong_components
from .errors import NotQuasiTransitiveInput
from .kings import census, degree_threshold_vertices, find_kplus1_king_fast, has_unique_initial_component
from .kernels import construct_kplus2_kernel, verify_kernel
from .qt import FORWARD, GenConfig, mix_seed, qt_closure, random_qt


@dataclass(frozen=True)
class Violation:
    """One concrete failed claim: which checker, which clause, on what."""

    check_id: str
    clause: str
    k: int
    witness: tuple
    detail: str
    instance: int = -1

    def same_claim(self, other: "Violation") -> bool:
        return (
            self.check_id == other.check_id
            and self.clause == other.clause
            and self.k == other.k
            and self.witness == other.witness
        )


def _eccs(dm) -> list[float]:
    return [max(dm[v]) for v in range(dm.n)]


def check_distance_dichotomy(d: Digraph, k: int):
    """Return-distance table: a pair at forward distance >= k must answer
    back at distance 1, <= k+1, or <= 2 depending on parity and offset."""
    dm = distance_matrix(d)
    fired = False
    out = []

    def bad(u, v, duv, dvu, need):
        out.append(
            Violation(
                check_id="distance-dichotomy",
                clause=need,
                k=k,
                witness=(u, v, duv, dvu),
                detail=f"d({u},{v})={duv} but d({v},{u})={dvu}, needed {need}",
            )
        )

    for u in range(d.n):
        for v in range(d.n):
            duv = dm[u][v]
            if u == v or duv is INF or duv < k:
                continue
            fired = True
            dvu = dm[v][u]
            if duv == k:
                if dvu != 1:
                    bad(u, v, duv, dvu, "back=1")
            elif duv == k + 1:
                if dvu > k + 1:
                    bad(u, v, duv, dvu, "back<=k+1")
            elif k % 2 == 0 or duv % 2 == 1:
                if dvu != 1:
                    bad(u, v, duv, dvu, "back=1")
            elif dvu > 2:
                bad(u, v, duv, dvu, "back<=2")
    return fired, out


def check_component_domination(d: Digraph, k: int):
    """If one strong component reaches another, every cross pair sits at
    distance <= k-1."""
    dm = distance_matrix(d)
    cond = strong_components(d)
    m = len(cond.components)
    fired = False
    out = []
    for i in range(m):
        reach_row = distances_from(cond.dag, i)
        for j in range(m):
            if i == j or reach_row[j] is INF:
                continue
            fired = True
            for u in cond.components[i]:
                for v in cond.components[j]:
                    if dm[u][v] > k - 1:
                        out.append(
                            Violation(
                                check_id="component-domination",
                                clause="cross-distance",
                                k=k,
                                witness=(u, v, dm[u][v]),
                                detail=(
                                    f"component {i} reaches {j} but "
                                    f"d({u},{v})={dm[u][v]} > {k - 1}"
                                ),
                            )
                        )
    return fired, out


def check_min_path_domination(d: Digraph, k: int):
    """Arcs forced from the far end (and the vertex before it) of any
    minimum path of length k+2 back onto the path and into the start's
    distance ball."""
    dm = distance_matrix(d)
    n = d.n
    fired = False
    out = []

    def bad(clause, witness, detail):
        out.append(
            Violation(
                check_id="min-path-domination",
                clause=clause,
                k=k,
                witness=witness,
                detail=detail,
            )
        )

    for u in range(n):
        row = dm[u]
        for v in range(n):
            if row[v] != k + 2:
                continue
            fired = True
            # far endpoint dominates positions k-i of every minimum path,
            # odd offsets for every k, all offsets when k is even
            offsets = range(0, k + 1) if k % 2 == 0 else range(1, k + 1, 2)
            clause = (
                "endpoint-backarc-all-offsets"
                if k % 2 == 0
                else "endpoint-backarc-odd-offsets"
            )
            for i in offsets:
                j = k - i
                for x in range(n):
                    if row[x] == j and dm[x][v] == k + 2 - j and not d.has_arc(v, x):
                        bad(
                            clause,
                            (u, v, x, i),
                            f"{v} must dominate position {j} vertex {x} "
                            f"of minimum {u}->{v} paths",
                        )
            # ball domination by the far endpoint
            if k % 2 == 0:
                for w in range(n):
                    if row[w] <= k and not d.has_arc(v, w):
                        bad(
                            "endpoint-dominates-ball",
                            (u, v, w, row[w]),
                            f"d({u},{w})={row[w]} <= {k} but no arc {v}->{w}",
                        )
            else:
                for w in range(n):
                    if row[w] <= k - 1 and row[w] % 2 == 0 and not d.has_arc(v, w):
                        bad(
                            "endpoint-dominates-even-ball",
                            (u, v, w, row[w]),
                            f"d({u},{w})={row[w]} even <= {k - 1} "
                            f"but no arc {v}->{w}",
                        )
            # the vertex before the endpoint dominates even offsets
            for y in range(n):
                if row[y] != k + 1 or dm[y][v] != 1:
                    continue
                for i in range(2, k + 1, 2):
                    j = k - i
                    for x in range(n):
                        if (
                            row[x] == j
                            and dm[x][y] == k + 1 - j
                            and not d.has_arc(y, x)
                        ):
                            bad(
                                "penultimate-backarc-even-offsets",
                                (u, v, y, x, i),
                                f"{y} (position {k + 1}) must dominate "
                                f"position {j} vertex {x}",
                            )
    return fired, out


def check_degree_growth(d: Digraph, k: int):
    """Out-degree climbs along minimum paths of length k+2: by k at the far
    endpoint (even k), by (k-1)/2 at the vertex before it (odd k)."""
    dm = distance_matrix(d)
    n = d.n
    fired = False
    out = []
    step = k if k % 2 == 0 else (k - 1) // 2
    for u in range(n):
        for v in range(n):
            if dm[u][v] != k + 2:
                continue
            fired = True
            if k % 2 == 0:
                if d.out_degree(v) < d.out_degree(u) + step:
                    out.append(
                        Violation(
                            check_id="degree-growth",
                            clause="endpoint-degree",
                            k=k,
                            witness=(u, v, d.out_degree(u), d.out_degree(v)),
                            detail=(
                                f"deg+({v})={d.out_degree(v)} < "
                                f"deg+({u})+{step}"
                            ),
                        )
                    )
            else:
                for x in range(n):
                    if dm[u][x] == k + 1 and dm[x][v] == 1:
                        if d.out_degree(x) < d.out_degree(u) + step:
                            out.append(
                                Violation(
                                    check_id="degree-growth",
                                    clause="penultimate-degree",
                                    k=k,
                                    witness=(u, v, x, d.out_degree(u), d.out_degree(x)),
                                    detail=(
                                        f"deg+({x})={d.out_degree(x)} < "
                                        f"deg+({u})+{step}"
                                    ),
                                )
                            )
    return fired, out


def check_king_theorems(d: Digraph, k: int):
    """King-structure facts: targets at distance k+2 from a (k+2)-king are
    3-kings (even k) / 4-kings (odd k) with their distance-3/4 successors
    pinned back to distance k+2; a (k+2)-but-not-(k+1)-king sees a 2-king
    at distance k+2 across a semicomplete distance class (even k >= 4); the
    king triple and final disjunctions under a unique initial component;
    distance-(k+1) propagation; and, for k=2, maximum out-degree vertices
    are 3-kings whenever any 3-king exists."""
    dm = distance_matrix(d)
    n = d.n
    ecc = _eccs(dm)
    fired = False
    out = []

    def bad(clause, witness, detail):
        out.append(
            Violation(
                check_id="king-theorems",
                clause=clause,
                k=k,
                witness=witness,
                detail=detail,
            )
        )

    small = 3 if k % 2 == 0 else 4
    for v in range(n):
        if ecc[v] > k + 2:
            continue
        for u in range(n):
            if dm[v][u] != k + 2:
                continue
            fired = True
            if ecc[u] > small:
                bad(
                    "distant-target-small-king",
                    (v, u, ecc[u]),
                    f"d({v},{u})=k+2 but ecc({u})={ecc[u]} > {small}",
                )
            for w in range(n):
                if dm[u][w] == small and dm[v][w] != k + 2:
                    bad(
                        "distant-target-closure",
                        (v, u, w, dm[v][w]),
                        f"d({u},{w})={small} forces d({v},{w})=k+2, "
                        f"got {dm[v][w]}",
                    )

    if k % 2 == 0 and k >= 4:
        for v in range(n):
            if not (k + 1 < ecc[v] <= k + 2):
                continue
            fired = True
            distant = [w for w in range(n) if dm[v][w] == k + 2]
            if not any(ecc[w] <= 2 for w in distant):
                bad(
                    "demoted-king-two-king",
                    (v,),
                    f"no 2-king at distance k+2 from demoted king {v}",
                )
            for a in range(len(distant)):
                for b in range(a + 1, len(distant)):
                    x, y = distant[a], distant[b]
                    if not d.adjacent(x, y):
                        bad(
                            "distant-class-semicomplete",
                            (v, x, y),
                            f"distance-(k+2) class of {v} misses arc "
                            f"between {x} and {y}",
                        )

    unique, comp = has_unique_initial_component(d)
    if unique:
        all_c = all(ecc[x] <= k + 1 for x in comp)
        triple_applies = (k % 2 == 0 and k >= 4) or k % 2 == 1
        if triple_applies and not all_c:
            fired = True
            u3_radius = 2 if k % 2 == 0 else 4
            ok = False
            for u2 in comp:
                if ecc[u2] > k + 2:
                    continue
                if not any(d.has_arc(u2, u1) and ecc[u1] <= k + 1 for u1 in comp):
                    continue
                if not any(dm[u2][u3] == k + 2 and ecc[u3] <= u3_radius for u3 in comp):
                    continue
                if all(ecc[w] <= small for w in range(n) if dm[u2][w] == k + 2):
                    ok = True
                    break
            if not ok:
                bad(
                    "king-triple",
                    tuple(comp),
                    "no (k+2)-king in the initial component with a "
                    "dominated (k+1)-king and a small king at distance k+2",
                )
        if k % 2 == 0 and k >= 4:
            if not all_c:
                fired = True
                two = sum(1 for x in range(n) if ecc[x] <= 2)
                three = sum(1 for x in range(n) if ecc[x] <= 3)
                if not (two >= 1 and three >= 2):
                    bad(
                        "final-disjunction",
                        (two, three),
                        f"not all of C are (k+1)-kings yet only {two} "
                        f"2-kings / {three} 3-kings",
                    )
        if k % 2 == 1:
            if not all_c:
                fired = True
                three_in_c = any(ecc[x] <= 3 for x in comp)
                four = sum(1 for x in range(n) if ecc[x] <= 4)
                if not (three_in_c or four >= 4):
                    bad(
                        "final-disjunction",
                        (three_in_c, four),
                        f"no 3-king in C and only {four} 4-kings",
                    )

    for u in range(n):
        if ecc[u] > k + 1:
            continue
        for v in range(n):
            if dm[u][v] == k + 1:
                fired = True
                if ecc[v] > k + 1:
                    bad(
                        "king-propagation",
                        (u, v, ecc[v]),
                        f"{u} is a (k+1)-king with d({u},{v})=k+1 but "
                        f"ecc({v})={ecc[v]}",
                    )

    if k == 2 and n > 0 and any(e <= 3 for e in ecc):
        fired = True
        dmax = d.max_out_degree()
        for v in range(n):
            if d.out_degree(v) == dmax and ecc[v] > 3:
                bad(
                    "max-degree-three-king",
                    (v, dmax, ecc[v]),
                    f"max out-degree vertex {v} has ecc {ecc[v]} > 3",
                )
    return fired, out


def check_unique_initial_equivalence(d: Digraph, k: int):
    """A (k+1)-king exists iff the initial strong component is unique."""
    dm = distance_matrix(d)
    kings = [v for v in range(d.n) if max(dm[v]) <= k + 1]
    unique, _ = has_unique_initial_component(d)
    out = []
    if bool(kings) != unique:
        out.append(
            Violation(
                check_id="unique-initial-equivalence",
                clause="existence-iff-unique-initial",
                k=k,
                witness=(tuple(kings), unique),
                detail=f"(k+1)-kings {kings} vs unique_initial={unique}",
            )
        )
    return d.n > 0, out


def check_degree_threshold_kings(d: Digraph, k: int):
    """Every vertex of the unique initial component above the parity degree
    cutoff is a (k+1)-king, and the fast finder returns a verified king."""
    unique, _ = has_unique_initial_component(d)
    out = []
    if not unique:
        king = find_kplus1_king_fast(d, k)
        if king is not None:
            out.append(
                Violation(
                    check_id="degree-threshold-kings",
                    clause="finder-none-without-unique-initial",
                    k=k,
                    witness=(king,),
                    detail=f"finder returned {king} despite multiple initial components",
                )
            )
        return False, out
    dm = distance_matrix(d)
    for v in degree_threshold_vertices(d, k):
        if max(dm[v]) > k + 1:
            out.append(
                Violation(
                    check_id="degree-threshold-kings",
                    clause="threshold-vertex-is-king",
                    k=k,
                    witness=(v, max(dm[v])),
                    detail=f"threshold vertex {v} has ecc {max(dm[v])} > {k + 1}",
                )
            )
    try:
        king = find_kplus1_king_fast(d, k)
    except NotQuasiTransitiveInput as exc:
        out.append(
            Violation(
                check_id="degree-threshold-kings",
                clause="finder-rejected-input",
                k=k,
                witness=(),
                detail=str(exc),
            )
        )
        return True, out
    if king is None or max(dm[king]) > k + 1:
        out.append(
            Violation(
                check_id="degree-threshold-kings",
                clause="finder-returns-king",
                k=k,
                witness=(king,),
                detail=f"finder returned {king}",
            )
        )
    return True, out


def check_census_audits(d: Digraph, k: int):
    """All applicable counting-audit rows of the census pass."""
    rep = census(d, k)
    out = [
        Violation(
            check_id="census-audits",
            clause=row.tag,
            k=k,
            witness=(row.observed,),
            detail=f"{row.tag}: expected {row.expected}, observed {row.observed}",
        )
        for row in rep.failed_audits
    ]
    return bool(rep.counting_audit), out


def check_kernel_construction(d: Digraph, k: int):
    """construct_kplus2_kernel yields a verified (k+2, k+1)-kernel with one
    member per initial component of the reversed digraph."""
    out = []
    try:
        s = construct_kplus2_kernel(d, k)
    except NotQuasiTransitiveInput as exc:
        out.append(
            Violation(
                check_id="kernel-construction",
                clause="construction-rejected",
                k=k,
                witness=(),
                detail=str(exc),
            )
        )
        return True, out
    cert = verify_kernel(d, s, k + 2, k + 1)
    if not cert.verified:
        out.append(
            Violation(
                check_id="kernel-construction",
                clause="certificate",
                k=k,
                witness=(s, cert.witness),
                detail=f"{s} failed verification with witness {cert.witness}",
            )
        )
    expected = len(strong_components(reverse(d)).initial)
    if len(s) != expected:
        out.append(
            Violation(
                check_id="kernel-construction",
                clause="one-per-component",
                k=k,
                witness=(s, expected),
                detail=f"kernel {s} has {len(s)} members, expected {expected}",
            )
        )
    return d.n > 0, out


LEMMA_CHECKS = (
    "distance-dichotomy",
    "component-domination",
    "min-path-domination",
    "degree-growth",
    "king-theorems",
)

KING_CHECKS = (
    "unique-initial-equivalence",
    "degree-threshold-kings",
    "census-audits",
    "kernel-construction",
)

CHECKERS = {
    "distance-dichotomy": check_distance_dichotomy,
    "component-domination": check_component_domination,
    "min-path-domination": check_min_path_domination,
    "degree-growth": check_degree_growth,
    "king-theorems": check_king_theorems,
    "unique-initial-equivalence": check_unique_initial_equivalence,
    "degree-threshold-kings": check_degree_threshold_kings,
    "census-audits": check_census_audits,
    "kernel-construction": check_kernel_construction,
}


def revalidate(d: Digraph, violation: Violation) -> bool:
    """Re-run the reporting checker on d and confirm the same claim fails."""
    fired, found = CHECKERS[violation.check_id](d, violation.k)
    return any(violation.same_claim(v) for v in found)


def kings_corpus(
    k: int, trials: int = 200, n_max: int = 10, base_seed: int = 1789
) -> list[Digraph]:
    """Mixed-density k-quasi-transitive instances for king/kernel checks:
    cycles through sparse (usually several components), two medium, and
    dense (usually strong) regimes."""
    out = []
    for t in range(trials):
        rng = _random.Random(mix_seed(base_seed, k, t, 0xA11CE))
        n = rng.randint(2, n_max)
        profile = t % 4
        if profile == 0:
            p = rng.uniform(0.8, 1.8) / n
        elif profile == 1:
            p = rng.uniform(0.15, 0.35)
        elif profile == 2:
            p = rng.uniform(0.4, 0.8)
        else:
            p = rng.uniform(0.05, 0.5)
        cfg = GenConfig(n=n, k=k, arc_prob=min(1.0, p), seed=rng.getrandbits(64))
        out.append(random_qt(cfg))
    return out


def _interesting(d: Digraph, k: int, want: int) -> bool:
    if want == 1:
        return strong_components(d).dag.arc_count > 0
    dm = distance_matrix(d)
    if want == 0:
        return any(max(dm[v]) == k + 2 for v in range(d.n))
    best = -1
    for u in range(d.n):
        for v in range(d.n):
            if dm[u][v] is not INF and dm[u][v] > best:
                best = dm[u][v]
    return best >= k + 2


def _long_diameter_instance(
    k: int, rng: _random.Random, m_lo: int, m_hi: int, satellite: bool
) -> Digraph:
    """Instance with a planted geodesic of length m-1 >= k+2.

    Pairs at distance >= k+2 are essentially unreachable by sparse random
    generation: the domination consequences of such a pair force the
    geodesic's neighbourhood toward completeness, so random closure
    either stays shallow or goes dense and shallow.  Plant the canonical
    deep family instead: consecutive arcs i->i+1 plus every long
    back-arc j->i (j >= i+2) give d(0, m-1) = m-1 while staying
    k-quasi-transitive for every k (the core is semicomplete).
    Decorations for variety: digons on random consecutive pairs
    (backward arcs never shorten a forward geodesic), an optional short
    cycle attached downstream (reachable from the core, never back), and
    optionally a disjoint satellite piece.  FORWARD closure then repairs
    the few core-to-tail pairs without touching core distances.
    """
    m = rng.randint(m_lo, m_hi)
    arcs = [(i, i + 1) for i in range(m - 1)]
    arcs += [(j, i) for i in range(m) for j in range(i + 2, m)]
    for i in range(m - 1):
        if rng.random() < 0.25:
            arcs.append((i + 1, i))
    n = m
    if rng.random() < 0.35:
        c = rng.randint(2, min(k + 1, 4))
        arcs.append((rng.randrange(m), n))
        arcs += [(n + i, n + (i + 1) % c) for i in range(c)]
        n += c
    if satellite and rng.random() < 0.4:
        if rng.random() < 0.5:
            arcs.append((n, n + 1))
            n += 2
        else:
            n += 1
    return qt_closure(build(n, arcs), k, FORWARD, seed=0)


def lemma_corpus(k: int, trials: int = 60, base_seed: int = 355) -> list[Digraph]:
    """Instances sized k+3..2k+6-ish, screened so the distance-based
    hypotheses actually occur.

    Trials rotate through three screening targets: a vertex of
    out-eccentricity exactly k+2 (arms the king facts), at least one
    reachable pair of distinct components (arms cross-component
    domination), and a finite distance >= k+2 (arms the minimum-path and
    degree facts; some pair then sits at exactly k+2 because a prefix of
    a longer minimum path is itself a minimum path).  The two
    distance-depth targets alternate between planted long-diameter
    instances (the only systematic way to reach depth k+2 once k grows)
    and sparse random generation; the component target always samples
    sparse.  Each trial retries fresh sub-seeds until its target holds,
    keeping the last attempt otherwise, so the corpus is deterministic
    in (k, trials, base_seed).
    """
    out = []
    for t in range(trials):
        want = t % 3
        plant = want != 1 and (t // 3) % 2 == 0
        picked = None
        for attempt in range(30):
            rng = _random.Random(mix_seed(base_seed, k, t, attempt))
            if plant:
                m_lo = k + 3 if want == 0 else k + 4
                d = _long_diameter_instance(k, rng, m_lo, 2 * k + 4, satellite=want == 2)
            else:
                n = rng.randint(k + 3, 2 * k + 6)
                p = rng.uniform(0.9, 2.2) / n
                d = random_qt(GenConfig(n=n, k=k, arc_prob=p, seed=rng.getrandbits(64)))
            picked = d
            if _interesting(d, k, want):
                break
        out.append(picked)
    return out


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    k: int
    instances_checked: int
    fired: int
    violations: tuple[Violation, ...]
    elapsed: float

    @property
    def fire_fraction(self) -> float:
        return self.fired / self.instances_checked if self.instances_checked else 0.0

    @property
    def passed(self) -> bool:
        return not self.violations


def run_checker(check_id: str, k: int, corpus: list[Digraph]) -> CheckResult:
    fn = CHECKERS[check_id]
    t0 = time.perf_counter()
    fired = 0
    vs: list[Violation] = []
    for idx, d in enumerate(corpus):
        f, found = fn(d, k)
        fired += bool(f)
        vs.extend(dataclasses.replace(v, instance=idx) for v in found)
    return CheckResult(
        check_id=check_id,
        k=k,
        instances_checked=len(corpus),
        fired=fired,
        violations=tuple(vs),
        elapsed=time.perf_counter() - t0,
    )


def run_suite(
    k_values=(2, 3, 4, 5, 6),
    kings_trials: int = 200,
    kings_n_max: int = 10,
    lemma_trials: int = 60,
    base_seed: int = 1789,
) -> list[CheckResult]:
    """Generate both corpora for each k and run every checker on its
    corpus: distance/path/degree/king facts on the screened depth corpus,
    king-finding and kernel construction on the mixed-density corpus."""
    results = []
    for k in k_values:
        lemmas = lemma_corpus(k, trials=lemma_trials, base_seed=base_seed)
        kings = kings_corpus(
            k, trials=kings_trials, n_max=kings_n_max, base_seed=base_seed
        )
        for check_id in LEMMA_CHECKS:
            results.append(run_checker(check_id, k, lemmas))
        for check_id in KING_CHECKS:
            results.append(run_checker(check_id, k, kings))
    return results


def summarize(results: list[CheckResult]) -> str:
    lines = []
    for r in results:
        status = "ok" if r.passed else f"{len(r.violations)} VIOLATIONS"
        lines.append(
            f"{r.check_id:28s} k={r.k}  fired {r.fired:3d}/{r.instances_checked:<3d}"
            f"  {status}  ({r.elapsed:.2f}s)"
        )
    return "\n".join(lines)
