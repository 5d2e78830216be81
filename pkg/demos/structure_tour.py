"""A tour of recognition, kings, and component structure on two small digraphs.

Run:  python3 demos/structure_tour.py
"""

from qk import (
    all_r_kings,
    build,
    census,
    distances_from,
    is_k_quasi_transitive,
    strong_components,
)


def show(title):
    print(f"\n== {title} ==")


# The four-vertex showpiece: 0 -> 1, 1 -> {2, 3}, and a digon between 2 and 3.
d4 = build(4, [(0, 1), (1, 2), (1, 3), (2, 3), (3, 2)])

show("recognition at increasing k")
for k in (2, 3, 4):
    vs = is_k_quasi_transitive(d4, k)
    if vs:
        witness = vs[0]
        print(f"k={k}: NOT {k}-quasi-transitive — path "
              f"{'->'.join(map(str, witness.path))} has non-adjacent endpoints")
    else:
        print(f"k={k}: {k}-quasi-transitive (every {k}-arc path closes)")

show("why kings and out-degree can disagree")
rep = census(d4, 4)
print(f"out-eccentricities: {list(rep.ecc_out)}")
print(f"5-kings: {rep.kings_by_radius[5]}")
print(f"max out-degree {rep.max_out_degree} at {rep.max_out_degree_vertices}")
print("vertex 0 reaches everything in 2 steps yet has out-degree 1;")
print("vertex 1 has the largest out-degree yet reaches nothing that")
print("reaches it back — greedy degree choice is not how kings are found.")

show("the chorded path: every radius matters")
k = 3
n = k + 2
chord = build(n, [(i, i + 1) for i in range(n - 1)] + [(k, 0), (k + 1, 1)])
print(f"vertices 0..{k + 1}, path arcs plus chords ({k},0) and ({k + 1},1)")
for r in range(k - 1, k + 3):
    print(f"{r}-kings: {all_r_kings(chord, r)}")
print(f"distance row from 0: {distances_from(chord, 0)}")

show("strong components drive everything")
two_islands = build(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
comps = strong_components(two_islands)
print(f"two disjoint 3-cycles -> components {comps.components}, "
      f"{len(comps.initial)} initial")
print(f"4-kings: {all_r_kings(two_islands, 4)} (two initial components, no king)")
bridge = build(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3)])
print(f"add one bridge arc 0->3: 4-kings become {all_r_kings(bridge, 4)}")
