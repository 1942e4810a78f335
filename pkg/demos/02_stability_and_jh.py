"""King stability of one explicit representation and its Jordan-Hoelder data.

The representation is x -> z <- y over F_2 with both maps equal to 1.  For
the weight (1, 0, -1) it is semistable but not polystable: the
subrepresentation through x splits off with weight zero, and what remains
is the simple at y.
"""

from gitfan import benchmarks
from gitfan.reps import (
    is_polystable,
    is_semistable,
    is_stable,
    jh_filtration,
    make_rep,
    orbit_cone,
    polystable_reduction,
    subrep_dimvectors,
)

Q = benchmarks.s2()
W = make_rep(Q, (1, 1, 1), 2, {"a": [[1]], "b": [[1]]})
sigma = (1, 0, -1)

print("subrepresentation dimension vectors:", sorted(subrep_dimvectors(W)))
print("orbit cone rays:", orbit_cone(W).rays)
print(f"sigma = {sigma}: semistable={is_semistable(W, sigma)}, stable={is_stable(W, sigma)}")

F = jh_filtration(W, sigma)
print("Jordan-Hoelder filtration dimensions:", " < ".join(map(str, F.dims)))

gr = polystable_reduction(W, sigma)
print("associated graded:", gr)
print("W polystable?", is_polystable(W, sigma), "  gr polystable?", is_polystable(gr, sigma))
print("orbit cone of gr:", orbit_cone(gr).rays, "(a face of the orbit cone of W)")
