"""Which weights admit semistable representations, and where the walls are.

Run:  python3 demos/01_effective_cone.py
"""

from gitfan import benchmarks
from gitfan.fan import wall_system
from gitfan.genrep import embedded_subdims, generic_ext

Q, beta = benchmarks.benchmark("Square")
print(f"quiver: {Q}")
print(f"dimension vector: {beta}\n")

print("A general representation of this dimension has subrepresentations of dimension:")
for d in embedded_subdims(Q, beta):
    print("   ", d)

ws = wall_system(Q, beta)
print("\nThe effective cone is spanned by")
for r in ws.support.rays:
    print("   ", r)

print("\nCandidate hyperplanes, grouped by their trace on that cone:")
for c in ws.classes:
    print(f"    {c.kind:10s} normal {c.normal}  from {list(c.members)}")

print("\ngeneric ext between the halves (1,0,1,0) and (0,1,0,1):",
      generic_ext(Q, (1, 0, 1, 0), (0, 1, 0, 1)))
