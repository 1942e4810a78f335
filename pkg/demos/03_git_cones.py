"""GIT-cones of individual weights and GIT-equivalence on x -> z <- y."""

from fractions import Fraction

from gitfan import benchmarks
from gitfan.fan import git_cone, git_equivalent, integral_witness, oracle

Q, beta = benchmarks.benchmark("S2")
mode = oracle(2)

for sigma in [(1, 1, -2), (2, 1, -3), (1, 0, -1), (0, 0, 0)]:
    rec = git_cone(Q, beta, sigma, mode)
    print(f"C{sigma}: rays {list(rec.cone.rays)}")
    print(f"    cut out by subrepresentation dimensions {sorted(rec.d_sigma)}")

print()
print("(1,1,-2) ~ (2,1,-3):", git_equivalent(Q, beta, (1, 1, -2), (2, 1, -3), mode))
print("(1,1,-2) ~ (1,0,-1):", git_equivalent(Q, beta, (1, 1, -2), (1, 0, -1), mode))

frac = (Fraction(2, 3), Fraction(1, 3), -1)
w = integral_witness(Q, beta, frac)
print(f"integral weight equivalent to {tuple(map(str, frac))}: {w}")
