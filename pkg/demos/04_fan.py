"""The GIT-fan of the square quiver and a full verification pass.

Every cone of the fan is a GIT-cone; its relative interior is one
GIT-equivalence class.  The check at the end compares the fan against the
exhaustive model of all 16 representations over F_2.
"""

from gitfan import benchmarks
from gitfan.fan import git_fan, oracle, verify_fan

Q, beta = benchmarks.benchmark("Square")
mode = oracle(2)
F = git_fan(Q, beta, mode)

print("cones by dimension:", F.count_by_dim())
for C in F.maximal():
    print("maximal cone with rays", list(C.rays))

report = verify_fan(Q, beta, F, mode, samples=300)
for check in report.checks:
    print(f"  [{'ok' if check.passed else 'FAIL'}] {check.name}: {check.detail}")
