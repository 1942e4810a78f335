"""Sampled mode: the same fan from random representations over F_1009.

The oracle sweeps every representation over F_2, which only works for tiny
dimension vectors.  Sampled mode draws representations with prescribed
subrepresentations over a large field instead.  On the benchmarks the two
agree exactly.
"""

from gitfan import benchmarks
from gitfan.fan import git_fan, oracle, sampled
from gitfan.io import dumps, emit_fan

for name in ("S2", "A3", "Square"):
    Q, beta = benchmarks.benchmark(name)
    exact = git_fan(Q, beta, oracle(2))
    approx = git_fan(Q, beta, sampled(1009, samples=64, seed=0))
    same = dumps(emit_fan(exact)) == dumps(emit_fan(approx))
    print(f"{name:7s} oracle {exact.count_by_dim()}  sampled {approx.count_by_dim()}  identical: {same}")
