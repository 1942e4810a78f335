"""Acceptance criteria 1-7.

Each test records one PASS/FAIL line, printed in the terminal summary.
"""

import contextlib
import itertools
import os
import subprocess
import sys
import time

import pytest

from conftest import ACCEPTANCE, ROOT
from gitfan import benchmarks
from gitfan.cones import contains, faces, intersect, is_face, cone_from_hrep, relint_contains, relint_point
from gitfan.fan import clear_caches, git_cone, git_fan, integral_sweep, oracle, sampled, verify_fan
from gitfan.genrep import effective_cone, embeds, generic_ext, is_stable_dimvector, stable_decomposition
from gitfan.io import dumps, emit_fan
from gitfan.linalg import rank_p
from gitfan.quiver import subdim_vectors, weight_of
from gitfan.reps import (
    family_dim,
    finite_model,
    is_polystable,
    iter_subreps,
    jh_filtration,
    orbit_cone,
    polystable_reduction,
)
from oracles import embeds_by_search, sampled_ext

QUIVERS = {
    "A2": benchmarks.a2(),
    "K2": benchmarks.kronecker(),
    "S2": benchmarks.s2(),
    "A3": benchmarks.a3(),
    "Square": benchmarks.square(),
}
INSTANCES = {name: benchmarks.benchmark(name) for name in benchmarks.BENCHMARKS}


@contextlib.contextmanager
def criterion(label):
    notes = []
    try:
        yield notes
    except BaseException:
        ACCEPTANCE.append((label, False, "; ".join(notes)))
        raise
    ACCEPTANCE.append((label, True, "; ".join(notes)))


def small_dimvectors(n, total):
    return [b for b in itertools.product(range(total + 1), repeat=n) if 0 < sum(b) <= total]


# ---------------------------------------------------------------- 1


EXPECTED_RAYS = {
    "A2": {(1, -1)},
    "K2": {(1, -1)},
    "S2": {(1, 0, -1), (0, 1, -1)},
    "A3": {(1, -1, 0), (0, 1, -1)},
    "Square": {(1, 0, -1, 0), (1, 0, 0, -1), (0, 1, -1, 0), (0, 1, 0, -1)},
}


def test_criterion_1_effective_cones():
    with criterion("1 effective cones") as notes:
        for name, rays in EXPECTED_RAYS.items():
            Q, beta = INSTANCES[name]
            clear_caches()
            start = time.perf_counter()
            C = effective_cone(Q, beta)
            elapsed = time.perf_counter() - start
            assert set(C.rays) == rays and C.lineality == (), name
            assert elapsed < 1.0, f"{name} took {elapsed:.2f}s"
            notes.append(f"{name} {elapsed:.3f}s")


# ---------------------------------------------------------------- 2


def test_criterion_2_fan_counts():
    mode = oracle(2)
    with criterion("2 fan counts") as notes:
        for name in ("A2", "S2", "Square", "K2-22"):
            Q, beta = INSTANCES[name]
            clear_caches()
            start = time.perf_counter()
            F = git_fan(Q, beta, mode)
            report = verify_fan(Q, beta, F, mode, bound=4)
            elapsed = time.perf_counter() - start
            assert report.ok, (name, report.failures())
            assert elapsed < 120, f"{name} took {elapsed:.1f}s"
            dims = F.count_by_dim()
            maximal = [C.dim for C in F.maximal()]
            if name == "A2":
                assert len(maximal) == 1
            elif name == "S2":
                assert maximal == [2] and dims == {0: 1, 1: 2, 2: 1}
            elif name == "Square":
                assert maximal == [3] * 4
            else:
                C = effective_cone(Q, beta)
                assert C.dim == 1 and C.rays == ((1, -1),)
                for m in (1, 2, 3):
                    sigma = (m, -m)
                    assert not is_stable_dimvector(Q, beta, sigma)
                    assert stable_decomposition(Q, beta, sigma).parts == ((2, (1, 1)),)
            notes.append(f"{name} {elapsed:.1f}s")


# ---------------------------------------------------------------- 3


def test_criterion_3_fan_properties():
    mode = oracle(2)
    with criterion("3 fan properties") as notes:
        failures = []
        for name, (Q, beta) in INSTANCES.items():
            F = git_fan(Q, beta, mode)
            report = verify_fan(Q, beta, F, mode, samples=1000, seed=0, bound=4)
            names = {c.name for c in report.checks}
            assert {"coverage", "git-class-relint", "semistable-set-count"} <= names
            failures += [(name, c.name, c.detail) for c in report.failures()]
        notes.append(f"{len(INSTANCES)} instances, {len(failures)} failures")
        assert not failures, failures


# ---------------------------------------------------------------- 4


def test_criterion_4_schofield_calculus():
    start = time.perf_counter()
    with criterion("4 generic ext and embeds vs oracles") as notes:
        ext_bad, ext_count = [], 0
        for name, Q in QUIVERS.items():
            vecs = list(itertools.product(range(3), repeat=Q.n))
            for a, b in itertools.product(vecs, vecs):
                ext_count += 1
                if generic_ext(Q, a, b) != sampled_ext(Q, a, b, p=1009, samples=200, seed=0):
                    ext_bad.append((name, a, b))
        emb_bad, emb_count = [], 0
        for name, Q in QUIVERS.items():
            for beta in small_dimvectors(Q.n, 4):
                for b1 in subdim_vectors(beta):
                    for p in (2, 3):
                        emb_count += 1
                        if embeds(Q, b1, beta) != embeds_by_search(Q, b1, beta, p):
                            emb_bad.append((name, b1, beta, p))
        elapsed = time.perf_counter() - start
        notes.append(f"{ext_count} ext pairs, {emb_count} embeds checks, {elapsed:.1f}s")
        assert not ext_bad, ext_bad[:5]
        assert not emb_bad, emb_bad[:5]
        assert elapsed < 60


# ---------------------------------------------------------------- 5


def _splits(W, U, subreps):
    """Whether the subrepresentation U has a complementary subrepresentation."""
    want = family_dim(U)
    for V in subreps:
        if all(u + v == w for u, v, w in zip(want, family_dim(V), W.dim)) and all(
            rank_p([list(r) for r in U[i]] + [list(r) for r in V[i]], W.p) == W.dim[i] for i in range(len(W.dim))
        ):
            return True
    return False


def _invariant_suite(Q, beta, bound):
    model = finite_model(Q, beta, 2)
    mode = oracle(2)
    sweep = integral_sweep(Q, beta, bound)
    counts = dict.fromkeys(["relint", "face", "splitting", "faces", "containment", "stable_containment", "intersection", "scaling"], 0)
    polystable = {s: [] for s in sweep}
    for W in model.reps:
        omega = orbit_cone(W)
        subreps = list(iter_subreps(W))
        for s in sweep:
            if not contains(omega, s):
                continue
            zero_subs = [U for U in subreps if weight_of(s, family_dim(U)) == 0]
            splits = all(_splits(W, U, subreps) for U in zero_subs)
            poly = is_polystable(W, s)
            assert poly == splits, (W, s)
            counts["splitting"] += 1
            if poly:
                polystable[s].append(W)
                assert relint_contains(omega, s), (W, s)
                counts["relint"] += 1
            gr = polystable_reduction(W, s)
            dims = jh_filtration(W, s).dims
            cut = cone_from_hrep(Q.n, [W.dim, *dims], [])
            assert orbit_cone(gr) == intersect(omega, cut), (W, s)
            assert is_face(orbit_cone(gr), omega)
            counts["face"] += 1
        for F in faces(omega):
            tau = relint_point(F)
            assert orbit_cone(polystable_reduction(W, tau)) == F, (W, F)
            counts["faces"] += 1
    ss = {s: model.semistable(s) for s in sweep}
    st = {s: model.stable(s) for s in sweep}
    index = {id(W): i for i, W in enumerate(model.reps)}
    for s1, s2 in itertools.product(sweep, repeat=2):
        if all(index[id(W)] in ss[s2] for W in polystable[s1]):
            assert ss[s1] <= ss[s2], (s1, s2)
            counts["containment"] += 1
        if ss[s1] <= ss[s2]:
            assert st[s2] <= st[s1], (s1, s2)
            counts["stable_containment"] += 1
    for s in sweep:
        C = effective_cone(Q, beta)
        for W in polystable[s]:
            C = intersect(C, orbit_cone(W))
        assert C == git_cone(Q, beta, s, mode).cone, s
        counts["intersection"] += 1
        for m in (2, 3, 5):
            ms = tuple(m * x for x in s)
            assert model.semistable(ms) == ss[s]
            assert git_cone(Q, beta, ms, mode).cone == git_cone(Q, beta, s, mode).cone
            counts["scaling"] += 1
    return counts


@pytest.mark.slow
def test_criterion_5_invariant_suite():
    start = time.perf_counter()
    with criterion("5 exhaustive invariant suite") as notes:
        total = dict.fromkeys(["relint", "face", "splitting", "faces", "containment", "stable_containment", "intersection", "scaling"], 0)
        for name, Q in QUIVERS.items():
            for beta in small_dimvectors(Q.n, 4):
                for k, v in _invariant_suite(Q, beta, 2).items():
                    total[k] += v
        elapsed = time.perf_counter() - start
        notes.append(", ".join(f"{k}={v}" for k, v in total.items()) + f", {elapsed:.0f}s")
        assert all(total.values())
        assert elapsed < 300


# ---------------------------------------------------------------- 6


def test_criterion_6_mode_coherence():
    with criterion("6 sampled fan equals oracle fan") as notes:
        for name, (Q, beta) in INSTANCES.items():
            exact = dumps(emit_fan(git_fan(Q, beta, oracle(2))))
            approx = dumps(emit_fan(git_fan(Q, beta, sampled(1009, 64, seed=0))))
            assert exact == approx, name
        notes.append(f"{len(INSTANCES)} instances")


# ---------------------------------------------------------------- 7


REPORT_RUNS = [
    ("effective-cone", []),
    ("walls", []),
    ("fan", []),
    ("fan", ["--mode", "sampled", "--p", "1009", "--samples", "64", "--seed", "0"]),
    ("verify", []),
]


def _full_report(hashseed):
    env = dict(os.environ, PYTHONHASHSEED=str(hashseed))
    chunks = []
    for path in sorted((ROOT / "instances").glob("*.json")):
        for command, extra in REPORT_RUNS:
            out = subprocess.run(
                [sys.executable, "-m", "gitfan.cli", command, "--instance", str(path), *extra],
                capture_output=True, env=env, check=True,
            ).stdout
            chunks.append(out)
    return b"".join(chunks)


@pytest.mark.slow
def test_criterion_7_determinism():
    with criterion("7 byte-identical reports") as notes:
        first = _full_report(0)
        second = _full_report(4242)
        notes.append(f"{len(first)} bytes")
        assert first == second
