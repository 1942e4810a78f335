"""GIT-cones, GIT-equivalence and the GIT-fan of a quiver and dimension vector.

The GIT-cone of an effective weight ``sigma`` is cut out by the set
``D_sigma`` of dimension vectors of subrepresentations of sigma-semistable
representations.  ``D_sigma`` is computed in one of two modes:

``oracle``
    exact over the finite model Rep(Q, beta)(F_p), by sweeping every point;
``sampled``
    Monte Carlo over a large prime field: for each candidate subdimension
    vector a random representation with a subrepresentation of that
    dimension is drawn, and kept when it is semistable.

The fan is assembled by refining the effective cone with every candidate
hyperplane, probing each chamber, merging chambers with equal GIT-cones and
closing under faces.
"""

from __future__ import annotations

import itertools
import logging
import random
import warnings
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .cones import (
    Cone,
    chambers,
    cone_from_hrep,
    contains,
    faces,
    intersect,
    is_face,
    relint_contains,
    relint_point,
)
from .genrep import NotEffectiveError, clear_memo, effective_cone, embeds, is_effective, stable_decomposition
from .linalg import canonical_subspace, dot, is_prime, primitive, project_onto
from .quiver import Quiver, iter_proper_subdim, subdim_vectors, vsub, weight_of
from . import reps as _reps
from .reps import DEFAULT_BUDGET, Rep, finite_model, is_semistable, jh_filtration, random_rep, subrep_dimvectors

log = logging.getLogger(__name__)


class DecompositionMismatch(UserWarning):
    """Jordan-Hoelder factors of a sample disagree with the stable decomposition."""


class ConsistencyError(RuntimeError):
    """Two routes to the same quantity disagreed."""


@dataclass(frozen=True)
class Mode:
    kind: str = "oracle"
    p: int = 2
    samples: int = 64
    seed: int = 0
    budget: int = DEFAULT_BUDGET

    def __post_init__(self) -> None:
        if self.kind not in ("oracle", "sampled"):
            raise ValueError(f"unknown mode {self.kind!r}")
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    def describe(self) -> dict:
        if self.kind == "oracle":
            return {"kind": "oracle", "p": self.p}
        return {"kind": "sampled", "p": self.p, "samples": self.samples, "seed": self.seed}


def oracle(p: int = 2, budget: int = DEFAULT_BUDGET) -> Mode:
    return Mode("oracle", p, budget=budget)


def sampled(p: int = 1009, samples: int = 64, seed: int = 0, budget: int = DEFAULT_BUDGET) -> Mode:
    return Mode("sampled", p, samples, seed, budget)


# ----------------------------------------------------------------- walls


@dataclass(frozen=True)
class WallClass:
    normal: tuple[int, ...]
    members: tuple[tuple[int, ...], ...]
    kind: str  # "interior" | "boundary" | "degenerate"
    embeds: bool
    trace: Cone

    @property
    def interior(self) -> bool:
        return self.kind == "interior"


@dataclass(frozen=True)
class WallSystem:
    beta: tuple[int, ...]
    support: Cone
    classes: tuple[WallClass, ...]

    @property
    def candidates(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted(m for c in self.classes for m in c.members))

    def interior_classes(self) -> list[WallClass]:
        return [c for c in self.classes if c.kind == "interior"]


def _sign_normalize(v: tuple[int, ...]) -> tuple[int, ...]:
    lead = next((x for x in v if x), 0)
    return tuple(-x for x in v) if lead < 0 else v


def wall_system(Q: Quiver, beta: Sequence[int]) -> WallSystem:
    """Classify the hyperplanes sigma(beta') = 0, 0 < beta' < beta, against C(Q, beta)."""
    beta = Q.dimvector(beta)
    support = effective_cone(Q, beta)
    gens = list(support.rays) + list(support.lineality)
    span = [list(r) for r in canonical_subspace(gens, Q.n)] if gens else []
    groups: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for b1 in iter_proper_subdim(beta):
        proj = project_onto(b1, span) if span else [0] * Q.n
        groups.setdefault(_sign_normalize(primitive(proj)), []).append(b1)
    classes = []
    for normal, members in sorted(groups.items()):
        values = [dot(normal, g) for g in support.rays]
        if not any(normal):
            kind = "degenerate"
        elif any(dot(normal, l) for l in support.lineality) or (
            any(v > 0 for v in values) and any(v < 0 for v in values)
        ):
            kind = "interior"
        else:
            kind = "boundary"
        trace = cone_from_hrep(Q.n, support.equations + ((normal,) if any(normal) else ()), support.inequalities)
        classes.append(
            WallClass(normal, tuple(members), kind, any(embeds(Q, m, beta) for m in members), trace)
        )
    return WallSystem(beta, support, tuple(classes))


# ------------------------------------------------------------- D_sigma


def _check_effective(Q: Quiver, beta: tuple, sigma: tuple) -> None:
    if not is_effective(Q, beta, sigma):
        raise NotEffectiveError(f"weight {[str(s) for s in sigma]} is not effective for {beta}")


def _scale_key(sigma: Sequence[Fraction]) -> tuple[int, ...]:
    return primitive(sigma) if any(sigma) else tuple(0 for _ in sigma)


def d_sigma(Q: Quiver, beta: Sequence[int], sigma: Sequence, mode: Mode = Mode()) -> frozenset[tuple[int, ...]]:
    """Dimension vectors of subrepresentations of sigma-semistable representations."""
    beta = Q.dimvector(beta)
    sigma = Q.weight(sigma)
    _check_effective(Q, beta, sigma)
    if not all(beta):
        log.warning("dimension vector %s is not sincere", beta)
    # D_sigma depends on sigma only through its semistable set, which is scale invariant
    return _d_sigma_cached(Q, beta, _scale_key(sigma), mode)


@lru_cache(maxsize=4096)
def _d_sigma_cached(Q: Quiver, beta: tuple, sigma: tuple, mode: Mode) -> frozenset:
    if not any(sigma):
        # the zero representation is 0-semistable and has every subdimension vector
        return frozenset(subdim_vectors(beta))
    if mode.kind == "oracle":
        model = finite_model(Q, beta, mode.p, mode.budget)
        ss = model.semistable(sigma)
        if not ss:
            log.warning("no %s-semistable point over F_%d", sigma, mode.p)
        out: set = set()
        for i in sorted(ss):
            out |= model.subdims[i]
        return frozenset(out)
    return _d_sigma_sampled(Q, beta, sigma, mode)


def _extension_sample(Q: Quiver, sub: tuple, beta: tuple, p: int, rng: random.Random) -> Rep:
    """Random representation whose first ``sub`` coordinates span a subrepresentation."""
    mats = []
    for a in Q.arrows:
        t, h = Q.tail_index(a), Q.head_index(a)
        rows = []
        for i in range(beta[h]):
            row = []
            for j in range(beta[t]):
                # sub columns may not reach quotient rows
                if i >= sub[h] and j < sub[t]:
                    row.append(0)
                else:
                    row.append(rng.randrange(p))
            rows.append(tuple(row))
        mats.append(tuple(rows))
    return Rep(Q, beta, p, tuple(mats))


def _d_sigma_sampled(Q: Quiver, beta: tuple, sigma: tuple, mode: Mode) -> frozenset:
    out = {b1 for b1 in subdim_vectors(beta) if embeds(Q, b1, beta)}
    for sub in iter_proper_subdim(beta):
        if weight_of(sigma, sub) > 0:
            continue  # such a subrepresentation already destabilizes
        rng = random.Random(f"{mode.seed}:{','.join(map(str, sub))}")
        for _ in range(mode.samples):
            W = _extension_sample(Q, sub, beta, mode.p, rng)
            ds = subrep_dimvectors(W, mode.budget)
            if all(weight_of(sigma, d) <= 0 for d in ds):
                out |= ds
    return frozenset(out)


# ------------------------------------------------------------- GIT-cones


@dataclass(frozen=True)
class GitConeRecord:
    weight: tuple[Fraction, ...]
    cone: Cone
    d_sigma: frozenset[tuple[int, ...]]
    mode: Mode


def git_cone(Q: Quiver, beta: Sequence[int], sigma: Sequence, mode: Mode = Mode()) -> GitConeRecord:
    beta = Q.dimvector(beta)
    sigma = Q.weight(sigma)
    D = d_sigma(Q, beta, sigma, mode)
    return GitConeRecord(sigma, _cone_of(Q.n, beta, D), D, mode)


@lru_cache(maxsize=4096)
def _cone_of(n: int, beta: tuple, D: frozenset) -> Cone:
    return cone_from_hrep(n, [beta], sorted(D))


def git_equivalent(Q: Quiver, beta: Sequence[int], sigma1: Sequence, sigma2: Sequence, mode: Mode = Mode()) -> bool:
    """Mutual membership of GIT-cones; cross-checked against semistable sets in oracle mode."""
    beta = Q.dimvector(beta)
    s1, s2 = Q.weight(sigma1), Q.weight(sigma2)
    c1 = git_cone(Q, beta, s1, mode).cone
    c2 = git_cone(Q, beta, s2, mode).cone
    result = contains(c1, s2) and contains(c2, s1)
    if mode.kind == "oracle":
        model = finite_model(Q, beta, mode.p, mode.budget)
        direct = model.semistable(s1) == model.semistable(s2)
        if direct != result:
            raise ConsistencyError(f"cone membership and semistable sets disagree for {s1} vs {s2}")
    return result


def integral_witness(Q: Quiver, beta: Sequence[int], sigma: Sequence) -> tuple[int, ...]:
    """The primitive integral weight on the ray of sigma (GIT-equivalent to it)."""
    beta = Q.dimvector(beta)
    sigma = Q.weight(sigma)
    _check_effective(Q, beta, sigma)
    return _scale_key(sigma)


# ------------------------------------------------------------------- fans


@dataclass(frozen=True)
class Fan:
    cones: tuple[Cone, ...]
    face_relations: frozenset[tuple[int, int]]
    maximal_indices: tuple[int, ...]

    def maximal(self) -> list[Cone]:
        return [self.cones[i] for i in self.maximal_indices]

    def count_by_dim(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for c in self.cones:
            out[c.dim] = out.get(c.dim, 0) + 1
        return dict(sorted(out.items()))


def assemble_fan(cones: Sequence[Cone]) -> Fan:
    """Canonical ordering, proper face relations and maximal cones."""
    uniq = sorted(set(cones), key=Cone.sort_key)
    rel = set()
    for i, F in enumerate(uniq):
        for j, C in enumerate(uniq):
            if i != j and F.dim < C.dim and is_face(F, C):
                rel.add((i, j))
    has_super = {i for i, _ in rel}
    maximal = tuple(i for i in range(len(uniq)) if i not in has_super)
    return Fan(tuple(uniq), frozenset(rel), maximal)


def git_fan(Q: Quiver, beta: Sequence[int], mode: Mode = Mode()) -> Fan:
    beta = Q.dimvector(beta)
    if not any(beta):
        raise ValueError("the GIT-fan needs a nonzero dimension vector")
    ws = wall_system(Q, beta)
    support = ws.support
    hyperplanes = [c.normal for c in ws.classes if c.kind != "degenerate"]
    found: dict[Cone, None] = {}
    for ch in chambers(support, hyperplanes):
        found[git_cone(Q, beta, relint_point(ch), mode).cone] = None
    todo = list(found)
    probed: set[Cone] = set()
    while todo:
        C = todo.pop()
        for F in faces(C):
            if F in probed:
                continue
            probed.add(F)
            G = git_cone(Q, beta, relint_point(F), mode).cone
            if G != F:
                log.warning("face %s probes to a different GIT-cone %s", F, G)
            if G not in found:
                found[G] = None
                todo.append(G)
    return assemble_fan(list(found))


# ----------------------------------------------------------- verification


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class FanReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(passed), detail))


def _random_point(support: Cone, rng: random.Random) -> tuple[Fraction, ...]:
    pt = [Fraction(0)] * support.ambient_dim
    for r in support.rays:
        c = Fraction(rng.randrange(0, 20), rng.randrange(1, 7))
        pt = [x + c * y for x, y in zip(pt, r)]
    for l in support.lineality:
        c = Fraction(rng.randrange(-20, 21), rng.randrange(1, 7))
        pt = [x + c * y for x, y in zip(pt, l)]
    return tuple(pt)


def integral_sweep(Q: Quiver, beta: Sequence[int], bound: int) -> list[tuple[int, ...]]:
    """Effective integral weights with entries in [-bound, bound]."""
    beta = Q.dimvector(beta)
    support = effective_cone(Q, beta)
    return [
        s for s in itertools.product(range(-bound, bound + 1), repeat=Q.n) if contains(support, s)
    ]


def verify_fan(
    Q: Quiver,
    beta: Sequence[int],
    fan: Fan,
    mode: Mode = Mode(),
    samples: int = 1000,
    seed: int = 0,
    bound: int = 4,
) -> FanReport:
    """Check the fan axioms, coverage and (oracle mode) the GIT-class property."""
    beta = Q.dimvector(beta)
    report = FanReport()
    cones = list(fan.cones)
    members = set(cones)
    support = effective_cone(Q, beta)

    report.add("no-duplicates", len(members) == len(cones), f"{len(cones)} cones")

    missing = []
    for C in cones:
        for F in faces(C):
            if F not in members:
                missing.append((C, F))
    report.add(
        "face-closure", not missing,
        "; ".join(f"face {F} of {C} missing" for C, F in missing[:5]),
    )

    bad = []
    for C1, C2 in itertools.combinations(cones, 2):
        I = intersect(C1, C2)
        if I not in members or not is_face(I, C1) or not is_face(I, C2):
            bad.append((C1, C2, I))
    report.add(
        "intersection-closure", not bad,
        "; ".join(f"{a} & {b} -> {i}" for a, b, i in bad[:5]),
    )

    outside = [C for C in cones if not all(contains(support, r) for r in C.rays)]
    report.add("inside-support", not outside, "; ".join(map(repr, outside[:5])))

    rng = random.Random(seed)
    uncovered = []
    for _ in range(samples):
        pt = _random_point(support, rng)
        if not any(contains(C, pt) for C in cones):
            uncovered.append(pt)
    report.add(
        "coverage", not uncovered,
        f"{samples} points, {len(uncovered)} uncovered" + (f", e.g. {uncovered[0]}" if uncovered else ""),
    )

    if mode.kind != "oracle":
        return report

    model = finite_model(Q, beta, mode.p, mode.budget)
    sweep = integral_sweep(Q, beta, bound)
    wrong = []
    for s in sweep:
        ss = model.semistable(s)
        for C in cones:
            if not contains(C, s):
                continue
            equiv = git_equivalent(Q, beta, s, relint_point(C), mode)
            if equiv != relint_contains(C, s):
                wrong.append((s, C))
            if equiv and ss != model.semistable(relint_point(C)):
                wrong.append((s, C))
    report.add(
        "git-class-relint", not wrong,
        f"{len(sweep)} weights in [-{bound},{bound}]" + (f"; first failure {wrong[0]}" if wrong else ""),
    )

    sets = {model.semistable(s) for s in sweep}
    sets |= {model.semistable(relint_point(C)) for C in cones}
    report.add(
        "semistable-set-count", len(sets) == len(cones),
        f"{len(sets)} distinct semistable sets, {len(cones)} cones",
    )
    return report


def check_decomposition(
    Q: Quiver, beta: Sequence[int], sigma: Sequence, p: int = 1009, samples: int = 8, seed: int = 0
) -> bool:
    """Compare stable_decomposition with the Jordan-Hoelder factors of random semistable samples.

    A mismatch is reported as a DecompositionMismatch warning and never
    raised: the decomposition is a statement about a general representation
    over an algebraically closed field, which finite samples only approximate.
    Returns True when every semistable sample agreed.
    """
    beta = Q.dimvector(beta)
    expected = stable_decomposition(Q, beta, sigma).as_counter()
    rng = random.Random(f"jh:{seed}:{beta}")
    agreed = True
    for _ in range(samples):
        W = random_rep(Q, beta, p, rng)
        if not is_semistable(W, sigma):
            continue
        dims = jh_filtration(W, sigma).dims
        got = Counter(vsub(hi, lo) for lo, hi in zip(dims, dims[1:]))
        if got != expected:
            agreed = False
            warnings.warn(
                f"Jordan-Hoelder factors {dict(got)} of a sample over F_{p} differ from the "
                f"stable decomposition {dict(expected)}",
                DecompositionMismatch,
                stacklevel=2,
            )
    return agreed


def clear_caches() -> None:
    """Drop every memo table (generic ext, subrepresentation sweeps, D_sigma, cones)."""
    clear_memo()
    _d_sigma_cached.cache_clear()
    _cone_of.cache_clear()
    _reps._subrep_dimvectors_cached.cache_clear()
    _reps.finite_model.cache_clear()
