"""Explicit quiver representations over prime fields.

A :class:`Rep` holds one matrix per arrow (rows indexed by the head space,
columns by the tail space, vectors are columns).  Subspaces of ``F_p^n`` are
stored as RREF bases (tuples of row tuples); a *family* is one such basis per
vertex, in vertex order.

Subrepresentations are enumerated by a depth-first sweep over the vertices
in topological order: once the subspaces at all tails of arrows into ``x``
are fixed, the subspace at ``x`` ranges over the superspaces of the images.
This visits exactly the arrow-invariant tuples of the naive product sweep,
in a fixed order, so results are reproducible.
"""

from __future__ import annotations

import itertools
import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Mapping, Sequence

from .cones import Cone, cone_from_hrep
from .linalg import (
    count_all_subspaces,
    is_prime,
    iter_subspaces,
    matvec_p,
    nullspace_p,
    pivots_of,
    rank_p,
    reduce_mod_rref,
    rref_p,
)
from .quiver import Quiver, weight_of

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**7

Matrix = tuple[tuple[int, ...], ...]
Basis = tuple[tuple[int, ...], ...]
Family = tuple[Basis, ...]


class BudgetExceeded(RuntimeError):
    pass


class RepError(ValueError):
    pass


class NotSemistableError(ValueError):
    pass


@dataclass(frozen=True)
class Rep:
    quiver: Quiver
    dim: tuple[int, ...]
    p: int
    matrices: tuple[Matrix, ...]

    def matrix(self, arrow_id: str) -> Matrix:
        for a, m in zip(self.quiver.arrows, self.matrices):
            if a.id == arrow_id:
                return m
        raise KeyError(arrow_id)

    def __repr__(self) -> str:
        mats = ", ".join(f"{a.id}={[list(r) for r in m]}" for a, m in zip(self.quiver.arrows, self.matrices))
        return f"Rep(dim={self.dim}, p={self.p}, {mats})"


def make_rep(Q: Quiver, dim: Sequence[int], p: int, matrices: Mapping[str, Sequence] | Sequence) -> Rep:
    if not is_prime(p):
        raise RepError(f"{p} is not prime")
    dim = Q.dimvector(dim)
    if isinstance(matrices, Mapping):
        if set(matrices) != {a.id for a in Q.arrows}:
            raise RepError("matrices must be given for exactly the arrows of the quiver")
        mats = [matrices[a.id] for a in Q.arrows]
    else:
        mats = list(matrices)
        if len(mats) != len(Q.arrows):
            raise RepError("one matrix per arrow expected")
    out = []
    for a, m in zip(Q.arrows, mats):
        rows, cols = dim[Q.head_index(a)], dim[Q.tail_index(a)]
        m = [list(r) for r in m]
        if len(m) != rows or any(len(r) != cols for r in m):
            raise RepError(f"matrix for arrow {a.id!r} must be {rows}x{cols}")
        out.append(tuple(tuple(x % p for x in r) for r in m))
    return Rep(Q, dim, p, tuple(out))


def zero_rep(Q: Quiver, dim: Sequence[int], p: int) -> Rep:
    dim = Q.dimvector(dim)
    return make_rep(
        Q, dim, p,
        [[[0] * dim[Q.tail_index(a)] for _ in range(dim[Q.head_index(a)])] for a in Q.arrows],
    )


def random_rep(Q: Quiver, dim: Sequence[int], p: int, seed: int | random.Random) -> Rep:
    """Uniformly random representation; ``seed`` may be an int or a ``random.Random``."""
    if not is_prime(p):
        raise RepError(f"{p} is not prime")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    dim = Q.dimvector(dim)
    mats = []
    for a in Q.arrows:
        rows, cols = dim[Q.head_index(a)], dim[Q.tail_index(a)]
        mats.append([[rng.randrange(p) for _ in range(cols)] for _ in range(rows)])
    return make_rep(Q, dim, p, mats)


def count_reps(Q: Quiver, dim: Sequence[int], p: int) -> int:
    return p ** sum(dim[Q.head_index(a)] * dim[Q.tail_index(a)] for a in Q.arrows)


def all_reps(Q: Quiver, dim: Sequence[int], p: int, budget: int = DEFAULT_BUDGET) -> Iterator[Rep]:
    """Every point of Rep(Q, dim) over F_p, in lexicographic order of entries."""
    dim = Q.dimvector(dim)
    total = count_reps(Q, dim, p)
    if total > budget:
        raise BudgetExceeded(f"{total} representations exceed the budget {budget}")
    shapes = [(dim[Q.head_index(a)], dim[Q.tail_index(a)]) for a in Q.arrows]
    sizes = [r * c for r, c in shapes]
    for flat in itertools.product(range(p), repeat=sum(sizes)):
        mats, k = [], 0
        for (r, c), s in zip(shapes, sizes):
            chunk = flat[k:k + s]
            k += s
            mats.append(tuple(tuple(chunk[i * c:(i + 1) * c]) for i in range(r)))
        yield Rep(Q, dim, p, tuple(mats))


def direct_sum(V: Rep, W: Rep) -> Rep:
    _same_setting(V, W)
    Q = V.quiver
    mats = []
    for a, mv, mw in zip(Q.arrows, V.matrices, W.matrices):
        cv = V.dim[Q.tail_index(a)]
        cw = W.dim[Q.tail_index(a)]
        rows = [tuple(r) + (0,) * cw for r in mv] + [(0,) * cv + tuple(r) for r in mw]
        mats.append(tuple(rows))
    return Rep(Q, tuple(x + y for x, y in zip(V.dim, W.dim)), V.p, tuple(mats))


def _same_setting(V: Rep, W: Rep) -> None:
    if V.quiver != W.quiver:
        raise RepError("representations of different quivers")
    if V.p != W.p:
        raise RepError("representations over different fields")


# ------------------------------------------------------------------ morphisms


def _hom_system(V: Rep, W: Rep) -> tuple[list[list[int]], int, list[int]]:
    Q = V.quiver
    offsets, k = [], 0
    for i in range(Q.n):
        offsets.append(k)
        k += W.dim[i] * V.dim[i]
    rows = []
    for a, mv, mw in zip(Q.arrows, V.matrices, W.matrices):
        t, h = Q.tail_index(a), Q.head_index(a)
        vt, vh, wt, wh = V.dim[t], V.dim[h], W.dim[t], W.dim[h]
        for i in range(wh):
            for j in range(vt):
                row = [0] * k
                # (phi_h V(a))[i][j] - (W(a) phi_t)[i][j]
                for l in range(vh):
                    row[offsets[h] + i * vh + l] += mv[l][j]
                for l in range(wt):
                    row[offsets[t] + l * vt + j] -= mw[i][l]
                rows.append([x % V.p for x in row])
    return rows, k, offsets


def hom_dim(V: Rep, W: Rep) -> int:
    _same_setting(V, W)
    rows, k, _ = _hom_system(V, W)
    return k - (rank_p(rows, V.p) if rows else 0)


def hom_basis(V: Rep, W: Rep) -> list[list[Matrix]]:
    """Basis of Hom(V, W); each element is a list of vertex matrices W(x) x V(x)."""
    _same_setting(V, W)
    rows, k, offsets = _hom_system(V, W)
    basis = nullspace_p(rows, k, V.p)
    Q = V.quiver
    out = []
    for vec in basis:
        maps = []
        for i in range(Q.n):
            r, c = W.dim[i], V.dim[i]
            o = offsets[i]
            maps.append(tuple(tuple(vec[o + a * c + b] for b in range(c)) for a in range(r)))
        out.append(maps)
    return out


def isomorphic(V: Rep, W: Rep, budget: int = 10**6, samples: int = 2000, seed: int = 0) -> bool:
    """Search Hom(V, W) for a map invertible at every vertex.

    Exhaustive when the hom space has at most ``budget`` elements; otherwise
    random sampling, where failure only means "probably not isomorphic" and
    is logged as a warning.
    """
    _same_setting(V, W)
    if V.dim != W.dim:
        return False
    p = V.p
    basis = hom_basis(V, W)
    n = V.quiver.n

    def invertible(coeffs: Sequence[int]) -> bool:
        for i in range(n):
            d = V.dim[i]
            if d == 0:
                continue
            M = [[sum(c * b[i][r][s] for c, b in zip(coeffs, basis)) % p for s in range(d)] for r in range(d)]
            if rank_p(M, p) < d:
                return False
        return True

    if p ** len(basis) <= budget:
        return any(invertible(c) for c in itertools.product(range(p), repeat=len(basis)))
    rng = random.Random(seed)
    for _ in range(samples):
        if invertible([rng.randrange(p) for _ in basis]):
            return True
    log.warning("no isomorphism found by sampling; treating as probably non-isomorphic")
    return False


# ---------------------------------------------------------- subrepresentations


def _rref_basis(rows: Sequence[Sequence[int]], p: int) -> Basis:
    red, _ = rref_p(rows, p) if rows else ([], [])
    return tuple(tuple(r) for r in red)


def subrep_sweep_size(W: Rep) -> int:
    size = 1
    for d in W.dim:
        size *= count_all_subspaces(d, W.p)
    return size


def iter_subreps(W: Rep, containing: Family | None = None, budget: int = DEFAULT_BUDGET) -> Iterator[Family]:
    """All subrepresentations of W (optionally those containing a given one).

    Families are yielded in a fixed depth-first order: vertices in
    topological order, and at each vertex superspaces by increasing dimension
    then RREF-lexicographic order.
    """
    size = subrep_sweep_size(W)
    if size > budget:
        raise BudgetExceeded(f"subspace sweep of {size} tuples exceeds the budget {budget}")
    Q, p = W.quiver, W.p
    order = [Q.index(v) for v in Q.topological_order]
    incoming = {i: [] for i in range(Q.n)}
    for a, m in zip(Q.arrows, W.matrices):
        incoming[Q.head_index(a)].append((Q.tail_index(a), m))
    chosen: list[Basis | None] = [None] * Q.n

    def rec(pos: int) -> Iterator[Family]:
        if pos == len(order):
            yield tuple(chosen)  # type: ignore[arg-type]
            return
        x = order[pos]
        n = W.dim[x]
        gens = [list(r) for r in containing[x]] if containing is not None else []
        for t, m in incoming[x]:
            for u in chosen[t]:  # type: ignore[union-attr]
                gens.append(matvec_p(m, u, p))
        R, piv = rref_p(gens, p) if gens else ([], [])
        r = len(piv)
        free = [c for c in range(n) if c not in piv]
        for k in range(r, n + 1):
            for S in iter_subspaces(n - r, k - r, p):
                rows = [list(row) for row in R]
                for srow in S:
                    v = [0] * n
                    for c, val in zip(free, srow):
                        v[c] = val
                    rows.append(v)
                chosen[x] = _rref_basis(rows, p) if k else ()
                yield from rec(pos + 1)
        chosen[x] = None

    yield from rec(0)


def family_dim(F: Family) -> tuple[int, ...]:
    return tuple(len(b) for b in F)


def subrep_dimvectors(W: Rep, budget: int = DEFAULT_BUDGET) -> frozenset[tuple[int, ...]]:
    return _subrep_dimvectors_cached(W, budget)


@lru_cache(maxsize=200_000)
def _subrep_dimvectors_cached(W: Rep, budget: int) -> frozenset[tuple[int, ...]]:
    return frozenset(family_dim(F) for F in iter_subreps(W, budget=budget))


def restrict(W: Rep, U: Family) -> Rep:
    """The subrepresentation U of W, written in the RREF bases of U."""
    Q, p = W.quiver, W.p
    mats = []
    for a, m in zip(Q.arrows, W.matrices):
        ut, uh = U[Q.tail_index(a)], U[Q.head_index(a)]
        piv = pivots_of(uh)
        cols = []
        for u in ut:
            img = matvec_p(m, u, p)
            cols.append([img[c] for c in piv])
        mats.append(tuple(tuple(cols[j][i] for j in range(len(ut))) for i in range(len(uh))))
    return Rep(Q, family_dim(U), p, tuple(mats))


def quotient(W: Rep, U: Family) -> Rep:
    """W/U, written in the standard basis vectors of the non-pivot columns of U."""
    Q, p = W.quiver, W.p
    mats = []
    for a, m in zip(Q.arrows, W.matrices):
        t, h = Q.tail_index(a), Q.head_index(a)
        ct = [c for c in range(W.dim[t]) if c not in pivots_of(U[t])]
        piv_h = pivots_of(U[h])
        ch = [c for c in range(W.dim[h]) if c not in piv_h]
        cols = []
        for j in ct:
            img = [row[j] for row in m]
            img = reduce_mod_rref(img, U[h], piv_h, p)
            cols.append([img[c] for c in ch])
        mats.append(tuple(tuple(cols[j][i] for j in range(len(ct))) for i in range(len(ch))))
    dim = tuple(d - len(b) for d, b in zip(W.dim, U))
    return Rep(Q, dim, p, tuple(mats))


def coordinates_in(U: Family, V: Family) -> Family:
    """Express a subfamily V of U in the RREF coordinates of U."""
    out = []
    for bu, bv in zip(U, V):
        piv = pivots_of(bu)
        out.append(tuple(tuple(v[c] for c in piv) for v in bv))
    return tuple(out)


# ------------------------------------------------------------------ stability


def is_semistable(W: Rep, sigma: Sequence, budget: int = DEFAULT_BUDGET) -> bool:
    sigma = W.quiver.weight(sigma)
    if weight_of(sigma, W.dim) != 0:
        return False
    return all(weight_of(sigma, d) <= 0 for d in subrep_dimvectors(W, budget))


def is_stable(W: Rep, sigma: Sequence, budget: int = DEFAULT_BUDGET) -> bool:
    sigma = W.quiver.weight(sigma)
    if not any(W.dim) or weight_of(sigma, W.dim) != 0:
        return False
    return all(
        weight_of(sigma, d) < 0
        for d in subrep_dimvectors(W, budget)
        if any(d) and d != W.dim
    )


def orbit_cone(W: Rep, budget: int = DEFAULT_BUDGET) -> Cone:
    """Omega(W): the weights for which W is semistable."""
    return cone_from_hrep(W.quiver.n, [W.dim], sorted(subrep_dimvectors(W, budget)))


@dataclass(frozen=True)
class Filtration:
    steps: tuple[Family, ...]
    dims: tuple[tuple[int, ...], ...]
    weight: tuple[Fraction, ...]


def jh_filtration(W: Rep, sigma: Sequence, budget: int = DEFAULT_BUDGET) -> Filtration:
    """A Jordan-Hoelder filtration of W in the category of sigma-semistables.

    Each step adds the smallest (total dimension, then dimension vector,
    then enumeration order) subrepresentation of weight zero strictly
    containing the previous one; minimality makes every factor stable.
    """
    Q = W.quiver
    sigma = Q.weight(sigma)
    if not is_semistable(W, sigma, budget):
        raise NotSemistableError("representation is not semistable for this weight")
    current: Family = tuple(() for _ in range(Q.n))
    steps = [current]
    while family_dim(current) != W.dim:
        base = family_dim(current)
        best = None
        for idx, F in enumerate(iter_subreps(W, containing=current, budget=budget)):
            d = family_dim(F)
            if d == base or weight_of(sigma, d) != 0:
                continue
            key = (sum(d), d, idx)
            if best is None or key < best[0]:
                best = (key, F)
        assert best is not None  # W itself always qualifies
        current = best[1]
        steps.append(current)
    return Filtration(tuple(steps), tuple(family_dim(F) for F in steps), sigma)


def filtration_factors(W: Rep, F: Filtration) -> list[Rep]:
    factors = []
    for lo, hi in zip(F.steps, F.steps[1:]):
        sub = restrict(W, hi)
        factors.append(quotient(sub, coordinates_in(hi, lo)))
    return factors


def associated_graded(W: Rep, F: Filtration) -> Rep:
    if not F.steps or F.dims[-1] != W.dim or any(F.dims[0]):
        raise RepError("filtration must run from 0 to the whole representation")
    factors = filtration_factors(W, F)
    out = factors[0]
    for f in factors[1:]:
        out = direct_sum(out, f)
    return out


def polystable_reduction(W: Rep, sigma: Sequence, budget: int = DEFAULT_BUDGET) -> Rep:
    return associated_graded(W, jh_filtration(W, sigma, budget))


def is_polystable(W: Rep, sigma: Sequence, budget: int = DEFAULT_BUDGET) -> bool:
    if not is_semistable(W, sigma, budget):
        return False
    return isomorphic(W, polystable_reduction(W, sigma, budget))


# -------------------------------------------------------------- finite models


class FiniteModel:
    """All points of Rep(Q, beta)(F_p) together with their subrep dimension sets."""

    def __init__(self, Q: Quiver, beta: Sequence[int], p: int, budget: int = DEFAULT_BUDGET):
        self.quiver = Q
        self.beta = Q.dimvector(beta)
        self.p = p
        self.reps = list(all_reps(Q, self.beta, p, budget))
        self.subdims = [subrep_dimvectors(W, budget) for W in self.reps]

    def __len__(self) -> int:
        return len(self.reps)

    def semistable(self, sigma: Sequence) -> frozenset[int]:
        """Indices of the sigma-semistable points."""
        sigma = self.quiver.weight(sigma)
        if weight_of(sigma, self.beta) != 0:
            return frozenset()
        return frozenset(
            i for i, ds in enumerate(self.subdims) if all(weight_of(sigma, d) <= 0 for d in ds)
        )

    def stable(self, sigma: Sequence) -> frozenset[int]:
        sigma = self.quiver.weight(sigma)
        if weight_of(sigma, self.beta) != 0 or not any(self.beta):
            return frozenset()
        return frozenset(
            i for i, ds in enumerate(self.subdims)
            if all(weight_of(sigma, d) < 0 for d in ds if any(d) and d != self.beta)
        )


@lru_cache(maxsize=64)
def finite_model(Q: Quiver, beta: tuple[int, ...], p: int, budget: int = DEFAULT_BUDGET) -> FiniteModel:
    return FiniteModel(Q, beta, p, budget)
