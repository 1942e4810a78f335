"""Exact rational polyhedral cones.

A cone is stored in canonical form with both descriptions kept in sync:

* H-representation: ``equations`` (e.x = 0) and facet ``inequalities``
  (a.x <= 0, the orientation used for weights throughout the package);
* V-representation: extreme ``rays`` (taken orthogonal to the lineality
  space) and a ``lineality`` basis.

All vectors are primitive integer tuples and every list is sorted, so two
cones are equal as sets iff they compare equal as dataclasses.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .linalg import (
    canonical_subspace,
    dot,
    nullspace_q,
    orth_complement,
    primitive,
    project_onto,
    rank_q,
)

log = logging.getLogger(__name__)

IntVec = tuple[int, ...]


class ConeError(ValueError):
    pass


@dataclass(frozen=True)
class Cone:
    ambient_dim: int
    equations: tuple[IntVec, ...]
    inequalities: tuple[IntVec, ...]
    rays: tuple[IntVec, ...]
    lineality: tuple[IntVec, ...]

    @property
    def dim(self) -> int:
        return self.ambient_dim - len(self.equations)

    @property
    def is_zero(self) -> bool:
        return self.dim == 0

    def sort_key(self) -> tuple:
        return (self.dim, self.rays, self.lineality, self.inequalities, self.equations)

    def __repr__(self) -> str:
        body = f"rays={list(self.rays)}"
        if self.lineality:
            body += f", lineality={list(self.lineality)}"
        return f"Cone(dim={self.dim}, {body})"


def _check_len(n: int, vecs: Iterable[Sequence]) -> None:
    for v in vecs:
        if len(v) != n:
            raise ConeError(f"vector {tuple(v)} does not have ambient dimension {n}")


def _double_description(n: int, eqs: list, ineqs: list) -> tuple[list, list]:
    """Generators (rays, lineality basis) of {E x = 0, A x <= 0}.

    Incremental double description: inequalities are added one at a time,
    lineality directions are consumed first, and after every step rays that
    are not extreme (rank test on tight constraints) are discarded.
    """
    lin = nullspace_q(eqs, n) if eqs else nullspace_q([], n)
    rays: list[list[Fraction]] = []
    processed: list = list(eqs)
    for a in ineqs:
        processed.append(a)
        i0 = next((i for i, l in enumerate(lin) if dot(a, l) != 0), None)
        if i0 is not None:
            l0 = lin[i0]
            if dot(a, l0) > 0:
                l0 = [-x for x in l0]
            al0 = dot(a, l0)
            lin = [[x - (dot(a, l) / al0) * y for x, y in zip(l, l0)] for i, l in enumerate(lin) if i != i0]
            rays = [[x - (dot(a, r) / al0) * y for x, y in zip(r, l0)] for r in rays] + [l0]
        else:
            pos, keep = [], []
            for r in rays:
                v = dot(a, r)
                (pos if v > 0 else keep).append((r, v))
            neg = [(r, v) for r, v in keep if v < 0]
            new = [r for r, _ in keep]
            for rp, vp in pos:
                for rn, vn in neg:
                    new.append([vp * x - vn * y for x, y in zip(rn, rp)])
            rays = new
        rays = _prune(n, rays, lin, processed)
    return rays, lin


def _prune(n: int, rays: list, lin: list, rows: list) -> list:
    if not rays:
        return rays
    full = rank_q(rows) if rows else 0
    seen: dict[IntVec, list] = {}
    lin_perp_proj = bool(lin)
    for r in rays:
        if lin_perp_proj:
            pr = project_onto(r, lin)
            r = [x - y for x, y in zip(r, pr)]
        if not any(r):
            continue
        key = primitive(r)
        if key in seen:
            continue
        tight = [row for row in rows if dot(row, key) == 0]
        if (rank_q(tight) if tight else 0) == full - 1:
            seen[key] = [Fraction(x) for x in key]
    return list(seen.values())


def cone_from_hrep(
    ambient_dim: int,
    equations: Iterable[Sequence] = (),
    inequalities: Iterable[Sequence] = (),
) -> Cone:
    """Cone {x : e.x = 0 for e in equations, a.x <= 0 for a in inequalities}."""
    n = ambient_dim
    eqs = [[Fraction(x) for x in e] for e in equations]
    ineqs = [[Fraction(x) for x in a] for a in inequalities]
    _check_len(n, eqs)
    _check_len(n, ineqs)
    eqs = [e for e in eqs if any(e)]
    ineqs = [a for a in ineqs if any(a)]
    rays, lin = _double_description(n, eqs, ineqs)

    lin_c = canonical_subspace(lin, n)
    ray_c = sorted({primitive(r) for r in rays})
    span = [list(r) for r in ray_c] + [list(l) for l in lin_c]
    dim = rank_q(span) if span else 0
    eq_c = canonical_subspace(orth_complement(span, n), n) if dim < n else ()

    facets = set()
    if ray_c:
        span_basis = [list(r) for r in canonical_subspace(span, n)]
        for a in ineqs:
            tight = [list(r) for r in ray_c if dot(a, r) == 0] + [list(l) for l in lin_c]
            if (rank_q(tight) if tight else 0) != dim - 1:
                continue
            facets.add(primitive(project_onto(a, span_basis)))
    return Cone(n, tuple(eq_c), tuple(sorted(facets)), tuple(ray_c), tuple(lin_c))


def cone_from_rays(ambient_dim: int, rays: Iterable[Sequence], lineality: Iterable[Sequence] = ()) -> Cone:
    """Cone generated by rays plus a linear subspace (dual description)."""
    gens = [list(r) for r in rays] + [list(l) for l in lineality] + [[-x for x in l] for l in lineality]
    _check_len(ambient_dim, gens)
    if not any(any(g) for g in gens):
        return zero_cone(ambient_dim)
    # facet normals of the generated cone are the generators of its polar
    polar = cone_from_hrep(ambient_dim, (), [g for g in gens if any(g)])
    ineqs = [list(r) for r in polar.rays]
    ineqs += [list(l) for l in polar.lineality] + [[-x for x in l] for l in polar.lineality]
    return cone_from_hrep(ambient_dim, (), ineqs)


def zero_cone(ambient_dim: int) -> Cone:
    return cone_from_hrep(ambient_dim, [[int(i == j) for j in range(ambient_dim)] for i in range(ambient_dim)])


def _as_vector(C: Cone, v: Sequence) -> list[Fraction]:
    if len(v) != C.ambient_dim:
        raise ConeError(f"point of length {len(v)} in ambient dimension {C.ambient_dim}")
    return [Fraction(x) for x in v]


def contains(C: Cone, v: Sequence) -> bool:
    v = _as_vector(C, v)
    return all(dot(e, v) == 0 for e in C.equations) and all(dot(a, v) <= 0 for a in C.inequalities)


def relint_contains(C: Cone, v: Sequence) -> bool:
    v = _as_vector(C, v)
    return all(dot(e, v) == 0 for e in C.equations) and all(dot(a, v) < 0 for a in C.inequalities)


def intersect(C1: Cone, C2: Cone) -> Cone:
    if C1.ambient_dim != C2.ambient_dim:
        raise ConeError("cannot intersect cones of different ambient dimension")
    return cone_from_hrep(
        C1.ambient_dim, C1.equations + C2.equations, C1.inequalities + C2.inequalities
    )


def equal(C1: Cone, C2: Cone) -> bool:
    return C1 == C2


def is_face(F: Cone, C: Cone) -> bool:
    """Whether F is a (not necessarily proper) face of C."""
    if F.ambient_dim != C.ambient_dim:
        return False
    if not all(contains(C, r) for r in F.rays) or not all(
        contains(C, l) and contains(C, [-x for x in l]) for l in F.lineality
    ):
        return False
    return face_of(C, relint_point(F)) == F


def face_of(C: Cone, v: Sequence) -> Cone:
    """The unique face of C containing v in its relative interior."""
    if not contains(C, v):
        raise ConeError(f"point {tuple(v)} is not in the cone")
    tight = [a for a in C.inequalities if dot(a, v) == 0]
    return cone_from_hrep(C.ambient_dim, C.equations + tuple(tight), C.inequalities)


def faces(C: Cone) -> list[Cone]:
    """All faces of C (C itself included), sorted canonically."""
    found: dict[Cone, None] = {}
    todo = [C]
    while todo:
        F = todo.pop()
        if F in found:
            continue
        found[F] = None
        for a in F.inequalities:
            todo.append(cone_from_hrep(F.ambient_dim, F.equations + (a,), F.inequalities))
    return sorted(found, key=Cone.sort_key)


def relint_point(C: Cone) -> IntVec:
    """Sum of the primitive rays and lineality generators."""
    p = [0] * C.ambient_dim
    for r in C.rays + C.lineality:
        p = [x + y for x, y in zip(p, r)]
    return tuple(p)


def chambers(support: Cone, hyperplanes: Iterable[Sequence]) -> list[Cone]:
    """Closed chambers cut out of ``support`` by linear hyperplanes.

    Splits by each hyperplane in turn, keeping only full-dimensional pieces.
    Hyperplanes containing the whole support are skipped (logged).
    """
    n = support.ambient_dim
    hyperplanes = [tuple(h) for h in hyperplanes]
    _check_len(n, hyperplanes)
    gens = support.rays + support.lineality
    pieces = [support]
    for h in hyperplanes:
        if all(dot(h, g) == 0 for g in gens):
            log.debug("hyperplane %s contains the support; skipped", h)
            continue
        split: dict[Cone, None] = {}
        for P in pieces:
            for sign in (1, -1):
                half = cone_from_hrep(n, P.equations, P.inequalities + (tuple(sign * x for x in h),))
                if half.dim == support.dim:
                    split[half] = None
        pieces = list(split)
    return sorted(pieces, key=Cone.sort_key)
