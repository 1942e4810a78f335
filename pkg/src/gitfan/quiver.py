"""Quivers without oriented cycles, dimension vectors and weights.

Vectors indexed by vertices are stored as plain tuples ordered like
``Quiver.vertices``: dimension vectors hold ``int`` entries and weights hold
``Fraction`` entries.  ``Quiver.dimvector`` and ``Quiver.weight`` convert from
mappings or sequences and check the domain.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

VectorLike = Union[Mapping[str, object], Sequence[object]]


class QuiverError(ValueError):
    """Raised for malformed quivers or vectors that do not match a quiver."""


@dataclass(frozen=True)
class Arrow:
    id: str
    tail: str
    head: str


def _find_cycle(vertices: Sequence[str], arrows: Sequence[Arrow]) -> list[str] | None:
    succ: dict[str, list[str]] = {v: [] for v in vertices}
    for a in arrows:
        succ[a.tail].append(a.head)
    color = {v: 0 for v in vertices}
    stack: list[str] = []

    def visit(v: str) -> list[str] | None:
        color[v] = 1
        stack.append(v)
        for w in succ[v]:
            if color[w] == 1:
                return stack[stack.index(w):] + [w]
            if color[w] == 0:
                found = visit(w)
                if found:
                    return found
        stack.pop()
        color[v] = 2
        return None

    for v in vertices:
        if color[v] == 0:
            found = visit(v)
            if found:
                return found
    return None


@dataclass(frozen=True)
class Quiver:
    """A finite quiver without oriented cycles.

    Build instances with :func:`validate_quiver`; the constructor trusts its
    input apart from the checks in ``__post_init__``.
    """

    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]
    topological_order: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        seen: set[str] = set()
        for v in self.vertices:
            if v in seen:
                raise QuiverError(f"duplicate vertex id {v!r}")
            seen.add(v)
        ids = [a.id for a in self.arrows]
        if len(set(ids)) != len(ids):
            raise QuiverError("duplicate arrow id")
        for a in self.arrows:
            for end in (a.tail, a.head):
                if end not in self.vertices:
                    raise QuiverError(f"arrow {a.id!r} uses undeclared vertex {end!r}")
        cycle = _find_cycle(self.vertices, self.arrows)
        if cycle is not None:
            raise QuiverError("oriented cycle: " + " -> ".join(cycle))
        object.__setattr__(self, "topological_order", self._toposort())
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(self.vertices)})

    def _toposort(self) -> tuple[str, ...]:
        indeg = {v: 0 for v in self.vertices}
        for a in self.arrows:
            indeg[a.head] += 1
        order: list[str] = []
        ready = [v for v in self.vertices if indeg[v] == 0]
        while ready:
            v = ready.pop(0)
            order.append(v)
            for a in self.arrows:
                if a.tail == v:
                    indeg[a.head] -= 1
                    if indeg[a.head] == 0:
                        ready.append(a.head)
        return tuple(order)

    @property
    def n(self) -> int:
        return len(self.vertices)

    def index(self, vertex: str) -> int:
        return self._index[vertex]  # type: ignore[attr-defined]

    def tail_index(self, arrow: Arrow) -> int:
        return self.index(arrow.tail)

    def head_index(self, arrow: Arrow) -> int:
        return self.index(arrow.head)

    def _coerce(self, v: VectorLike, convert) -> tuple:
        if isinstance(v, Mapping):
            extra = set(v) - set(self.vertices)
            missing = set(self.vertices) - set(v)
            if extra or missing:
                raise QuiverError(
                    f"vector domain mismatch (missing {sorted(missing)}, unknown {sorted(extra)})"
                )
            return tuple(convert(v[x]) for x in self.vertices)
        v = tuple(v)
        if len(v) != self.n:
            raise QuiverError(f"vector has {len(v)} entries, quiver has {self.n} vertices")
        return tuple(convert(c) for c in v)

    def dimvector(self, v: VectorLike) -> tuple[int, ...]:
        def conv(c: object) -> int:
            if isinstance(c, bool) or int(c) != c:  # type: ignore[call-overload]
                raise QuiverError(f"dimension entry {c!r} is not an integer")
            if c < 0:  # type: ignore[operator]
                raise QuiverError(f"negative dimension {c!r}")
            return int(c)  # type: ignore[call-overload]

        return self._coerce(v, conv)

    def weight(self, v: VectorLike) -> tuple[Fraction, ...]:
        return self._coerce(v, Fraction)

    def simple(self, vertex: str) -> tuple[int, ...]:
        return tuple(int(x == vertex) for x in self.vertices)

    def __repr__(self) -> str:
        arrows = ", ".join(f"{a.id}:{a.tail}->{a.head}" for a in self.arrows)
        return f"Quiver({list(self.vertices)}, [{arrows}])"


def validate_quiver(vertices: Iterable[str], arrows: Iterable) -> Quiver:
    """Build a :class:`Quiver` from vertex ids and arrow descriptions.

    Arrows may be :class:`Arrow` instances, ``(id, tail, head)`` triples or
    mappings with ``id``/``tail``/``head`` keys.  Raises :class:`QuiverError`
    on duplicate vertices, undeclared endpoints or an oriented cycle.
    """
    recs = []
    for a in arrows:
        if isinstance(a, Arrow):
            recs.append(a)
        elif isinstance(a, Mapping):
            recs.append(Arrow(str(a["id"]), str(a["tail"]), str(a["head"])))
        else:
            i, t, h = a
            recs.append(Arrow(str(i), str(t), str(h)))
    return Quiver(tuple(str(v) for v in vertices), tuple(recs))


def _check(Q: Quiver, *vs: Sequence) -> None:
    for v in vs:
        if len(v) != Q.n:
            raise QuiverError(f"vector of length {len(v)} does not match {Q.n} vertices")


def euler_form(Q: Quiver, alpha: Sequence[int], beta: Sequence[int]) -> int:
    """<alpha, beta> = sum_x alpha(x)beta(x) - sum_a alpha(ta)beta(ha)."""
    _check(Q, alpha, beta)
    value = sum(a * b for a, b in zip(alpha, beta))
    for arr in Q.arrows:
        value -= alpha[Q.tail_index(arr)] * beta[Q.head_index(arr)]
    return value


def weight_of(sigma: Sequence, beta: Sequence) -> Fraction:
    if len(sigma) != len(beta):
        raise QuiverError("weight and dimension vector have different domains")
    return sum((Fraction(s) * b for s, b in zip(sigma, beta)), Fraction(0))


def subdim_vectors(beta: Sequence[int]) -> list[tuple[int, ...]]:
    """All beta' with 0 <= beta' <= beta, lexicographically increasing."""
    return list(itertools.product(*(range(b + 1) for b in beta)))


def iter_proper_subdim(beta: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Subdimension vectors strictly between 0 and beta."""
    beta = tuple(beta)
    for v in subdim_vectors(beta):
        if any(v) and v != beta:
            yield v


def vsub(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    return tuple(x - y for x, y in zip(a, b))


def vadd(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


def leq(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))
