"""Generic representations: Schofield's ext recursion and what follows from it.

``generic_ext(Q, a, b)`` is the dimension of Ext(A, B) for general A, B of
dimension vectors a, b.  It is computed with the recursion

    ext(a, b) = max{ -<a', b> : a' -> a },

where ``a' -> a`` (:func:`embeds`) means that a general a-dimensional
representation has a subrepresentation of dimension a', which in turn holds
iff a' <= a and ext(a', a - a') = 0.  Each embedding test strictly lowers
|a| + |b|, so the mutual recursion terminates.
"""

from __future__ import annotations

import threading
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cones import Cone, cone_from_hrep
from .quiver import Quiver, QuiverError, euler_form, leq, subdim_vectors, vsub, weight_of


class NotEffectiveError(ValueError):
    pass


class _Memo:
    """Per-quiver memo tables, shared across threads behind one lock."""

    def __init__(self) -> None:
        self.ext: dict[tuple, int] = {}
        self.lock = threading.RLock()


_memos: dict[Quiver, _Memo] = {}
_memos_lock = threading.Lock()


def _memo(Q: Quiver) -> _Memo:
    with _memos_lock:
        if Q not in _memos:
            _memos[Q] = _Memo()
        return _memos[Q]


def clear_memo() -> None:
    with _memos_lock:
        _memos.clear()


def _vec(Q: Quiver, v: Sequence) -> tuple[int, ...]:
    if len(v) != Q.n:
        raise QuiverError(f"vector of length {len(v)} does not match {Q.n} vertices")
    return Q.dimvector(v)


def generic_ext(Q: Quiver, alpha: Sequence[int], beta: Sequence[int]) -> int:
    alpha, beta = _vec(Q, alpha), _vec(Q, beta)
    memo = _memo(Q)
    with memo.lock:
        return _ext(Q, alpha, beta, memo.ext)


def _ext(Q: Quiver, alpha: tuple, beta: tuple, table: dict) -> int:
    if not any(alpha) or not any(beta):
        return 0
    key = (alpha, beta)
    if key in table:
        return table[key]
    best = 0  # the a' = 0 term
    for sub in subdim_vectors(alpha):
        if not any(sub):
            continue
        val = -euler_form(Q, sub, beta)
        if val <= best:
            continue
        if sub == alpha or _ext(Q, sub, vsub(alpha, sub), table) == 0:
            best = val
    table[key] = best
    return best


def generic_hom(Q: Quiver, alpha: Sequence[int], beta: Sequence[int]) -> int:
    """hom(a, b) = <a, b> + ext(a, b) for general representations."""
    return euler_form(Q, alpha, beta) + generic_ext(Q, alpha, beta)


def embeds(Q: Quiver, beta1: Sequence[int], beta: Sequence[int]) -> bool:
    """beta1 -> beta: every beta-dimensional representation has a beta1-subrepresentation."""
    beta1, beta = _vec(Q, beta1), _vec(Q, beta)
    if not leq(beta1, beta):
        return False
    return generic_ext(Q, beta1, vsub(beta, beta1)) == 0


def embedded_subdims(Q: Quiver, beta: Sequence[int]) -> list[tuple[int, ...]]:
    """All beta1 with beta1 -> beta (0 and beta included), in lex order."""
    beta = _vec(Q, beta)
    return [b1 for b1 in subdim_vectors(beta) if embeds(Q, b1, beta)]


def effective_cone(Q: Quiver, beta: Sequence[int]) -> Cone:
    """C(Q, beta): sigma(beta) = 0 and sigma(beta1) <= 0 for every beta1 -> beta."""
    beta = _vec(Q, beta)
    if not any(beta):
        raise QuiverError("effective cone needs a nonzero dimension vector")
    ineqs = [b1 for b1 in embedded_subdims(Q, beta) if any(b1) and b1 != beta]
    return cone_from_hrep(Q.n, [beta], ineqs)


def is_effective(Q: Quiver, beta: Sequence[int], sigma: Sequence) -> bool:
    beta = _vec(Q, beta)
    sigma = Q.weight(sigma)
    if weight_of(sigma, beta) != 0:
        return False
    return all(weight_of(sigma, b1) <= 0 for b1 in embedded_subdims(Q, beta))


def is_stable_dimvector(Q: Quiver, gamma: Sequence[int], sigma: Sequence) -> bool:
    """Whether a general gamma-dimensional representation is sigma-stable."""
    gamma = _vec(Q, gamma)
    sigma = Q.weight(sigma)
    if not any(gamma):
        raise QuiverError("stability of the zero dimension vector is undefined")
    if weight_of(sigma, gamma) != 0:
        return False
    for g1 in subdim_vectors(gamma):
        if not any(g1) or g1 == gamma:
            continue
        if weight_of(sigma, g1) >= 0 and embeds(Q, g1, gamma):
            return False
    return True


@dataclass(frozen=True)
class StableDecomposition:
    parts: tuple[tuple[int, tuple[int, ...]], ...]
    weight: tuple[Fraction, ...]

    def total(self) -> tuple[int, ...]:
        n = len(self.weight)
        out = [0] * n
        for m, g in self.parts:
            out = [o + m * x for o, x in zip(out, g)]
        return tuple(out)

    def as_counter(self) -> Counter:
        return Counter({g: m for m, g in self.parts})


def stable_decomposition(Q: Quiver, beta: Sequence[int], sigma: Sequence) -> StableDecomposition:
    """Dimension vectors of the sigma-stable factors of a general beta-representation.

    Splits off the lex-least proper beta' -> beta with sigma(beta') = 0 until
    every piece is sigma-stable.  Multiplicities are merged.
    """
    beta = _vec(Q, beta)
    sigma = Q.weight(sigma)
    if not any(beta):
        raise QuiverError("cannot decompose the zero dimension vector")
    if not is_effective(Q, beta, sigma):
        raise NotEffectiveError(f"weight {tuple(map(str, sigma))} is not effective for {beta}")
    counts: Counter = Counter()
    _split(Q, beta, sigma, counts)
    parts = tuple(sorted(((m, g) for g, m in counts.items()), key=lambda t: t[1]))
    return StableDecomposition(parts, sigma)


def _split(Q: Quiver, beta: tuple, sigma: tuple, counts: Counter) -> None:
    if is_stable_dimvector(Q, beta, sigma):
        counts[beta] += 1
        return
    for b1 in subdim_vectors(beta):
        if not any(b1) or b1 == beta:
            continue
        if weight_of(sigma, b1) == 0 and embeds(Q, b1, beta):
            _split(Q, b1, sigma, counts)
            _split(Q, vsub(beta, b1), sigma, counts)
            return
    raise NotEffectiveError(f"no splitting found for {beta}")
