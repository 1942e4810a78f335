"""Small exact linear algebra kernels.

Two flavours: over the rationals (``Fraction`` entries, used by the cone
engine) and over a prime field F_p (``int`` entries reduced mod p, used for
explicit representations).  Matrices are lists of rows.  Everything here is
sized for desk-scale problems; no attempt is made at asymptotic efficiency.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterator, Sequence

# ---------------------------------------------------------------- rationals


def rref_q(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q. Returns (nonzero rows, pivot columns)."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank_q(rows: Sequence[Sequence]) -> int:
    return len(rref_q(rows)[1]) if rows else 0


def nullspace_q(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of {x : rows . x = 0}, one vector per free column."""
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    red, pivots = rref_q(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def primitive(v: Sequence) -> tuple[int, ...]:
    """Scale a rational vector to the primitive integer vector on its ray."""
    fr = [Fraction(x) for x in v]
    den = reduce(lambda a, b: a * b // gcd(a, b), (x.denominator for x in fr), 1)
    ints = [int(x * den) for x in fr]
    g = reduce(gcd, (abs(x) for x in ints), 0)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def dot(a: Sequence, b: Sequence):
    return sum((x * y for x, y in zip(a, b)), 0)


def canonical_subspace(rows: Sequence[Sequence], ncols: int) -> tuple[tuple[int, ...], ...]:
    """Canonical integer basis of span(rows): primitive RREF rows."""
    red, _ = rref_q([r for r in rows if any(r)]) if rows else ([], [])
    return tuple(primitive(r) for r in red)


def orth_complement(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    return nullspace_q([list(r) for r in rows if any(r)], ncols)


def project_onto(v: Sequence, basis: Sequence[Sequence]) -> list[Fraction]:
    """Orthogonal projection of v onto span(basis) (exact)."""
    n = len(v)
    if not basis:
        return [Fraction(0)] * n
    b = [[Fraction(x) for x in r] for r in basis]
    k = len(b)
    gram = [[dot(b[i], b[j]) for j in range(k)] + [dot(b[i], v)] for i in range(k)]
    red, piv = rref_q(gram)
    coeffs = [Fraction(0)] * k
    for row, pc in zip(red, piv):
        if pc < k:
            coeffs[pc] = row[k]
    return [sum((coeffs[i] * b[i][j] for i in range(k)), Fraction(0)) for j in range(n)]


# ------------------------------------------------------------- prime fields


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


def rref_p(rows: Sequence[Sequence[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form over F_p."""
    m = [[x % p for x in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = pow(m[r][c], p - 2, p)
        m[r] = [x * inv % p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank_p(rows: Sequence[Sequence[int]], p: int) -> int:
    return len(rref_p(rows, p)[1]) if rows else 0


def nullspace_p(rows: Sequence[Sequence[int]], ncols: int, p: int) -> list[list[int]]:
    if not rows:
        return [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    red, pivots = rref_p(rows, p)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [0] * ncols
        v[f] = 1
        for row, pc in zip(red, pivots):
            v[pc] = -row[f] % p
        basis.append(v)
    return basis


def matvec_p(M: Sequence[Sequence[int]], v: Sequence[int], p: int) -> list[int]:
    return [sum(a * b for a, b in zip(row, v)) % p for row in M]


def det_nonzero_p(M: Sequence[Sequence[int]], p: int) -> bool:
    n = len(M)
    return n == 0 or rank_p(M, p) == n


def count_subspaces(n: int, k: int, p: int) -> int:
    """Gaussian binomial [n choose k]_p."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= p ** (n - i) - 1
        den *= p ** (i + 1) - 1
    return num // den


def count_all_subspaces(n: int, p: int) -> int:
    return sum(count_subspaces(n, k, p) for k in range(n + 1))


def iter_subspaces(n: int, k: int, p: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All k-dim subspaces of F_p^n as RREF bases, pivots in lex order.

    Within one pivot pattern the free entries run through F_p^m in
    lexicographic order, so the whole sequence is deterministic.
    """
    if k == 0:
        yield ()
        return
    for piv in itertools.combinations(range(n), k):
        pivset = set(piv)
        slots = [(i, j) for i, pc in enumerate(piv) for j in range(pc + 1, n) if j not in pivset]
        for vals in itertools.product(range(p), repeat=len(slots)):
            rows = [[0] * n for _ in range(k)]
            for i, pc in enumerate(piv):
                rows[i][pc] = 1
            for (i, j), x in zip(slots, vals):
                rows[i][j] = x
            yield tuple(tuple(r) for r in rows)


def reduce_mod_rref(v: Sequence[int], basis: Sequence[Sequence[int]], pivots: Sequence[int], p: int) -> list[int]:
    """Reduce v modulo the row space of an RREF basis."""
    w = [x % p for x in v]
    for row, pc in zip(basis, pivots):
        c = w[pc]
        if c:
            w = [(a - c * b) % p for a, b in zip(w, row)]
    return w


def pivots_of(basis: Sequence[Sequence[int]]) -> list[int]:
    """Pivot columns of an RREF basis (first nonzero entry of each row)."""
    return [next(j for j, x in enumerate(r) if x) for r in basis]
