"""Full-rank lattices in Q^n (n = 1 or 2) in Hermite normal form.

A lattice is stored as ``(rows, den)``: integer basis rows in lower-triangular
HNF divided by a positive integer ``den``.  Row ``j`` has its positive pivot in
column ``j``, zeros to the right of it, and entries to the left reduced modulo
the pivots of the earlier rows.  In dimension two the rows are ``(a, 0)`` and
``(b, c)`` with ``0 <= b < a``.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .errors import DegenerateLatticeError


def hnf(vectors: Sequence[Sequence[int]], dim: int, transform: bool = False):
    """Row-style HNF of the integer span of ``vectors``.

    With ``transform=True`` also returns, for each basis row, its integer
    coefficients against the input vectors.
    """
    rows = [list(v) for v in vectors]
    m = len(rows)
    coef = [[int(i == k) for k in range(m)] for i in range(m)] if transform else None
    remaining = list(range(m))
    pivots = [0] * dim
    for j in reversed(range(dim)):
        active = [i for i in remaining if rows[i][j]]
        while len(active) > 1:
            active.sort(key=lambda i: abs(rows[i][j]))
            p = active[0]
            for i in active[1:]:
                q = rows[i][j] // rows[p][j]
                rows[i] = [u - q * w for u, w in zip(rows[i], rows[p])]
                if transform:
                    coef[i] = [u - q * w for u, w in zip(coef[i], coef[p])]
            active = [i for i in active if rows[i][j]]
        if not active:
            raise DegenerateLatticeError(f"vectors span a lattice of rank < {dim}")
        p = active[0]
        if rows[p][j] < 0:
            rows[p] = [-u for u in rows[p]]
            if transform:
                coef[p] = [-u for u in coef[p]]
        pivots[j] = p
        remaining.remove(p)
    for j in range(dim):
        r = pivots[j]
        for k in reversed(range(j)):
            s = pivots[k]
            q = rows[r][k] // rows[s][k]
            if q:
                rows[r] = [u - q * w for u, w in zip(rows[r], rows[s])]
                if transform:
                    coef[r] = [u - q * w for u, w in zip(coef[r], coef[s])]
    basis = [tuple(rows[pivots[j]]) for j in range(dim)]
    if transform:
        return basis, [tuple(coef[pivots[j]]) for j in range(dim)]
    return basis


def hnf_reduce(vectors: Sequence[Sequence[int]]) -> tuple[int, int, int]:
    """HNF triple ``(a, b, c)`` of the lattice spanned by integer pairs."""
    (a, _), (b, c) = hnf(vectors, 2)
    return a, b, c


def rational_hnf(vectors: Sequence[Sequence[Fraction]], dim: int):
    """Canonical ``(rows, den)`` of the lattice spanned by rational vectors."""
    den = 1
    for v in vectors:
        for x in v:
            den = lcm(den, Fraction(x).denominator)
    scaled = [[int(Fraction(x) * den) for x in v] for v in vectors]
    rows = hnf(scaled, dim)
    g = den
    for r in rows:
        for x in r:
            g = gcd(g, x)
    if g > 1:
        rows = [tuple(x // g for x in r) for r in rows]
        den //= g
    return rows, den


def basis_vectors(rows, den) -> list[tuple[Fraction, ...]]:
    return [tuple(Fraction(x, den) for x in r) for r in rows]


def contains(rows, den, v: Sequence[Fraction]) -> bool:
    w = [Fraction(x) * den for x in v]
    if any(x.denominator != 1 for x in w):
        return False
    w = [int(x) for x in w]
    for j in reversed(range(len(rows))):
        piv = rows[j][j]
        if w[j] % piv:
            return False
        q = w[j] // piv
        if q:
            w = [u - q * r for u, r in zip(w, rows[j])]
    return True


def coordinates(rows, den, v: Sequence[Fraction]) -> list[Fraction]:
    """Coordinates of ``v`` against the basis rows (rational in general)."""
    w = [Fraction(x) * den for x in v]
    out = [Fraction(0)] * len(rows)
    for j in reversed(range(len(rows))):
        q = w[j] / rows[j][j]
        out[j] = q
        w = [u - q * r for u, r in zip(w, rows[j])]
    return out


def _inverse(matrix: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(matrix)
    a = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col])
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def dual(rows, den):
    """The dual lattice ``{v : <v, w> in Z for all w}``."""
    basis = basis_vectors(rows, den)
    inv = _inverse([list(r) for r in basis])
    n = len(rows)
    # rows of inverse-transpose
    dual_rows = [[inv[i][j] for i in range(n)] for j in range(n)]
    return rational_hnf(dual_rows, n)


def lattice_sum(*lattices):
    vecs = []
    for rows, den in lattices:
        vecs.extend(basis_vectors(rows, den))
    return rational_hnf(vecs, len(lattices[0][0]))


def lattice_intersection(*lattices):
    duals = [dual(rows, den) for rows, den in lattices]
    return dual(*lattice_sum(*duals))


def index(rows) -> int:
    out = 1
    for j, r in enumerate(rows):
        out *= r[j]
    return out
