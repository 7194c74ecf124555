"""Gaussian elimination over the rationals.

Matrices are lists of rows of :class:`~fractions.Fraction`. Everything here
is exact; these helpers back the homology computations of
:mod:`sympcoh.complexes`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

QMatrix = list[list[Fraction]]


def zeros(rows: int, cols: int) -> QMatrix:
    return [[Fraction(0)] * cols for _ in range(rows)]


def identity(n: int) -> QMatrix:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = Fraction(1)
    return m


def to_q(rows: Sequence[Sequence]) -> QMatrix:
    return [[Fraction(x) for x in row] for row in rows]


def shape(a: QMatrix, cols: int | None = None) -> tuple[int, int]:
    if not a:
        return 0, (cols or 0)
    return len(a), len(a[0])


def matmul(a: QMatrix, b: QMatrix, inner: int | None = None, cols: int | None = None) -> QMatrix:
    n = len(a)
    k = len(b) if inner is None else inner
    m = (len(b[0]) if b else 0) if cols is None else cols
    out = zeros(n, m)
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            x = ai[t]
            if x:
                bt = b[t]
                for j in range(m):
                    if bt[j]:
                        oi[j] += x * bt[j]
    return out


def matvec(a: QMatrix, v: Sequence[Fraction]) -> list[Fraction]:
    return [sum((x * y for x, y in zip(row, v) if x and y), Fraction(0)) for row in a]


def transpose(a: QMatrix, cols: int | None = None) -> QMatrix:
    if not a:
        return [[] for _ in range(cols or 0)]
    return [list(col) for col in zip(*a)]


def is_zero(a: QMatrix) -> bool:
    return all(x == 0 for row in a for x in row)


def rref(a: QMatrix) -> tuple[QMatrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [row[:] for row in a]
    rows = len(m)
    cols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        pivot_row = m[r]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], pivot_row)]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a: QMatrix) -> int:
    if not a or not a[0]:
        return 0
    return len(rref(a)[1])


def nullspace(a: QMatrix, cols: int | None = None) -> list[list[Fraction]]:
    """Basis of ``{v : a v = 0}`` (vectors of length ``cols``)."""
    n = cols if cols is not None else (len(a[0]) if a else 0)
    if not a:
        basis = []
        for j in range(n):
            v = [Fraction(0)] * n
            v[j] = Fraction(1)
            basis.append(v)
        return basis
    r, pivots = rref(a)
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -r[i][f]
        basis.append(v)
    return basis


def column_space(a: QMatrix) -> list[list[Fraction]]:
    """Basis of the span of the columns of ``a``."""
    if not a or not a[0]:
        return []
    _, pivots = rref(a)
    return [[row[j] for row in a] for j in pivots]


def span_rank(vectors: Sequence[Sequence[Fraction]]) -> int:
    if not vectors:
        return 0
    return rank([list(v) for v in vectors])


def solve(a: QMatrix, b: Sequence[Fraction]) -> list[Fraction] | None:
    """One solution of ``a x = b`` or None when inconsistent."""
    rows = len(a)
    cols = len(a[0]) if a else 0
    aug = [list(a[i]) + [Fraction(b[i])] for i in range(rows)]
    r, pivots = rref(aug)
    if cols in pivots:
        return None
    x = [Fraction(0)] * cols
    for i, p in enumerate(pivots):
        x[p] = r[i][cols]
    return x


def inverse(a: QMatrix) -> QMatrix:
    n = len(a)
    aug = [list(a[i]) + identity(n)[i] for i in range(n)]
    r, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in r]


def complement_basis(sub: Sequence[Sequence[Fraction]], ambient: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Vectors of ``ambient`` extending a basis of ``span(sub)`` to one of ``span(sub + ambient)``."""
    chosen: list[list[Fraction]] = [list(v) for v in sub]
    current = span_rank(chosen)
    extra = []
    for v in ambient:
        trial = chosen + [list(v)]
        r = span_rank(trial)
        if r > current:
            chosen = trial
            current = r
            extra.append(list(v))
    return extra
