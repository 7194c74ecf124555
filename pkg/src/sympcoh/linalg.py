"""Linear algebra over the Novikov field.

Characteristic polynomials are computed division-free (Berkowitz), root
valuations are read off the Newton polygon, and a :class:`ValuationSpectrum`
records ``(ev(lambda), multiplicity)`` pairs. Distinct eigenvalues that share
a valuation are merged into one entry: only valuation-level data is kept.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .novikov import (
    INF,
    ONE,
    ZERO,
    Exponent,
    IndeterminateValuation,
    NovikovSeries,
    as_exponent,
    dot,
    format_rational,
    linear_combination,
    valuation,
)


@dataclass(frozen=True)
class NovikovMatrix:
    rows: tuple[tuple[NovikovSeries, ...], ...]

    def __post_init__(self):
        if not self.rows:
            raise ValueError("matrix must have at least one row")
        width = len(self.rows[0])
        if width == 0 or any(len(r) != width for r in self.rows):
            raise ValueError("matrix must be rectangular and non-empty")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "NovikovMatrix":
        return cls(tuple(tuple(NovikovSeries.coerce(x) for x in row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> "NovikovMatrix":
        return cls(tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, n: int, m: int | None = None) -> "NovikovMatrix":
        return cls(tuple(tuple(ZERO for _ in range(m or n)) for _ in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    @property
    def is_square(self) -> bool:
        r, c = self.shape
        return r == c

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other: "NovikovMatrix") -> "NovikovMatrix":
        n, k = self.shape
        k2, m = other.shape
        if k != k2:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = []
        for i in range(n):
            row = []
            for j in range(m):
                acc = ZERO
                for t in range(k):
                    a = self.rows[i][t]
                    b = other.rows[t][j]
                    if a.terms and b.terms or not (a.is_exact and b.is_exact):
                        acc = acc + a * b
                row.append(acc)
            out.append(tuple(row))
        return NovikovMatrix(tuple(out))

    def __pow__(self, n: int) -> "NovikovMatrix":
        if not self.is_square or n < 0:
            raise ValueError("only non-negative powers of square matrices")
        result = NovikovMatrix.identity(self.shape[0])
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def scale(self, c) -> "NovikovMatrix":
        c = NovikovSeries.coerce(c)
        return NovikovMatrix(tuple(tuple(c * x for x in row) for row in self.rows))

    def specialize_zero(self) -> list[list[Fraction]]:
        """Rational matrix obtained by setting ``T = 0``."""
        return [[x.specialize_zero() for x in row] for row in self.rows]

    def to_strings(self) -> list[list[str]]:
        return [[str(x) for x in row] for row in self.rows]


@dataclass(frozen=True)
class NovikovPolynomial:
    """Polynomial in ``x`` with Novikov coefficients; ``coefficients[i]`` multiplies ``x^i``."""

    coefficients: tuple[NovikovSeries, ...]

    def __post_init__(self):
        if not self.coefficients or not self.coefficients[-1].terms:
            raise ValueError("leading coefficient must be nonzero")

    @classmethod
    def from_coefficients(cls, coeffs: Iterable) -> "NovikovPolynomial":
        cs = [NovikovSeries.coerce(c) for c in coeffs]
        while cs and not cs[-1].terms and cs[-1].is_exact:
            cs.pop()
        return cls(tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __mul__(self, other: "NovikovPolynomial") -> "NovikovPolynomial":
        out = [ZERO] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] = out[i + j] + a * b
        return NovikovPolynomial.from_coefficients(out)

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coefficients):
            if c.terms or not c.is_exact:
                parts.append(f"({c})*x^{i}")
        return " + ".join(parts)


@dataclass(frozen=True)
class NewtonPolygon:
    """Lower convex hull of ``(i, ev(p_i))`` over the nonzero coefficients.

    ``zero_roots`` counts the factor ``x^d0`` below the first vertex; those
    roots have valuation ``+inf``.
    """

    vertices: tuple[tuple[int, Fraction], ...]
    zero_roots: int = 0

    def slopes(self) -> list[Fraction]:
        return [
            (v2 - v1) / (i2 - i1)
            for (i1, v1), (i2, v2) in zip(self.vertices, self.vertices[1:])
        ]

    def segments(self) -> list[tuple[Fraction, int]]:
        """``(root valuation, multiplicity)`` per edge; the root valuation is minus the slope."""
        return [
            (-(v2 - v1) / (i2 - i1), i2 - i1)
            for (i1, v1), (i2, v2) in zip(self.vertices, self.vertices[1:])
        ]


def _cross(o, a, b) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def newton_polygon(p: NovikovPolynomial) -> NewtonPolygon:
    points = []
    for i, c in enumerate(p.coefficients):
        if not c.terms:
            if c.is_exact:
                continue
            raise IndeterminateValuation(f"coefficient of x^{i} is zero only up to precision")
        points.append((i, valuation(c)))
    if not points:
        raise ValueError("zero polynomial has no Newton polygon")
    hull: list[tuple[int, Fraction]] = []
    for pt in points:
        # pop while the turn is not strictly counter-clockwise: drops collinear points
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], pt) <= 0:
            hull.pop()
        hull.append(pt)
    return NewtonPolygon(tuple(hull), zero_roots=points[0][0])


@dataclass(frozen=True)
class ValuationSpectrum:
    """Multiset of eigenvalue valuations; ``+inf`` stands for the eigenvalue 0."""

    entries: tuple[tuple[Exponent, int], ...]

    def __post_init__(self):
        prev = None
        for v, mult in self.entries:
            if mult <= 0:
                raise ValueError("multiplicities must be positive")
            if prev is not None and not prev < v:
                raise ValueError("valuations must be strictly increasing")
            prev = v

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple]) -> "ValuationSpectrum":
        acc: dict = {}
        for v, mult in pairs:
            v = as_exponent(v)
            if mult:
                acc[v] = acc.get(v, 0) + int(mult)
        return cls(tuple(sorted(acc.items(), key=lambda e: e[0])))

    @property
    def dimension(self) -> int:
        return sum(m for _, m in self.entries)

    def multiplicity(self, v) -> int:
        v = as_exponent(v)
        return next((m for val, m in self.entries if val == v), 0)

    def finite(self) -> list[tuple[Fraction, int]]:
        return [(v, m) for v, m in self.entries if v != INF]

    def to_json(self) -> list[dict]:
        return [{"valuation": format_rational(v), "multiplicity": m} for v, m in self.entries]

    @classmethod
    def from_json(cls, data: list[dict]) -> "ValuationSpectrum":
        return cls.from_pairs((d["valuation"], d["multiplicity"]) for d in data)


def _berkowitz(a: list[list[NovikovSeries]]) -> list[NovikovSeries]:
    # coefficients of det(xI - a), highest degree first
    n = len(a)
    if n == 0:
        return [ONE]
    corner = a[0][0]
    row = a[0][1:]
    col = [a[i][0] for i in range(1, n)]
    sub = [r[1:] for r in a[1:]]
    diags = [ONE, -corner]
    v = col
    for _ in range(n - 1):
        diags.append(-dot(zip(row, v)))
        v = [dot(zip(srow, v)) for srow in sub]
    tail = _berkowitz(sub)
    out = []
    for i in range(n + 1):
        out.append(dot((diags[i - j], tail[j]) for j in range(min(i + 1, n))))
    return out


def charpoly(m: NovikovMatrix) -> NovikovPolynomial:
    """``det(xI - M)`` with exact, division-free arithmetic."""
    if not m.is_square:
        raise ValueError(f"characteristic polynomial of a non-square {m.shape} matrix")
    desc = _berkowitz([list(r) for r in m.rows])
    return NovikovPolynomial.from_coefficients(reversed(desc))


def polynomial_spectrum(p: NovikovPolynomial) -> ValuationSpectrum:
    poly = newton_polygon(p)
    pairs = [(v, mult) for v, mult in poly.segments()]
    if poly.zero_roots:
        pairs.append((INF, poly.zero_roots))
    return ValuationSpectrum.from_pairs(pairs)


def spectrum(m: NovikovMatrix) -> ValuationSpectrum:
    """Root valuations of the characteristic polynomial, with multiplicities."""
    return polynomial_spectrum(charpoly(m))


def check_nonneg_valuations(s: ValuationSpectrum) -> bool:
    return all(v >= 0 for v, _ in s.entries)


def conjugate(m: NovikovMatrix, p: Sequence[Sequence[Fraction]], p_inv: Sequence[Sequence[Fraction]]) -> NovikovMatrix:
    """``P^-1 M P`` for a rational change of basis ``P``."""
    n = len(p)
    mp = [[linear_combination((p[k][j], m.rows[i][k]) for k in range(n)) for j in range(n)] for i in range(n)]
    rows = tuple(
        tuple(linear_combination((p_inv[i][k], mp[k][j]) for k in range(n)) for j in range(n)) for i in range(n)
    )
    return NovikovMatrix(rows)
