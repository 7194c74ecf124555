"""Dimensions of reduced/completed symplectic cohomology of disk and annulus bundles.

Radii enter only through the normalized value ``r = k*pi*R^2``, passed as an
exact rational (``inf`` for the whole bundle). Each theory keeps the
generalized eigenspaces whose eigenvalue valuation falls in a window:

* reduced SH of the disk ``D_R``: keep ``ev(lambda) <= r``;
* completed SH of the annulus between ``r1 <= r2``: keep ``r1 < ev <= r2``;
* with the radii swapped (``r1 > r2``): keep ``r2 < ev <= r1``, landing in
  quantum homology with a degree shift.

The zero eigenspace (``ev = inf``) is never kept.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .linalg import ValuationSpectrum
from .novikov import INF, Exponent, as_exponent, format_rational
from .quantum import QuantumSpectrum

NormalizedRadius = Union[Fraction, float]

REDUCED_DISK = "reduced_disk"
ANNULUS_COHOMOLOGY = "completed_annulus_cohomology"
ANNULUS_HOMOLOGY = "completed_annulus_homology"
TOTAL = "total"


def as_radius(r) -> NormalizedRadius:
    r = as_exponent(r)
    if r < 0:
        raise ValueError(f"normalized radius must be non-negative, got {format_rational(r)}")
    return r


def _spectrum(s) -> ValuationSpectrum:
    return s.spectrum if isinstance(s, QuantumSpectrum) else s


@dataclass(frozen=True)
class SHResult:
    theory: str
    dimension: int
    retained: tuple[tuple[Exponent, int], ...]
    discarded: tuple[tuple[Exponent, int], ...]
    radii: tuple[NormalizedRadius, ...] = ()
    degree_shift: int = 0

    def to_json(self) -> dict:
        def entries(xs):
            return [{"valuation": format_rational(v), "multiplicity": m} for v, m in xs]

        out: dict = {"theory": self.theory}
        if self.theory == REDUCED_DISK:
            out["knorm_r"] = format_rational(self.radii[0])
        elif self.theory in (ANNULUS_COHOMOLOGY, ANNULUS_HOMOLOGY):
            out["knorm_r1"] = format_rational(self.radii[0])
            out["knorm_r2"] = format_rational(self.radii[1])
            out["degree_shift"] = self.degree_shift
        out["dimension"] = self.dimension
        out["retained"] = entries(self.retained)
        out["discarded"] = entries(self.discarded)
        return out


def _partition(s: ValuationSpectrum, keep) -> tuple[tuple, tuple]:
    retained = tuple((v, m) for v, m in s.entries if v != INF and keep(v))
    discarded = tuple((v, m) for v, m in s.entries if not (v != INF and keep(v)))
    return retained, discarded


def reduced_sh_disk(s, r) -> SHResult:
    """Quotient of QH^* by the eigenspaces with ``ev(lambda) > r``.

    The inequality is strict, so an eigenvalue sitting exactly at ``r`` survives.
    """
    r = as_radius(r)
    retained, discarded = _partition(_spectrum(s), lambda v: not v > r)
    return SHResult(REDUCED_DISK, sum(m for _, m in retained), retained, discarded, (r,))


def total_sh(s) -> SHResult:
    retained, discarded = _partition(_spectrum(s), lambda v: True)
    return SHResult(TOTAL, sum(m for _, m in retained), retained, discarded)


def completed_sh_annulus(s, r1, r2) -> SHResult:
    r1, r2 = as_radius(r1), as_radius(r2)
    if r1 <= r2:
        lo, hi, theory, shift = r1, r2, ANNULUS_COHOMOLOGY, 0
    else:
        lo, hi, theory, shift = r2, r1, ANNULUS_HOMOLOGY, -1
    retained, discarded = _partition(_spectrum(s), lambda v: lo < v <= hi)
    return SHResult(theory, sum(m for _, m in retained), retained, discarded, (r1, r2), shift)


def duality_check(s, r1, r2) -> bool:
    """The two orientations of an annulus give dual spaces, hence equal dimensions."""
    return completed_sh_annulus(s, r1, r2).dimension == completed_sh_annulus(s, r2, r1).dimension


def critical_radii(s) -> list[Fraction]:
    return [v for v, _ in _spectrum(s).finite()]


def frange(start, stop, step) -> list[Fraction]:
    """Exact grid ``start, start + step, ...`` up to and including ``stop``."""
    start, stop, step = (as_radius(x) if i < 2 else as_exponent(x) for i, x in enumerate((start, stop, step)))
    if start == INF or stop == INF or step == INF:
        raise ValueError("sweep bounds must be finite")
    if start > stop:
        raise ValueError("sweep start exceeds stop")
    if step <= 0:
        raise ValueError("sweep step must be positive")
    out = []
    x = start
    while x <= stop:
        out.append(x)
        x += step
    return out


def disk_profile(s, radii: Iterable) -> list[tuple[Fraction, int]]:
    rows = [(as_radius(r), reduced_sh_disk(s, r).dimension) for r in radii]
    return sorted(rows, key=lambda row: row[0])


def profile_csv(rows: list[tuple[Fraction, int]]) -> str:
    lines = ["knorm_r,dimension"]
    lines += [f"{format_rational(r)},{d}" for r, d in rows]
    return "\n".join(lines) + "\n"
