"""Quantum cohomology model of ``E = O(-k) -> CP^m``.

``QH^*(E)`` is presented as ``Lambda[x] / (x^(m+1) - u T x^k)`` with basis
``1, x, ..., x^m``. The unit ``u`` is not typed in by hand: it comes from the
mirror elimination (see :mod:`sympcoh.derive_presentation`), matching
``x`` with the last mirror coordinate. The operator of interest is quantum
multiplication by ``rho^* c_1^E = -k x``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import _presentation_table
from .geometry import LineBundleGeometry
from .linalg import NovikovMatrix, ValuationSpectrum, spectrum
from .novikov import INF, ZERO, NovikovSeries, format_rational


class ModelInconsistency(RuntimeError):
    """A computed spectrum disagrees with the monotone valuation pattern."""


@dataclass(frozen=True)
class Presentation:
    """``x^(m+1) = unit * T * x^k``."""

    m: int
    k: int
    unit: Fraction

    @property
    def nonzero_factor_degree(self) -> int:
        return self.m + 1 - self.k

    def reduce_top(self) -> dict[int, NovikovSeries]:
        """``x^(m+1)`` written in the basis ``x^i``."""
        return {self.k: NovikovSeries.monomial(1, self.unit)}

    def classical(self) -> dict[int, NovikovSeries]:
        """The relation at ``T = 0``: ``x^(m+1) = 0``."""
        return {i: NovikovSeries.constant(c.specialize_zero()) for i, c in self.reduce_top().items()}

    def __str__(self):
        return f"x^{self.m + 1} = ({format_rational(self.unit)})*T*x^{self.k}"


def build_presentation(g: LineBundleGeometry) -> Presentation:
    unit = _presentation_table.UNITS.get((g.m, g.k))
    if unit is None:
        from .mirror import eliminate_critical_locus

        unit = eliminate_critical_locus(g).unit
    return Presentation(g.m, g.k, unit)


@dataclass(frozen=True)
class ChernOperator:
    matrix: NovikovMatrix
    presentation: Presentation


def chern_matrix(g: LineBundleGeometry) -> ChernOperator:
    """Matrix of ``-k x`` acting on ``1, x, ..., x^m``; column ``j`` is the image of ``x^j``."""
    pres = build_presentation(g)
    n = g.m + 1
    scale = NovikovSeries.constant(-g.k)
    cols: list[dict[int, NovikovSeries]] = []
    for j in range(n):
        if j + 1 < n:
            cols.append({j + 1: scale})
        else:
            cols.append({i: scale * c for i, c in pres.reduce_top().items()})
    rows = tuple(tuple(cols[j].get(i, ZERO) for j in range(n)) for i in range(n))
    return ChernOperator(NovikovMatrix(rows), pres)


@dataclass(frozen=True)
class QuantumSpectrum:
    spectrum: ValuationSpectrum
    zero_multiplicity: int
    nonzero_valuation: Fraction

    @property
    def sh_dimension(self) -> int:
        return self.spectrum.dimension - self.zero_multiplicity


def quantum_spectrum(g: LineBundleGeometry) -> QuantumSpectrum:
    """Valuation spectrum of ``-k x``, cross-checked against ``{0, 1/(kappa - k)}``.

    Raises:
        ModelInconsistency: if the computed spectrum breaks the expected pattern.
    """
    s = spectrum(chern_matrix(g).matrix)
    zero_mult = s.multiplicity(INF)
    finite = s.finite()
    expected_v = Fraction(1, g.sh_rank)
    if s.dimension != g.m + 1:
        raise ModelInconsistency(f"multiplicities sum to {s.dimension}, expected {g.m + 1}")
    if zero_mult != g.k:
        raise ModelInconsistency(f"zero eigenspace has dimension {zero_mult}, expected {g.k}")
    if len(finite) != 1 or finite[0][0] != expected_v:
        raise ModelInconsistency(f"nonzero eigenvalue valuations {finite}, expected only {expected_v}")
    return QuantumSpectrum(s, zero_mult, finite[0][0])


def total_sh_dimension(g: LineBundleGeometry) -> int:
    return quantum_spectrum(g).sh_dimension


def spectrum_payload(g: LineBundleGeometry) -> dict:
    q = quantum_spectrum(g)
    return {"m": g.m, "k": g.k, "spectrum": q.spectrum.to_json(), "sh_dim": q.sh_dimension}
