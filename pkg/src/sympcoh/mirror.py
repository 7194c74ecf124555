"""Landau-Ginzburg mirror of ``O(-k) -> CP^m`` restricted to annulus domains.

The superpotential is ``W = z_1 + ... + z_{m+1} + T z_1^-1 ... z_m^-1 z_{m+1}^k``.
Its critical locus is eliminated down to one relation in ``z = z_{m+1}``,
and the Jacobian ring on an annulus domain vanishes exactly when that
relation is a unit there, which is a sign condition on an affine function of
``ev(z)`` over the valuation polytope.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .geometry import LineBundleGeometry
from .novikov import INF, NovikovSeries, T, as_exponent, format_rational

Monomial = tuple[int, ...]


class EliminationError(RuntimeError):
    pass


@dataclass(frozen=True)
class LaurentPolynomial:
    nvars: int
    terms: tuple[tuple[Monomial, NovikovSeries], ...]

    @classmethod
    def from_terms(cls, nvars: int, terms: Iterable[tuple[Sequence[int], object]]) -> "LaurentPolynomial":
        acc: dict[Monomial, NovikovSeries] = {}
        for exps, coeff in terms:
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars:
                raise ValueError(f"exponent vector {exps} has wrong length")
            acc[exps] = acc.get(exps, NovikovSeries.zero()) + NovikovSeries.coerce(coeff)
        return cls(nvars, tuple(sorted((e, c) for e, c in acc.items() if c.terms)))

    def coefficient(self, exps: Sequence[int]) -> NovikovSeries:
        exps = tuple(exps)
        return next((c for e, c in self.terms if e == exps), NovikovSeries.zero())

    def derivative(self, var: int) -> "LaurentPolynomial":
        out = []
        for exps, c in self.terms:
            p = exps[var]
            if p == 0:
                continue
            new = list(exps)
            new[var] -= 1
            out.append((new, c * p))
        return LaurentPolynomial.from_terms(self.nvars, out)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.terms:
            mono = "*".join(
                f"z{i + 1}" if e == 1 else f"z{i + 1}^{e}" for i, e in enumerate(exps) if e
            )
            coeff = str(c)
            if mono and coeff == "1":
                parts.append(mono)
            elif mono:
                parts.append(f"({coeff})*{mono}")
            else:
                parts.append(coeff)
        return " + ".join(parts)


def superpotential(g: LineBundleGeometry) -> LaurentPolynomial:
    n = g.m + 1
    terms = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        terms.append((e, 1))
    terms.append(([-1] * g.m + [g.k], T))
    return LaurentPolynomial.from_terms(n, terms)


def partials(w: LaurentPolynomial) -> list[LaurentPolynomial]:
    return [w.derivative(i) for i in range(w.nvars)]


@dataclass(frozen=True)
class EliminatedRelation:
    """``1 - unit * T * z^(-degree) = 0`` in the last mirror coordinate ``z``.

    Equivalently ``z^degree = unit * T``; the ``degree`` roots are the
    ``z``-coordinates of the critical points.
    """

    unit: Fraction
    degree: int

    @property
    def c0(self) -> Fraction:
        return Fraction(1)

    @property
    def c1(self) -> Fraction:
        return self.unit

    @property
    def critical_valuation(self) -> Fraction:
        """``ev(z)`` at every critical point, from ``degree * ev(z) = ev(unit * T) = 1``."""
        return Fraction(1, self.degree)

    def term_valuation(self, ev_z) -> Fraction:
        """``ev(unit * T * z^-degree)`` as an affine function of ``ev(z)``."""
        return 1 - self.degree * as_exponent(ev_z)

    def __str__(self):
        return f"1 - ({format_rational(self.unit)})*T*z^-{self.degree}"


def _split_partial(p: LaurentPolynomial, var: int) -> tuple[NovikovSeries, Monomial]:
    # dW/dz_var must read 1 + c * T * z^E / z_var for one monomial E
    if len(p.terms) != 2:
        raise EliminationError(f"d/dz{var + 1} W has {len(p.terms)} terms, expected 2")
    const = p.coefficient([0] * p.nvars)
    if const != NovikovSeries.constant(1):
        raise EliminationError(f"d/dz{var + 1} W lacks the constant term 1")
    exps, coeff = next((e, c) for e, c in p.terms if any(e))
    full = list(exps)
    full[var] += 1
    return coeff, tuple(full)


def eliminate_critical_locus(g: LineBundleGeometry) -> EliminatedRelation:
    """Reduce ``{dW/dz_i = 0}`` to one relation in ``z_{m+1}``.

    Each partial reads ``1 + c_i Q / z_i`` for the common monomial
    ``Q = T z^E``, so ``z_i = -c_i Q``. Feeding this back into ``Q`` gives
    ``Q^(1 - sum E) = T * prod (-c_i)^E_i``, and ``z_{m+1} = -c_{m+1} Q``
    turns that into a relation in ``z_{m+1}`` alone.
    """
    w = superpotential(g)
    common: Optional[Monomial] = None
    scalars: list[Fraction] = []
    for i, p in enumerate(partials(w)):
        coeff, mono = _split_partial(p, i)
        if common is None:
            common = mono
        elif mono != common:
            raise EliminationError("partials do not share a common monomial")
        if coeff.terms != ((Fraction(1), coeff.terms[0][1]),) or not coeff.is_exact:
            raise EliminationError("partial coefficient is not a rational multiple of T")
        # coefficient of Q in dW/dz_i is c_i = E_i
        c_i = coeff.terms[0][1]
        if c_i != common[i]:
            raise EliminationError("partial coefficient disagrees with the power rule")
        scalars.append(c_i)
    assert common is not None
    degree = 1 - sum(common)
    if degree <= 0:
        raise EliminationError(f"critical locus is not finite (degree {degree})")
    q_unit = Fraction(1)
    for c_i, e_i in zip(scalars, common):
        q_unit *= Fraction(-c_i) ** e_i
    # Q^degree = q_unit * T and z = -c_last * Q
    unit = Fraction(-scalars[-1]) ** degree * q_unit
    relation = EliminatedRelation(unit, degree)
    if relation.degree != g.sh_rank:
        raise EliminationError(f"critical point count {relation.degree} != {g.sh_rank}")
    return relation


def critical_valuations(g: LineBundleGeometry) -> tuple[Fraction, ...]:
    """Valuation vector ``(ev(z_1), ..., ev(z_{m+1}))`` shared by all critical points.

    All coordinates are unit multiples of ``Q`` and ``z_{m+1}``, so they share ``ev(z_{m+1})``.
    """
    v = eliminate_critical_locus(g).critical_valuation
    return tuple([v] * (g.m + 1))


def jac_rank_global(g: LineBundleGeometry) -> int:
    return eliminate_critical_locus(g).degree


# -- Laurent domains --------------------------------------------------------


@dataclass(frozen=True)
class Inequality:
    """``<normal, v> >= bound`` (or ``<=`` when ``direction == "<="``)."""

    normal: tuple[Fraction, ...]
    bound: Fraction
    direction: str = ">="

    def normalized(self) -> tuple[tuple[Fraction, ...], Fraction]:
        if self.direction == ">=":
            return self.normal, self.bound
        if self.direction == "<=":
            return tuple(-a for a in self.normal), -self.bound
        raise ValueError(f"unknown direction {self.direction!r}")

    def holds(self, v: Sequence[Fraction]) -> bool:
        a, b = self.normalized()
        return sum(x * y for x, y in zip(a, v)) >= b


class EmptyDomain(ValueError):
    pass


def _fourier_motzkin(rows: list[tuple[tuple[Fraction, ...], Fraction]], var: int):
    pos, neg, rest = [], [], []
    for a, b in rows:
        (pos if a[var] > 0 else neg if a[var] < 0 else rest).append((a, b))
    out = list(rest)
    for ap, bp in pos:
        for an, bn in neg:
            sp, sn = ap[var], -an[var]
            a = tuple(sn * x + sp * y for x, y in zip(ap, an))
            out.append((a, sn * bp + sp * bn))
    # drop duplicates to keep the system small
    return list(dict.fromkeys(out))


def project_interval(ineqs: Sequence[Inequality], keep: int, nvars: int) -> tuple[object, object]:
    """Exact range of coordinate ``keep`` over the polytope ``{v : all ineqs}``.

    Returns ``(lo, hi)`` with ``-inf``/``inf`` for unbounded sides.

    Raises:
        EmptyDomain: if the polytope is empty.
    """
    rows = [ineq.normalized() for ineq in ineqs]
    for var in range(nvars):
        if var != keep:
            rows = _fourier_motzkin(rows, var)
    lo, hi = -INF, INF
    for a, b in rows:
        c = a[keep]
        if c > 0:
            lo = max(lo, b / c)
        elif c < 0:
            hi = min(hi, b / c)
        elif b > 0:
            raise EmptyDomain("inconsistent constant inequality")
    if lo > hi:
        raise EmptyDomain(f"empty range [{lo}, {hi}] for coordinate {keep}")
    return lo, hi


@dataclass(frozen=True)
class LaurentDomain:
    """Valuation polytope of the mirror annulus: the moment polytope cut by ``r1 <= ev(z_{m+1}) <= r2``."""

    nvars: int
    polytope_inequalities: tuple[Inequality, ...]
    annulus_bounds: tuple[Fraction, Fraction]

    @classmethod
    def annulus(cls, g: LineBundleGeometry, r1, r2) -> "LaurentDomain":
        r1, r2 = as_exponent(r1), as_exponent(r2)
        if r1 == INF or r2 == INF:
            raise ValueError("annulus bounds must be finite")
        n = g.m + 1
        ineqs = []
        for i in range(n):
            e = [Fraction(0)] * n
            e[i] = Fraction(1)
            ineqs.append(Inequality(tuple(e), Fraction(0)))
        ineqs.append(Inequality(tuple([Fraction(-1)] * g.m + [Fraction(g.k)]), Fraction(-1)))
        return cls(n, tuple(ineqs), (r1, r2))

    def inequalities(self) -> list[Inequality]:
        e = tuple(Fraction(int(i == self.nvars - 1)) for i in range(self.nvars))
        r1, r2 = self.annulus_bounds
        return list(self.polytope_inequalities) + [Inequality(e, r1, ">="), Inequality(e, r2, "<=")]

    def contains(self, v: Sequence[Fraction]) -> bool:
        return all(ineq.holds(v) for ineq in self.inequalities())

    def radial_range(self) -> tuple[Fraction, Fraction]:
        """Range of ``ev(z_{m+1})`` over the domain."""
        return project_interval(self.inequalities(), self.nvars - 1, self.nvars)

    def is_bounded(self) -> bool:
        for j in range(self.nvars):
            lo, hi = project_interval(self.inequalities(), j, self.nvars)
            if lo == -INF or hi == INF:
                return False
        return True


@dataclass(frozen=True)
class JacobianResult:
    rank: int
    relation: EliminatedRelation
    vanished_reason: Optional[str] = None  # "unit_positive" | "unit_negative"
    radial_range: tuple = field(default=())

    def __post_init__(self):
        if (self.rank == 0) != (self.vanished_reason is not None):
            raise ValueError("rank is zero exactly when a vanishing reason is given")


def jac_rank_on_annulus(g: LineBundleGeometry, r1, r2) -> JacobianResult:
    """Rank of the Jacobian ring of ``W`` restricted to the annulus ``r1 <= ev(z_{m+1}) <= r2``.

    The eliminated relation ``1 - u T z^-d`` is a unit on the domain when
    ``ev(u T z^-d) = 1 - d ev(z)`` keeps one strict sign over the radial
    range; otherwise every critical point lies in the domain and the rank is
    the global one.
    """
    r1, r2 = as_exponent(r1), as_exponent(r2)
    if r1 > r2:
        raise ValueError(f"need r1 <= r2, got {format_rational(r1)} > {format_rational(r2)}")
    relation = eliminate_critical_locus(g)
    domain = LaurentDomain.annulus(g, r1, r2)
    lo, hi = domain.radial_range()
    # the valuation of the nonconstant term is decreasing in ev(z)
    if relation.term_valuation(hi) > 0:
        return JacobianResult(0, relation, "unit_positive", (lo, hi))
    if relation.term_valuation(lo) < 0:
        return JacobianResult(0, relation, "unit_negative", (lo, hi))
    crit = critical_valuations(g)
    if not domain.contains(crit):
        raise EliminationError("critical valuation outside the domain despite a non-unit relation")
    return JacobianResult(relation.degree, relation, None, (lo, hi))


def mirror_check(g: LineBundleGeometry, r1, r2) -> bool:
    """Compare the annulus Jacobian rank with the completed SH dimension of the same window."""
    from .quantum import quantum_spectrum
    from .sh import completed_sh_annulus

    jac = jac_rank_on_annulus(g, r1, r2)
    sh = completed_sh_annulus(quantum_spectrum(g), r1, r2)
    return jac.rank == sh.dimension


def mirror_report(g: LineBundleGeometry, r1, r2) -> dict:
    from .quantum import quantum_spectrum
    from .sh import completed_sh_annulus

    jac = jac_rank_on_annulus(g, r1, r2)
    sh = completed_sh_annulus(quantum_spectrum(g), r1, r2)
    return {
        "m": g.m,
        "k": g.k,
        "window": [format_rational(as_exponent(r1)), format_rational(as_exponent(r2))],
        "jac_rank": jac.rank,
        "sh_dim": sh.dimension,
        "match": jac.rank == sh.dimension,
        "relation": str(jac.relation),
        "vanished_reason": jac.vanished_reason,
        "left_boundary_critical": as_exponent(r1) == jac.relation.critical_valuation,
    }
