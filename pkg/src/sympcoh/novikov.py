"""Truncated series over the universal Novikov field with exact rational data.

A :class:`NovikovSeries` is a finite sum ``sum c_i T^{a_i}`` with rational
exponents and coefficients, plus a precision ``P``: every term with exponent
``>= P`` is unknown.  ``P = inf`` marks an exact element.

The valuation ``ev`` is the least exponent of a nonzero term; the norm is
``exp(-ev)``.
"""

from __future__ import annotations

import math
import os
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Mapping, Union

INF = math.inf

Rational = Union[int, Fraction]
Exponent = Union[Fraction, float]  # float only ever holds +inf

DEFAULT_PRECISION = Fraction(16)


class IndeterminateValuation(ArithmeticError):
    """The series is zero up to its precision but not provably zero."""


def default_precision() -> Fraction:
    """Working precision, overridable through ``NOVIKOV_PRECISION``."""
    raw = os.environ.get("NOVIKOV_PRECISION")
    if raw is None or not raw.strip():
        return DEFAULT_PRECISION
    return Fraction(raw.strip())


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def as_exponent(x) -> Exponent:
    """Exact rational or +inf (accepts "inf")."""
    if isinstance(x, float):
        if x == INF:
            return INF
        raise TypeError("floating point exponents are not allowed")
    if isinstance(x, str) and x.strip().lower() in ("inf", "+inf", "infinity"):
        return INF
    return as_fraction(x)


def format_rational(x) -> str:
    """Render an exact rational (or +inf) as ``"p/q"``, ``"p"`` or ``"inf"``."""
    if x == INF:
        return "inf"
    x = as_fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _add_exp(a: Exponent, b: Exponent) -> Exponent:
    # the only float exponent is +inf
    if isinstance(a, float) or isinstance(b, float):
        return INF
    return a + b


@dataclass(frozen=True)
class NovikovSeries:
    """Element of the Novikov field known up to ``O(T^precision)``.

    Use :meth:`from_terms` to build one; the constructor expects canonical
    data (strictly increasing exponents, nonzero coefficients, all below the
    precision).
    """

    terms: tuple[tuple[Fraction, Fraction], ...] = ()
    precision: Exponent = INF

    def __post_init__(self):
        prev = None
        for e, c in self.terms:
            if not isinstance(e, Fraction) or not isinstance(c, Fraction):
                raise TypeError("terms must hold Fractions")
            if c == 0:
                raise ValueError("zero coefficient stored as a term")
            if prev is not None and e <= prev:
                raise ValueError("exponents must be strictly increasing")
            if e >= self.precision:
                raise ValueError("term at or beyond the precision")
            prev = e

    # -- construction -----------------------------------------------------

    @classmethod
    def from_terms(cls, terms: Iterable[tuple] | Mapping, precision=INF) -> "NovikovSeries":
        """Canonicalize ``(exponent, coefficient)`` pairs: merge, drop zeros, truncate."""
        precision = as_exponent(precision)
        if isinstance(terms, Mapping):
            terms = terms.items()
        acc: dict[Fraction, Fraction] = {}
        for e, c in terms:
            e = as_fraction(e)
            c = as_fraction(c)
            if e >= precision:
                continue
            acc[e] = acc.get(e, Fraction(0)) + c
        canon = tuple(sorted((e, c) for e, c in acc.items() if c != 0))
        return cls(canon, precision)

    @classmethod
    def zero(cls, precision=INF) -> "NovikovSeries":
        return cls((), as_exponent(precision))

    @classmethod
    def constant(cls, c, precision=INF) -> "NovikovSeries":
        return cls.from_terms([(0, c)], precision)

    @classmethod
    def monomial(cls, exponent, coefficient=1, precision=INF) -> "NovikovSeries":
        return cls.from_terms([(exponent, coefficient)], precision)

    @classmethod
    def coerce(cls, x) -> "NovikovSeries":
        if isinstance(x, NovikovSeries):
            return x
        if isinstance(x, str):
            return parse(x)
        return cls.constant(x)

    # -- queries ------------------------------------------------------------

    @property
    def is_exact(self) -> bool:
        return self.precision == INF

    def is_zero(self) -> bool:
        """True when no term is known to be nonzero (may still be indeterminate)."""
        return not self.terms

    def coefficient(self, exponent) -> Fraction:
        e = as_fraction(exponent)
        if e >= self.precision:
            raise IndeterminateValuation(f"coefficient of T^{e} lies beyond the precision")
        for te, tc in self.terms:
            if te == e:
                return tc
        return Fraction(0)

    def lower_bound(self) -> Exponent:
        """Least exponent that can carry a nonzero term (ev, or the precision when unknown)."""
        return self.terms[0][0] if self.terms else self.precision

    def leading_term(self) -> tuple[Fraction, Fraction]:
        if not self.terms:
            raise IndeterminateValuation("series has no known nonzero term")
        return self.terms[0]

    def truncate(self, precision) -> "NovikovSeries":
        precision = min(self.precision, as_exponent(precision))
        return NovikovSeries(tuple(t for t in self.terms if t[0] < precision), precision)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _maybe_coerce(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return NovikovSeries(tuple((e, -c) for e, c in self.terms), self.precision)

    def __sub__(self, other):
        other = _maybe_coerce(other)
        if other is NotImplemented:
            return other
        return add(self, -other)

    def __rsub__(self, other):
        other = _maybe_coerce(other)
        if other is NotImplemented:
            return other
        return add(other, -self)

    def __mul__(self, other):
        other = _maybe_coerce(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return invert(self) ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = mul(result, base)
            base = mul(base, base)
            n >>= 1
        return result

    def scale_exponents(self, factor) -> "NovikovSeries":
        """Substitute ``T -> T^factor`` for a positive rational ``factor``."""
        factor = as_fraction(factor)
        if factor <= 0:
            raise ValueError("exponent scaling factor must be positive")
        return NovikovSeries(
            tuple((e * factor, c) for e, c in self.terms),
            self.precision if self.precision == INF else self.precision * factor,
        )

    def specialize_zero(self) -> Fraction:
        """Value at ``T = 0`` of a series with only non-negative exponents."""
        if self.terms and self.terms[0][0] < 0:
            raise ValueError("series has negative exponents")
        if self.precision <= 0:
            raise IndeterminateValuation("constant term lies beyond the precision")
        return self.coefficient(0)

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"NovikovSeries({render(self)!r})"


def _maybe_coerce(x):
    if isinstance(x, NovikovSeries):
        return x
    if isinstance(x, (int, Fraction)):
        return NovikovSeries.constant(x)
    return NotImplemented


ZERO = NovikovSeries()
ONE = NovikovSeries.constant(1)
T = NovikovSeries.monomial(1)


def _canonical(acc: dict, precision) -> NovikovSeries:
    # acc maps Fraction exponents below the precision to Fraction coefficients;
    # skips the constructor checks, which dominate the cost of long products
    out = object.__new__(NovikovSeries)
    object.__setattr__(out, "terms", tuple(sorted((e, c) for e, c in acc.items() if c)))
    object.__setattr__(out, "precision", precision)
    return out


def add(a: NovikovSeries, b: NovikovSeries) -> NovikovSeries:
    precision = min(a.precision, b.precision)
    if not b.terms and precision == a.precision:
        return a
    if not a.terms and precision == b.precision:
        return b
    exact = isinstance(precision, float)
    acc = {e: c for e, c in a.terms if exact or e < precision}
    for e, c in b.terms:
        if exact or e < precision:
            acc[e] = acc[e] + c if e in acc else c
    return _canonical(acc, precision)


def linear_combination(pairs: Iterable[tuple[Rational, NovikovSeries]]) -> NovikovSeries:
    """``sum c_i a_i`` for rational ``c_i``; zero weights do not limit the precision."""
    precision = INF
    acc: dict[Fraction, Fraction] = {}
    for c, a in pairs:
        if not c:
            continue
        precision = min(precision, a.precision)
        for e, x in a.terms:
            acc[e] = acc[e] + c * x if e in acc else c * x
    if precision != INF:
        acc = {e: x for e, x in acc.items() if e < precision}
    return _canonical(acc, precision)


def dot(pairs: Iterable[tuple[NovikovSeries, NovikovSeries]]) -> NovikovSeries:
    """``sum a_i b_i`` accumulated in one pass; same precision as the chained form."""
    precision: Exponent = INF
    acc: dict[Fraction, Fraction] = {}
    for a, b in pairs:
        p = min(_add_exp(a.lower_bound(), b.precision), _add_exp(b.lower_bound(), a.precision))
        if p < precision:
            precision = p
        for ea, ca in a.terms:
            for eb, cb in b.terms:
                e = ea + eb
                acc[e] = acc[e] + ca * cb if e in acc else ca * cb
    if not isinstance(precision, float):
        acc = {e: x for e, x in acc.items() if e < precision}
    return _canonical(acc, precision)


def mul(a: NovikovSeries, b: NovikovSeries) -> NovikovSeries:
    """Cauchy product, known up to ``min(ev(a) + P(b), ev(b) + P(a))``."""
    precision = min(_add_exp(a.lower_bound(), b.precision), _add_exp(b.lower_bound(), a.precision))
    if not a.terms or not b.terms:
        return NovikovSeries((), precision)
    acc: dict[Fraction, Fraction] = {}
    exact = isinstance(precision, float)
    for ea, ca in a.terms:
        for eb, cb in b.terms:
            e = ea + eb
            if exact or e < precision:
                acc[e] = acc[e] + ca * cb if e in acc else ca * cb
    return _canonical(acc, precision)


def valuation(a: NovikovSeries) -> Exponent:
    """``ev(a)``: least exponent of a nonzero term, ``inf`` for zero.

    Raises:
        IndeterminateValuation: if no term is known but the precision is finite.
    """
    if a.terms:
        return a.terms[0][0]
    if a.precision == INF:
        return INF
    raise IndeterminateValuation(f"series is O(T^{format_rational(a.precision)}); valuation unknown")


def invert(a: NovikovSeries, target_precision=None) -> NovikovSeries:
    """Multiplicative inverse known up to ``O(T^target_precision)``.

    Writes ``a = c T^e (1 + u)`` with ``ev(u) > 0`` and inverts ``1 + u`` by
    Newton iteration. A monomial with exact precision inverts exactly.
    """
    if target_precision is None:
        target_precision = default_precision()
    target_precision = as_exponent(target_precision)
    if not a.terms:
        if a.is_exact:
            raise ZeroDivisionError("inverse of the zero series")
        raise IndeterminateValuation("cannot invert a series that is zero up to its precision")
    e, c = a.terms[0]
    inv_c = 1 / c
    if len(a.terms) == 1 and a.is_exact:
        return NovikovSeries.monomial(-e, inv_c)
    # a = c T^e (1 + u); u known up to O(T^(P - e)).
    u = NovikovSeries(tuple((te - e, tc * inv_c) for te, tc in a.terms[1:]), _add_exp(a.precision, -e))
    # the inverse of 1 + u is known up to u's precision; after the T^-e shift
    # this becomes P(a) - 2e.
    rel_precision = min(_add_exp(target_precision, e), u.precision)
    if rel_precision == INF:
        raise ValueError("target precision must be finite for a non-monomial inverse")
    b = add(ONE, u).truncate(rel_precision)
    if rel_precision <= 0:
        result = NovikovSeries.zero(rel_precision)
    elif len(b.terms) == 1:
        result = NovikovSeries.constant(1, rel_precision)
    else:
        # Newton step x <- x (2 - b x) doubles the number of correct exponents
        known = b.terms[1][0]
        result = NovikovSeries.constant(1, known)
        two = NovikovSeries.constant(2)
        while known < rel_precision:
            known = min(2 * known, rel_precision)
            x = result.truncate(known)
            x = NovikovSeries(x.terms, known)
            bx = mul(b.truncate(known), x)
            result = mul(x, add(two, -bx)).truncate(known)
            result = NovikovSeries(result.terms, known)
    shifted = NovikovSeries(
        tuple((te - e, tc * inv_c) for te, tc in result.terms),
        rel_precision - e,
    )
    return shifted


@total_ordering
@dataclass(frozen=True)
class Norm:
    """The magnitude ``exp(-ev)`` kept as its exact exponent; ``ev = inf`` is the zero norm."""

    ev: Exponent

    def __lt__(self, other: "Norm"):
        return self.ev > other.ev

    def __float__(self):
        return 0.0 if self.ev == INF else math.exp(-float(self.ev))

    def __str__(self):
        return "0" if self.ev == INF else f"exp(-({format_rational(self.ev)}))"


UNIT_NORM = Norm(Fraction(0))


def norm(a: NovikovSeries) -> Norm:
    return Norm(valuation(a))


# -- text form --------------------------------------------------------------


def _render_exp(e: Fraction) -> str:
    if e == 1:
        return "T"
    if e.denominator == 1 and e > 0:
        return f"T^{e.numerator}"
    return f"T^({format_rational(e)})"


def render(a: NovikovSeries) -> str:
    """Text form ``c*T^(p/q) + ... + O(T^(r/s))``; :func:`parse` inverts it exactly."""
    parts: list[str] = []
    for e, c in a.terms:
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if e == 0:
            body = format_rational(mag)
        elif mag == 1:
            body = _render_exp(e)
        else:
            body = f"{format_rational(mag)}*{_render_exp(e)}"
        parts.append((sign, body))
    if a.precision != INF:
        parts.append(("+", f"O({_render_exp(a.precision)})"))
    if not parts:
        return "0"
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


_NUM = r"\d+(?:/\d+)?"
_EXP = r"T(?:\^(?:\((?P<pexp>-?" + _NUM + r")\)|(?P<iexp>" + _NUM + r")))?"
_TERM_RE = re.compile(
    r"^(?:(?P<coef>" + _NUM + r")(?:\s*\*\s*(?P<t1>" + _EXP.replace("pexp", "pexp1").replace("iexp", "iexp1") + r"))?"
    r"|(?P<t2>" + _EXP.replace("pexp", "pexp2").replace("iexp", "iexp2") + r"))$"
)
_O_RE = re.compile(r"^O\(\s*(?P<t>" + _EXP + r")\s*\)$")


def _exp_value(m: re.Match, suffix: str = "") -> Fraction:
    p = m.group("pexp" + suffix)
    i = m.group("iexp" + suffix)
    if p is not None:
        return Fraction(p)
    if i is not None:
        return Fraction(i)
    return Fraction(1)


def _split_signed(text: str) -> list[tuple[str, str]]:
    """Split on top-level ``+``/``-`` (signs inside parentheses belong to exponents)."""
    out: list[tuple[str, str]] = []
    depth = 0
    sign = "+"
    buf = ""
    text = text.strip()
    i = 0
    if text[:1] in "+-":
        sign = text[0]
        i = 1
    while i < len(text):
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in "+-" and depth == 0:
            out.append((sign, buf.strip()))
            sign = ch
            buf = ""
        else:
            buf += ch
        i += 1
    out.append((sign, buf.strip()))
    return out


def parse(text: str) -> NovikovSeries:
    """Parse the grammar produced by :func:`render`.

    Accepts ``c``, ``c*T``, ``c*T^n``, ``c*T^(p/q)``, ``T^(p/q)`` and a
    trailing ``O(T^(r/s))``; terms are joined by ``+`` or ``-``.
    """
    text = text.strip()
    if not text:
        raise ValueError("empty series text")
    if text == "0":
        return ZERO
    terms: list[tuple[Fraction, Fraction]] = []
    precision: Exponent = INF
    for sign, body in _split_signed(text):
        if not body:
            raise ValueError(f"malformed series: {text!r}")
        om = _O_RE.match(body)
        if om:
            if sign != "+":
                raise ValueError("precision marker must be added")
            inner = re.match(_EXP, om.group("t"))
            precision = min(precision, _exp_value(inner))
            continue
        tm = _TERM_RE.match(body)
        if not tm:
            raise ValueError(f"malformed term {body!r} in {text!r}")
        if tm.group("coef") is not None:
            coef = Fraction(tm.group("coef"))
            exp = _exp_value(tm, "1") if tm.group("t1") else Fraction(0)
        else:
            coef = Fraction(1)
            exp = _exp_value(tm, "2")
        terms.append((exp, -coef if sign == "-" else coef))
    return NovikovSeries.from_terms(terms, precision)
