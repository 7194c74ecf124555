"""Action-filtered cochain complexes: telescopes, quotients, completions and cones.

Conventions
-----------
Differentials raise degree by one and never lower action: a nonzero entry
``d[i][j]`` (coefficient of generator ``i`` in ``d(gen j)``) needs
``action[i] >= action[j]``. Generators with action ``> a`` span a subcomplex;
the quotient by it keeps the generators with action ``<= a``.

The telescope of a directed system ``C_0 -> C_1 -> ...`` has generators
``x`` and ``y q`` (``q`` of degree -1) with

    d(x) = d x,    d(y q) = (c - id)(y) - (d y) q.

Truncating at ``N`` keeps stages ``0..N-1`` and drops the q-copy of the last
stage, so the truncation is quasi-isomorphic to ``C_{N-1}``.

Coefficients are exact rationals.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence, Union

from . import qmatrix as qm
from .novikov import INF, as_exponent, as_fraction, format_rational


class ComplexError(ValueError):
    pass


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int
    action: Fraction


@dataclass(frozen=True)
class ValuedChainComplex:
    generators: tuple[Generator, ...]
    differential: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        n = len(self.generators)
        if len(self.differential) != n or any(len(r) != n for r in self.differential):
            raise ComplexError("differential must be square, indexed by the generators")
        names = [g.name for g in self.generators]
        if len(set(names)) != n:
            raise ComplexError("generator names must be unique")

    @classmethod
    def build(cls, generators: Iterable, entries: Iterable[tuple[str, str, object]] = (), check=True) -> "ValuedChainComplex":
        """From ``(name, degree, action)`` triples and ``(source, target, coefficient)`` entries."""
        gens = tuple(
            g if isinstance(g, Generator) else Generator(g[0], int(g[1]), as_fraction(g[2]))
            for g in generators
        )
        index = {g.name: i for i, g in enumerate(gens)}
        d = qm.zeros(len(gens), len(gens))
        for src, tgt, coeff in entries:
            try:
                d[index[tgt]][index[src]] += as_fraction(coeff)
            except KeyError as exc:
                raise ComplexError(f"unknown generator {exc.args[0]!r}") from None
        c = cls(gens, tuple(tuple(r) for r in d))
        if check:
            c.validate()
        return c

    @property
    def size(self) -> int:
        return len(self.generators)

    def index(self, name: str) -> int:
        return next(i for i, g in enumerate(self.generators) if g.name == name)

    def degrees(self) -> list[int]:
        return sorted({g.degree for g in self.generators})

    def indices_in_degree(self, d: int) -> list[int]:
        return [i for i, g in enumerate(self.generators) if g.degree == d]

    def matrix(self) -> qm.QMatrix:
        return [list(r) for r in self.differential]

    def block(self, rows: Sequence[int], cols: Sequence[int]) -> qm.QMatrix:
        return [[self.differential[i][j] for j in cols] for i in rows]

    # -- invariants -------------------------------------------------------

    def square_is_zero(self) -> bool:
        d = self.matrix()
        return qm.is_zero(qm.matmul(d, d, cols=self.size)) if self.size else True

    def violations(self) -> list[str]:
        out = []
        for i, gi in enumerate(self.generators):
            for j, gj in enumerate(self.generators):
                if self.differential[i][j] == 0:
                    continue
                if gi.degree != gj.degree + 1:
                    out.append(f"d({gj.name}) hits {gi.name} in degree {gi.degree}")
                if gi.action < gj.action:
                    out.append(f"d({gj.name}) lowers action to {gi.name}")
        if not self.square_is_zero():
            out.append("d^2 != 0")
        return out

    def is_action_increasing(self) -> bool:
        return all(
            self.generators[i].action >= self.generators[j].action
            for i in range(self.size)
            for j in range(self.size)
            if self.differential[i][j] != 0
        )

    def validate(self) -> None:
        bad = self.violations()
        if bad:
            raise ComplexError("; ".join(bad[:5]))

    # -- io ---------------------------------------------------------------

    def to_json(self) -> dict:
        entries = []
        for j, src in enumerate(self.generators):
            for i, tgt in enumerate(self.generators):
                c = self.differential[i][j]
                if c:
                    entries.append([src.name, tgt.name, format_rational(c)])
        return {
            "generators": [
                {"name": g.name, "degree": g.degree, "action": format_rational(g.action)}
                for g in self.generators
            ],
            "differential": entries,
        }

    @classmethod
    def from_json(cls, data: Union[str, dict]) -> "ValuedChainComplex":
        if isinstance(data, str):
            data = json.loads(data)
        gens = [(g["name"], g["degree"], g["action"]) for g in data["generators"]]
        return cls.build(gens, [tuple(e) for e in data.get("differential", [])])


# -- homology -----------------------------------------------------------------


@dataclass
class DegreeHomology:
    """Cohomology in one degree with explicit representatives."""

    degree: int
    indices: list[int]  # generator indices spanning this degree
    representatives: list[list[Fraction]]  # cocycles, coordinates over ``indices``
    boundaries: list[list[Fraction]]  # basis of the image, same coordinates

    @property
    def rank(self) -> int:
        return len(self.representatives)

    def coordinates(self, cocycle: Sequence[Fraction]) -> list[Fraction]:
        """Class of ``cocycle`` in the basis of ``representatives``."""
        if not self.representatives:
            return []
        basis = self.representatives + self.boundaries
        a = qm.transpose(basis)
        x = qm.solve(a, list(cocycle))
        if x is None:
            raise ComplexError("vector is not a cocycle")
        return x[: self.rank]


def _cocycles_and_boundaries(c: ValuedChainComplex, d: int):
    idx = c.indices_in_degree(d)
    up = c.indices_in_degree(d + 1)
    down = c.indices_in_degree(d - 1)
    z = qm.nullspace(c.block(up, idx), cols=len(idx)) if up else qm.nullspace([], cols=len(idx))
    b = qm.column_space(c.block(idx, down)) if down and idx else []
    return idx, z, b


def degree_homology(c: ValuedChainComplex, d: int) -> DegreeHomology:
    idx, z, b = _cocycles_and_boundaries(c, d)
    reps = qm.complement_basis(b, z)
    return DegreeHomology(d, idx, reps, b)


def homology(c: ValuedChainComplex) -> dict[int, int]:
    """Rank of ``ker d / im d`` per degree."""
    bad = c.violations()
    if any("d^2" in v for v in bad):
        raise ComplexError("differential does not square to zero")
    out = {}
    for d in c.degrees():
        idx, z, b = _cocycles_and_boundaries(c, d)
        out[d] = len(z) - len(b)
    return out


def total_rank(ranks: dict[int, int]) -> int:
    return sum(ranks.values())


def euler_characteristic(ranks: dict[int, int]) -> int:
    return sum((-1) ** (d % 2) * r for d, r in ranks.items())


# -- chain maps -----------------------------------------------------------------


def check_chain_map(f: Sequence[Sequence[Fraction]], source: ValuedChainComplex, target: ValuedChainComplex, action_increasing=True) -> list[str]:
    """Problems with ``f`` (rows indexed by target generators) as a filtered chain map."""
    out = []
    if len(f) != target.size or any(len(r) != source.size for r in f):
        return [f"map has shape {len(f)}x{len(f[0]) if f else 0}, expected {target.size}x{source.size}"]
    for i, gt in enumerate(target.generators):
        for j, gs in enumerate(source.generators):
            if f[i][j] == 0:
                continue
            if gt.degree != gs.degree:
                out.append(f"{gs.name} -> {gt.name} changes degree")
            if action_increasing and gt.action < gs.action:
                out.append(f"{gs.name} -> {gt.name} lowers action")
    fm = [list(r) for r in f]
    lhs = qm.matmul(fm, source.matrix(), inner=source.size, cols=source.size)
    rhs = qm.matmul(target.matrix(), fm, inner=target.size, cols=source.size)
    if lhs != rhs:
        out.append("f does not commute with the differentials")
    return out


def induced_map(f, source: ValuedChainComplex, target: ValuedChainComplex, d: int) -> list[list[Fraction]]:
    """Matrix of ``H^d(f)`` in the representative bases of :func:`degree_homology`."""
    hs = degree_homology(source, d)
    ht = degree_homology(target, d)
    cols = []
    for rep in hs.representatives:
        full = [Fraction(0)] * source.size
        for k, i in enumerate(hs.indices):
            full[i] = rep[k]
        image = qm.matvec([list(r) for r in f], full)
        cols.append(ht.coordinates([image[i] for i in ht.indices]))
    return qm.transpose(cols, cols=ht.rank) if cols else [[] for _ in range(ht.rank)]


# -- telescopes -------------------------------------------------------------------


@dataclass(frozen=True)
class TelescopeComplex:
    stages: tuple[ValuedChainComplex, ...]
    continuations: tuple[tuple[tuple[Fraction, ...], ...], ...]  # stage n -> n+1
    q_shift: Fraction = Fraction(0)

    def __post_init__(self):
        if len(self.continuations) != max(len(self.stages) - 1, 0):
            raise ComplexError("need one continuation between consecutive stages")
        for n, c in enumerate(self.continuations):
            bad = check_chain_map(c, self.stages[n], self.stages[n + 1])
            if bad:
                raise ComplexError(f"continuation {n} -> {n + 1}: {bad[0]}")

    @classmethod
    def single(cls, stage: ValuedChainComplex) -> "TelescopeComplex":
        return cls((stage,), ())

    def new_generator_horizon(self, n: int):
        """Least action among generators of stage ``n`` outside the image of the previous continuation."""
        if n >= len(self.stages):
            raise ComplexError(f"stage {n} not available")
        stage = self.stages[n]
        if n == 0:
            hit = set()
        else:
            c = self.continuations[n - 1]
            hit = {i for i in range(stage.size) if any(c[i])}
        fresh = [g.action for i, g in enumerate(stage.generators) if i not in hit]
        return min(fresh) if fresh else INF


def build_telescope(t: TelescopeComplex, n_stages: int) -> ValuedChainComplex:
    if n_stages < 1:
        raise ComplexError("truncation must keep at least one stage")
    if n_stages > len(t.stages):
        raise ComplexError(f"only {len(t.stages)} stages available")
    gens: list[Generator] = []
    x_off: list[int] = []
    for n in range(n_stages):
        x_off.append(len(gens))
        gens += [Generator(f"{g.name}@{n}", g.degree, g.action) for g in t.stages[n].generators]
    q_off: list[int] = []
    for n in range(n_stages - 1):
        q_off.append(len(gens))
        gens += [
            Generator(f"{g.name}@{n}.q", g.degree - 1, g.action + t.q_shift)
            for g in t.stages[n].generators
        ]
    size = len(gens)
    d = qm.zeros(size, size)
    for n in range(n_stages):
        s = t.stages[n]
        o = x_off[n]
        for i in range(s.size):
            for j in range(s.size):
                if s.differential[i][j]:
                    d[o + i][o + j] = s.differential[i][j]
    for n in range(n_stages - 1):
        s = t.stages[n]
        nxt = t.stages[n + 1]
        c = t.continuations[n]
        qo, xo, xn = q_off[n], x_off[n], x_off[n + 1]
        for j in range(s.size):
            for i in range(nxt.size):
                if c[i][j]:
                    d[xn + i][qo + j] += c[i][j]
            d[xo + j][qo + j] -= 1
            for i in range(s.size):
                if s.differential[i][j]:
                    d[qo + i][qo + j] -= s.differential[i][j]
    tel = ValuedChainComplex(tuple(gens), tuple(tuple(r) for r in d))
    tel.validate()
    return tel


# -- filtration -------------------------------------------------------------------


def action_quotient(c: ValuedChainComplex, a) -> ValuedChainComplex:
    """Quotient by the subcomplex spanned by generators of action ``> a``."""
    a = as_exponent(a)
    keep = [i for i, g in enumerate(c.generators) if g.action <= a]
    return _restrict(c, keep)


def action_subcomplex(c: ValuedChainComplex, a) -> ValuedChainComplex:
    """Subcomplex spanned by generators of action ``> a``."""
    a = as_exponent(a)
    keep = [i for i, g in enumerate(c.generators) if g.action > a]
    return _restrict(c, keep)


def _restrict(c: ValuedChainComplex, keep: list[int]) -> ValuedChainComplex:
    gens = tuple(c.generators[i] for i in keep)
    d = tuple(tuple(c.differential[i][j] for j in keep) for i in keep)
    return ValuedChainComplex(gens, d)


# -- inverse limits ---------------------------------------------------------------


@dataclass
class InverseSystem:
    """Tower ``V_1 <- V_2 <- ... <- V_K`` of finite-dimensional spaces.

    ``maps[i]`` is the matrix of ``V_{i+1} -> V_i`` (``dims[i]`` rows).
    """

    dims: list[int]
    maps: list[list[list[Fraction]]]

    def __post_init__(self):
        if len(self.maps) != max(len(self.dims) - 1, 0):
            raise ValueError("need one map per consecutive pair")

    def _difference_map(self) -> qm.QMatrix:
        # (v_i) -> (v_i - pi_i v_{i+1}) for i < K
        offs = [0]
        for dim in self.dims:
            offs.append(offs[-1] + dim)
        rows = offs[-2] if self.dims else 0
        cols = offs[-1]
        a = qm.zeros(rows, cols)
        for i in range(len(self.dims) - 1):
            for r in range(self.dims[i]):
                a[offs[i] + r][offs[i] + r] += 1
                for s in range(self.dims[i + 1]):
                    a[offs[i] + r][offs[i + 1] + s] -= self.maps[i][r][s]
        return a

    def limit_rank(self) -> int:
        a = self._difference_map()
        cols = sum(self.dims)
        if not a:
            return cols
        return cols - qm.rank(a)

    def lim1_rank(self) -> int:
        a = self._difference_map()
        if not a:
            return 0
        return len(a) - qm.rank(a)

    def image_rank(self, j: int, i: int) -> int:
        """Rank of the composite ``V_j -> V_i`` (``j >= i``, 0-based)."""
        if self.dims[i] == 0 or self.dims[j] == 0:
            return 0
        m = qm.identity(self.dims[j])
        for t in range(j - 1, i - 1, -1):
            m = qm.matmul(self.maps[t], m, inner=self.dims[t + 1], cols=self.dims[j])
        return qm.rank(m)

    def mittag_leffler(self) -> bool:
        """Images into each ``V_i`` stop shrinking before the top of the tower."""
        k = len(self.dims)
        for i in range(k - 2):
            if self.image_rank(k - 1, i) != self.image_rank(k - 2, i):
                return False
        return True


@dataclass
class CohomologyReport:
    reduced_ranks: dict[int, int] = field(default_factory=dict)
    completed_ranks: dict[int, int] = field(default_factory=dict)
    lim1_ranks: dict[int, int] = field(default_factory=dict)
    lim1_vanishes: bool = True
    mittag_leffler: bool = True
    stabilized_at: Optional[int] = None
    cutoffs: list = field(default_factory=list)
    truncation: Optional[int] = None

    @property
    def reduced(self) -> int:
        return total_rank(self.reduced_ranks)

    @property
    def completed(self) -> int:
        return total_rank(self.completed_ranks)

    def to_json(self) -> dict:
        def ranks(r):
            return {str(d): v for d, v in sorted(r.items())}

        return {
            "truncation": self.truncation,
            "cutoffs": [format_rational(a) for a in self.cutoffs],
            "reduced": self.reduced,
            "completed": self.completed,
            "reduced_ranks": ranks(self.reduced_ranks),
            "completed_ranks": ranks(self.completed_ranks),
            "lim1_ranks": ranks(self.lim1_ranks),
            "lim1_vanishes": self.lim1_vanishes,
            "mittag_leffler": self.mittag_leffler,
            "stabilized_at": self.stabilized_at,
        }


def _stabilization_index(seq: list) -> int:
    i = len(seq) - 1
    while i > 0 and seq[i - 1] == seq[-1]:
        i -= 1
    return i


def inverse_system(c: ValuedChainComplex, cutoffs: Sequence, degree: int) -> InverseSystem:
    """Tower of ``H^degree`` of the action quotients at increasing cutoffs."""
    quotients = [action_quotient(c, a) for a in cutoffs]
    homs = [degree_homology(q, degree) for q in quotients]
    maps = []
    for i in range(len(cutoffs) - 1):
        hi, lo = homs[i + 1], homs[i]
        upper, lower = quotients[i + 1], quotients[i]
        pos = {g.name: k for k, g in enumerate(lower.generators)}
        cols = []
        for rep in hi.representatives:
            vec = [Fraction(0)] * len(lo.indices)
            lo_pos = {idx: k for k, idx in enumerate(lo.indices)}
            for k, idx in enumerate(hi.indices):
                name = upper.generators[idx].name
                if name in pos and pos[name] in lo_pos:
                    vec[lo_pos[pos[name]]] = rep[k]
            cols.append(lo.coordinates(vec))
        maps.append(qm.transpose(cols, cols=lo.rank) if cols else [[] for _ in range(lo.rank)])
    return InverseSystem([h.rank for h in homs], maps)


def completed_of_complex(c: ValuedChainComplex, cutoffs: Sequence) -> CohomologyReport:
    cutoffs = [as_exponent(a) for a in cutoffs]
    if not cutoffs or any(b <= a for a, b in zip(cutoffs, cutoffs[1:])):
        raise ComplexError("cutoffs must be non-empty and strictly increasing")
    report = CohomologyReport(cutoffs=cutoffs)
    per_cutoff = []
    for d in c.degrees():
        system = inverse_system(c, cutoffs, d)
        report.completed_ranks[d] = system.limit_rank()
        report.lim1_ranks[d] = system.lim1_rank()
        report.mittag_leffler &= system.mittag_leffler()
        per_cutoff.append(system.dims)
    report.lim1_vanishes = all(v == 0 for v in report.lim1_ranks.values())
    profile = [tuple(dims[i] for dims in per_cutoff) for i in range(len(cutoffs))]
    report.stabilized_at = _stabilization_index(profile)
    return report


def completed_cohomology(t: TelescopeComplex, cutoffs: Sequence, n_stages: int) -> CohomologyReport:
    """Inverse limit over ``cutoffs`` of the action-quotient cohomologies of the truncated telescope."""
    report = completed_of_complex(build_telescope(t, n_stages), cutoffs)
    report.truncation = n_stages
    return report


def reduced_ranks(c: ValuedChainComplex, a) -> dict[int, int]:
    """``ker d`` modulo ``im d`` plus the cocycles of action ``> a``.

    At finite truncation this models the completed kernel modulo the
    closure of the image: cocycles of action above the cutoff are treated
    as limits of boundaries.
    """
    a = as_exponent(a)
    out = {}
    for d in c.degrees():
        idx, z, b = _cocycles_and_boundaries(c, d)
        high = [k for k, i in enumerate(idx) if c.generators[i].action > a]
        up = c.indices_in_degree(d + 1)
        high_cocycles = []
        if high:
            sub = [[c.differential[i][idx[k]] for k in high] for i in up]
            for v in qm.nullspace(sub, cols=len(high)):
                full = [Fraction(0)] * len(idx)
                for k, x in zip(high, v):
                    full[k] = x
                high_cocycles.append(full)
        out[d] = len(z) - qm.span_rank(b + high_cocycles)
    return out


def reduced_cohomology(t: TelescopeComplex, n_stages: int, cutoff: Union[None, object, Callable[[int], object]] = None) -> CohomologyReport:
    """Reduced ranks at truncations ``1..n_stages``; the last one is reported.

    ``cutoff`` is an action level or a function of the truncation; by default
    it sits above every action, which gives plain cohomology.
    """
    history = []
    ranks: dict[int, int] = {}
    for n in range(1, n_stages + 1):
        tel = build_telescope(t, n)
        if cutoff is None:
            a = max((g.action for g in tel.generators), default=0) + 1
        elif callable(cutoff):
            a = cutoff(n)
        else:
            a = cutoff
        ranks = reduced_ranks(tel, a)
        history.append(tuple(sorted(ranks.items())))
    return CohomologyReport(reduced_ranks=ranks, stabilized_at=_stabilization_index(history) + 1, truncation=n_stages)


# -- mapping cones ----------------------------------------------------------------


def mapping_cone(f, source: ValuedChainComplex, target: ValuedChainComplex) -> ValuedChainComplex:
    """``Cone(f)^d = source^(d+1) + target^d`` with ``d(a, b) = (-d a, f a + d b)``."""
    bad = check_chain_map(f, source, target)
    if bad:
        raise ComplexError(f"not a filtered chain map: {bad[0]}")
    ns, nt = source.size, target.size
    gens = [Generator(f"{g.name}[1]", g.degree - 1, g.action) for g in source.generators]
    gens += [Generator(g.name if not g.name.endswith("[1]") else g.name + "'", g.degree, g.action) for g in target.generators]
    names = [g.name for g in gens]
    if len(set(names)) != len(names):
        gens = [Generator(f"s:{g.name}", g.degree, g.action) for g in gens[:ns]] + [
            Generator(f"t:{g.name}", g.degree, g.action) for g in gens[ns:]
        ]
    d = qm.zeros(ns + nt, ns + nt)
    for i in range(ns):
        for j in range(ns):
            d[i][j] = -source.differential[i][j]
    for i in range(nt):
        for j in range(ns):
            d[ns + i][j] = Fraction(f[i][j])
        for j in range(nt):
            d[ns + i][ns + j] = target.differential[i][j]
    cone = ValuedChainComplex(tuple(gens), tuple(tuple(r) for r in d))
    cone.validate()
    return cone


def long_exact_sequence_ranks(f, source: ValuedChainComplex, target: ValuedChainComplex) -> dict[int, int]:
    """``dim coker H^d(f) + dim ker H^(d+1)(f)``: what exactness forces on ``H^d(Cone f)``."""
    degrees = set(source.degrees()) | set(target.degrees())
    degrees |= {d - 1 for d in source.degrees()}

    def hrank(c, d):
        return degree_homology(c, d).rank if c.indices_in_degree(d) else 0

    def frank(d):
        if not source.indices_in_degree(d) or not target.indices_in_degree(d):
            return 0
        m = induced_map(f, source, target, d)
        return qm.rank(m) if m and m[0] else 0

    out = {}
    for d in sorted(degrees):
        coker = hrank(target, d) - frank(d)
        ker = hrank(source, d + 1) - frank(d + 1)
        out[d] = coker + ker
    return out


# -- the Morse counterexample ---------------------------------------------------


def morse_stage(n: int) -> ValuedChainComplex:
    """Staircase Morse complex: minima ``m_i`` at height ``i``, maxima ``M_i`` at ``i + 1``.

    ``d m_i = M_i - M_(i-1)``, so every stage is acyclic, and stage ``n`` is a
    subcomplex of stage ``n + 1``. The minimal value climbs without bound
    along the family.
    """
    gens = [(f"m{i}", 0, i) for i in range(n + 1)] + [(f"M{i}", 1, i + 1) for i in range(n + 1)]
    entries = []
    for i in range(n + 1):
        entries.append((f"m{i}", f"M{i}", 1))
        if i:
            entries.append((f"m{i}", f"M{i - 1}", -1))
    return ValuedChainComplex.build(gens, entries)


def morse_family(n_stages: int) -> TelescopeComplex:
    stages = tuple(morse_stage(n) for n in range(n_stages))
    conts = []
    for n in range(n_stages - 1):
        src, tgt = stages[n], stages[n + 1]
        c = qm.zeros(tgt.size, src.size)
        for j, g in enumerate(src.generators):
            c[tgt.index(g.name)][j] = Fraction(1)
        conts.append(tuple(tuple(r) for r in c))
    return TelescopeComplex(stages, tuple(conts))


@dataclass
class MorseDemo:
    family: CohomologyReport
    stages: list[CohomologyReport]

    @property
    def reduced(self) -> int:
        return self.family.reduced

    @property
    def completed(self) -> int:
        return self.family.completed

    def to_json(self) -> dict:
        return {
            "stages": self.family.truncation,
            "reduced": self.reduced,
            "completed": self.completed,
            "lim1_vanishes": self.family.lim1_vanishes,
            "mittag_leffler": self.family.mittag_leffler,
            "stabilized_at": self.family.stabilized_at,
            "family": self.family.to_json(),
            "single_stages": [
                {"stage": n, "reduced": r.reduced, "completed": r.completed}
                for n, r in enumerate(self.stages)
            ],
        }


def morse_demo(n_stages: int) -> MorseDemo:
    """Reduced and completed cohomology of the Morse telescope truncated at ``n_stages``.

    Cutoffs run in half-steps below the action of the first generator that the
    truncation has not seen yet, where every action quotient is already exact.
    """
    if n_stages < 2:
        raise ComplexError("the Morse demo needs at least two stages")
    family = morse_family(n_stages + 1)
    horizon = family.new_generator_horizon(n_stages)
    cutoffs = [Fraction(j, 2) for j in range(0, 2 * int(horizon)) if Fraction(j, 2) < horizon]
    completed = completed_cohomology(family, cutoffs, n_stages)
    reduced = reduced_cohomology(family, n_stages, cutoff=lambda n: cutoffs[-1])
    completed.reduced_ranks = reduced.reduced_ranks
    singles = []
    for n in range(n_stages):
        stage = TelescopeComplex.single(family.stages[n])
        top = max(g.action for g in stage.stages[0].generators)
        stage_cutoffs = [Fraction(j, 2) for j in range(0, 2 * int(top) + 3)]
        rep = completed_cohomology(stage, stage_cutoffs, 1)
        rep.reduced_ranks = reduced_cohomology(stage, 1).reduced_ranks
        singles.append(rep)
    return MorseDemo(completed, singles)
