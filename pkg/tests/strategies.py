"""Hypothesis strategies and seeded generators shared by the tests."""

import random
from fractions import Fraction

from hypothesis import strategies as st

from sympcoh import qmatrix as qm
from sympcoh.complexes import ValuedChainComplex
from sympcoh.novikov import INF, NovikovSeries

exponents = st.builds(Fraction, st.integers(-6, 24), st.integers(1, 4))
coefficients = st.builds(Fraction, st.integers(-9, 9).filter(bool), st.integers(1, 5))
finite_precisions = st.builds(Fraction, st.integers(24, 60), st.integers(1, 3))
precisions = st.one_of(st.just(INF), finite_precisions)


@st.composite
def series(draw, nonzero=False, exact=None, max_terms=5):
    terms = draw(st.lists(st.tuples(exponents, coefficients), min_size=1 if nonzero else 0, max_size=max_terms))
    if exact is True:
        prec = INF
    elif exact is False:
        prec = draw(finite_precisions)
    else:
        prec = draw(precisions)
    s = NovikovSeries.from_terms(terms, prec)
    if nonzero and not s.terms:
        s = NovikovSeries.from_terms([(0, 1)], prec)
    return s


def random_series(rng: random.Random, nonzero=False, exact=False, max_terms=4) -> NovikovSeries:
    n = rng.randint(1 if nonzero else 0, max_terms)
    terms = [
        (Fraction(rng.randint(-6, 24), rng.randint(1, 4)), Fraction(rng.choice([-3, -2, -1, 1, 2, 3, 5]), rng.randint(1, 3)))
        for _ in range(n)
    ]
    prec = INF if exact or rng.random() < 0.3 else Fraction(rng.randint(24, 60), rng.randint(1, 3))
    s = NovikovSeries.from_terms(terms, prec)
    if nonzero and not s.terms:
        return NovikovSeries.from_terms([(rng.randint(-2, 4), 1)], prec)
    return s


def unimodular(rng: random.Random, n: int, steps: int = 6):
    """Random integer matrix of determinant +-1 (product of elementary moves)."""
    p = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i == j:
            continue
        c = rng.choice([-2, -1, 1, 2])
        for r in range(n):
            p[r][j] += c * p[r][i]
    return p


def random_complex(rng, max_per_degree=3):
    """A random action-filtered complex built as ``P^-1 D P`` from a split model.

    The split model pairs generators ``a -> b`` with ``b`` of higher action, and
    the change of basis is triangular with respect to action, so both
    ``d^2 = 0`` and the filtration are preserved.
    """
    gens, entries = [], []
    count = 0
    for deg in range(3):
        for _ in range(rng.randint(0, max_per_degree)):
            gens.append((f"x{count}", deg, rng.randint(0, 4)))
            count += 1
    by_deg = {d: [g for g in gens if g[1] == d] for d in range(3)}
    used = set()
    for d in (0, 1):
        for src in by_deg[d]:
            if src[0] in used or rng.random() < 0.4:
                continue
            options = [t for t in by_deg[d + 1] if t[0] not in used and t[2] >= src[2]]
            if options:
                tgt = rng.choice(options)
                used |= {src[0], tgt[0]}
                entries.append((src[0], tgt[0], 1))
    c = ValuedChainComplex.build(gens, entries)
    n = c.size
    if not n:
        return c
    p = qm.identity(n)
    for _ in range(2 * n):
        i, j = rng.randrange(n), rng.randrange(n)
        gi, gj = c.generators[i], c.generators[j]
        if i != j and gi.degree == gj.degree and gi.action >= gj.action:
            # new basis vector e_j + s e_i stays in the action filtration
            scale = rng.choice([-2, -1, 1, 3])
            for row in p:
                row[j] += scale * row[i]
    d = qm.matmul(qm.matmul(qm.inverse(p), c.matrix()), p)
    out = ValuedChainComplex(c.generators, tuple(tuple(r) for r in d))
    out.validate()
    return out


def direct_sum(a: ValuedChainComplex, b: ValuedChainComplex, tag: str = "b") -> ValuedChainComplex:
    """``a + b`` with the generators of ``b`` renamed by ``tag``."""
    gens = list(a.generators) + [type(g)(f"{tag}:{g.name}", g.degree, g.action) for g in b.generators]
    n, m = a.size, b.size
    d = [[Fraction(0)] * (n + m) for _ in range(n + m)]
    for i in range(n):
        for j in range(n):
            d[i][j] = a.differential[i][j]
    for i in range(m):
        for j in range(m):
            d[n + i][n + j] = b.differential[i][j]
    return ValuedChainComplex(tuple(gens), tuple(tuple(r) for r in d))


def inclusion(n: int, m: int, scale=1):
    """Matrix of ``x -> scale * (x, 0)`` from dimension ``n`` into ``n + m``."""
    return [[Fraction(scale) if i == j else Fraction(0) for j in range(n)] for i in range(n + m)]


def projection(n: int, m: int, scale=1):
    """Matrix of ``(x, y) -> scale * x`` from dimension ``n + m`` onto ``n``."""
    return [[Fraction(scale) if i == j else Fraction(0) for j in range(n + m)] for i in range(n)]


def random_telescope(rng: random.Random, n_stages: int, max_per_degree=2):
    """Each stage adds a random summand; continuations are scaled inclusions."""
    from sympcoh.complexes import TelescopeComplex

    stages = [random_complex(rng, max_per_degree)]
    conts = []
    for n in range(1, n_stages):
        prev = stages[-1]
        nxt = direct_sum(prev, random_complex(rng, max_per_degree), tag=f"s{n}")
        stages.append(nxt)
        inc = inclusion(prev.size, nxt.size - prev.size, rng.choice([1, -1, 2, Fraction(1, 3)]))
        conts.append(tuple(tuple(r) for r in inc))
    shift = Fraction(-rng.randint(0, 3), rng.randint(1, 2))
    return TelescopeComplex(tuple(stages), tuple(conts), shift)
