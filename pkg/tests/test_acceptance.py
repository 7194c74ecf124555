"""Acceptance gate: eight exact checks, each reported as one PASS/FAIL line.

Run under pytest, or directly with ``python3 tests/test_acceptance.py``.
Every comparison is exact (tolerance 0). Random suites are seeded.
"""

from __future__ import annotations

import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from oracles import hull_root_valuations  # noqa: E402
from strategies import (  # noqa: E402
    direct_sum,
    inclusion,
    projection,
    random_complex,
    random_telescope,
    unimodular,
)

from sympcoh import qmatrix as qm  # noqa: E402
from sympcoh.complexes import (  # noqa: E402
    ValuedChainComplex,
    build_telescope,
    euler_characteristic,
    homology,
    mapping_cone,
    morse_demo,
)
from sympcoh.geometry import grid  # noqa: E402
from sympcoh.linalg import (  # noqa: E402
    NovikovMatrix,
    NovikovPolynomial,
    ValuationSpectrum,
    charpoly,
    check_nonneg_valuations,
    conjugate,
    polynomial_spectrum,
    spectrum,
)
from sympcoh.mirror import critical_valuations, jac_rank_global, mirror_check  # noqa: E402
from sympcoh.novikov import INF, ZERO, NovikovSeries, invert, norm, valuation  # noqa: E402
from sympcoh.quantum import chern_matrix, quantum_spectrum  # noqa: E402
from sympcoh.sh import completed_sh_annulus, disk_profile, duality_check, frange, reduced_sh_disk  # noqa: E402

F = Fraction
GRID = grid(4)
RANDOM_CASES = 10_000


def expected_spectrum(g):
    d = g.m + 1 - g.k
    return ValuationSpectrum.from_pairs([(INF, g.k), (F(1, d), d)])


def window_dimension(g, r1, r2):
    """Brute-force count over the expected spectrum of the half-open window."""
    lo, hi = min(r1, r2), max(r1, r2)
    return sum(mult for v, mult in expected_spectrum(g).entries if v != INF and lo < v <= hi)


def random_radius(rng):
    return F(rng.randint(0, 48), rng.choice([1, 2, 3, 4, 5, 6, 8, 12]))


# -- criteria ---------------------------------------------------------------------


def criterion_1():
    """Spectra on the grid, with multiplicities from a brute-force hull oracle."""
    for g in GRID:
        q = quantum_spectrum(g)
        if q.spectrum != expected_spectrum(g):
            return False, f"{g}: {q.spectrum}"
        p = charpoly(chern_matrix(g).matrix)
        points = [(i, valuation(c)) for i, c in enumerate(p.coefficients) if c.terms]
        brute = hull_root_valuations(points)
        got = {("inf" if v == INF else v): m for v, m in q.spectrum.entries}
        if brute != got:
            return False, f"{g}: hull oracle {brute} vs {got}"
    return True, f"{len(GRID)} geometries"


def criterion_2():
    """Whole-bundle dimension equals the global Jacobian rank."""
    for g in GRID:
        d = reduced_sh_disk(quantum_spectrum(g), INF).dimension
        if not d == g.m + 1 - g.k == jac_rank_global(g):
            return False, f"{g}: disk {d}, jac {jac_rank_global(g)}"
    return True, f"{len(GRID)} geometries"


def criterion_3():
    """Disk profile over [0, 2]: zero below 1/(m+1-k), full at and above it."""
    radii = frange(0, 2, F(1, 120))
    rows = 0
    for g in GRID:
        crit = F(1, g.m + 1 - g.k)
        if crit not in radii:
            return False, f"{g}: critical radius not sampled"
        for r, d in disk_profile(quantum_spectrum(g), radii):
            rows += 1
            if d != (g.m + 1 - g.k if r >= crit else 0):
                return False, f"{g}: r={r} dimension {d}"
    return True, f"{rows} profile rows"


def criterion_4():
    """Annulus windows against a brute-force count, plus duality."""
    rng = random.Random(404)
    cases = 0
    for g in GRID:
        q = quantum_spectrum(g)
        crit = F(1, g.m + 1 - g.k)
        windows = {(random_radius(rng), random_radius(rng)) for _ in range(300)}
        windows |= {(crit, crit + 1), (0, crit), (crit, crit), (crit, 0), (2, crit)}
        if len(windows) < 200:
            return False, f"{g}: only {len(windows)} windows"
        for r1, r2 in windows:
            cases += 1
            dim = completed_sh_annulus(q, r1, r2).dimension
            if dim != window_dimension(g, r1, r2) or not duality_check(q, r1, r2):
                return False, f"{g}: window ({r1}, {r2}) gave {dim}"
    return True, f"{cases} windows"


def criterion_5():
    """Mirror comparison away from the exact left-boundary case."""
    rng = random.Random(505)
    cases = 0
    for g in GRID:
        crit = critical_valuations(g)[-1]
        windows = set()
        while len(windows) < 100:
            a, b = sorted((random_radius(rng), random_radius(rng)))
            if a != crit:
                windows.add((a, b))
        windows |= {(crit / 2, crit), (0, crit), (crit / 2, 2 * crit)}
        for r1, r2 in windows:
            cases += 1
            if not mirror_check(g, r1, r2):
                return False, f"{g}: mismatch on ({r1}, {r2})"
    if cases < 800:
        return False, f"only {cases} cases"
    return True, f"{cases} windows, 0 mismatches"


def criterion_6():
    """Morse family: reduced 0, completed 1, lim^1 = 0; single stages 0/0."""
    for n in range(2, 7):
        demo = morse_demo(n)
        fam = demo.family
        if (demo.reduced, demo.completed) != (0, 1) or fam.completed_ranks.get(0) != 1:
            return False, f"N={n}: reduced {demo.reduced}, completed {demo.completed}"
        if not (fam.lim1_vanishes and fam.mittag_leffler and fam.stabilized_at is not None):
            return False, f"N={n}: inverse system diagnostics failed"
        if any((s.reduced, s.completed) != (0, 0) for s in demo.stages):
            return False, f"N={n}: a single stage is not 0/0"
    return True, "N = 2..6"


def _lattice_entry(rng):
    if rng.random() < 0.3:
        return ZERO
    return NovikovSeries.monomial(F(rng.randint(0, 6), 2), rng.choice([-2, -1, 1, 2, 3]))


def _exact_series(rng, nonzero=True):
    terms = [(F(rng.randint(-6, 12), rng.randint(1, 3)), F(rng.choice([-3, -1, 1, 2, 5]), rng.randint(1, 2))) for _ in range(rng.randint(1, 3))]
    s = NovikovSeries.from_terms(terms)
    return s if s.terms or not nonzero else NovikovSeries.monomial(rng.randint(-2, 3), 1)


def _random_poly(rng, max_deg=4):
    deg = rng.randint(1, max_deg)
    coeffs = [NovikovSeries.monomial(F(rng.randint(0, 8), rng.randint(1, 3)), rng.choice([1, -1, 2])) if rng.random() < 0.7 or i == deg else ZERO for i in range(deg + 1)]
    return NovikovPolynomial.from_coefficients(coeffs)


def _prop_valuation(rng):
    a, b = _exact_series(rng), _exact_series(rng)
    if valuation(a * b) != valuation(a) + valuation(b):
        return "ev(ab) != ev(a) + ev(b)"
    s = a + b
    if s.terms:
        if valuation(s) < min(valuation(a), valuation(b)):
            return "ultrametric inequality"
        if valuation(a) != valuation(b) and valuation(s) != min(valuation(a), valuation(b)):
            return "strict ultrametric equality"
        if norm(s) > max(norm(a), norm(b)):
            return "norm ultrametric"
    return None


def _prop_invert(rng):
    a = _exact_series(rng)
    if rng.random() < 0.5:
        a = NovikovSeries(a.terms, a.terms[-1][0] + F(rng.randint(1, 8), rng.randint(1, 2)))
    target = F(rng.randint(1, 10), rng.randint(1, 2))
    inv = invert(a, target)
    prod = a * inv
    if prod != NovikovSeries.constant(1, prod.precision):
        return f"a * invert(a) = {prod}"
    e = a.terms[0][0]
    if len(a.terms) > 1 or not a.is_exact:
        want = min(target, a.precision - 2 * e)
        if inv.precision != want:
            return f"precision {inv.precision} != {want}"
    return None


def _prop_newton(rng):
    p, q = _random_poly(rng), _random_poly(rng)
    sp = polynomial_spectrum(p)
    if sp.dimension != p.degree:
        return "slope lengths do not sum to the degree"
    points = [(i, valuation(c)) for i, c in enumerate(p.coefficients) if c.terms]
    got = {("inf" if v == INF else v): m for v, m in sp.entries}
    if got != hull_root_valuations(points):
        return "hull disagrees with brute force"
    joined = ValuationSpectrum.from_pairs(list(sp.entries) + list(polynomial_spectrum(q).entries))
    if polynomial_spectrum(p * q) != joined:
        return "product does not concatenate slopes"
    return None


def _prop_similarity(rng):
    n = rng.randint(1, 3)
    m = NovikovMatrix.from_rows([[_lattice_entry(rng) for _ in range(n)] for _ in range(n)])
    p = unimodular(rng, n, 3)
    if spectrum(conjugate(m, p, qm.inverse(p))) != spectrum(m):
        return "spectrum changed under conjugation"
    return None


def _prop_nonneg(rng):
    g = rng.choice(GRID)
    p = unimodular(rng, g.m + 1, 3)
    s = spectrum(conjugate(chern_matrix(g).matrix, p, qm.inverse(p)))
    if not check_nonneg_valuations(s) or s != expected_spectrum(g):
        return f"{g}: {s}"
    return None


def _prop_telescope(rng):
    n = rng.randint(1, 3)
    tel = build_telescope(random_telescope(rng, n), rng.randint(1, n))
    if not tel.square_is_zero():
        return "d^2 != 0"
    if not tel.is_action_increasing():
        return "differential lowers action"
    return None


def _prop_cone(rng):
    src = random_complex(rng, 2)
    extra = random_complex(rng, 2)
    big = direct_sum(src, extra)
    scale = rng.choice([1, -1, 3, F(1, 2)])
    kind = rng.randrange(3)
    if kind == 0:
        f, a, b = inclusion(src.size, extra.size, scale), src, big
    elif kind == 1:
        f, a, b = projection(src.size, extra.size, scale), big, src
    else:
        f, a, b = qm.zeros(extra.size, src.size), src, extra
    cone = mapping_cone(f, a, b)
    if euler_characteristic(homology(cone)) != euler_characteristic(homology(b)) - euler_characteristic(homology(a)):
        return "Euler characteristic identity fails"
    return None


PROPERTIES = [
    ("valuation", _prop_valuation),
    ("invert", _prop_invert),
    ("newton", _prop_newton),
    ("similarity", _prop_similarity),
    ("nonneg", _prop_nonneg),
    ("telescope", _prop_telescope),
    ("cone", _prop_cone),
]


def criterion_7(cases: int = RANDOM_CASES):
    """Seeded property suites, each over ``cases`` random inputs."""
    for k, (name, prop) in enumerate(PROPERTIES):
        rng = random.Random(7000 + k)
        for i in range(cases):
            err = prop(rng)
            if err:
                return False, f"{name} case {i}: {err}"
    return True, f"{len(PROPERTIES)} suites x {cases} cases"


def _block_complex(blocks, tag):
    """Zero-differential complex in degree 0 with one generator per eigen-direction."""
    gens = []
    for b, (v, mult) in enumerate(blocks):
        gens += [(f"{tag}{b}.{j}", 0, 0) for j in range(mult)]
    return ValuedChainComplex.build(gens)


def criterion_8():
    """Cones of restriction maps between disk models recover annulus dimensions."""
    rng = random.Random(808)
    cases = 0
    for g in GRID:
        q = quantum_spectrum(g)
        finite = q.spectrum.finite()
        for _ in range(8):
            r1, r2 = random_radius(rng) / 4, random_radius(rng) / 4
            if rng.random() < 0.3:
                r1 = finite[0][0]
            keep1 = [(v, m) for v, m in finite if v <= r1]
            keep2 = [(v, m) for v, m in finite if v <= r2]
            a, b = _block_complex(keep1, "a"), _block_complex(keep2, "b")
            # blocks are listed in the same order, so the smaller disk's blocks
            # form a prefix of the larger one's
            if r1 <= r2:
                f = inclusion(a.size, b.size - a.size)
            else:
                f = projection(b.size, a.size - b.size)
            pa, pb = unimodular(rng, a.size, 4) if a.size else [], unimodular(rng, b.size, 4) if b.size else []
            if a.size and b.size:
                f = qm.matmul(qm.matmul(qm.inverse(pb), f), pa)
            cone = mapping_cone(f, a, b)
            ranks = homology(cone) if cone.size else {}
            want = completed_sh_annulus(q, r1, r2)
            degree = 0 if r1 <= r2 else -1
            if sum(ranks.values()) != want.dimension or sum(v for d, v in ranks.items() if d != degree) != 0:
                return False, f"{g}: ({r1}, {r2}) cone {ranks} vs {want.dimension}"
            if want.degree_shift != degree:
                return False, f"{g}: degree shift {want.degree_shift}"
            cases += 1
    if cases < 50:
        return False, f"only {cases} cases"
    return True, f"{cases} synthetic cones"


CRITERIA = [
    (1, "spectrum correctness", criterion_1),
    (2, "whole-bundle dimension = global Jacobian rank", criterion_2),
    (3, "disk step profile", criterion_3),
    (4, "annulus windows and duality", criterion_4),
    (5, "mirror symmetry sweep", criterion_5),
    (6, "Morse counterexample", criterion_6),
    (7, "property suites", criterion_7),
    (8, "cone / annulus consistency", criterion_8),
]


def report_line(number, title, ok, detail):
    return f"ACCEPTANCE {number} {'PASS' if ok else 'FAIL'}: {title} ({detail})"


@pytest.mark.parametrize("number,title,check", CRITERIA, ids=[f"criterion_{n}" for n, _, _ in CRITERIA])
def test_acceptance(number, title, check, capsys):
    ok, detail = check()
    with capsys.disabled():
        print("\n" + report_line(number, title, ok, detail))
    assert ok, detail


def main() -> int:
    failed = 0
    for number, title, check in CRITERIA:
        ok, detail = check()
        failed += not ok
        print(report_line(number, title, ok, detail))
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
