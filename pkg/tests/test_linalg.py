import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sympcoh import qmatrix as qm
from sympcoh.geometry import grid
from sympcoh.linalg import (
    NovikovMatrix,
    NovikovPolynomial,
    ValuationSpectrum,
    charpoly,
    check_nonneg_valuations,
    conjugate,
    newton_polygon,
    polynomial_spectrum,
    spectrum,
)
from sympcoh.novikov import INF, T, ZERO, NovikovSeries, parse, valuation
from sympcoh.quantum import chern_matrix
from oracles import hull_root_valuations, leibniz_charpoly
from strategies import random_series, unimodular

F = Fraction


def poly(*coeffs):
    return NovikovPolynomial.from_coefficients([parse(c) if isinstance(c, str) else c for c in coeffs])


def vals(*pairs):
    return ValuationSpectrum.from_pairs(pairs)


class TestCharpoly:
    def test_one_by_one_zero(self):
        assert charpoly(NovikovMatrix.from_rows([[0]])) == poly(0, 1)

    def test_two_by_two(self):
        m = NovikovMatrix.from_rows([[0, T], [1, 0]])
        assert charpoly(m) == poly("-T", 0, 1)

    def test_non_square(self):
        with pytest.raises(ValueError):
            charpoly(NovikovMatrix.from_rows([[1, 2]]))

    def test_chern_matrix_m1_k1(self):
        m = chern_matrix_rows(1, 1)
        got = charpoly(NovikovMatrix.from_rows(m))
        want = leibniz_charpoly(m)
        assert list(got.coefficients) == want
        # x^2 + T x: one root at 0, one of valuation 1
        assert polynomial_spectrum(got) == vals((INF, 1), (1, 1))

    @pytest.mark.parametrize("g", grid(3), ids=str)
    def test_chern_matrices_against_leibniz(self, g):
        m = chern_matrix_rows(g.m, g.k)
        assert list(charpoly(NovikovMatrix.from_rows(m)).coefficients) == leibniz_charpoly(m)

    def test_random_against_leibniz(self):
        rng = random.Random(7)
        for _ in range(60):
            n = rng.randint(1, 4)
            rows = [[random_series(rng, exact=True, max_terms=2) for _ in range(n)] for _ in range(n)]
            got = charpoly(NovikovMatrix.from_rows(rows))
            want = leibniz_charpoly(rows)
            assert list(got.coefficients) == want[: got.degree + 1]


def chern_matrix_rows(m, k):
    from sympcoh.geometry import LineBundleGeometry

    return [list(r) for r in chern_matrix(LineBundleGeometry(m, k)).matrix.rows]


class TestNewtonPolygon:
    def test_single_segment(self):
        p = poly("-T", 0, 1)
        np = newton_polygon(p)
        assert np.vertices == ((0, F(1)), (2, F(0)))
        assert np.segments() == [(F(1, 2), 2)]

    def test_factor_x(self):
        # x^3 - T x = x (x^2 - T)
        p = poly(0, "-T", 0, 1)
        assert newton_polygon(p).zero_roots == 1
        assert polynomial_spectrum(p) == vals((F(1, 2), 2), (INF, 1))

    @pytest.mark.parametrize("m,k", [(1, 1), (3, 1), (4, 2), (5, 3)])
    def test_pure_power(self, m, k):
        d = m + 1 - k
        coeffs = [NovikovSeries.monomial(1, -3)] + [ZERO] * (d - 1) + [NovikovSeries.constant(1)]
        p = NovikovPolynomial.from_coefficients(coeffs)
        assert newton_polygon(p).segments() == [(F(1, d), d)]
        assert hull_root_valuations([(0, F(1)), (d, F(0))]) == {F(1, d): d}

    def test_zero_polynomial(self):
        with pytest.raises(ValueError):
            NovikovPolynomial.from_coefficients([0, 0])

    def test_collinear_points_merge(self):
        p = poly("T^2", "T", 1)
        assert newton_polygon(p).vertices == ((0, F(2)), (2, F(0)))
        assert polynomial_spectrum(p) == vals((1, 2))

    def test_slopes_increase(self):
        p = poly("T^5", "T", "T^3", 1)
        slopes = newton_polygon(p).slopes()
        assert slopes == sorted(slopes) and len(set(slopes)) == len(slopes)


class TestSpectrum:
    def test_zero_matrix(self):
        assert spectrum(NovikovMatrix.zeros(3)) == vals((INF, 3))

    def test_diagonal(self):
        m = NovikovMatrix.from_rows([["T", 0, 0], [0, "T", 0], [0, 0, "T^2"]])
        assert spectrum(m) == vals((1, 2), (2, 1))

    def test_chern_m3_k1(self):
        assert spectrum(NovikovMatrix.from_rows(chern_matrix_rows(3, 1))) == vals((INF, 1), (F(1, 3), 3))

    def test_json(self):
        s = vals((INF, 1), (F(1, 3), 3))
        assert s.to_json() == [{"valuation": "1/3", "multiplicity": 3}, {"valuation": "inf", "multiplicity": 1}]
        assert ValuationSpectrum.from_json(s.to_json()) == s

    @pytest.mark.parametrize("d,e", [(1, 1), (2, 1), (3, 2), (4, 7)])
    def test_companion(self, d, e):
        # companion matrix of x^d - c T^e
        rows = [[ZERO] * d for _ in range(d)]
        for i in range(1, d):
            rows[i][i - 1] = NovikovSeries.constant(1)
        rows[0][d - 1] = NovikovSeries.monomial(e, 5)
        assert spectrum(NovikovMatrix.from_rows(rows)) == vals((F(e, d), d))


class TestNonneg:
    def test_values(self):
        assert check_nonneg_valuations(vals((INF, 1), (F(1, 3), 3)))
        assert not check_nonneg_valuations(vals((-1, 1)))

    @pytest.mark.parametrize("g", grid(6), ids=str)
    def test_chern_matrices(self, g):
        assert check_nonneg_valuations(spectrum(chern_matrix(g).matrix))


@st.composite
def small_polys(draw):
    deg = draw(st.integers(1, 4))
    coeffs = []
    for i in range(deg + 1):
        if i == deg or draw(st.booleans()):
            e = draw(st.integers(0, 6))
            coeffs.append(NovikovSeries.monomial(F(e, draw(st.integers(1, 3))), draw(st.sampled_from([1, -2, 3]))))
        else:
            coeffs.append(ZERO)
    return NovikovPolynomial.from_coefficients(coeffs)


@given(small_polys())
def test_slope_lengths_sum_to_degree(p):
    s = polynomial_spectrum(p)
    assert s.dimension == p.degree


@given(small_polys())
def test_newton_polygon_matches_brute_force(p):
    pts = [(i, valuation(c)) for i, c in enumerate(p.coefficients) if c.terms]
    expected = hull_root_valuations(pts)
    got = {("inf" if v == INF else v): m for v, m in polynomial_spectrum(p).entries}
    assert got == expected


@given(small_polys(), small_polys())
def test_product_concatenates_slopes(p, q):
    # leading valuations of products can cancel only when two coefficients tie;
    # the multiset union is exact over a valued field
    pq = p * q
    expected = ValuationSpectrum.from_pairs(list(polynomial_spectrum(p).entries) + list(polynomial_spectrum(q).entries))
    assert polynomial_spectrum(pq) == expected


def test_similarity_invariance():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randint(1, 4)
        rows = [[random_series(rng, exact=True, max_terms=2) for _ in range(n)] for _ in range(n)]
        m = NovikovMatrix.from_rows(rows)
        p = unimodular(rng, n)
        p_inv = qm.inverse(p)
        assert spectrum(conjugate(m, p, p_inv)) == spectrum(m)


def test_jordan_power_growth():
    rng = random.Random(3)
    for _ in range(40):
        size = rng.randint(1, 4)
        v = F(rng.randint(0, 6), rng.randint(1, 3))
        lam = NovikovSeries.from_terms([(v, rng.choice([1, -1, 2])), (v + 1, 1)])
        rows = [[ZERO] * size for _ in range(size)]
        for i in range(size):
            rows[i][i] = lam
            for j in range(i + 1, size):
                rows[i][j] = NovikovSeries.monomial(F(rng.randint(0, 4), 2), rng.choice([1, 3]))
        j = NovikovMatrix.from_rows(rows)
        for power in range(1, 7):
            jp = j ** power
            for row in jp.rows:
                for x in row:
                    if x.terms:
                        assert valuation(x) >= power * v - size * v
