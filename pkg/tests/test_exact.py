from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from dualis.exact import (
    DomainError, MultiPoly, RatMatrix, TruncSeries,
    det_laplace, mat_rank_det_kernel, parse_rational, poly_divides,
    poly_resultant, series_mul_inverse,
)


def P(text, vars_=None):
    return MultiPoly.parse(text, vars_)


def test_parse_basic():
    f = P("3*x0^2*x1 - 1/2*x2^3")
    assert f.vars == ("x0", "x1", "x2")
    assert f.coefficient((2, 1, 0)) == 3
    assert f.coefficient((0, 0, 3)) == Fraction(-1, 2)
    assert f.degree() == 3


def test_parse_signs_and_constants():
    f = P("-x + 2 - 3*x", ("x",))
    assert f == P("2 - 4*x", ("x",))
    assert P("0", ("x",)).is_zero()
    assert P("x - x", ("x",)).is_zero()


def test_parse_rejects_garbage():
    for bad in ("", "x +", "2x", "x^-1", "x*-2", "x & y"):
        with pytest.raises(ValueError):
            P(bad)


def test_format_roundtrip():
    f = P("3*x^2*y - 1/2*z^3 + x - 7")
    assert P(f.format(), f.vars) == f
    assert P("0", ("x",)).format() == "0"


@given(st.lists(st.tuples(st.integers(-9, 9), st.integers(0, 4), st.integers(0, 4)),
                max_size=6))
@settings(max_examples=60)
def test_poly_ring_axioms(spec):
    vars_ = ("x", "y")
    f = MultiPoly(vars_, {(a, b): c for c, a, b in spec})
    g = P("x^2 - 3*y + 1", vars_)
    h = P("2*x*y - y^2", vars_)
    assert (f + g) * h == f * h + g * h
    assert f * g == g * f
    assert (f - f).is_zero()
    assert f.derivative("x") * g + f * g.derivative("x") == (f * g).derivative("x")


def test_compose_and_evaluate():
    f = P("x^2 + y", ("x", "y"))
    img = {"x": P("u + v", ("u", "v")), "y": P("u*v", ("u", "v"))}
    assert f.compose(img) == P("u^2 + 2*u*v + v^2 + u*v", ("u", "v"))
    assert f.evaluate({"x": 2, "y": Fraction(1, 2)}) == Fraction(9, 2)


def test_poly_divides():
    f = P("x + y", ("x", "y"))
    g = P("x^2 - y^2", ("x", "y"))
    assert poly_divides(f, g)
    assert not poly_divides(f, P("x^2 + y^2", ("x", "y")))
    assert poly_divides(f, MultiPoly.zero(("x", "y")))
    assert not poly_divides(MultiPoly.zero(("x", "y")), f)


def test_resultant_univariate():
    # common root <=> zero resultant
    f = P("x^2 - 1", ("x",))
    g = P("x - 1", ("x",))
    assert poly_resultant(f, g, "x").is_zero()
    h = P("x - 2", ("x",))
    r = poly_resultant(f, h, "x")
    assert r == MultiPoly.const((), 3)  # f(2) = 3, leading coeffs 1


def test_resultant_bivariate_matches_classic():
    # res_x(x^2 + y^2 - 1, x - y) = 2y^2 - 1
    f = P("x^2 + y^2 - 1", ("x", "y"))
    g = P("x - y", ("x", "y"))
    r = poly_resultant(f, g, "x")
    assert r == P("2*y^2 - 1", ("y",))


def test_det_laplace_matches_bareiss():
    rows = [[3, 1, 4], [1, 5, 9], [2, 6, 5]]
    m = RatMatrix(rows)
    rows_q = [[Fraction(x) for x in r] for r in rows]
    assert det_laplace(rows_q) == m.det() == -90


def test_rank_det_kernel_example():
    rank, det, kern = mat_rank_det_kernel([[1, 2], [2, 4]])
    assert rank == 1
    assert det == 0
    assert kern == ((Fraction(2), Fraction(-1)),)


def test_matrix_ops():
    a = RatMatrix([[1, 2], [3, 4]])
    assert a.det() == -2
    assert a.inverse() * a == RatMatrix.identity(2)
    assert a.adjugate() == RatMatrix([[4, -2], [-3, 1]])
    assert a.solve((1, 1)) == (Fraction(-1), Fraction(1))
    assert a.transpose().rows == ((1, 3), (2, 4))
    with pytest.raises(DomainError):
        RatMatrix([[1, 2], [2, 4]]).inverse()


def test_kernel_primitive_normalization():
    m = RatMatrix([[Fraction(1, 2), Fraction(1, 3), 0]])
    (v,) = m.kernel()[:1]
    assert m.apply(v) == (0,)
    assert all(x.denominator == 1 for x in v)


@given(st.integers(1, 5), st.integers(0, 3))
@settings(max_examples=40)
def test_bareiss_agrees_with_laplace(n, seed):
    import random
    rng = random.Random(seed * 101 + n)
    rows = [[Fraction(rng.randint(-5, 5)) for _ in range(n)] for _ in range(n)]
    assert RatMatrix(rows).det() == det_laplace(rows)


def test_series_inverse():
    s = TruncSeries(P("1 + h", ("h",)), 5)
    inv = series_mul_inverse(s)
    assert (s * inv) == TruncSeries.const(("h",), 1, 5)
    expect = MultiPoly(("h",), {(k,): Fraction((-1) ** k) for k in range(6)})
    assert inv.body == expect


def test_series_inverse_needs_unit():
    s = TruncSeries(P("h + h^2", ("h",)), 4)
    with pytest.raises(DomainError, match="not invertible as series"):
        series_mul_inverse(s)


def test_series_multivariate():
    s = TruncSeries(P("1 - x - y", ("x", "y")), 3)
    inv = series_mul_inverse(s)
    # geometric series: coefficient of x^a y^b is binomial(a+b, a)
    assert inv.coefficient((1, 1)) == 2
    assert inv.coefficient((2, 1)) == 3
    assert inv.coefficient((1, 2)) == 3


def test_parse_rational():
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational("-7") == -7
    with pytest.raises(ValueError):
        parse_rational("3/0")
    with pytest.raises(ValueError):
        parse_rational("x")
