import itertools
import random
from fractions import Fraction

import pytest

from dualis.discriminants import (
    BasedComplex, BinaryForm, admissible_collections, binary_discriminant,
    binary_discriminant_symbolic, cayley_determinant, cayley_scaling_exponent,
    cayley_value, discriminant_vanishes,
)
from dualis.exact import DomainError, MultiPoly, RatMatrix, poly_resultant


def test_quadratic_discriminant_symbolic():
    disc = binary_discriminant_symbolic(2)
    expect = MultiPoly.parse("4*a0*a2 - a1^2", ("a0", "a1", "a2"))
    assert disc == expect


def test_cubic_fermat_value():
    assert binary_discriminant(BinaryForm(3, (1, 0, 0, 1))) == 27
    # x^2 (x - y) has a double root
    assert binary_discriminant(BinaryForm(3, (1, -1, 0, 0))) == 0


def test_symbolic_specializes_to_numeric():
    rng = random.Random(7)
    for d in (2, 3, 4, 5):
        sym = binary_discriminant_symbolic(d)
        for _ in range(5):
            coeffs = [Fraction(rng.randint(-4, 4)) for _ in range(d + 1)]
            point = {"a%d" % i: c for i, c in enumerate(coeffs)}
            assert sym.evaluate(point) == binary_discriminant(BinaryForm(d, coeffs))


def test_symbolic_degree_and_isobaric_weight():
    for d in (2, 3, 4, 5):
        disc = binary_discriminant_symbolic(d)
        assert all(sum(e) == 2 * (d - 1) for e in disc.terms)
        # weight: term prod a_i^{m_i} has sum i*m_i = d(d-1)
        assert all(sum(i * m for i, m in enumerate(e)) == d * (d - 1)
                   for e in disc.terms)


def test_discriminant_matches_gcd_oracle_exhaustive():
    # all integer coefficient vectors in {-2..2} for degrees 2 and 3
    for d in (2, 3):
        for coeffs in itertools.product(range(-2, 3), repeat=d + 1):
            form = BinaryForm(d, coeffs)
            assert (binary_discriminant(form) == 0) == discriminant_vanishes(form)


def test_discriminant_vs_resultant_oracle():
    # disc is proportional to res(f_y, f_x); the ratio depends only on d
    names = ("a0", "a1", "a2", "a3")
    a = [MultiPoly.var(names + ("x",), "a%d" % i).extended(names + ("x",))
         for i in range(4)]
    x = MultiPoly.var(names + ("x",), "x")
    # f(x, 1) for the generic cubic
    f = a[0] * x ** 3 + a[1] * x ** 2 + a[2] * x + a[3]
    fx = f.derivative("x")
    fy = 3 * a[3] * x ** 0  # placeholder, computed below
    # partial in y of a0 x^3 + a1 x^2 y + a2 x y^2 + a3 y^3 at y=1:
    fy = a[1] * x ** 2 + 2 * a[2] * x + 3 * a[3]
    res = poly_resultant(fy, fx, "x")
    disc = binary_discriminant_symbolic(3).extended(names)
    # res and disc agree up to a constant factor
    lead = next(iter(sorted(disc.terms)))
    ratio = res.coefficient(lead) / disc.coefficient(lead)
    assert ratio != 0
    assert res == disc * ratio


def test_quartic_double_root_detected():
    # (x - y)^2 (x + 2y)(x - 3y)
    # expand: use the coefficient convention a_i = coeff of x^(d-i) y^i
    quartic = BinaryForm(4, (1, -3, -3, 11, -6))
    assert binary_discriminant(quartic) == 0
    assert discriminant_vanishes(quartic)


# -- based complexes ---------------------------------------------------------


def two_term(entries, start=0):
    n = len(entries)
    return BasedComplex((n, n), [entries], start)


def test_cayley_two_term_is_det():
    cx = two_term([[1, 2], [3, 4]])
    assert cayley_determinant(cx) == -2
    assert cayley_determinant(two_term([[1, 2], [3, 4]], start=1)) == Fraction(-1, 2)


def test_cayley_three_term():
    cx = BasedComplex((1, 2, 1), [[[1], [0]], [[0, 1]]])
    assert cayley_determinant(cx) == 1


def test_cayley_rejects_non_complex():
    cx = BasedComplex((1, 2, 1), [[[1], [0]], [[1, 0]]])
    with pytest.raises(DomainError, match="not a complex"):
        cayley_determinant(cx)


def test_cayley_rejects_inexact():
    cx = BasedComplex((2, 2), [[[1, 2], [2, 4]]])
    with pytest.raises(DomainError, match="complex not exact"):
        cayley_determinant(cx)


def test_scaling_exponent_examples():
    assert cayley_scaling_exponent(two_term([[1, 0], [0, 1]])) == 2
    cx = BasedComplex((1, 2, 1), [[[1], [0]], [[0, 1]]])
    assert cayley_scaling_exponent(cx) == 0


def random_exact_complex(rng, max_rank=2, max_len=3):
    r = rng.randint(1, max_len)
    s = [0] + [rng.randint(1, max_rank) for _ in range(r)] + [0]
    dims = [s[i] + s[i + 1] for i in range(r + 1)]

    def canonical(i):
        m = [[Fraction(0)] * dims[i] for _ in range(dims[i + 1])]
        for a in range(s[i + 1]):
            m[a][s[i] + a] = Fraction(1)
        return m

    def rand_invertible(n):
        while True:
            m = RatMatrix([[Fraction(rng.randint(-3, 3)) for _ in range(n)]
                           for _ in range(n)])
            if n == 0 or m.det() != 0:
                return m

    basis = [rand_invertible(b) for b in dims]
    maps = []
    for i in range(r):
        maps.append(basis[i + 1] * RatMatrix(canonical(i)) * basis[i].inverse())
    return BasedComplex(dims, maps, start_degree=rng.randint(-1, 2))


def test_cayley_collection_independence_random():
    rng = random.Random(2024)
    seen_multi = 0
    for _ in range(120):
        cx = random_exact_complex(rng)
        values = {cayley_value(cx, coll) for coll in admissible_collections(cx)}
        assert len(values) == 1
        got = cayley_determinant(cx)
        assert values == {got}
        if len(cx.dims) > 2:
            seen_multi += 1
    assert seen_multi > 20


def test_cayley_scaling_law_random():
    rng = random.Random(99)
    for _ in range(25):
        cx = random_exact_complex(rng)
        base = cayley_determinant(cx)
        e = cayley_scaling_exponent(cx)
        for lam in (2, 3, Fraction(1, 2), -1, Fraction(-2, 3)):
            scaled = BasedComplex(cx.dims, [m * lam for m in cx.maps], cx.start_degree)
            assert cayley_determinant(scaled) == Fraction(lam) ** e * base


def test_from_dict_round_trip():
    data = {"start_degree": 1, "dims": [2, 2],
            "maps": [[["1", "2"], ["3", "4"]]]}
    cx = BasedComplex.from_dict(data)
    assert cayley_determinant(cx) == Fraction(-1, 2)
