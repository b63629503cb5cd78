"""Hyperdeterminants of multidimensional formats.

A format l_1 x ... x l_r (all l_i >= 2) carries a hyperdeterminant exactly
when no direction dominates the others: 2 k_j <= k_1 + ... + k_r for every j,
writing k_i = l_i - 1.  Inside that cone the degree N(k_1, ..., k_r) is the
coefficient of z^k in (1 - sum_{i>=2} (i-1) e_i(z))^(-2); outside it the
hyperdeterminant is the constant 1 and the degree is 0.  Boundary, cubic and
binary-cube formats additionally have factorial closed forms, kept separate
so they can cross-check the expansion.
"""

from fractions import Fraction
from math import comb, factorial

from .exact import DomainError, MultiPoly, TruncSeries


class HyperFormat:
    """Multidimensional matrix format l_1 x ... x l_r."""

    __slots__ = ("dims",)

    def __init__(self, dims):
        dims = tuple(int(l) for l in dims)
        if not dims or any(l < 2 for l in dims):
            raise DomainError("format needs r >= 1 dimensions, all >= 2")
        self.dims = dims

    @property
    def ks(self):
        return tuple(l - 1 for l in self.dims)

    def __eq__(self, other):
        if not isinstance(other, HyperFormat):
            return NotImplemented
        return self.dims == other.dims

    def __repr__(self):
        return "HyperFormat(%s)" % "x".join(str(l) for l in self.dims)


def hyperdet_exists(fmt):
    ks = fmt.ks
    total = sum(ks)
    return all(2 * k <= total for k in ks)


def segre_defect(fmt):
    """Dual defect of the product of projective spaces of the given format."""
    ks = fmt.ks
    total = sum(ks)
    return max(0, max(2 * k - total for k in ks))


def _gf_coefficient(ks):
    # coefficient of z_1^{k_1}...z_r^{k_r} in (1 - sum (i-1)e_i)^(-2);
    # a total-degree cap of sum(ks) is exact for that single coefficient
    r = len(ks)
    cap = sum(ks)
    vars_ = tuple("z%d" % (i + 1) for i in range(r))
    elem = [MultiPoly.const(vars_, 1)] + [MultiPoly.zero(vars_)] * r
    for name in vars_:
        z = MultiPoly.var(vars_, name)
        for i in range(r, 0, -1):
            elem[i] = elem[i] + elem[i - 1] * z
    s = MultiPoly.zero(vars_)
    for i in range(2, r + 1):
        s = s + (i - 1) * elem[i]
    series = (1 - TruncSeries(s, cap)) ** (-2)
    c = series.coefficient(ks)
    assert c.denominator == 1
    return int(c)


def hyperdet_degree_gf(fmt):
    """Degree of the hyperdeterminant of the format from the generating
    function; 0 when the format has none (the coefficient itself vanishes)."""
    return _gf_coefficient(fmt.ks)


def hyperdet_degree_boundary(ks_rest):
    """Degree of the boundary-format hyperdeterminant, k_1 = k_2 + ... + k_r:
    (k_2 + ... + k_r + 1)! / (k_2! ... k_r!)."""
    ks_rest = tuple(int(k) for k in ks_rest)
    if not ks_rest or any(k < 1 for k in ks_rest):
        raise DomainError("need k_2..k_r all >= 1")
    total = sum(ks_rest)
    num = factorial(total + 1)
    for k in ks_rest:
        num //= factorial(k)
    return num


def hyperdet_degree_cubic(k):
    """Degree of the hyperdeterminant of the cubic format (k+1)^3."""
    k = int(k)
    if k < 1:
        raise DomainError("need k >= 1")
    total = 0
    for j in range(k // 2 + 1):
        total += factorial(j + k + 1) * 2 ** (k - 2 * j) // (
            factorial(j) ** 3 * factorial(k - 2 * j)
        )
    return total


def hyperdet_degree_binary_cube(r):
    """Degree N_r of the hyperdeterminant of the 2 x ... x 2 format (r slots):
    r! times the z^r coefficient of exp(-2z)/(1-z)^2."""
    r = int(r)
    if r < 2:
        raise DomainError("need r >= 2")
    coeff = Fraction(0)
    for j in range(r + 1):
        coeff += Fraction((-2) ** j, factorial(j)) * (r - j + 1)
    val = coeff * factorial(r)
    assert val.denominator == 1
    return int(val)
