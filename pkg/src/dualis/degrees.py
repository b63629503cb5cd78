"""Degrees and defects of dual varieties from Chern-class bookkeeping.

The interface between geometry and arithmetic is the vector of integers
e_j = deg c_j(T*X).H^(n-j).  Binomially weighted sums of the e_j (the ranks
delta_s) detect the defect of the dual variety and its degree in one pass;
the rest of the module is a collection of exact closed forms for families
where the answer is classical.
"""

from fractions import Fraction
from itertools import combinations
from math import comb

from .exact import (
    DomainError,
    MultiPoly,
    TruncSeries,
    det_laplace,
    poly_divides,
    series_mul_inverse,
)


class ChernData:
    """Cotangent Chern degrees e_0..e_n of an n-dimensional polarized variety."""

    __slots__ = ("n", "e")

    def __init__(self, n, e):
        n = int(n)
        e = tuple(int(v) for v in e)
        if n < 0 or len(e) != n + 1:
            raise DomainError("need exactly e_0..e_n")
        # e_0 is the degree of X in the polarizing embedding
        if e[0] < 1:
            raise DomainError("e_0 must be a positive degree")
        self.n = n
        self.e = e

    def __eq__(self, other):
        if not isinstance(other, ChernData):
            return NotImplemented
        return self.n == other.n and self.e == other.e

    def __repr__(self):
        return "ChernData(n=%d, e=%r)" % (self.n, self.e)


def ranks(cd):
    """Rank vector delta_0..delta_n: delta_s = sum_{i>=s} C(i+1, s+1) e_{n-i}."""
    n = cd.n
    return tuple(
        sum(comb(i + 1, s + 1) * cd.e[n - i] for i in range(s, n + 1))
        for s in range(n + 1)
    )


def defect_and_degree(cd):
    """Defect r = first index with delta_r != 0, and deg X* = delta_r."""
    delta = ranks(cd)
    for r, v in enumerate(delta):
        if v != 0:
            return r, v
    raise DomainError("inconsistent Chern data")


def chern_data_veronese(n, d):
    """Chern data of P^n embedded by degree-d forms: e_j = (-1)^j C(n+1,j) d^(n-j)."""
    if n < 1 or d < 1:
        raise DomainError("need n >= 1 and d >= 1")
    return ChernData(n, [(-1) ** j * comb(n + 1, j) * d ** (n - j) for j in range(n + 1)])


def chern_data_complete_intersection(N, degs):
    """Chern data of a smooth complete intersection of hypersurfaces of the
    given degrees in P^N, polarized by the hyperplane class."""
    degs = tuple(int(d) for d in degs)
    k = len(degs)
    if N < 2 or not 1 <= k < N or any(d < 1 for d in degs):
        raise DomainError("need N >= 2 and 1 <= #degs < N with positive degrees")
    n = N - k
    h = TruncSeries(MultiPoly.var(("h",), "h"), n)
    # c(TX) = (1+h)^(N+1) / prod (1 + d_i h), truncated at dim X
    total = (1 + h) ** (N + 1)
    for d in degs:
        total = total * series_mul_inverse(1 + d * h)
    deg_x = 1
    for d in degs:
        deg_x *= d
    e = []
    for j in range(n + 1):
        gamma = total.coefficient((j,))
        val = Fraction((-1) ** j * gamma * deg_x)
        assert val.denominator == 1
        e.append(int(val))
    return ChernData(n, e)


def degree_curve_dual(g, d):
    """Degree of the dual of a smooth nonlinear curve of genus g and degree d."""
    if g < 0 or d < 1:
        raise DomainError("need g >= 0 and d >= 1")
    return 2 * g - 2 + 2 * d


def class_formula(n, chi_x, chi_xh, chi_xhh):
    """Signed alternating sum (-1)^n [chi(X) - 2 chi(X.H) + chi(X.H.H')].

    Gives deg X* when the dual is a hypersurface; a result <= 0 means that
    assumption failed, which callers surface as a warning rather than an error.
    """
    if n < 1:
        raise DomainError("need n >= 1")
    return (-1) ** n * (chi_x - 2 * chi_xh + chi_xhh)


def degree_plane_curve_reembedded(d, r):
    """Degree of the dual of a smooth plane curve of degree d re-embedded by
    curves of degree r: d(d + 2r - 3)."""
    if d < 1 or r < 1 or (d, r) == (1, 1):
        raise DomainError("need d, r >= 1 and (d, r) != (1, 1)")
    return d * (d + 2 * r - 3)


def degree_sl3_flag(m1, m2):
    """Degree of the dual of the full flag threefold of 3-space polarized by
    the weight (m1, m2)."""
    if m1 < 1 or m2 < 1:
        raise DomainError("need m1, m2 >= 1")
    return (
        12 * (m1 ** 2 * m2 + m1 * m2 ** 2)
        - 6 * (m1 ** 2 + 4 * m1 * m2 + m2 ** 2)
        + 12 * (m1 + m2)
        - 6
    )


def degree_sln_weight_a(n, a):
    """Degree of the dual of the highest-weight orbit for weight
    (a-1, 1, 0, ..., 0) of SL_n."""
    if n < 3 or a < 2:
        raise DomainError("need n >= 3 and a >= 2")
    num = (n * n - n) * a ** (n + 1) - (n * n + n) * a ** (n - 1) - 2 * n * (-1) ** n
    q, rem = divmod(num, (a + 1) ** 2)
    if rem != 0 or q <= 0:
        raise DomainError("formula precondition violated")
    return q


def hyperplane_section_defect(def_x, d):
    """Defect of a smooth member of |O(d)| on X: max(0, def X - 1) for d = 1,
    and 0 for every d >= 2."""
    if def_x < 0 or d < 1:
        raise DomainError("need def >= 0 and d >= 1")
    if d == 1:
        return max(0, def_x - 1)
    return 0


def resultant_degree(degs):
    """Degree of the resultant hypersurface of k forms of the given degrees
    in k variables: sum_j prod_{i != j} d_i."""
    degs = tuple(int(d) for d in degs)
    if len(degs) < 2 or any(d < 1 for d in degs):
        raise DomainError("need at least two positive degrees")
    total = 0
    for j in range(len(degs)):
        p = 1
        for i, d in enumerate(degs):
            if i != j:
                p *= d
        total += p
    return total


def hessian_dual_dimension(f, n):
    """Dimension of the dual of the hypersurface f = 0 in P^n: m - 2, where m
    is the largest size of a Hessian minor not divisible by f.

    The caller asserts irreducibility of f; everything else is checked.
    """
    if n < 1 or n + 1 > 5:
        raise DomainError("ambient dimension out of range (need 1 <= n <= 4)")
    vars_ = list(f.vars)
    while len(vars_) < n + 1:
        vars_.append("_u%d" % len(vars_))
    if len(vars_) > n + 1:
        raise DomainError("polynomial has more than n + 1 variables")
    f = f.extended(tuple(vars_))
    deg = f.degree()
    if deg < 2:
        raise DomainError("input degenerate")
    for e in f.terms:
        if sum(e) != deg:
            raise DomainError("polynomial is not homogeneous")
    hess = [[f.derivative(a).derivative(b) for b in f.vars] for a in f.vars]
    size = n + 1
    for m in range(size, 0, -1):
        for rows_pick in combinations(range(size), m):
            for cols_pick in combinations(range(size), m):
                minor = det_laplace(
                    [[hess[r][c] for c in cols_pick] for r in rows_pick],
                    one=MultiPoly.const(f.vars, 1),
                )
                if minor and not poly_divides(f, minor):
                    return m - 2
    raise DomainError("input degenerate")
