"""Closed-form existence tests and counts for generic multilinear data.

Four families of classical questions with exact numerical answers: whether a
generic degree-d form on C^n admits a k-dimensional isotropic subspace, how
many (k+1)-dimensional subalgebras a generic anticommutative algebra has, the
degree of the discriminant of such algebra structures, and dimension bounds
for linear systems of matrices of constant (or bounded-below) rank.  All
comparisons and summations run over exact rationals.
"""

from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb, factorial

from .exact import DomainError, RatMatrix


# --- isotropic subspaces of generic forms ---------------------------------

def isotropic_exists(n, k, d, kind):
    """Does a generic form of degree d on C^n have a k-dim isotropic subspace?

    kind is "sym" (symmetric power) or "skew" (exterior power).  The skew
    question is only posed for k >= d, where restriction to the subspace can
    be nonzero at all.  The low-degree and near-top exceptional families are
    decided first; the generic dimension-count inequality handles the rest.
    """
    n, k, d = int(n), int(k), int(d)
    if kind not in ("sym", "skew"):
        raise DomainError("invalid query")
    if not (1 <= k <= n) or d < 1:
        raise DomainError("invalid query")
    if kind == "skew" and k < d:
        raise DomainError("invalid query")
    # exceptional families override the generic count
    if d == 2:
        return n >= 2 * k
    if kind == "skew" and d == n - 2 and n % 2 == 0:
        return k <= n - 2
    if kind == "skew" and d == 3 and n == 7:
        return k <= 4
    if kind == "sym":
        need = Fraction(comb(d + k - 1, d), k) + k
    else:
        need = Fraction(comb(k, d), k) + k
    return n >= need


# --- subalgebra counts of generic anticommutative algebras ----------------

def _box_partitions(parts, width):
    # weakly decreasing tuples of length `parts` with entries in 0..width
    out = []
    for tup in combinations_with_replacement(range(width + 1), parts):
        out.append(tuple(reversed(tup)))
    return out


def _inv_factorial(a):
    # the 1/N! = 0 for N < 0 convention used throughout the subalgebra count
    if a < 0:
        return Fraction(0)
    return Fraction(1, factorial(a))


def count_subalgebras(n, k):
    """Number of (k+1)-dimensional subalgebras of a generic anticommutative
    algebra structure on C^n, for 1 <= k <= n-2.

    Signed summation over pairs of partitions mu <= lambda inside the
    (k+1) x (n-k-1) box; each pair contributes a factorial ratio times
    (|lambda|-|mu|)! times the square of det[ 1/(i-j+lambda_j-mu_i)! ].
    """
    n, k = int(n), int(k)
    if not (1 <= k <= n - 2):
        raise DomainError("k out of range")
    parts = k + 1
    width = n - k - 1
    shapes = _box_partitions(parts, width)
    total = Fraction(0)
    for lam in shapes:
        wl = sum(lam)
        # weights (lambda_t + k + 1 - t)! for t = 1..k+1
        num = 1
        for t, lt in enumerate(lam):
            num *= factorial(lt + parts - 1 - t)
        for mu in shapes:
            if any(m > l for m, l in zip(mu, lam)):
                continue
            wm = sum(mu)
            den = 1
            for t, mt in enumerate(mu):
                den *= factorial(mt + parts - 1 - t)
            rows = []
            for i in range(parts):
                rows.append([_inv_factorial((i + 1) - (j + 1) + lam[j] - mu[i])
                             for j in range(parts)])
            det = RatMatrix(rows).det()
            sign = -1 if wm % 2 else 1
            total += sign * Fraction(num, den) * factorial(wl - wm) * det * det
    if total.denominator != 1 or total < 0:
        raise DomainError("subalgebra count did not reduce to an integer")
    return int(total)


def count_1dim_subalgebras_commutative(n):
    """1-dimensional subalgebras of a generic commutative algebra on C^n."""
    n = int(n)
    if n < 1:
        raise DomainError("n out of range")
    return 2 ** n - 1


def d_discriminant_degree(n):
    """Degree of the discriminant of anticommutative algebra structures on C^n."""
    n = int(n)
    if n < 3:
        raise DomainError("n out of range")
    raw = (3 * n * n - 5 * n) * 2 ** n - 4 * n * (-1) ** n
    q, rem = divmod(raw, 18)
    assert rem == 0, "degree formula must produce an integer"
    return q


# --- linear systems of matrices of constant rank --------------------------

def constant_rank_bounds(r, m, n=None, kind="general"):
    """Dimension bounds for linear spaces of m x n matrices built from rank
    conditions.  Returns a dict holding every bound that applies to the query;
    keys that no published bound covers are absent.

    kind "general": rectangular matrices; "symmetric"/"skew": square (n = m).
    rank_bounded_below_max caps spaces whose nonzero members all have rank
    >= r; constant_rank_lower/upper bracket the affine dimension of spaces of
    constant rank r.  Symmetric even rank is solved exactly, and the record
    also carries the projective maximum m - r.  Odd rank in the symmetric or
    skew case pins the constant-rank dimension at 1.
    """
    r, m = int(r), int(m)
    if kind not in ("general", "symmetric", "skew"):
        raise DomainError("invalid query")
    if kind == "general":
        if n is None:
            raise DomainError("invalid query")
        n = int(n)
    else:
        if n is not None and int(n) != m:
            raise DomainError("invalid query")
        n = m
    if not (0 < r <= min(m, n)):
        raise DomainError("invalid query")
    out = {"kind": kind, "r": r, "m": m, "n": n}
    if kind == "general":
        mm, nn = min(m, n), max(m, n)
        out["rank_bounded_below_max"] = (m - r) * (n - r)
        out["constant_rank_lower"] = nn - r + 1
        if r >= 2:
            out["constant_rank_upper"] = mm + nn - 2 * r + 1
    elif kind == "symmetric":
        out["rank_bounded_below_max"] = comb(m - r + 1, 2)
        if r % 2 == 0:
            # exact: affine max m-r+1, reported projectively as m-r
            out["constant_rank_lower"] = m - r + 1
            out["constant_rank_upper"] = m - r + 1
            out["constant_rank_projective_max"] = m - r
        else:
            out["constant_rank_lower"] = 1
            out["constant_rank_upper"] = 1
    else:
        if r % 2 == 0:
            out["rank_bounded_below_max"] = comb(m - r, 2)
            out["constant_rank_lower"] = m - r + 1
        else:
            # no nonzero skew matrix has odd rank; the constant-rank
            # dimension is pinned at 1 rather than rejected
            out["constant_rank_lower"] = 1
            out["constant_rank_upper"] = 1
    return out
