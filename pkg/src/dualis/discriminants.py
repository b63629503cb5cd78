"""Discriminants of binary forms and determinants of based exact complexes."""

import itertools
from fractions import Fraction

from .exact import (
    DomainError, MultiPoly, RatMatrix, det_laplace, parse_rational,
    pgcd as _pgcd, ptrim as _ptrim,
)


class BinaryForm:
    """Binary form f = sum a_i x^(d-i) y^i of degree d, coefficients a_0..a_d."""

    __slots__ = ("d", "coeffs")

    def __init__(self, d, coeffs):
        d = int(d)
        coeffs = tuple(Fraction(c) for c in coeffs)
        if d < 1 or len(coeffs) != d + 1:
            raise ValueError("degree-%d form needs %d coefficients" % (d, d + 1))
        self.d = d
        self.coeffs = coeffs

    def __eq__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return self.d == other.d and self.coeffs == other.coeffs

    def __repr__(self):
        return "BinaryForm(%d, %r)" % (self.d, [str(c) for c in self.coeffs])

    def dx_coeffs(self):
        # d/dx: coefficients of a degree d-1 form in the same basis
        a, d = self.coeffs, self.d
        return tuple((d - i) * a[i] for i in range(d))

    def dy_coeffs(self):
        a, d = self.coeffs, self.d
        return tuple(i * a[i] for i in range(1, d + 1))


def _sylvester_rows(dy, dx, d, zero):
    # (2d-2) x (2d-2): d-1 shifted copies of the y-derivative coefficients,
    # then d-1 shifted copies of the x-derivative coefficients
    size = 2 * d - 2
    rows = []
    for block in (dy, dx):
        for s in range(d - 1):
            row = [zero] * size
            for k, c in enumerate(block):
                row[s + k] = c
            rows.append(row)
    return rows


def binary_discriminant(form):
    """Discriminant of a binary form: (-1)^(d-1) / d^(d-2) times the resultant
    determinant of its two partial derivatives.  Vanishes exactly when the form
    has a repeated root in P^1."""
    d = form.d
    if d < 2:
        raise ValueError("discriminant needs degree >= 2")
    rows = _sylvester_rows(form.dy_coeffs(), form.dx_coeffs(), d, Fraction(0))
    det = RatMatrix(rows).det()
    return Fraction(-1) ** (d - 1) / Fraction(d) ** (d - 2) * det


def binary_discriminant_symbolic(d):
    """Discriminant of the generic degree-d binary form, as a polynomial in
    the coefficients a0..ad.  Homogeneous of degree 2(d-1)."""
    d = int(d)
    if d < 2:
        raise ValueError("discriminant needs degree >= 2")
    names = tuple("a%d" % i for i in range(d + 1))
    a = [MultiPoly.var(names, n) for n in names]
    dy = [i * a[i] for i in range(1, d + 1)]
    dx = [(d - i) * a[i] for i in range(d)]
    rows = _sylvester_rows(dy, dx, d, MultiPoly.zero(names))
    det = det_laplace(rows, one=MultiPoly.const(names, 1))
    return det * (Fraction(-1) ** (d - 1) / Fraction(d) ** (d - 2))


def discriminant_vanishes(form):
    """Independent oracle: True iff the two partial derivatives share a root
    in P^1 (common factor, or a common root at infinity)."""
    d = form.d
    if d < 2:
        raise ValueError("needs degree >= 2")
    dy = form.dy_coeffs()  # coefficients of x^(d-1), ..., y^(d-1)
    dx = form.dx_coeffs()
    if not any(dy) or not any(dx):
        return True
    if dy[0] == 0 and dx[0] == 0:
        return True  # common root at (1:0)
    # dehomogenize at y=1: univariate in x, low-to-high
    u = _ptrim(tuple(reversed(dy)))
    v = _ptrim(tuple(reversed(dx)))
    return len(_pgcd(u, v)) > 1


class BasedComplex:
    """A complex of based vector spaces  0 -> Q^B0 -> Q^B1 -> ... -> Q^Br -> 0
    sitting in degrees start_degree .. start_degree + r; maps[i] is the
    B_{i+1} x B_i matrix of the i-th differential."""

    __slots__ = ("dims", "maps", "start_degree")

    def __init__(self, dims, maps, start_degree=0):
        dims = tuple(int(b) for b in dims)
        if not dims or any(b < 0 for b in dims):
            raise ValueError("bad dimension vector")
        maps = [m if isinstance(m, RatMatrix) else RatMatrix(m) for m in maps]
        if len(maps) != len(dims) - 1:
            raise ValueError("need %d maps for %d terms" % (len(dims) - 1, len(dims)))
        for i, m in enumerate(maps):
            rows = len(m.rows)
            cols = len(m.rows[0]) if m.rows else 0
            if (rows, cols) != (dims[i + 1], dims[i]):
                # zero-dimensional ends are represented by empty matrices
                if dims[i + 1] == 0 or dims[i] == 0:
                    if m.rows and any(any(x != 0 for x in r) for r in m.rows):
                        raise ValueError("map %d has wrong shape" % (i,))
                else:
                    raise ValueError("map %d has wrong shape" % (i,))
        self.dims = dims
        self.maps = tuple(maps)
        self.start_degree = int(start_degree)

    @classmethod
    def from_dict(cls, data):
        """Build from {'start_degree': m, 'dims': [...], 'maps': [[[p/q str]]]}."""
        dims = data["dims"]
        maps = []
        for raw in data["maps"]:
            maps.append([[parse_rational(x) if isinstance(x, str) else Fraction(x)
                          for x in row] for row in raw])
        return cls(dims, maps, data.get("start_degree", 0))

    def is_complex(self):
        for i in range(len(self.maps) - 1):
            a, b = self.maps[i + 1], self.maps[i]
            if 0 in (self.dims[i], self.dims[i + 1], self.dims[i + 2]):
                continue
            if not (a * b).is_zero():
                return False
        return True

    def is_exact(self):
        r = len(self.dims) - 1
        ranks = [m.rank() if m.rows else 0 for m in self.maps]
        if r == 0:
            return self.dims[0] == 0
        if ranks[0] != self.dims[0] or ranks[r - 1] != self.dims[r]:
            return False
        for i in range(1, r):
            if ranks[i] + ranks[i - 1] != self.dims[i]:
                return False
        return True


def _validate(cx):
    if not cx.is_complex():
        raise DomainError("not a complex")
    if not cx.is_exact():
        raise DomainError("complex not exact")


def admissible_collections(cx):
    """Yield every admissible collection (I_1, ..., I_{r-1}) of basis-index
    subsets: I_0 is empty, I_r is everything, #I_{i+1} = B_i - #I_i, and every
    square block (maps[i])[I_{i+1}, complement of I_i] is invertible."""
    _validate(cx)
    r = len(cx.dims) - 1
    sizes = [0]
    for i in range(r):
        sizes.append(cx.dims[i] - sizes[i])

    def rec(i, chosen):
        if i == r:
            yield tuple(chosen[1:-1] if r > 1 else ())
            return
        cols = [c for c in range(cx.dims[i]) if c not in chosen[i]]
        target = sizes[i + 1]
        if i == r - 1:
            options = [tuple(range(cx.dims[r]))] if cx.dims[r] == target else []
        else:
            options = itertools.combinations(range(cx.dims[i + 1]), target)
        for rows_pick in options:
            sub = [[cx.maps[i].rows[rr][cc] for cc in cols] for rr in rows_pick]
            if target == 0 or RatMatrix(sub).det() != 0:
                chosen.append(set(rows_pick))
                yield from rec(i + 1, chosen)
                chosen.pop()

    yield from rec(0, [set()])


def _inversion_sign(seq):
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def _shuffle_sign(dims, chosen):
    # orientation factor making the block-determinant product independent of
    # the admissible collection: over odd degrees the chosen indices are
    # wedged first, over even degrees the complements are
    odd = [(i, b) for i in range(1, len(dims), 2) for b in sorted(chosen[i])]
    odd += [(i, b) for i in range(1, len(dims), 2)
            for b in range(dims[i]) if b not in chosen[i]]
    even = [(i, b) for i in range(0, len(dims), 2)
            for b in range(dims[i]) if b not in chosen[i]]
    even += [(i, b) for i in range(0, len(dims), 2) for b in sorted(chosen[i])]
    return _inversion_sign(odd) * _inversion_sign(even)


def cayley_value(cx, collection):
    """Value of the complex determinant for one admissible collection."""
    r = len(cx.dims) - 1
    chosen = [set()] + [set(s) for s in collection] + ([set(range(cx.dims[r]))] if r > 0 else [])
    value = Fraction(1)
    for i in range(r):
        cols = [c for c in range(cx.dims[i]) if c not in chosen[i]]
        rows_pick = sorted(chosen[i + 1])
        if len(cols) != len(rows_pick):
            raise DomainError("collection sizes are inconsistent")
        if cols:
            sub = RatMatrix([[cx.maps[i].rows[rr][cc] for cc in cols] for rr in rows_pick])
            d = sub.det()
        else:
            d = Fraction(1)
        if d == 0:
            raise DomainError("collection block not invertible")
        if i % 2 == 0:
            value *= d
        else:
            value /= d
    value *= _shuffle_sign(cx.dims, chosen)
    # shifting the grading by one inverts the determinant
    return value if cx.start_degree % 2 == 0 else 1 / value


def cayley_determinant(cx):
    """Determinant of a based exact complex.  Independent of the admissible
    collection; shifting the grading by one inverts the value."""
    _validate(cx)
    r = len(cx.dims) - 1
    if r == 0:
        return Fraction(1)
    # greedy collection: rows made independent by elimination at each step
    chosen = set()
    collection = []
    for i in range(r - 1):
        cols = [c for c in range(cx.dims[i]) if c not in chosen]
        m = cx.maps[i]
        sub = RatMatrix([[m.rows[rr][cc] for cc in cols]
                         for rr in range(cx.dims[i + 1])]) if cols else None
        if cols:
            _, pivots = sub.transpose().rref()
            rows_pick = pivots  # row indices giving an invertible block
        else:
            rows_pick = ()
        if len(rows_pick) != len(cols):
            raise DomainError("complex not exact")
        collection.append(tuple(rows_pick))
        chosen = set(rows_pick)
    return cayley_value(cx, tuple(collection))


def cayley_scaling_exponent(cx):
    """Exponent e with  det(lambda * maps) = lambda^e * det(maps): the
    alternating weighted sum of the term dimensions over their actual
    grading degrees."""
    m = cx.start_degree
    return sum((-1) ** (m + j + 1) * (m + j) * b for j, b in enumerate(cx.dims))
