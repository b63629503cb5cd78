"""Exact Moore-Penrose inverses of matrices, bilinear forms and vectors.

mp_matrix produces the unique generalized inverse satisfying the four
Penrose identities, through a full-rank factorization read off the reduced
row echelon form.  mp_bilinear transports the construction to symmetric or
skew bilinear forms (the inverse lives on the dual space, hence the extra
transpose), and mp_vector implements the scalar-product case, which needs
complex conjugation and so runs over Gaussian rationals.
"""

import re as _re
from fractions import Fraction

from .exact import DomainError, RatMatrix, format_rational


class GaussRational:
    """Gaussian rational a + b*i with exact Fraction components."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussRational):
            re, im = re.re, re.im + Fraction(im)
        self.re = Fraction(re)
        self.im = Fraction(im)

    _CHUNK = _re.compile(r"[+-]?[^+-]+")

    @classmethod
    def parse(cls, text):
        """Parse "a", "bi", or "a+bi" with rational a, b (e.g. "1/2-3i")."""
        s = text.replace(" ", "")
        re_part = im_part = None
        chunks = cls._CHUNK.findall(s)
        if not chunks or "".join(chunks) != s:
            raise DomainError("bad Gaussian rational %r" % (text,))
        for chunk in chunks:
            try:
                if chunk.endswith("i"):
                    if im_part is not None:
                        raise ValueError
                    body = chunk[:-1]
                    if body in ("", "+", "-"):
                        body += "1"
                    im_part = Fraction(body)
                else:
                    if re_part is not None:
                        raise ValueError
                    re_part = Fraction(chunk)
            except (ValueError, ZeroDivisionError):
                raise DomainError("bad Gaussian rational %r" % (text,))
        return cls(re_part or 0, im_part if im_part is not None else 0)

    def _coerce(self, other):
        if isinstance(other, GaussRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussRational(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussRational(self.re * other.re - self.im * other.im,
                             self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return self * GaussRational(other.re / n, -other.im / n)

    def __rtruediv__(self, other):
        return GaussRational(other) / self

    def conjugate(self):
        return GaussRational(self.re, -self.im)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def format(self):
        if self.im == 0:
            return format_rational(self.re)
        imag = format_rational(self.im) + "i"
        if self.re == 0:
            return imag
        if self.im > 0:
            imag = "+" + imag
        return format_rational(self.re) + imag

    def __repr__(self):
        return "GaussRational(%s)" % self.format()


def mp_matrix(a):
    """Moore-Penrose inverse of a rational matrix.

    Splits a = b.c with b the pivot columns and c the nonzero rows of the
    reduced echelon form (both of full rank), then
    a+ = c^T (c c^T)^-1 (b^T b)^-1 b^T.
    """
    m, n = a.shape
    if a.is_zero():
        return RatMatrix.zeros(n, m)
    red, pivots = a.rref()
    r = len(pivots)
    b = RatMatrix([[a.rows[i][p] for p in pivots] for i in range(m)])
    c = RatMatrix(red.rows[:r])
    bt, ct = b.transpose(), c.transpose()
    return ct * (c * ct).inverse() * (bt * b).inverse() * bt


def mp_bilinear(w, kind):
    """Moore-Penrose inverse of a symmetric or skew bilinear form.

    The result is a form of the same type on the dual space: on the
    annihilator of the kernel it inverts the induced nondegenerate form,
    and it kills the complementary coordinates.
    """
    m, n = w.shape
    if m != n:
        raise DomainError("bilinear form matrix must be square")
    if kind in ("sym", "symmetric"):
        if w != w.transpose():
            raise DomainError("symmetry mismatch")
    elif kind in ("skew", "skew-symmetric"):
        if w != -w.transpose():
            raise DomainError("symmetry mismatch")
    else:
        raise DomainError("kind must be sym or skew")
    # raising indices inverts the transposed matrix when nondegenerate
    return mp_matrix(w.transpose())


def _pairing(gram, u, v):
    acc = GaussRational(0)
    for i, row in enumerate(gram.rows):
        for j, g in enumerate(row):
            if g:
                acc = acc + u[i] * v[j] * g
    return acc


def mp_vector(v, gram=None):
    """Moore-Penrose inverse of a vector under a symmetric scalar product.

    v is a sequence of Gaussian rationals; gram defaults to the standard
    product.  Anisotropic v maps to 2v/(v,v); isotropic nonzero v maps to
    vbar/(vbar,v), valid whenever v is not conjugate-isotropic as well.
    """
    vec = [x if isinstance(x, GaussRational) else GaussRational(x) for x in v]
    n = len(vec)
    if gram is None:
        gram = RatMatrix.identity(n)
    if gram.shape != (n, n):
        raise DomainError("product matrix size mismatch")
    if gram != gram.transpose():
        raise DomainError("product matrix must be symmetric")
    if not any(vec):
        return [GaussRational(0)] * n
    vv = _pairing(gram, vec, vec)
    if vv:
        return [x * 2 / vv for x in vec]
    vbar = [x.conjugate() for x in vec]
    vbv = _pairing(gram, vbar, vec)
    if not vbv:
        raise DomainError("conjugate-isotropic vector")
    return [x / vbv for x in vbar]
