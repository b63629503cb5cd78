"""Dual plane curves: parametric duals, dual conics, dual sextics of smooth
cubics, and the numerical bookkeeping between a curve and its dual."""

from collections import namedtuple
from fractions import Fraction

from .exact import (
    DomainError, MultiPoly, RatMatrix, det_laplace,
    padd as _padd, pder as _pder, pdivmod as _pdivmod, peval as _peval,
    pgcd as _pgcd, pmul as _pmul, pneg as _pneg, pscale as _pscale,
    ptrim as _ptrim,
)


def _pformat(a, var):
    if not a:
        return "0"
    terms = {(k,): c for k, c in enumerate(a)}
    return MultiPoly((var,), terms).format()


class RatFunc:
    """Univariate rational function over Q, reduced, with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=(1,)):
        num, den = _ptrim(num), _ptrim(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        g = _pgcd(num, den)
        if len(g) > 1:
            num = _pdivmod(num, g)[0]
            den = _pdivmod(den, g)[0]
        if not num:
            den = (Fraction(1),)
        else:
            lead = den[-1]
            if lead != 1:
                num = _pscale(num, Fraction(1) / lead)
                den = _pscale(den, Fraction(1) / lead)
        self.num = num
        self.den = den

    @classmethod
    def const(cls, c):
        return cls((Fraction(c),))

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def is_zero(self):
        return not self.num

    def is_constant(self):
        return len(self.num) <= 1 and len(self.den) == 1

    def __add__(self, other):
        if not isinstance(other, RatFunc):
            other = RatFunc.const(other)
        return RatFunc(_padd(_pmul(self.num, other.den), _pmul(other.num, self.den)),
                       _pmul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(_pneg(self.num), self.den)

    def __sub__(self, other):
        if not isinstance(other, RatFunc):
            other = RatFunc.const(other)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, RatFunc):
            other = RatFunc.const(other)
        return RatFunc(_pmul(self.num, other.num), _pmul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, RatFunc):
            other = RatFunc.const(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero function")
        return RatFunc(_pmul(self.num, other.den), _pmul(self.den, other.num))

    def derivative(self):
        n, d = self.num, self.den
        return RatFunc(_padd(_pmul(_pder(n), d), _pneg(_pmul(n, _pder(d)))),
                       _pmul(d, d))

    def evaluate(self, t):
        dv = _peval(self.den, Fraction(t))
        if dv == 0:
            raise ZeroDivisionError("pole at t=%s" % (t,))
        return _peval(self.num, Fraction(t)) / dv

    def format(self, var="t"):
        if len(self.den) == 1:
            return _pformat(self.num, var)
        return "(%s) / (%s)" % (_pformat(self.num, var), _pformat(self.den, var))

    def __repr__(self):
        return "RatFunc(%r)" % (self.format(),)


def _parse_poly_to_tuple(text, var):
    p = MultiPoly.parse(text)
    if len(p.vars) > 1 or (p.vars and var is not None and p.vars[0] != var):
        raise ValueError("expected a univariate polynomial, got %r" % (text,))
    if not p.vars:
        return _ptrim([p.constant_term()]), var
    name = p.vars[0]
    d = p.degree()
    return _ptrim([p.coefficient((k,)) for k in range(d + 1)]), name


def parse_ratio(text, var=None):
    """Parse '<poly>' or '(<poly>) / (<poly>)' into (RatFunc, variable name)."""
    s = text.strip()
    if s.startswith("("):
        depth = 0
        for i, ch in enumerate(s):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth == 0:
                    break
        else:
            raise ValueError("unbalanced parentheses in %r" % (text,))
        num_s = s[1:i]
        rest = s[i + 1:].strip()
        if not rest:
            num, var = _parse_poly_to_tuple(num_s, var)
            return RatFunc(num), var
        if not rest.startswith("/"):
            raise ValueError("expected '/' in %r" % (text,))
        rest = rest[1:].strip()
        if not (rest.startswith("(") and rest.endswith(")")):
            raise ValueError("denominator must be parenthesized in %r" % (text,))
        num, var = _parse_poly_to_tuple(num_s, var)
        den, var = _parse_poly_to_tuple(rest[1:-1], var)
        return RatFunc(num, den), var
    num, var = _parse_poly_to_tuple(s, var)
    return RatFunc(num), var


class RationalParamCurve:
    """Plane curve given parametrically by rational functions t -> (x(t), y(t))."""

    __slots__ = ("x", "y")

    def __init__(self, x, y):
        if not isinstance(x, RatFunc) or not isinstance(y, RatFunc):
            raise ValueError("coordinates must be rational functions")
        self.x = x
        self.y = y

    @classmethod
    def parse(cls, x_text, y_text):
        x, var = parse_ratio(x_text)
        y, _ = parse_ratio(y_text, var)
        return cls(x, y)

    def __eq__(self, other):
        if not isinstance(other, RationalParamCurve):
            return NotImplemented
        return self.x == other.x and self.y == other.y

    def __repr__(self):
        return "RationalParamCurve(x=%s, y=%s)" % (self.x.format(), self.y.format())


def dual_parametric(curve):
    """Dual curve of t -> (x, y): the tangent line at t is p*X + q*Y = 1 with
    p = -y' / (x'y - xy'),  q = x' / (x'y - xy').  Applying this twice gives
    the original curve back."""
    x, y = curve.x, curve.y
    xd, yd = x.derivative(), y.derivative()
    w = xd * y - x * yd
    if w.is_zero():
        raise DomainError("degenerate (linear) curve")
    p = (-yd) / w
    q = xd / w
    if p.is_constant() and q.is_constant():
        raise DomainError("degenerate (linear) curve")
    return RationalParamCurve(p, q)


def dual_conic(matrix):
    """Dual of the smooth conic x^T A x = 0: the adjugate of A, scaled so its
    first nonzero entry is 1."""
    if not isinstance(matrix, RatMatrix):
        matrix = RatMatrix(matrix)
    if matrix.shape != (3, 3) or matrix != matrix.transpose():
        raise ValueError("conic needs a symmetric 3x3 matrix")
    if matrix.det() == 0:
        raise DomainError("degenerate conic")
    adj = matrix.adjugate()
    for row in adj.rows:
        for v in row:
            if v != 0:
                return adj * (Fraction(1) / v)
    raise DomainError("degenerate conic")


def dual_cubic_schlafli(f):
    """Equation of the dual curve of a smooth plane cubic {f = 0}: the bordered
    Hessian of f gives a form V(p, x) quadratic in both groups, and the bordered
    Hessian of V in x gives the dual sextic F(p).

    The result is homogeneous of degree 6 in the dual coordinates (returned
    under the same three variable names) and quartic in the coefficients of f:
    replacing f by c*f multiplies F by c^4.  No normalization is applied."""
    xv = f.vars
    if len(xv) != 3:
        raise ValueError("cubic must use exactly three variables")
    if f.is_zero() or any(sum(e) != 3 for e in f.terms):
        raise ValueError("polynomial is not a homogeneous cubic")
    qv = ("_q0", "_q1", "_q2")
    allv = qv + xv
    q = [MultiPoly.var(allv, n) for n in qv]
    zero = MultiPoly.zero(allv)
    fe = f.extended(allv)
    hess = [[fe.derivative(xv[i]).derivative(xv[j]) for j in range(3)]
            for i in range(3)]

    def bordered(block):
        rows = [[zero] + q]
        for i in range(3):
            rows.append([q[i]] + block[i])
        return det_laplace(rows, one=MultiPoly.const(allv, 1))

    v = bordered(hess)
    vhess = [[v.derivative(xv[i]).derivative(xv[j]) for j in range(3)]
             for i in range(3)]
    big = bordered(vhess)
    # big depends only on the dual coordinates
    for e in big.terms:
        if any(e[3 + i] for i in range(3)):
            raise DomainError("dual sextic not independent of the point coordinates")
    squeezed = MultiPoly(qv, {e[:3]: c for e, c in big.terms.items()})
    return squeezed.rename(xv)


PluckerData = namedtuple("PluckerData", "d d_star g kappa delta b f")


def plucker_solve(d, delta, kappa):
    """Complete the numerical invariants of a plane curve of degree d with
    delta nodes and kappa cusps (and no other singularities): genus, class,
    and the bitangent/flex counts of the dual curve."""
    d, delta, kappa = int(d), int(delta), int(kappa)
    if d < 2 or delta < 0 or kappa < 0:
        raise DomainError("no generic curve with these invariants")
    g2 = (d - 1) * (d - 2) - 2 * delta - 2 * kappa
    if g2 < 0 or g2 % 2:
        raise DomainError("no generic curve with these invariants")
    g = g2 // 2
    d_star = d * (d - 1) - 2 * delta - 3 * kappa
    if d_star < 2:
        raise DomainError("no generic curve with these invariants")
    # genus and degree identities for the dual: g = (d*-1)(d*-2)/2 - b - f,
    # d = d*(d*-1) - 2b - 3f
    s = (d_star - 1) * (d_star - 2) // 2 - g
    t = d_star * (d_star - 1) - d
    f = t - 2 * s
    b = 3 * s - t
    if b < 0 or f < 0:
        raise DomainError("no generic curve with these invariants")
    return PluckerData(d=d, d_star=d_star, g=g, kappa=kappa, delta=delta, b=b, f=f)


def plane_dual_multiplicity(d, d_nonred, mu):
    """Multiplicity of the discriminant of degree-d plane curves at a singular
    member C: (3(d-1) - d') d' + mu, where d' is the degree of the non-reduced
    part C - C_red and mu is the sum of the Milnor numbers of the singular
    points of C_red.  E.g. the discriminant of conics has multiplicity 2 at a
    double line."""
    d, d_nonred, mu = int(d), int(d_nonred), int(mu)
    if d < 1 or d_nonred < 0 or mu < 0:
        raise DomainError("invalid multiplicity data")
    return (3 * (d - 1) - d_nonred) * d_nonred + mu
