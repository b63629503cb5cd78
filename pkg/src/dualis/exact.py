"""Exact arithmetic kernel: sparse multivariate polynomials over Q,
total-degree-truncated power series, and dense rational matrices.

All arithmetic uses fractions.Fraction -- no floats anywhere.  Values are
treated as immutable: every operation returns a new object.
"""

import re
from fractions import Fraction


class DomainError(ValueError):
    """A mathematically impossible request, as opposed to malformed input."""


def parse_rational(text):
    """Parse 'p/q' or 'p' into a Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError("bad rational %r" % (text,)) from e


def format_rational(q):
    return str(Fraction(q))


def _glex(e):
    # graded-lex order key for an exponent tuple
    return (sum(e), e)


_VAR_RE = re.compile(r"^([A-Za-z][A-Za-z0-9_]*)(?:\^(\d+))?$")
_NUM_RE = re.compile(r"^\d+(?:/\d+)?$")


class MultiPoly:
    """Sparse polynomial: ordered variable tuple + {exponent tuple: coefficient}.

    Invariant: no zero coefficients are stored; every exponent tuple has
    len(vars) entries.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars_, terms):
        vars_ = tuple(vars_)
        clean = {}
        for exps, c in terms.items():
            c = Fraction(c)
            if c == 0:
                continue
            exps = tuple(int(x) for x in exps)
            if len(exps) != len(vars_) or any(x < 0 for x in exps):
                raise ValueError("bad exponent tuple %r for vars %r" % (exps, vars_))
            clean[exps] = c
        self.vars = vars_
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, vars_):
        return cls(vars_, {})

    @classmethod
    def const(cls, vars_, c):
        vars_ = tuple(vars_)
        return cls(vars_, {(0,) * len(vars_): Fraction(c)})

    @classmethod
    def var(cls, vars_, name):
        vars_ = tuple(vars_)
        if name not in vars_:
            raise ValueError("unknown variable %r" % (name,))
        e = tuple(1 if v == name else 0 for v in vars_)
        return cls(vars_, {e: Fraction(1)})

    @classmethod
    def parse(cls, text, vars_=None):
        """Parse e.g. '3*x0^2*x1 - 1/2*x2^3'.  Variables are [A-Za-z][A-Za-z0-9_]*;
        with vars_=None the variable tuple is the sorted set of names used."""
        raw = []  # (sign, term-string)
        s = text.strip()
        if not s:
            raise ValueError("empty polynomial")
        pieces = re.split(r"([+-])", s)
        sign = 1
        expect_term = True
        for piece in pieces:
            piece = piece.strip()
            if piece == "":
                continue
            if piece == "+" or piece == "-":
                if expect_term and piece == "-":
                    sign = -sign
                elif expect_term:
                    pass
                else:
                    sign = -1 if piece == "-" else 1
                    expect_term = True
                continue
            raw.append((sign, piece))
            sign = 1
            expect_term = False
        if expect_term and raw:
            raise ValueError("dangling sign in %r" % (text,))
        if not raw:
            raise ValueError("no terms in %r" % (text,))

        parsed = []  # (coeff, {name: exp})
        names = set()
        for sgn, term in raw:
            coeff = Fraction(sgn)
            exps = {}
            for factor in term.split("*"):
                factor = factor.strip()
                if _NUM_RE.match(factor):
                    coeff *= Fraction(factor)
                    continue
                m = _VAR_RE.match(factor)
                if not m:
                    raise ValueError("bad factor %r in %r" % (factor, text))
                name, exp = m.group(1), int(m.group(2) or 1)
                exps[name] = exps.get(name, 0) + exp
                names.add(name)
            parsed.append((coeff, exps))

        if vars_ is None:
            vars_ = tuple(sorted(names))
        else:
            vars_ = tuple(vars_)
            extra = names - set(vars_)
            if extra:
                raise ValueError("unknown variables %s" % (sorted(extra),))
        terms = {}
        for coeff, exps in parsed:
            key = tuple(exps.get(v, 0) for v in vars_)
            terms[key] = terms.get(key, Fraction(0)) + coeff
        return cls(vars_, terms)

    # -- queries -----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * len(self.vars), Fraction(0))

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), Fraction(0))

    def _lead(self):
        e = max(self.terms, key=_glex)
        return e, self.terms[e]

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    # -- arithmetic --------------------------------------------------------

    def _check(self, other):
        if self.vars != other.vars:
            raise ValueError("variable tuples differ: %r vs %r" % (self.vars, other.vars))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.vars, other)
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return MultiPoly(self.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.vars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return MultiPoly(self.vars, {e: c * v for e, v in self.terms.items()})
        self._check(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return MultiPoly(self.vars, terms)

    __rmul__ = __mul__

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            raise ValueError("negative power of a polynomial")
        acc = MultiPoly.const(self.vars, 1)
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base if n > 1 else base
            n >>= 1
        return acc

    def derivative(self, name):
        i = self.vars.index(name)
        terms = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            e2 = e[:i] + (e[i] - 1,) + e[i + 1:]
            terms[e2] = terms.get(e2, Fraction(0)) + c * e[i]
        return MultiPoly(self.vars, terms)

    def evaluate(self, point):
        """Evaluate at {name: value}; values coerced to Fraction."""
        vals = [Fraction(point[v]) for v in self.vars]
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for x, k in zip(vals, e):
                if k:
                    t *= x ** k
            total += t
        return total

    def compose(self, mapping):
        """Substitute polynomials for variables; images must share one var tuple."""
        images = [mapping[v] for v in self.vars]
        tvars = images[0].vars if images else ()
        for im in images:
            if im.vars != tvars:
                raise ValueError("substitution images must share a variable tuple")
        out = MultiPoly.zero(tvars)
        cache = [{0: MultiPoly.const(tvars, 1)} for _ in images]
        for e, c in self.terms.items():
            t = MultiPoly.const(tvars, c)
            for i, k in enumerate(e):
                if k not in cache[i]:
                    cache[i][k] = images[i] ** k
                t = t * cache[i][k]
            out = out + t
        return out

    def rename(self, vars_):
        """Same terms, new variable names (lengths must match)."""
        vars_ = tuple(vars_)
        if len(vars_) != len(self.vars):
            raise ValueError("variable count mismatch")
        return MultiPoly(vars_, self.terms)

    def extended(self, vars_):
        """Re-express in a larger variable tuple (must contain current vars)."""
        vars_ = tuple(vars_)
        pos = [vars_.index(v) for v in self.vars]
        terms = {}
        for e, c in self.terms.items():
            e2 = [0] * len(vars_)
            for p, k in zip(pos, e):
                e2[p] = k
            terms[tuple(e2)] = c
        return MultiPoly(vars_, terms)

    def coeff_list(self, name):
        """Coefficients of powers of one variable, as polynomials in the rest.

        Returns [c_0, ..., c_d] with self = sum c_k * name^k."""
        i = self.vars.index(name)
        rest = self.vars[:i] + self.vars[i + 1:]
        if self.is_zero():
            return [MultiPoly.zero(rest)]
        d = max(e[i] for e in self.terms)
        buckets = [dict() for _ in range(d + 1)]
        for e, c in self.terms.items():
            buckets[e[i]][e[:i] + e[i + 1:]] = c
        return [MultiPoly(rest, b) for b in buckets]

    # -- formatting --------------------------------------------------------

    def format(self):
        if not self.terms:
            return "0"
        out = []
        for e in sorted(self.terms, key=_glex, reverse=True):
            c = self.terms[e]
            factors = []
            for v, k in zip(self.vars, e):
                if k == 1:
                    factors.append(v)
                elif k > 1:
                    factors.append("%s^%d" % (v, k))
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = str(mag) + "*" + "*".join(factors)
            if not out:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(("- " if c < 0 else "+ ") + body)
        return " ".join(out)

    def __repr__(self):
        return "MultiPoly(%r)" % (self.format(),)


def _poly_exact_div(num, den):
    """Exact quotient num/den; raises DomainError when the division is inexact."""
    if den.is_zero():
        raise DomainError("polynomial division by zero")
    num._check(den)
    de, dc = den._lead()
    rem = dict(num.terms)
    q = {}
    while rem:
        e = max(rem, key=_glex)
        c = rem[e]
        diff = tuple(a - b for a, b in zip(e, de))
        if any(x < 0 for x in diff):
            raise DomainError("inexact polynomial division")
        qc = c / dc
        q[diff] = q.get(diff, Fraction(0)) + qc
        for e2, c2 in den.terms.items():
            key = tuple(a + b for a, b in zip(diff, e2))
            v = rem.get(key, Fraction(0)) - qc * c2
            if v == 0:
                rem.pop(key, None)
            else:
                rem[key] = v
    return MultiPoly(num.vars, q)


def poly_divides(f, g):
    """True when f divides g in Q[vars] (single-divisor graded-lex division)."""
    if f.is_zero():
        return g.is_zero()
    if g.is_zero():
        return True
    try:
        _poly_exact_div(g, f)
        return True
    except DomainError:
        return False


def det_laplace(rows, one=None):
    """Determinant by column-by-column Laplace expansion with memoization on
    row subsets.  Division-free, so it works for polynomial entries; cost
    O(2^n * n) entry multiplications."""
    n = len(rows)
    for r in rows:
        if len(r) != n:
            raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1) if one is None else one
    if one is None:
        probe = rows[0][0]
        one = MultiPoly.const(probe.vars, 1) if isinstance(probe, MultiPoly) else Fraction(1)
    states = {0: one}
    for j in range(n):
        new = {}
        for mask, val in states.items():
            for r in range(n):
                bit = 1 << r
                if mask & bit:
                    continue
                entry = rows[r][j]
                if not entry:
                    continue
                t = mask | bit
                idx = bin(t & (bit - 1)).count("1") + 1
                contrib = val * entry
                if (idx + j + 1) % 2:
                    contrib = -contrib
                acc = new.get(t)
                new[t] = contrib if acc is None else acc + contrib
        states = {m: v for m, v in new.items() if v}
    full = (1 << n) - 1
    if full in states:
        return states[full]
    return one - one  # zero of the right type


def poly_resultant(f, g, name):
    """Resultant of f and g with respect to one variable, via the Sylvester
    matrix; result is a polynomial in the remaining variables."""
    fc = f.coeff_list(name)
    gc = g.coeff_list(name)
    m = len(fc) - 1
    n = len(gc) - 1
    if f.is_zero() or g.is_zero():
        raise DomainError("resultant of the zero polynomial")
    rest = fc[0].vars
    zero = MultiPoly.zero(rest)
    size = m + n
    if size == 0:
        return MultiPoly.const(rest, 1)
    rows = []
    for i in range(n):  # shifted copies of f's coefficients, descending powers
        row = [zero] * size
        for k, c in enumerate(reversed(fc)):
            row[i + k] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for k, c in enumerate(reversed(gc)):
            row[i + k] = c
        rows.append(row)
    return det_laplace(rows, one=MultiPoly.const(rest, 1))


class TruncSeries:
    """Power series truncated at a total-degree cap: terms of degree > cap
    are dropped by every operation."""

    __slots__ = ("body", "cap")

    def __init__(self, body, cap):
        cap = int(cap)
        if cap < 0:
            raise ValueError("negative truncation cap")
        terms = {e: c for e, c in body.terms.items() if sum(e) <= cap}
        self.body = MultiPoly(body.vars, terms)
        self.cap = cap

    @classmethod
    def const(cls, vars_, c, cap):
        return cls(MultiPoly.const(vars_, c), cap)

    def _check(self, other):
        if self.cap != other.cap or self.body.vars != other.body.vars:
            raise ValueError("series caps or variables differ")

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.cap == other.cap and self.body == other.body

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TruncSeries.const(self.body.vars, other, self.cap)
        self._check(other)
        return TruncSeries(self.body + other.body, self.cap)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries(-self.body, self.cap)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TruncSeries.const(self.body.vars, other, self.cap)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncSeries(self.body * other, self.cap)
        self._check(other)
        return TruncSeries(self.body * other.body, self.cap)

    __rmul__ = __mul__

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            return series_mul_inverse(self) ** (-n)
        acc = TruncSeries.const(self.body.vars, 1, self.cap)
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base if n > 1 else base
            n >>= 1
        return acc

    def coefficient(self, exps):
        return self.body.coefficient(exps)

    def __repr__(self):
        return "TruncSeries(%s + O(deg %d))" % (self.body.format(), self.cap + 1)


def series_mul_inverse(s):
    """Multiplicative inverse of a truncated series; needs a nonzero constant term."""
    c0 = s.body.constant_term()
    if c0 == 0:
        raise DomainError("not invertible as series")
    u = 1 - s * (Fraction(1) / c0)  # no constant term, so nilpotent mod the cap
    acc = TruncSeries.const(s.body.vars, 1, s.cap)
    for _ in range(s.cap):
        acc = 1 + u * acc
    return acc * (Fraction(1) / c0)


class RatMatrix:
    """Dense rational matrix, row-major."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(Fraction(x) for x in r) for r in rows)
        if rows:
            w = len(rows[0])
            if any(len(r) != w for r in rows):
                raise ValueError("ragged matrix")
            if w == 0:
                raise ValueError("empty rows")
        self.rows = rows

    @classmethod
    def identity(cls, n):
        return cls([[Fraction(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, m, n):
        return cls([[Fraction(0)] * n for _ in range(m)])

    @property
    def shape(self):
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def __eq__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __repr__(self):
        return "RatMatrix(%r)" % ([[str(x) for x in r] for r in self.rows],)

    def entry(self, i, j):
        return self.rows[i][j]

    def transpose(self):
        m, n = self.shape
        return RatMatrix([[self.rows[i][j] for i in range(m)] for j in range(n)])

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return RatMatrix([[a + b for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return RatMatrix([[-a for a in r] for r in self.rows])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return RatMatrix([[c * a for a in r] for r in self.rows])
        m, k = self.shape
        k2, n = other.shape
        if k != k2:
            raise ValueError("shape mismatch in product")
        bt = other.transpose().rows
        return RatMatrix([[sum(a * b for a, b in zip(row, col)) for col in bt]
                          for row in self.rows])

    def __rmul__(self, c):
        return self * c

    def apply(self, vec):
        m, n = self.shape
        vec = [Fraction(x) for x in vec]
        if len(vec) != n:
            raise ValueError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self.rows)

    def is_zero(self):
        return all(a == 0 for r in self.rows for a in r)

    def det(self):
        """Determinant by fraction-free (Bareiss) elimination."""
        m, n = self.shape
        if m != n:
            raise ValueError("determinant of a non-square matrix")
        if n == 0:
            return Fraction(1)
        a = [list(r) for r in self.rows]
        sign = 1
        prev = Fraction(1)
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return Fraction(0)
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
                a[i][k] = Fraction(0)
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def rref(self):
        """Reduced row echelon form; returns (matrix, pivot column tuple)."""
        m, n = self.shape
        a = [list(r) for r in self.rows]
        pivots = []
        row = 0
        for col in range(n):
            piv = None
            for i in range(row, m):
                if a[i][col] != 0:
                    piv = i
                    break
            if piv is None:
                continue
            a[row], a[piv] = a[piv], a[row]
            inv = Fraction(1) / a[row][col]
            a[row] = [x * inv for x in a[row]]
            for i in range(m):
                if i != row and a[i][col] != 0:
                    f = a[i][col]
                    a[i] = [x - f * y for x, y in zip(a[i], a[row])]
            pivots.append(col)
            row += 1
            if row == m:
                break
        return RatMatrix(a), tuple(pivots)

    def rank(self):
        return len(self.rref()[1])

    def kernel(self):
        """Basis of the right kernel as primitive integer vectors, first
        nonzero entry positive."""
        m, n = self.shape
        red, pivots = self.rref()
        free = [j for j in range(n) if j not in pivots]
        basis = []
        for f in free:
            v = [Fraction(0)] * n
            v[f] = Fraction(1)
            for r, p in enumerate(pivots):
                v[p] = -red.rows[r][f]
            basis.append(_primitive(v))
        return tuple(basis)

    def solve(self, rhs):
        """Solve self * x = rhs for square invertible self; rhs is a vector."""
        m, n = self.shape
        if m != n:
            raise ValueError("solve needs a square matrix")
        rhs = [Fraction(x) for x in rhs]
        if len(rhs) != m:
            raise ValueError("vector length mismatch")
        aug = RatMatrix([list(r) + [b] for r, b in zip(self.rows, rhs)])
        red, pivots = aug.rref()
        if pivots != tuple(range(n)):
            raise DomainError("matrix not invertible")
        return tuple(red.rows[i][n] for i in range(n))

    def inverse(self):
        m, n = self.shape
        if m != n:
            raise ValueError("inverse of a non-square matrix")
        aug = RatMatrix([list(r) + [Fraction(i == j) for j in range(n)]
                         for i, r in enumerate(self.rows)])
        red, pivots = aug.rref()
        if pivots != tuple(range(n)):
            raise DomainError("matrix not invertible")
        return RatMatrix([r[n:] for r in red.rows])

    def adjugate(self):
        """Adjugate (transposed cofactor matrix)."""
        m, n = self.shape
        if m != n:
            raise ValueError("adjugate of a non-square matrix")
        cof = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                minor = [[self.rows[r][c] for c in range(n) if c != j]
                         for r in range(n) if r != i]
                d = RatMatrix(minor).det() if n > 1 else Fraction(1)
                cof[i][j] = d if (i + j) % 2 == 0 else -d
        return RatMatrix(cof).transpose()


def _primitive(vec):
    """Scale a rational vector to a primitive integer vector with positive
    first nonzero entry."""
    from math import gcd, lcm
    den = 1
    for x in vec:
        den = lcm(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g:
        ints = [x // g for x in ints]
    for x in ints:
        if x != 0:
            if x < 0:
                ints = [-y for y in ints]
            break
    return tuple(Fraction(x) for x in ints)


def mat_rank_det_kernel(matrix):
    """(rank, determinant or None when non-square, right-kernel basis)."""
    if not isinstance(matrix, RatMatrix):
        matrix = RatMatrix(matrix)
    m, n = matrix.shape
    det = matrix.det() if m == n else None
    return matrix.rank(), det, matrix.kernel()


# -- dense univariate polynomials over Q (coefficient tuples, low to high) ----

def ptrim(c):
    c = [Fraction(x) for x in c]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def padd(a, b):
    n = max(len(a), len(b))
    return ptrim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                  for i in range(n)])


def pneg(a):
    return tuple(-x for x in a)


def pmul(a, b):
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return ptrim(out)


def pscale(a, c):
    c = Fraction(c)
    return ptrim([x * c for x in a])


def pder(a):
    return ptrim([a[i] * i for i in range(1, len(a))])


def pdivmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    r = list(ptrim(a))
    while len(r) >= len(b):
        k = len(r) - len(b)
        c = r[-1] / b[-1]
        q[k] = c
        for i, y in enumerate(b):
            r[k + i] -= c * y
        r = list(ptrim(r))
    return ptrim(q), tuple(r)


def pgcd(a, b):
    """Monic gcd of two coefficient tuples."""
    a, b = ptrim(a), ptrim(b)
    while b:
        a, b = b, pdivmod(a, b)[1]
    if a:
        a = pscale(a, Fraction(1) / a[-1])
    return a


def peval(a, t):
    acc = Fraction(0)
    t = Fraction(t)
    for c in reversed(a):
        acc = acc * t + c
    return acc
