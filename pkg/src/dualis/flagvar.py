"""Root-system engine and duality invariants of polarized flag varieties.

Simple root systems are realized in their standard ambient coordinates with
the Euclidean dot product as invariant pairing; everything downstream
(dimensions of G/P, nef values, defect classification, adjoint-discriminant
degrees, the permanent formula for dual degrees of full flag varieties) is
exact rational arithmetic on those vectors.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from math import factorial

from .exact import DomainError, RatMatrix

_POSITIVE_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": {6: 36, 7: 63, 8: 120},
    "F": {4: 24},
    "G": {2: 6},
}


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def _vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def _vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def _vec_scale(c, u):
    return tuple(c * a for a in u)


def _simple_roots(kind, rank):
    F = Fraction
    if kind == "A":
        if rank < 1:
            raise DomainError("inadmissible type")
        dim = rank + 1
        return [
            tuple(F(int(j == i)) - F(int(j == i + 1)) for j in range(dim))
            for i in range(rank)
        ]
    if kind in ("B", "C"):
        if rank < 2:
            raise DomainError("inadmissible type")
        simple = [
            tuple(F(int(j == i)) - F(int(j == i + 1)) for j in range(rank))
            for i in range(rank - 1)
        ]
        last = [F(0)] * rank
        last[-1] = F(1) if kind == "B" else F(2)
        simple.append(tuple(last))
        return simple
    if kind == "D":
        if rank < 3:
            raise DomainError("inadmissible type")
        simple = [
            tuple(F(int(j == i)) - F(int(j == i + 1)) for j in range(rank))
            for i in range(rank - 1)
        ]
        last = [F(0)] * rank
        last[-2] = F(1)
        last[-1] = F(1)
        simple.append(tuple(last))
        return simple
    if kind == "E":
        if rank not in (6, 7, 8):
            raise DomainError("inadmissible type")
        e = [tuple(F(int(j == i)) for j in range(8)) for i in range(8)]
        half = F(1, 2)
        alpha1 = tuple(
            half * (e[0][j] + e[7][j])
            - half * sum(e[k][j] for k in range(1, 7))
            for j in range(8)
        )
        full = [
            alpha1,
            _vec_add(e[0], e[1]),
            _vec_sub(e[1], e[0]),
            _vec_sub(e[2], e[1]),
            _vec_sub(e[3], e[2]),
            _vec_sub(e[4], e[3]),
            _vec_sub(e[5], e[4]),
            _vec_sub(e[6], e[5]),
        ]
        return full[:rank]
    if kind == "F":
        if rank != 4:
            raise DomainError("inadmissible type")
        half = F(1, 2)
        return [
            (F(0), F(1), F(-1), F(0)),
            (F(0), F(0), F(1), F(-1)),
            (F(0), F(0), F(0), F(1)),
            (half, -half, -half, -half),
        ]
    if kind == "G":
        if rank != 2:
            raise DomainError("inadmissible type")
        return [
            (F(1), F(-1), F(0)),
            (F(-2), F(1), F(1)),
        ]
    raise DomainError("inadmissible type")


class RootSystem:
    """Simple root system: simple roots, positive roots with their
    simple-root coordinates, and fundamental weights, all exact."""

    __slots__ = ("kind", "rank", "simple", "positive", "pos_coords", "fundamental")

    def __init__(self, kind, rank):
        kind = str(kind).upper()
        rank = int(rank)
        simple = _simple_roots(kind, rank)
        # reflection closure generates the whole root set from the simples
        roots = set(simple)
        frontier = list(simple)
        while frontier:
            beta = frontier.pop()
            for alpha in simple:
                c = 2 * _dot(beta, alpha) / _dot(alpha, alpha)
                new = _vec_sub(beta, _vec_scale(c, alpha))
                if new not in roots:
                    roots.add(new)
                    frontier.append(new)
        gram = RatMatrix([[_dot(a, b) for b in simple] for a in simple])
        positive = []
        pos_coords = []
        for beta in roots:
            coords = gram.solve([_dot(beta, a) for a in simple])
            if all(c >= 0 for c in coords):
                if any(c.denominator != 1 for c in coords):
                    raise DomainError("root with non-integral coordinates")
                positive.append(beta)
                pos_coords.append(tuple(int(c) for c in coords))
        order = sorted(
            range(len(positive)), key=lambda t: (sum(pos_coords[t]), pos_coords[t])
        )
        self.kind = kind
        self.rank = rank
        self.simple = tuple(simple)
        self.positive = tuple(positive[t] for t in order)
        self.pos_coords = tuple(pos_coords[t] for t in order)
        counts = _POSITIVE_COUNTS[kind]
        expect = counts(rank) if callable(counts) else counts[rank]
        if len(self.positive) != expect:
            raise DomainError("root closure produced a wrong count")
        # fundamental weights from the Cartan system <omega_i, alpha_j^v> = delta_ij
        cartan = RatMatrix(
            [
                [2 * _dot(a, b) / _dot(b, b) for a in simple]
                for b in simple
            ]
        )
        fundamental = []
        for i in range(rank):
            x = cartan.solve([Fraction(int(j == i)) for j in range(rank)])
            w = tuple(
                sum(x[k] * simple[k][t] for k in range(rank))
                for t in range(len(simple[0]))
            )
            fundamental.append(w)
        self.fundamental = tuple(fundamental)

    def coroot(self, beta):
        return _vec_scale(Fraction(2) / _dot(beta, beta), beta)

    def __repr__(self):
        return "RootSystem(%s%d)" % (self.kind, self.rank)


@lru_cache(maxsize=None)
def build_root_system(kind, rank):
    return RootSystem(str(kind).upper(), int(rank))


def _normalize_removed(rs, removed):
    removed = tuple(sorted(set(int(i) for i in removed)))
    if not removed or any(i < 1 or i > rs.rank for i in removed):
        raise DomainError("parabolic indices out of range")
    return removed


def _ample_weight(rs, removed, weight):
    # very ample on G/P: strictly positive exactly on the removed nodes
    w = {int(k): int(v) for k, v in weight.items() if int(v)}
    if set(w) != set(removed) or any(v < 1 for v in w.values()):
        raise DomainError("non-ample weight")
    return w


def _unsupported(rs, removed):
    # indices of positive roots using at least one removed simple root
    out = []
    for t, coords in enumerate(rs.pos_coords):
        if any(coords[i - 1] for i in removed):
            out.append(t)
    return out


def dim_flag(rs, removed):
    removed = _normalize_removed(rs, removed)
    return len(_unsupported(rs, removed))


def _rho_gp(rs, removed):
    total = tuple(Fraction(0) for _ in rs.simple[0])
    for t in _unsupported(rs, removed):
        total = _vec_add(total, rs.positive[t])
    return total


def nef_value(rs, removed, weight):
    """tau = max over removed alpha of (rho_{G/P}, alpha) / (lambda, alpha)."""
    removed = _normalize_removed(rs, removed)
    w = _ample_weight(rs, removed, weight)
    lam = tuple(Fraction(0) for _ in rs.simple[0])
    for i, n in w.items():
        lam = _vec_add(lam, _vec_scale(Fraction(n), rs.fundamental[i - 1]))
    rho = _rho_gp(rs, removed)
    best = None
    for i in removed:
        alpha = rs.simple[i - 1]
        val = _dot(rho, alpha) / _dot(lam, alpha)
        if best is None or val > best:
            best = val
    return best


def nef_morphism_target(rs, removed, weight):
    """Removal set of the parabolic the nef-value morphism contracts onto:
    drop the simple roots attaining the maximum."""
    removed = _normalize_removed(rs, removed)
    w = _ample_weight(rs, removed, weight)
    tau = nef_value(rs, removed, weight)
    lam = tuple(Fraction(0) for _ in rs.simple[0])
    for i, n in w.items():
        lam = _vec_add(lam, _vec_scale(Fraction(n), rs.fundamental[i - 1]))
    rho = _rho_gp(rs, removed)
    keep = []
    for i in removed:
        alpha = rs.simple[i - 1]
        if _dot(rho, alpha) / _dot(lam, alpha) != tau:
            keep.append(i)
    return tuple(keep)


def maximal_parabolic_table(kind, rank):
    """Rows (i, dim G/P_i, nef value of omega_i) over all maximal parabolics."""
    rs = build_root_system(kind, rank)
    rows = []
    for i in range(1, rank + 1):
        d = dim_flag(rs, (i,))
        tau = nef_value(rs, (i,), {i: 1})
        assert tau.denominator == 1
        rows.append((i, d, int(tau)))
    return rows


def _simple_factor_defect(rs, removed, weight):
    removed = _normalize_removed(rs, removed)
    w = _ample_weight(rs, removed, weight)
    if len(removed) > 1:
        return 0
    i = removed[0]
    if w[i] >= 2:
        return 0
    kind, l = rs.kind, rs.rank
    if kind == "A" and i in (1, l):
        return l
    if kind == "A" and l >= 4 and l % 2 == 0 and i in (2, l - 1):
        return 2
    if kind == "C" and i == 1:
        return 2 * l - 1
    if kind == "B" and (l, i) == (2, 2):
        return 3  # same variety as C2/P1
    if kind == "B" and (l, i) == (4, 4):
        return 4
    if kind == "D" and l == 5 and i in (4, 5):
        return 4
    return 0


def defect_flag(factors):
    """Dual defect of a product of polarized flag varieties.

    Each factor is (rs, removed, weight).  A positive total needs one factor
    whose own defect exceeds the combined dimension of all the others."""
    factors = list(factors)
    if not factors:
        raise DomainError("need at least one factor")
    defs_ = []
    dims = []
    for rs, removed, weight in factors:
        defs_.append(_simple_factor_defect(rs, removed, weight))
        dims.append(dim_flag(rs, removed))
    total_dim = sum(dims)
    best = 0
    for d, dim in zip(defs_, dims):
        best = max(best, d - (total_dim - dim))
    return best


def adjoint_discriminant_degrees(kind, rank):
    """Degrees (long, short) of the two irreducible factors of the adjoint
    discriminant; the short factor is reported 0 in simply-laced types."""
    rs = build_root_system(kind, rank)
    norms = sorted(set(_dot(b, b) for b in rs.positive))
    if len(norms) == 1:
        return (2 * len(rs.positive), 0)
    long_count = sum(1 for b in rs.positive if _dot(b, b) == norms[-1])
    short_count = len(rs.positive) - long_count
    return (2 * long_count, 2 * short_count)


def _perm_sums(m):
    """P_s = sum of permanents of all s x s submatrices, s = 0..N, by a
    subset DP: each row is skipped or matched to an unused column."""
    n = len(m)
    states = {0: Fraction(1)}
    for i in range(n):
        new = {}
        for mask, val in states.items():
            new[mask] = new.get(mask, Fraction(0)) + val  # skip row i
            for c in range(n):
                bit = 1 << c
                if mask & bit or not m[i][c]:
                    continue
                key = mask | bit
                new[key] = new.get(key, Fraction(0)) + val * m[i][c]
        states = new
    sums = [Fraction(0)] * (n + 1)
    for mask, val in states.items():
        sums[bin(mask).count("1")] += val
    return sums


def _perm_sums_bruteforce(m):
    # reference implementation: explicit row/column subsets and permanents
    n = len(m)
    sums = [Fraction(0)] * (n + 1)
    for s in range(n + 1):
        for rows_pick in combinations(range(n), s):
            for cols_pick in combinations(range(n), s):
                acc = Fraction(0)
                for perm in permutations(range(s)):
                    term = Fraction(1)
                    for a, b in zip(rows_pick, perm):
                        term *= m[a][cols_pick[b]]
                    acc += term
                sums[s] += acc
    return sums


def degree_dual_gb(kind, rank):
    """Degree of the dual of the minimally embedded full flag variety, from
    permanent sums of the coroot pairing matrix.

    Two normalizations of the sum are reported: the plain one and the
    alternating one; only the alternating sum reproduces independently known
    degrees, so it is the one returned as `degree`."""
    rs = build_root_system(kind, rank)
    n = len(rs.positive)
    if n > 8:
        raise DomainError("rank cap exceeded")
    rho = tuple(
        sum(b[t] for b in rs.positive) / 2 for t in range(len(rs.positive[0]))
    )
    m = []
    for bi in rs.positive:
        cv = rs.coroot(bi)
        denom = _dot(cv, rho)
        m.append([_dot(cv, bj) / denom for bj in rs.positive])
    sums = _perm_sums(m)
    plain = Fraction(0)
    alternating = Fraction(0)
    for s in range(n + 1):
        term = factorial(s + 1) * sums[n - s]
        plain += term
        alternating += term if s % 2 == 0 else -term
    applicable = not (kind.upper() == "A" and rank == 1)
    out = {
        "applicable": applicable,
        "plain_sum": _as_int(plain),
        "alternating_sum": _as_int(alternating),
        "degree": _as_int(abs(alternating)) if applicable else None,
    }
    return out


def _as_int(x):
    return int(x) if x.denominator == 1 else x
