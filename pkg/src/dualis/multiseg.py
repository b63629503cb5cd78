"""Multisegment duality (the Zelevinsky involution) by two algorithms.

A multisegment over [1, r] is a multiset of integer segments [i, j]; the
involution zeta is computed independently by the rank-minimization formula
(minimum over monotone maps of a product grid into a chain) and by the
peeling recursion (strip a maximal staircase of segments, recurse, add one
segment back).  The two must agree, which is the module's main self-check.
"""

from itertools import combinations_with_replacement
from math import comb

from .exact import DomainError


class Multisegment:
    """Multiset of segments (i, j), 1 <= i <= j <= r, with multiplicities."""

    __slots__ = ("r", "mult")

    def __init__(self, r, mult=None):
        r = int(r)
        if r < 1:
            raise DomainError("need r >= 1")
        clean = {}
        for (i, j), c in (mult or {}).items():
            i, j, c = int(i), int(j), int(c)
            if not 1 <= i <= j <= r:
                raise DomainError("segment (%d, %d) out of range for r = %d" % (i, j, r))
            if c < 0:
                raise DomainError("negative multiplicity")
            if c:
                clean[(i, j)] = clean.get((i, j), 0) + c
        self.r = r
        self.mult = clean

    @classmethod
    def from_segments(cls, r, pairs):
        mult = {}
        for i, j in pairs:
            mult[(i, j)] = mult.get((i, j), 0) + 1
        return cls(r, mult)

    def canonical(self):
        return tuple(sorted((i, j, c) for (i, j), c in self.mult.items()))

    def total(self):
        return sum(self.mult.values())

    def is_zero(self):
        return not self.mult

    def __eq__(self, other):
        if not isinstance(other, Multisegment):
            return NotImplemented
        return self.r == other.r and self.mult == other.mult

    def __hash__(self):
        return hash((self.r, self.canonical()))

    def __repr__(self):
        if not self.mult:
            return "Multisegment(r=%d, 0)" % self.r
        body = " + ".join(
            ("%d(%d,%d)" % (c, i, j)) if c > 1 else ("(%d,%d)" % (i, j))
            for i, j, c in [(i, j, c) for (i, j), c in sorted(self.mult.items())]
        )
        return "Multisegment(r=%d, %s)" % (self.r, body)


class RankTable:
    """Entries r_ij for 1 <= i <= j <= r; out-of-range lookups give 0."""

    __slots__ = ("r", "entries")

    def __init__(self, r, entries):
        self.r = int(r)
        self.entries = {}
        for (i, j), v in entries.items():
            if not 1 <= i <= j <= self.r:
                raise DomainError("rank index out of range")
            if v < 0:
                raise DomainError("not a rank table")
            self.entries[(i, j)] = int(v)

    def get(self, i, j):
        return self.entries.get((i, j), 0)

    def __eq__(self, other):
        if not isinstance(other, RankTable):
            return NotImplemented
        return self.r == other.r and self.entries == other.entries


def weight(m):
    """d_i = number of segments of m containing i (with multiplicity)."""
    d = [0] * m.r
    for (i, j), c in m.mult.items():
        for t in range(i, j + 1):
            d[t - 1] += c
    return tuple(d)


def ranks(m):
    """r_ij = number of segments containing [i, j]: sum over k <= i, l >= j."""
    entries = {}
    for i in range(1, m.r + 1):
        for j in range(i, m.r + 1):
            entries[(i, j)] = sum(
                c for (k, l), c in m.mult.items() if k <= i and l >= j
            )
    return RankTable(m.r, entries)


def from_ranks(t):
    """Invert ranks by inclusion-exclusion over the two defining inequalities:
    m_ij = r_ij - r_{i-1,j} - r_{i,j+1} + r_{i-1,j+1}."""
    mult = {}
    for i in range(1, t.r + 1):
        for j in range(i, t.r + 1):
            v = t.get(i, j) - t.get(i - 1, j) - t.get(i, j + 1) + t.get(i - 1, j + 1)
            if v < 0:
                raise DomainError("not a rank table")
            if v:
                mult[(i, j)] = v
    return Multisegment(t.r, mult)


def _kz_rank(m, i, j, profile_cap):
    # minimum over monotone maps nu : [1,i] x [j,r] -> [i,j] of the shifted
    # multiplicity sum; all shifted indices automatically land in range
    r = m.r
    cols = list(range(j, r + 1))
    chain = list(range(i, j + 1))
    cells = i * len(cols)

    def cost(v, k, l):
        return m.mult.get((v + k - i, v + l - j), 0)

    if len(chain) == 1:
        v = chain[0]
        return sum(cost(v, k, l) for k in range(1, i + 1) for l in cols)

    if cells <= 12:
        # exhaustive depth-first assignment in row-major order
        best = [None]
        grid = [(k, l) for k in range(1, i + 1) for l in cols]
        ncols = len(cols)

        def rec(pos, acc, vals):
            if best[0] is not None and acc >= best[0]:
                return
            if pos == len(grid):
                best[0] = acc
                return
            k, l = grid[pos]
            lo = chain[0]
            if pos % ncols:  # same row, previous column
                lo = max(lo, vals[pos - 1])
            if pos >= ncols:  # previous row, same column
                lo = max(lo, vals[pos - ncols])
            for v in range(lo, chain[-1] + 1):
                vals.append(v)
                rec(pos + 1, acc + cost(v, k, l), vals)
                vals.pop()

        rec(0, 0, [])
        return best[0]

    # profile DP over rows k = 1..i: a profile lists nu(k, l) for l = j..r,
    # nondecreasing along the row; successive rows dominate componentwise
    nprof = comb(len(cols) + len(chain) - 1, len(cols))
    if nprof > profile_cap:
        raise DomainError("instance too large")
    profiles = list(combinations_with_replacement(chain, len(cols)))
    index = {p: t for t, p in enumerate(profiles)}
    preds = []  # single-coordinate decrements staying nondecreasing
    for p in profiles:
        dn = []
        for t in range(len(p)):
            if p[t] > chain[0] and (t == 0 or p[t] - 1 >= p[t - 1]):
                q = p[:t] + (p[t] - 1,) + p[t + 1:]
                dn.append(index[q])
        preds.append(tuple(dn))
    best = None
    for k in range(1, i + 1):
        if best is None:
            lower = [0] * len(profiles)
        else:
            # lower[t] = min of best over all profiles componentwise <= p_t
            lower = list(best)
            for t, p in enumerate(profiles):
                for q in preds[t]:
                    if lower[q] < lower[t]:
                        lower[t] = lower[q]
        best = [
            lower[t] + sum(cost(v, k, l) for v, l in zip(p, cols))
            for t, p in enumerate(profiles)
        ]
    return min(best)


def zeta_kz(m, profile_cap=100000):
    """The involution via rank minimization over monotone grid-to-chain maps."""
    entries = {}
    for i in range(1, m.r + 1):
        for j in range(i, m.r + 1):
            entries[(i, j)] = _kz_rank(m, i, j, profile_cap)
    return from_ranks(RankTable(m.r, entries))


def zeta_mw(m):
    """The involution via the peeling recursion: remove a maximal staircase
    i_1 < i_1 + 1 < ... through segments with strictly increasing right ends,
    shorten each by its left cell, recurse, and add back one segment that
    records the staircase's length."""
    memo = {}
    mult = _mw(dict(m.mult), m.r, memo)
    return Multisegment(m.r, mult)


def _mw(mult, r, memo):
    if not mult:
        return {}
    key = tuple(sorted(mult.items()))
    hit = memo.get(key)
    if hit is not None:
        return dict(hit)
    i1 = min(i for (i, j) in mult)
    js = []
    row = i1
    prev = 0
    while True:
        cands = [j for (i, j) in mult if i == row and j > prev and mult[(i, j)]]
        if not cands:
            break
        prev = min(cands)
        js.append(prev)
        row += 1
    p = len(js)
    new = dict(mult)
    for t, j in enumerate(js):
        it = i1 + t
        new[(it, j)] -= 1
        if not new[(it, j)]:
            del new[(it, j)]
        if it + 1 <= j:
            new[(it + 1, j)] = new.get((it + 1, j), 0) + 1
    res = _mw(new, r, memo)
    seg = (i1, i1 + p - 1)
    res[seg] = res.get(seg, 0) + 1
    memo[key] = dict(res)
    return res
