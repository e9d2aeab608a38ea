"""Unit-valued 2-cocycles, coboundaries, cohomology, and gradings.

A cocycle on a groupoid stores exponents mod n (n = the order of the
distinguished cyclic unit subgroup), one per composable pair; the actual
ring value g^exp is produced only inside the algebra layer.  Storing
exponents makes the coboundary relation a linear system over Z/n, which
check_cohomologous solves exactly by integer diagonalization (Smith-style
row/column reduction with tracked transforms).  brute_force_cohomologous
is the independent search over all n^(#non-unit arrows) candidate
coboundaries, kept as a cross-validation oracle and fallback.

Gradings are groupoid homomorphisms into a finite group (multiplication
table) or into the integers; degrees are stored per arrow.
"""

from __future__ import annotations

import itertools
import math
from typing import Optional, Sequence

from .groupoid import Groupoid, composable_pairs, composable_triples


class Cocycle:
    """Exponent table over Z/n on the composable pairs of a groupoid."""

    __slots__ = ("gpd", "n", "table")

    def __init__(self, gpd: Groupoid, n: int, table: dict):
        if n < 1:
            raise ValueError("cocycle order must be positive")
        self.gpd = gpd
        self.n = n
        self.table = {pair: k % n for pair, k in table.items()}

    def exp(self, a: int, b: int) -> int:
        return self.table[(a, b)]

    def __eq__(self, other):
        return (
            isinstance(other, Cocycle)
            and self.gpd == other.gpd
            and self.n == other.n
            and self.table == other.table
        )

    def __hash__(self):
        return hash((self.gpd, self.n, tuple(sorted(self.table.items()))))

    def __repr__(self):
        nontriv = sum(1 for k in self.table.values() if k)
        return "Cocycle(order=%d, nontrivial_pairs=%d)" % (self.n, nontriv)


def trivial_cocycle(gpd: Groupoid, n: int) -> Cocycle:
    return Cocycle(gpd, n, {pair: 0 for pair in composable_pairs(gpd)})


def validate_cocycle(coc: Cocycle) -> list:
    """Violations of totality, normalisation, and the 2-cocycle identity."""
    g = coc.gpd
    v = []
    pairs = set(composable_pairs(g))
    for pair in pairs:
        if pair not in coc.table:
            v.append("no value on composable pair (%d, %d)" % pair)
    for pair in coc.table:
        if pair not in pairs:
            v.append("value on non-composable pair (%d, %d)" % pair)
    if v:
        return v
    for a in range(g.m):
        if coc.table[(g.rng[a], a)] % coc.n != 0:
            v.append("normalisation fails on (rng(%d), %d)" % (a, a))
        if coc.table[(a, g.src[a])] % coc.n != 0:
            v.append("normalisation fails on (%d, src(%d))" % (a, a))
    n = coc.n
    t = coc.table
    comp = g.comp
    for a, b, c in composable_triples(g):
        # value on (a,b) then (ab,c) must match (a,bc) then (b,c)
        if (t[(a, b)] + t[(comp[(a, b)], c)] - t[(a, comp[(b, c)])] - t[(b, c)]) % n:
            v.append("2-cocycle identity fails at triple (%d, %d, %d)" % (a, b, c))
    return v


def check_cocycle(coc: Cocycle) -> Cocycle:
    v = validate_cocycle(coc)
    if v:
        raise ValueError("invalid cocycle: " + "; ".join(v[:4]))
    return coc


def _same_context(x: Cocycle, y: Cocycle):
    if x.gpd != y.gpd or x.n != y.n:
        raise ValueError("cocycles live over different groupoids or orders")


def invert_cocycle(coc: Cocycle) -> Cocycle:
    return Cocycle(coc.gpd, coc.n, {p: -k for p, k in coc.table.items()})


def multiply_cocycles(x: Cocycle, y: Cocycle) -> Cocycle:
    _same_context(x, y)
    return Cocycle(x.gpd, x.n, {p: k + y.table[p] for p, k in x.table.items()})


# --- coboundaries ------------------------------------------------------------


def validate_coboundary(gpd: Groupoid, n: int, b: Sequence[int]) -> list:
    v = []
    if len(b) != gpd.m:
        return ["coboundary vector has wrong length"]
    for u in gpd.units:
        if b[u] % n != 0:
            v.append("coboundary is nontrivial on unit %d" % u)
    return v


def apply_coboundary(coc: Cocycle, b: Sequence[int]) -> Cocycle:
    """Perturb by b: new value on (a, c) is old * b(a) b(c) / b(ac)."""
    bad = validate_coboundary(coc.gpd, coc.n, b)
    if bad:
        raise ValueError("; ".join(bad))
    g = coc.gpd
    table = {
        (a, c): k + b[a] + b[c] - b[g.comp[(a, c)]] for (a, c), k in coc.table.items()
    }
    return Cocycle(g, coc.n, table)


def brute_force_cohomologous(
    target: Cocycle, base: Cocycle, cap: int = 200000
) -> Optional[list]:
    """Search all coboundary vectors for apply_coboundary(base, b) == target.

    Candidates run in lexicographic order over the non-unit arrows, so the
    returned witness is the lexicographically least one.  Independent of
    the linear-algebra solver; quadratic-time per candidate.
    """
    _same_context(target, base)
    g = target.gpd
    free = [a for a in range(g.m) if a not in g.unit_set]
    n = target.n
    if n ** len(free) > cap:
        raise ValueError("search space larger than cap %d" % cap)
    for combo in itertools.product(range(n), repeat=len(free)):
        b = [0] * g.m
        for a, k in zip(free, combo):
            b[a] = k
        if apply_coboundary(base, b) == target:
            return b
    return None


def _diagonalize(mat):
    """Integer diagonalization U * A * V = D with unimodular U, V.

    Returns (U, D, V) as lists of lists.  Plain gcd-style row and column
    reduction; the divisibility chain of full Smith form is not needed to
    solve linear systems, a diagonal D suffices.
    """
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    a = [list(r) for r in mat]
    u = [[int(i == j) for j in range(rows)] for i in range(rows)]
    v = [[int(i == j) for j in range(cols)] for i in range(cols)]
    t = 0
    while True:
        pivot = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (best is None or abs(a[i][j]) < best):
                    best = abs(a[i][j])
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            a[t], a[pi] = a[pi], a[t]
            u[t], u[pi] = u[pi], u[t]
        if pj != t:
            for r in a:
                r[t], r[pj] = r[pj], r[t]
            for r in v:
                r[t], r[pj] = r[pj], r[t]
        dirty = False
        for i in range(t + 1, rows):
            if a[i][t]:
                q = a[i][t] // a[t][t]
                for j in range(cols):
                    a[i][j] -= q * a[t][j]
                for j in range(rows):
                    u[i][j] -= q * u[t][j]
                if a[i][t]:
                    dirty = True
        for j in range(t + 1, cols):
            if a[t][j]:
                q = a[t][j] // a[t][t]
                for i in range(rows):
                    a[i][j] -= q * a[i][t]
                for i in range(cols):
                    v[i][j] -= q * v[i][t]
                if a[t][j]:
                    dirty = True
        if dirty:
            continue
        clean = all(a[i][t] == 0 for i in range(t + 1, rows)) and all(
            a[t][j] == 0 for j in range(t + 1, cols)
        )
        if clean:
            t += 1
    return u, a, v


def _solve_mod(mat, rhs, n):
    """One solution x of mat * x == rhs (mod n), or None."""
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    if rows == 0:
        return [0] * cols
    u, d, v = _diagonalize(mat)
    urhs = [sum(u[i][k] * rhs[k] for k in range(rows)) % n for i in range(rows)]
    y = [0] * cols
    for i in range(rows):
        di = d[i][i] % n if i < cols else 0
        ri = urhs[i]
        if i >= cols or di == 0:
            if ri % n != 0:
                return None
            continue
        g = math.gcd(di, n)
        if ri % g != 0:
            return None
        nn = n // g
        y[i] = (pow(di // g, -1, nn) * (ri // g)) % nn
    return [sum(v[i][k] * y[k] for k in range(cols)) % n for i in range(cols)]


def check_cohomologous(
    target: Cocycle, base: Cocycle, method: str = "solve", cap: int = 200000
) -> Optional[list]:
    """A coboundary b with apply_coboundary(base, b) == target, or None.

    The difference of exponent tables must equal b(a) + b(c) - b(ac) mod n
    on every composable pair; unknowns are the non-unit arrow values.
    method "solve" uses the exact integer diagonalization, "brute" the
    exhaustive search.  Both verify their witness before returning it.
    """
    _same_context(target, base)
    if method == "brute":
        return brute_force_cohomologous(target, base, cap=cap)
    g = target.gpd
    n = target.n
    free = [a for a in range(g.m) if a not in g.unit_set]
    col = {a: i for i, a in enumerate(free)}
    mat, rhs = [], []
    for (a, c), k in sorted(target.table.items()):
        row = [0] * len(free)
        for arrow, sgn in ((a, 1), (c, 1), (g.comp[(a, c)], -1)):
            if arrow in col:
                row[col[arrow]] += sgn
        mat.append(row)
        rhs.append((k - base.table[(a, c)]) % n)
    x = _solve_mod(mat, rhs, n)
    if x is None:
        return None
    b = [0] * g.m
    for a, i in col.items():
        b[a] = x[i] % n
    assert apply_coboundary(base, b) == target
    return b


# --- gradings ----------------------------------------------------------------


class GroupTable:
    """Finite group given by its multiplication table (validated)."""

    def __init__(self, table):
        self.table = tuple(tuple(row) for row in table)
        k = len(self.table)
        if any(len(row) != k for row in self.table):
            raise ValueError("multiplication table is not square")
        if any(not (0 <= x < k) for row in self.table for x in row):
            raise ValueError("table entry out of range")
        ident = None
        for e in range(k):
            if all(self.table[e][x] == x == self.table[x][e] for x in range(k)):
                ident = e
                break
        if ident is None:
            raise ValueError("table has no identity")
        self.identity = ident
        inv = [None] * k
        for x in range(k):
            for y in range(k):
                if self.table[x][y] == ident and self.table[y][x] == ident:
                    inv[x] = y
        if any(i is None for i in inv):
            raise ValueError("table has a non-invertible element")
        self.inverse = tuple(inv)
        for a in range(k):
            for b in range(k):
                for c in range(k):
                    if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]:
                        raise ValueError(
                            "table is not associative at (%d, %d, %d)" % (a, b, c)
                        )
        self.order = k

    def op(self, x, y):
        return self.table[x][y]

    def inv(self, x):
        return self.inverse[x]

    def __eq__(self, other):
        return isinstance(other, GroupTable) and self.table == other.table

    def __hash__(self):
        return hash(self.table)


class IntGroup:
    """The integers under addition, as a grading target."""

    identity = 0

    def op(self, x, y):
        return x + y

    def inv(self, x):
        return -x

    def __eq__(self, other):
        return isinstance(other, IntGroup)

    def __hash__(self):
        return hash("IntGroup")


def cyclic_group(n: int) -> GroupTable:
    return GroupTable([[(i + j) % n for j in range(n)] for i in range(n)])


class Grading:
    """Groupoid homomorphism into a grading group; degree stored per arrow."""

    def __init__(self, gpd: Groupoid, group, deg: Sequence[int]):
        self.gpd = gpd
        self.group = group
        self.deg = tuple(deg)
        if len(self.deg) != gpd.m:
            raise ValueError("degree vector has wrong length")

    def __eq__(self, other):
        return (
            isinstance(other, Grading)
            and self.gpd == other.gpd
            and self.group == other.group
            and self.deg == other.deg
        )

    def __hash__(self):
        return hash((self.gpd, self.group, self.deg))


def validate_grading(grading: Grading) -> list:
    g = grading.gpd
    grp = grading.group
    deg = grading.deg
    v = []
    if isinstance(grp, GroupTable):
        for a in range(g.m):
            if not (0 <= deg[a] < grp.order):
                v.append("degree of arrow %d is out of range" % a)
        if v:
            return v
    for u in g.units:
        if deg[u] != grp.identity:
            v.append("unit %d has non-identity degree" % u)
    for (a, b), ab in g.comp.items():
        if grp.op(deg[a], deg[b]) != deg[ab]:
            v.append("homomorphism law fails at pair (%d, %d)" % (a, b))
    return v


def kernel_arrows(grading: Grading) -> list:
    """Arrows of identity degree; a wide subgroupoid's arrow set."""
    e = grading.group.identity
    return [a for a in range(grading.gpd.m) if grading.deg[a] == e]
