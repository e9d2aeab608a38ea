"""Stock groupoids and cocycle enumeration.

Builders for the standard families (pair groupoids, group groupoids,
transformation groupoids of finite group actions, disjoint unions) plus a
small named catalog used by the test suite, the demos, and the CLI.  Every
catalog entry carries the facts it is expected to satisfy; build() checks
the axioms and asserts those facts before handing the groupoid out.
"""

from __future__ import annotations

import itertools
from collections import OrderedDict, namedtuple
from typing import Sequence

from .cocycle import (
    Cocycle,
    GroupTable,
    apply_coboundary,
    cyclic_group,
    trivial_cocycle,
    validate_cocycle,
)
from .groupoid import (
    Groupoid,
    check_groupoid,
    composable_pairs,
    is_effective,
    is_minimal,
    orbits,
)


def pair_groupoid(n: int) -> Groupoid:
    """Arrows (i, j) with 1 <= i, j <= n, indexed (i-1)*n + (j-1);
    (i, j) runs from unit j to unit i and (i, j)(j, k) = (i, k)."""
    if n < 1:
        raise ValueError("need at least one point")

    def idx(i, j):
        return (i - 1) * n + (j - 1)

    units = [idx(i, i) for i in range(1, n + 1)]
    src = [0] * (n * n)
    rng = [0] * (n * n)
    inv = [0] * (n * n)
    comp = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            a = idx(i, j)
            src[a] = idx(j, j)
            rng[a] = idx(i, i)
            inv[a] = idx(j, i)
            for k in range(1, n + 1):
                comp[(a, idx(j, k))] = idx(i, k)
    return Groupoid(units, src, rng, inv, comp)


def group_groupoid(table: GroupTable) -> Groupoid:
    """A finite group as a groupoid with a single unit."""
    m = table.order
    e = table.identity
    comp = {(a, b): table.table[a][b] for a in range(m) for b in range(m)}
    return Groupoid([e], [e] * m, [e] * m, list(table.inverse), comp)


def action_groupoid(table: GroupTable, perms: Sequence[Sequence[int]]) -> Groupoid:
    """Transformation groupoid of a group action on points 0..s-1.

    perms[g] is the permutation of the points by g; the identity must act
    trivially and perms must compose like the group.  Arrow (g, x) runs
    from x to g.x and is indexed g*s + x.
    """
    k = table.order
    if len(perms) != k:
        raise ValueError("need one permutation per group element")
    s = len(perms[0])
    perms = [tuple(p) for p in perms]
    for p in perms:
        if sorted(p) != list(range(s)):
            raise ValueError("non-permutation in the action")
    e = table.identity
    if perms[e] != tuple(range(s)):
        raise ValueError("identity does not act trivially")
    for g in range(k):
        for h in range(k):
            gh = table.table[g][h]
            if any(perms[g][perms[h][x]] != perms[gh][x] for x in range(s)):
                raise ValueError("action is not a homomorphism at (%d, %d)" % (g, h))

    def idx(g, x):
        return g * s + x

    units = [idx(e, x) for x in range(s)]
    src = [0] * (k * s)
    rng = [0] * (k * s)
    inv = [0] * (k * s)
    comp = {}
    for g in range(k):
        for x in range(s):
            a = idx(g, x)
            src[a] = idx(e, x)
            rng[a] = idx(e, perms[g][x])
            inv[a] = idx(table.inverse[g], perms[g][x])
            for h in range(k):
                # (g, h.x) after (h, x)
                comp[(idx(g, perms[h][x]), idx(h, x))] = idx(table.table[g][h], x)
    return Groupoid(units, src, rng, inv, comp)


def disjoint_union(g1: Groupoid, g2: Groupoid) -> Groupoid:
    """Side-by-side union; arrows of the second block shift by g1.m."""
    off = g1.m
    units = list(g1.units) + [u + off for u in g2.units]
    src = list(g1.src) + [x + off for x in g2.src]
    rng = list(g1.rng) + [x + off for x in g2.rng]
    inv = list(g1.inv) + [x + off for x in g2.inv]
    comp = dict(g1.comp)
    for (a, b), c in g2.comp.items():
        comp[(a + off, b + off)] = c + off
    return Groupoid(units, src, rng, inv, comp)


def klein_table() -> GroupTable:
    return GroupTable([[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]])


def s3_table() -> GroupTable:
    """Permutations of three letters, sorted as tuples; 0 is the identity."""
    elems = sorted(itertools.permutations(range(3)))
    index = {p: i for i, p in enumerate(elems)}
    table = [
        [index[tuple(p[q[x]] for x in range(3))] for q in elems]
        for p in elems
    ]
    return GroupTable(table)


def free_pairs(g: Groupoid) -> list:
    """Composable pairs with both factors non-unit: the coordinates left
    free once a cocycle is normalised."""
    return [
        (a, b)
        for a, b in composable_pairs(g)
        if a not in g.unit_set and b not in g.unit_set
    ]


def enumerate_cocycles(g: Groupoid, n: int, cap: int = 2 ** 20) -> list:
    """Every normalised cocycle with values in Z/n, in lexicographic order
    of the value tuple over the free pairs (sorted).  Composable pairs
    containing a unit are forced to 0 by normalisation, so the search
    space is n ** len(free_pairs), bounded by cap."""
    free = sorted(free_pairs(g))
    if n ** len(free) > cap:
        raise ValueError(
            "search space %d**%d exceeds cap %d" % (n, len(free), cap)
        )
    forced = {
        (a, b): 0
        for a, b in composable_pairs(g)
        if a in g.unit_set or b in g.unit_set
    }
    out = []
    for values in itertools.product(range(n), repeat=len(free)):
        table = dict(forced)
        table.update(zip(free, values))
        coc = Cocycle(g, n, table)
        if not validate_cocycle(coc):
            out.append(coc)
    return out


def z2_neg_cocycle() -> Cocycle:
    """On the order-two group: the nonidentity loop squares to -1."""
    g = build("z2")
    return Cocycle(g, 2, {(0, 0): 0, (0, 1): 0, (1, 0): 0, (1, 1): 1})


def pair2_coboundary_cocycle() -> Cocycle:
    """A nontrivial-looking cocycle on the two-point pair groupoid that is
    a coboundary by construction."""
    g = build("pair2")
    return apply_coboundary(trivial_cocycle(g, 2), [0, 1, 0, 0])


CatalogEntry = namedtuple("CatalogEntry", "name summary builder facts")

_FACT_KEYS = ("arrows", "units", "effective", "minimal", "orbits")


def _entries():
    e = [
        CatalogEntry(
            "pair1", "pair groupoid on 1 point", lambda: pair_groupoid(1),
            (1, 1, True, True, 1),
        ),
        CatalogEntry(
            "pair2", "pair groupoid on 2 points", lambda: pair_groupoid(2),
            (4, 2, True, True, 1),
        ),
        CatalogEntry(
            "pair3", "pair groupoid on 3 points", lambda: pair_groupoid(3),
            (9, 3, True, True, 1),
        ),
        CatalogEntry(
            "pair4", "pair groupoid on 4 points", lambda: pair_groupoid(4),
            (16, 4, True, True, 1),
        ),
        CatalogEntry(
            "z2", "cyclic group of order 2", lambda: group_groupoid(cyclic_group(2)),
            (2, 1, False, True, 1),
        ),
        CatalogEntry(
            "z3", "cyclic group of order 3", lambda: group_groupoid(cyclic_group(3)),
            (3, 1, False, True, 1),
        ),
        CatalogEntry(
            "z4", "cyclic group of order 4", lambda: group_groupoid(cyclic_group(4)),
            (4, 1, False, True, 1),
        ),
        CatalogEntry(
            "z8", "cyclic group of order 8", lambda: group_groupoid(cyclic_group(8)),
            (8, 1, False, True, 1),
        ),
        CatalogEntry(
            "klein", "Klein four-group", lambda: group_groupoid(klein_table()),
            (4, 1, False, True, 1),
        ),
        CatalogEntry(
            "s3", "symmetric group on 3 letters", lambda: group_groupoid(s3_table()),
            (6, 1, False, True, 1),
        ),
        CatalogEntry(
            "swap2",
            "order-2 group swapping 2 points",
            lambda: action_groupoid(cyclic_group(2), [(0, 1), (1, 0)]),
            (4, 2, True, True, 1),
        ),
        CatalogEntry(
            "fix3",
            "order-2 group on 3 points with a fixed point",
            lambda: action_groupoid(cyclic_group(2), [(0, 1, 2), (1, 0, 2)]),
            (6, 3, False, False, 2),
        ),
        CatalogEntry(
            "pair2_pair2",
            "two disjoint 2-point pair groupoids",
            lambda: disjoint_union(pair_groupoid(2), pair_groupoid(2)),
            (8, 4, True, False, 2),
        ),
    ]
    return OrderedDict((entry.name, entry) for entry in e)


CATALOG = _entries()


def build(name: str) -> Groupoid:
    """Build a catalog groupoid, check the axioms, assert its facts."""
    if name not in CATALOG:
        raise ValueError("unknown catalog name %r (try: %s)" % (name, ", ".join(CATALOG)))
    entry = CATALOG[name]
    g = check_groupoid(entry.builder())
    facts = (g.m, len(g.units), is_effective(g), is_minimal(g), len(orbits(g)))
    assert facts == entry.facts, (name, facts, entry.facts)
    return g


def fixture_cocycles(name: str) -> "OrderedDict[str, Cocycle]":
    """Named cocycle fixtures shipped alongside a catalog groupoid."""
    out = OrderedDict()
    if name == "z2":
        out["z2_triv.coc"] = trivial_cocycle(build("z2"), 2)
        out["z2_neg.coc"] = z2_neg_cocycle()
    elif name == "pair2":
        out["pair2_triv.coc"] = trivial_cocycle(build("pair2"), 2)
        out["pair2_cob.coc"] = pair2_coboundary_cocycle()
    return out


def emit_fixtures(dirpath: str, name: str = "all") -> list:
    """Write catalog groupoids (one name, or all) plus their cocycle
    fixtures to dirpath; returns the file names written."""
    import os

    from . import fileio

    names = list(CATALOG) if name == "all" else [name]
    os.makedirs(dirpath, exist_ok=True)
    written = []
    for nm in names:
        fileio.write_groupoid(os.path.join(dirpath, nm + ".gpd"), build(nm))
        written.append(nm + ".gpd")
        for fname, coc in fixture_cocycles(nm).items():
            fileio.write_cocycle(os.path.join(dirpath, fname), coc)
            written.append(fname)
    return written
