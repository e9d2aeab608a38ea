"""Finite discrete groupoids as explicit arrow tables.

Arrows are dense integer indices 0..m-1.  A Groupoid stores the unit
subset, the source/range/inverse maps as tuples, and the composition as a
dict keyed by composable pairs (src of the left factor == rng of the right
factor).  Everything is finite and discrete, so all the usual topological
hypotheses (ample, Hausdorff, etale) hold vacuously: every subset is a
compact open set and effectiveness collapses to principality because the
interior of the isotropy is the isotropy itself.

Composition is stored, not derived; validate_groupoid re-checks the whole
axiom list and reports violations as data rather than raising.
"""

from __future__ import annotations

from typing import Iterable, Optional


class Groupoid:
    __slots__ = ("m", "units", "unit_set", "src", "rng", "inv", "comp", "_by_rng")

    def __init__(self, units, src, rng, inv, comp):
        self.src = tuple(src)
        self.rng = tuple(rng)
        self.inv = tuple(inv)
        self.m = len(self.src)
        self.units = tuple(sorted(units))
        self.unit_set = frozenset(self.units)
        self.comp = dict(comp)
        self._by_rng = None

    def arrows(self):
        return range(self.m)

    def is_unit(self, a: int) -> bool:
        return a in self.unit_set

    def composable(self, a: int, b: int) -> bool:
        return self.src[a] == self.rng[b]

    def compose(self, a: int, b: int) -> int:
        return self.comp[(a, b)]

    def arrows_by_rng(self):
        """unit -> sorted tuple of arrows with that range (cached)."""
        if self._by_rng is None:
            by = {u: [] for u in self.units}
            for a in range(self.m):
                by.setdefault(self.rng[a], []).append(a)
            self._by_rng = {u: tuple(v) for u, v in by.items()}
        return self._by_rng

    def __eq__(self, other):
        return (
            isinstance(other, Groupoid)
            and self.units == other.units
            and self.src == other.src
            and self.rng == other.rng
            and self.inv == other.inv
            and self.comp == other.comp
        )

    def __hash__(self):
        return hash((self.units, self.src, self.rng, self.inv))

    def __repr__(self):
        return "Groupoid(arrows=%d, units=%d)" % (self.m, len(self.units))


def composable_pairs(g: Groupoid):
    """All composable pairs (a, b) in ascending lexicographic order."""
    by = g.arrows_by_rng()
    for a in range(g.m):
        for b in by.get(g.src[a], ()):
            yield (a, b)


def composable_triples(g: Groupoid):
    by = g.arrows_by_rng()
    for a in range(g.m):
        for b in by.get(g.src[a], ()):
            for c in by.get(g.src[b], ()):
                yield (a, b, c)


def validate_groupoid(g: Groupoid) -> list:
    """Full axiom check; returns a list of violation strings (empty = valid)."""
    v = []
    m = g.m
    if not (len(g.rng) == len(g.inv) == m):
        return ["src/rng/inv tables have mismatched lengths"]
    for a in range(m):
        for name, val in (("src", g.src[a]), ("rng", g.rng[a]), ("inv", g.inv[a])):
            if not (0 <= val < m):
                v.append("%s(%d) = %d is out of range" % (name, a, val))
    if v:
        return v
    for u in g.units:
        if not (0 <= u < m):
            v.append("unit %d is out of range" % u)
        elif g.src[u] != u or g.rng[u] != u:
            v.append("unit %d is not its own source and range" % u)
    if v:
        return v
    for a in range(m):
        if g.src[a] not in g.unit_set:
            v.append("src(%d) = %d is not a unit" % (a, g.src[a]))
        if g.rng[a] not in g.unit_set:
            v.append("rng(%d) = %d is not a unit" % (a, g.rng[a]))
    # composition domain must be exactly the composable pairs
    expected = set()
    for a in range(m):
        for b in range(m):
            if g.src[a] == g.rng[b]:
                expected.add((a, b))
    for pair in expected:
        if pair not in g.comp:
            v.append("comp undefined on composable pair (%d, %d)" % pair)
    for pair in g.comp:
        if pair not in expected:
            v.append("comp defined on non-composable pair (%d, %d)" % pair)
        elif not (0 <= g.comp[pair] < m):
            v.append("comp(%d, %d) is out of range" % pair)
    if v:
        return v
    for (a, b), ab in g.comp.items():
        if g.rng[ab] != g.rng[a]:
            v.append("rng(comp(%d, %d)) != rng(%d)" % (a, b, a))
        if g.src[ab] != g.src[b]:
            v.append("src(comp(%d, %d)) != src(%d)" % (a, b, b))
    if v:
        # a mistyped composite makes the associativity walk meaningless
        return v
    for a in range(m):
        if g.comp.get((a, g.src[a])) != a:
            v.append("right unit law fails at arrow %d" % a)
        if g.comp.get((g.rng[a], a)) != a:
            v.append("left unit law fails at arrow %d" % a)
    for a in range(m):
        ia = g.inv[a]
        if g.inv[ia] != a:
            v.append("inv(inv(%d)) != %d" % (a, a))
        if g.src[ia] != g.rng[a] or g.rng[ia] != g.src[a]:
            v.append("inv(%d) does not swap source and range" % a)
        if g.comp.get((a, ia)) != g.rng[a]:
            v.append("rng(g) = comp(g, inv(g)) fails at arrow %d" % a)
        if g.comp.get((ia, a)) != g.src[a]:
            v.append("src(g) = comp(inv(g), g) fails at arrow %d" % a)
    for a, b, c in composable_triples(g):
        if g.comp[(g.comp[(a, b)], c)] != g.comp[(a, g.comp[(b, c)])]:
            v.append("associativity fails at triple (%d, %d, %d)" % (a, b, c))
    return v


def check_groupoid(g: Groupoid) -> Groupoid:
    """Raise on the first violation; convenience for constructors."""
    v = validate_groupoid(g)
    if v:
        raise ValueError("invalid groupoid: " + "; ".join(v[:4]))
    return g


def isotropy(g: Groupoid) -> frozenset:
    """Arrows whose range equals their source; always contains the units."""
    return frozenset(a for a in range(g.m) if g.rng[a] == g.src[a])


def is_effective(g: Groupoid) -> bool:
    """At finite discrete scale the isotropy interior is the isotropy, so
    effective means the isotropy is exactly the unit set (principal)."""
    return isotropy(g) == g.unit_set


def orbits(g: Groupoid) -> list:
    """Partition of the units; the orbit of x is src(rng^-1(x)).

    That relation is already an equivalence (units give reflexivity, inv
    symmetry, comp transitivity), so no closure pass is needed.  Orbits are
    returned as sorted tuples, ordered by least member.
    """
    seen = set()
    out = []
    for x in g.units:
        if x in seen:
            continue
        orb = sorted({g.src[a] for a in range(g.m) if g.rng[a] == x})
        seen.update(orb)
        out.append(tuple(orb))
    return out


def is_minimal(g: Groupoid) -> bool:
    """One orbit; with the discrete topology closures change nothing."""
    return len(orbits(g)) == 1


def subgroupoid(g: Groupoid, arrow_subset: Iterable[int]):
    """Reindex a composition/inverse-closed arrow subset as its own groupoid.

    Returns (h, old_of_new) where old_of_new[new_index] = old index.
    The caller guarantees closure; units of h are the units of g that
    appear as sources/ranges of kept arrows (and themselves kept).
    """
    keep = sorted(set(arrow_subset))
    pos = {a: i for i, a in enumerate(keep)}
    units = [pos[u] for u in g.units if u in pos]
    src = [pos[g.src[a]] for a in keep]
    rng = [pos[g.rng[a]] for a in keep]
    inv = [pos[g.inv[a]] for a in keep]
    comp = {}
    for (a, b), ab in g.comp.items():
        if a in pos and b in pos:
            comp[(pos[a], pos[b])] = pos[ab]
    return Groupoid(units, src, rng, inv, comp), keep


def restrict(g: Groupoid, unit_subset: Iterable[int]) -> Groupoid:
    """The subgroupoid over an invariant unit set U: arrows with source in U.

    Rejects non-invariant U, naming an arrow that crosses the boundary.
    """
    u = frozenset(unit_subset)
    for x in u:
        if x not in g.unit_set:
            raise ValueError("%d is not a unit" % x)
    for a in range(g.m):
        if (g.src[a] in u) != (g.rng[a] in u):
            raise ValueError("not invariant, arrow %d crosses the boundary" % a)
    h, _ = subgroupoid(g, [a for a in range(g.m) if g.src[a] in u])
    return h


# --- bisections --------------------------------------------------------------


def is_bisection(g: Groupoid, subset: Iterable[int]) -> bool:
    b = list(subset)
    return len({g.src[a] for a in b}) == len(b) and len({g.rng[a] for a in b}) == len(b)


def bisection_product(g: Groupoid, left, right) -> frozenset:
    """{comp(a, b) : a in left, b in right, composable}; again a bisection."""
    out = {g.comp[(a, b)] for a in left for b in right if g.src[a] == g.rng[b]}
    assert is_bisection(g, out)
    return frozenset(out)


def bisection_inverse(g: Groupoid, subset) -> frozenset:
    return frozenset(g.inv[a] for a in subset)


def enumerate_bisections(g: Groupoid, cap: Optional[int] = None):
    """All bisections (including the empty one) in a fixed deterministic
    order, by backtracking over ascending arrow indices.  Raises when a cap
    on the count is exceeded."""
    out = [frozenset()]
    stack = [(0, (), frozenset(), frozenset())]
    while stack:
        start, chosen, srcs, rngs = stack.pop()
        for a in range(start, g.m):
            if g.src[a] in srcs or g.rng[a] in rngs:
                continue
            cur = chosen + (a,)
            out.append(frozenset(cur))
            if cap is not None and len(out) > cap:
                raise ValueError("more than %d bisections" % cap)
            stack.append((a + 1, cur, srcs | {g.src[a]}, rngs | {g.rng[a]}))
    return out
