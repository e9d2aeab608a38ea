"""Central extensions of a finite groupoid by a cyclic unit group.

A Twist bundles the extension groupoid (total), the base groupoid, the
order n of the extending cyclic group, the central embedding of
(unit, exponent) pairs, and the projection back onto the base.  Exactness,
centrality, fiber sizes, and the homomorphism laws are all finite checks
in validate_twist.

build_twist realizes the standard model on the carrier base x Z/n: the
pair (a, k) gets arrow index a*n + k, multiplication twists the exponent
sum by the cocycle, and the canonical section a -> (a, 0) is then the
least-index element of every fiber, which is exactly what find_section
picks.  Sections induce cocycles through the unique-scalar lemma, and
cohomologous cocycles give isomorphic twists; twists_isomorphic assembles
the explicit morphism through the two section isomorphisms.
"""

from __future__ import annotations

from typing import Optional

from .cocycle import Cocycle, check_cocycle, check_cohomologous, validate_cocycle
from .groupoid import Groupoid, composable_pairs, validate_groupoid


class Twist:
    __slots__ = ("base", "total", "n", "embed", "proj", "_fibers")

    def __init__(self, base: Groupoid, total: Groupoid, n: int, embed: dict, proj):
        self.base = base
        self.total = total
        self.n = n
        self.embed = dict(embed)
        self.proj = tuple(proj)
        self._fibers = None

    def fiber(self, a: int) -> tuple:
        """Total arrows over base arrow a, ascending."""
        if self._fibers is None:
            fibers = {}
            for e, a0 in enumerate(self.proj):
                fibers.setdefault(a0, []).append(e)
            self._fibers = {k: tuple(v) for k, v in fibers.items()}
        return self._fibers.get(a, ())

    def act(self, k: int, e: int) -> int:
        """The unit-group action: compose with the central element at rng(e)."""
        x = self.proj[self.total.rng[e]]
        return self.total.comp[(self.embed[(x, k % self.n)], e)]

    def __eq__(self, other):
        return (
            isinstance(other, Twist)
            and self.base == other.base
            and self.total == other.total
            and self.n == other.n
            and self.embed == other.embed
            and self.proj == other.proj
        )

    def __hash__(self):
        return hash((self.base, self.total, self.n, self.proj))

    def __repr__(self):
        return "Twist(order=%d, base_arrows=%d)" % (self.n, self.base.m)


def build_twist(base: Groupoid, coc: Cocycle) -> Twist:
    """The model twist on carrier base x Z/n with cocycle-twisted products."""
    if coc.gpd != base:
        raise ValueError("cocycle lives over a different groupoid")
    check_cocycle(coc)
    n = coc.n
    units = [u * n for u in base.units]
    src = [0] * (base.m * n)
    rng = [0] * (base.m * n)
    inv = [0] * (base.m * n)
    for a in range(base.m):
        ia = base.inv[a]
        neg = -coc.table[(a, ia)]
        for k in range(n):
            e = a * n + k
            src[e] = base.src[a] * n
            rng[e] = base.rng[a] * n
            inv[e] = ia * n + (neg - k) % n
    comp = {}
    for (a, b), ab in base.comp.items():
        shift = coc.table[(a, b)]
        for k in range(n):
            for l in range(n):
                comp[(a * n + k, b * n + l)] = ab * n + (shift + k + l) % n
    total = Groupoid(units, src, rng, inv, comp)
    embed = {(u, k): u * n + k for u in base.units for k in range(n)}
    proj = [e // n for e in range(base.m * n)]
    return Twist(base, total, n, embed, proj)


def validate_twist(tw: Twist) -> list:
    """All extension axioms; violations as strings, empty when valid."""
    v = []
    v += ["base: " + s for s in validate_groupoid(tw.base)]
    v += ["total: " + s for s in validate_groupoid(tw.total)]
    if v:
        return v
    base, total, n = tw.base, tw.total, tw.n
    if len(tw.proj) != total.m:
        return ["projection table has wrong length"]
    if any(not (0 <= a < base.m) for a in tw.proj):
        return ["projection hits a non-arrow"]
    if total.m != base.m * n:
        v.append("total groupoid size is not |base| * n")
    for a in range(base.m):
        if len(tw.fiber(a)) != n:
            v.append("fiber over arrow %d has size %d, want %d" % (a, len(tw.fiber(a)), n))
    # projection is a homomorphism matching units to units bijectively
    proj_units = {tw.proj[e] for e in total.units}
    if proj_units != base.unit_set or len(total.units) != len(base.units):
        v.append("projection does not restrict to a unit bijection")
    for e in range(total.m):
        if tw.proj[total.src[e]] != base.src[tw.proj[e]]:
            v.append("projection breaks src at %d" % e)
        if tw.proj[total.rng[e]] != base.rng[tw.proj[e]]:
            v.append("projection breaks rng at %d" % e)
        if tw.proj[total.inv[e]] != base.inv[tw.proj[e]]:
            v.append("projection breaks inv at %d" % e)
    for (e, d), ed in total.comp.items():
        if base.comp[(tw.proj[e], tw.proj[d])] != tw.proj[ed]:
            v.append("projection breaks composition at (%d, %d)" % (e, d))
    if v:
        return v
    # embedding: injective homomorphism of the unit bundle, exact fibers
    keys = set(tw.embed.keys())
    want = {(u, k) for u in base.units for k in range(n)}
    if keys != want:
        return ["embedding domain is not units x exponents"]
    vals = list(tw.embed.values())
    if len(set(vals)) != len(vals):
        v.append("embedding is not injective")
    for u in base.units:
        e0 = tw.embed[(u, 0)]
        if e0 not in total.unit_set or tw.proj[e0] != u:
            v.append("embedding of (unit %d, 0) is not the unit over it" % u)
        for k in range(n):
            e = tw.embed[(u, k)]
            if tw.proj[e] != u:
                v.append("exactness fails: embed(%d, %d) leaves the fiber" % (u, k))
            if total.src[e] != tw.embed[(u, 0)] or total.rng[e] != tw.embed[(u, 0)]:
                v.append("embedded element (%d, %d) is not an isotropy arrow" % (u, k))
            l = (k + 1) % n
            got = total.comp.get((tw.embed[(u, k)], tw.embed[(u, 1 % n)]))
            if got != tw.embed[(u, l)]:
                v.append("embedding is not a homomorphism at (%d, %d)" % (u, k))
        if set(tw.fiber(u)) != {tw.embed[(u, k)] for k in range(n)}:
            v.append("exactness fails over unit %d" % u)
    if v:
        return v
    for e in range(total.m):
        ru = tw.proj[total.rng[e]]
        su = tw.proj[total.src[e]]
        for k in range(n):
            left = total.comp[(tw.embed[(ru, k)], e)]
            right = total.comp[(e, tw.embed[(su, k)])]
            if left != right:
                v.append("centrality fails at arrow %d, exponent %d" % (e, k))
    return v


def check_twist(tw: Twist) -> Twist:
    v = validate_twist(tw)
    if v:
        raise ValueError("invalid twist: " + "; ".join(v[:4]))
    return tw


def unique_scalar(tw: Twist, ref: int, other: int) -> int:
    """The exponent k with other == act(k, ref); both in one fiber."""
    if tw.proj[ref] != tw.proj[other]:
        raise ValueError(
            "arrows %d and %d sit over different base arrows" % (ref, other)
        )
    for k in range(tw.n):
        if tw.act(k, ref) == other:
            return k
    raise ValueError("no scalar links %d to %d; twist is invalid" % (ref, other))


def find_section(tw: Twist) -> tuple:
    """Deterministic global section: unit fibers pick their unit, other
    fibers the least total index.  Composing with the projection gives the
    identity by construction."""
    sec = [0] * tw.base.m
    for a in range(tw.base.m):
        if a in tw.base.unit_set:
            sec[a] = tw.embed[(a, 0)]
        else:
            sec[a] = min(tw.fiber(a))
    return tuple(sec)


def validate_section(tw: Twist, sec) -> list:
    v = []
    if len(sec) != tw.base.m:
        return ["section has wrong length"]
    for a in range(tw.base.m):
        if tw.proj[sec[a]] != a:
            v.append("section misses the fiber at arrow %d" % a)
    for u in tw.base.units:
        if sec[u] not in tw.total.unit_set:
            v.append("section sends unit %d to a non-unit" % u)
    return v


def induced_cocycle(tw: Twist, sec) -> Cocycle:
    """The cocycle measuring failure of the section to be multiplicative:
    sec(a) sec(b) equals the induced scalar acting on sec(ab)."""
    bad = validate_section(tw, sec)
    if bad:
        raise ValueError("; ".join(bad))
    table = {}
    for a, b in composable_pairs(tw.base):
        prod = tw.total.comp[(sec[a], sec[b])]
        table[(a, b)] = unique_scalar(tw, sec[tw.base.comp[(a, b)]], prod)
    out = Cocycle(tw.base, tw.n, table)
    assert not validate_cocycle(out)
    return out


class TwistMorphism:
    """Arrow bijection between two twists over one base, commuting with
    the embeddings and projections."""

    def __init__(self, src: Twist, dst: Twist, mapping):
        self.src = src
        self.dst = dst
        self.mapping = tuple(mapping)

    def __call__(self, e: int) -> int:
        return self.mapping[e]

    def __eq__(self, other):
        return (
            isinstance(other, TwistMorphism)
            and self.src == other.src
            and self.dst == other.dst
            and self.mapping == other.mapping
        )


def validate_twist_morphism(mor: TwistMorphism) -> list:
    t1, t2, f = mor.src, mor.dst, mor.mapping
    v = []
    if t1.base != t2.base or t1.n != t2.n:
        return ["twists do not share a base groupoid and order"]
    if len(f) != t1.total.m or set(f) != set(range(t2.total.m)):
        return ["mapping is not a bijection of total arrows"]
    for (e, d), ed in t1.total.comp.items():
        if t2.total.comp.get((f[e], f[d])) != f[ed]:
            v.append("homomorphism law fails at (%d, %d)" % (e, d))
    for e in range(t1.total.m):
        if f[t1.total.inv[e]] != t2.total.inv[f[e]]:
            v.append("inverse law fails at %d" % e)
    for key, e in t1.embed.items():
        if f[e] != t2.embed[key]:
            v.append("embedding diagram fails at (%d, %d)" % key)
    for e in range(t1.total.m):
        if t2.proj[f[e]] != t1.proj[e]:
            v.append("projection diagram fails at %d" % e)
    # respect for the unit-group action (implied, but checked directly)
    for e in range(t1.total.m):
        for k in range(t1.n):
            if f[t1.act(k, e)] != t2.act(k, f[e]):
                v.append("action equivariance fails at (%d, %d)" % (e, k))
    return v


def section_iso(tw: Twist, sec) -> TwistMorphism:
    """Isomorphism from the model twist of the induced cocycle onto tw,
    sending (a, k) to k acting on sec(a)."""
    coc = induced_cocycle(tw, sec)
    model = build_twist(tw.base, coc)
    n = tw.n
    mapping = [0] * model.total.m
    for a in range(tw.base.m):
        for k in range(n):
            mapping[a * n + k] = tw.act(k, sec[a])
    mor = TwistMorphism(model, tw, mapping)
    bad = validate_twist_morphism(mor)
    assert not bad, bad[:3]
    return mor


def twists_isomorphic(t1: Twist, t2: Twist) -> Optional[TwistMorphism]:
    """The explicit isomorphism when the induced cocycles are cohomologous,
    else None.  Route: t1 -> model(c1) -> model(c2) -> t2, the middle arrow
    shifting exponents by the coboundary."""
    if t1.base != t2.base or t1.n != t2.n:
        raise ValueError("twists do not share a base groupoid and order")
    s1 = find_section(t1)
    s2 = find_section(t2)
    c1 = induced_cocycle(t1, s1)
    c2 = induced_cocycle(t2, s2)
    b = check_cohomologous(c1, c2)
    if b is None:
        return None
    n = t1.n
    mapping = [0] * t1.total.m
    for e in range(t1.total.m):
        a = t1.proj[e]
        k = unique_scalar(t1, s1[a], e)
        mapping[e] = t2.act((k + b[a]) % n, s2[a])
    mor = TwistMorphism(t1, t2, mapping)
    bad = validate_twist_morphism(mor)
    assert not bad, bad[:3]
    return mor
