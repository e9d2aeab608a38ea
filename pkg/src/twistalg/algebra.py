"""Twisted convolution algebras of finite discrete groupoids.

An Element is a sparse arrow -> coefficient map inside a Context that fixes
the groupoid, the coefficient ring, the cyclic unit subgroup whose
exponents the cocycle stores, the cocycle itself, and optionally an
involution on the ring that inverts the subgroup.  Every function on a
finite discrete groupoid is locally constant with compact support, so the
algebra is the free module on the arrows; nothing else needs tracking.

Multiplication is the cocycle-twisted convolution, summed over composable
factorizations taken from the two supports.  The star operation combines
the inverse map, the cocycle value at (arrow, inverse), and the ring
involution.  The equivariant picture lives in EquivContext /
EquivariantElement: functions on a twist's total groupoid that scale along
fibers, encoded by their values on a chosen section; their convolution is
computed from the twist's own tables (not through any cocycle), which
keeps the comparison with the cocycle picture an honest two-route check.
"""

from __future__ import annotations

from typing import Iterable, Optional

from . import rings
from .cocycle import Cocycle, Grading, check_cocycle, invert_cocycle, validate_grading
from .groupoid import Groupoid, is_bisection
from .rings import Involution, Ring, UnitSubgroup
from .twist import Twist, induced_cocycle, unique_scalar, validate_section


class Context:
    """Everything an algebra element needs to multiply and star."""

    def __init__(
        self,
        gpd: Groupoid,
        ring: Ring,
        tgrp: UnitSubgroup,
        coc: Cocycle,
        conj: Optional[Involution] = None,
    ):
        if coc.gpd != gpd:
            raise ValueError("cocycle lives over a different groupoid")
        if coc.n != tgrp.order:
            raise ValueError("cocycle order does not match the unit subgroup")
        if tgrp.ring != ring:
            raise ValueError("unit subgroup lives in a different ring")
        check_cocycle(coc)
        if conj is not None:
            if conj.ring != ring:
                raise ValueError("involution acts on a different ring")
            if not rings.check_t_inverse_involution(ring, conj, tgrp):
                raise ValueError("involution does not invert the unit subgroup")
        self.gpd = gpd
        self.ring = ring
        self.tgrp = tgrp
        self.coc = coc
        self.conj = conj

    def coc_val(self, a: int, b: int):
        """The ring value of the cocycle on a composable pair."""
        return self.tgrp.embed(self.coc.table[(a, b)])

    def __eq__(self, other):
        return (
            isinstance(other, Context)
            and self.gpd == other.gpd
            and self.ring == other.ring
            and self.tgrp == other.tgrp
            and self.coc == other.coc
            and self.conj == other.conj
        )

    def __hash__(self):
        return hash((self.gpd, self.ring, self.tgrp, self.coc, self.conj))


class Element:
    """Sparse coefficient map; zero coefficients are never stored."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: Context, coeffs: dict):
        self.ctx = ctx
        r = ctx.ring
        self.coeffs = {a: c for a, c in coeffs.items() if not r.is_zero(c)}

    def support(self) -> tuple:
        return tuple(sorted(self.coeffs))

    def value(self, a: int):
        return self.coeffs.get(a, self.ctx.ring.zero())

    def __eq__(self, other):
        return (
            isinstance(other, Element)
            and self.ctx == other.ctx
            and self.coeffs == other.coeffs
        )

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, scale(self.ctx.ring.neg(self.ctx.ring.one()), other))

    def __mul__(self, other):
        return convolve(self, other)

    def __repr__(self):
        r = self.ctx.ring
        parts = ["%d: %s" % (a, r.fmt(c)) for a, c in sorted(self.coeffs.items())]
        return "Element{%s}" % ", ".join(parts)


def zero(ctx: Context) -> Element:
    return Element(ctx, {})

def delta(ctx: Context, arrow: int, coeff=None) -> Element:
    if coeff is None:
        coeff = ctx.ring.one()
    return Element(ctx, {arrow: coeff})


def char_fn(ctx: Context, subset: Iterable[int]) -> Element:
    """Indicator of a bisection; arbitrary subsets are rejected."""
    b = frozenset(subset)
    if any(a < 0 or a >= ctx.gpd.m for a in b):
        raise ValueError("subset contains a non-arrow")
    if not is_bisection(ctx.gpd, b):
        raise ValueError("subset is not a bisection")
    one = ctx.ring.one()
    return Element(ctx, {a: one for a in b})


def one(ctx: Context) -> Element:
    """Indicator of the whole unit space, the multiplicative identity."""
    return char_fn(ctx, ctx.gpd.units)


def from_coeffs(ctx: Context, coeffs: dict) -> Element:
    return Element(ctx, coeffs)


def add(f: Element, g: Element) -> Element:
    _same(f, g)
    r = f.ctx.ring
    out = dict(f.coeffs)
    for a, c in g.coeffs.items():
        out[a] = r.add(out.get(a, r.zero()), c)
    return Element(f.ctx, out)


def scale(c, f: Element) -> Element:
    r = f.ctx.ring
    return Element(f.ctx, {a: r.mul(c, v) for a, v in f.coeffs.items()})


def _same(f: Element, g: Element):
    if f.ctx != g.ctx:
        raise ValueError("elements live in different algebra contexts")


def convolve(f: Element, g: Element) -> Element:
    """(f g)(c) = sum over factorizations c = a b of coc(a,b) f(a) g(b)."""
    _same(f, g)
    ctx = f.ctx
    gpd, r = ctx.gpd, ctx.ring
    out: dict = {}
    for a, fa in f.coeffs.items():
        sa = gpd.src[a]
        for b, gb in g.coeffs.items():
            if gpd.rng[b] != sa:
                continue
            c = gpd.comp[(a, b)]
            term = r.mul(ctx.coc_val(a, b), r.mul(fa, gb))
            out[c] = r.add(out.get(c, r.zero()), term)
    return Element(ctx, out)


def involute(f: Element) -> Element:
    """f*(c) = coc(c, inv c)^-1 conj(f(inv c)); needs an involution."""
    ctx = f.ctx
    if ctx.conj is None:
        raise ValueError("context carries no involution")
    gpd, r, t = ctx.gpd, ctx.ring, ctx.tgrp
    out = {}
    for a, c in f.coeffs.items():
        ia = gpd.inv[a]
        out[ia] = r.mul(t.embed(-ctx.coc.table[(ia, a)]), ctx.conj(c))
    return Element(ctx, out)


def disjoint_decomposition(f: Element) -> list:
    """Write f as a sum of scalars times disjoint bisection indicators.

    Canonical greedy split: walk the support in ascending arrow order and
    put each arrow into the first open (value, bisection) bucket that keeps
    the bucket a bisection; order of buckets is order of creation.
    """
    if not f.coeffs:
        raise ValueError("zero element has no decomposition")
    gpd = f.ctx.gpd
    buckets: list = []  # (value, arrow list, src set, rng set)
    for a in sorted(f.coeffs):
        c = f.coeffs[a]
        placed = False
        for val, arrows_, srcs, rngs in buckets:
            if val == c and gpd.src[a] not in srcs and gpd.rng[a] not in rngs:
                arrows_.append(a)
                srcs.add(gpd.src[a])
                rngs.add(gpd.rng[a])
                placed = True
                break
        if not placed:
            buckets.append((c, [a], {gpd.src[a]}, {gpd.rng[a]}))
    return [(val, frozenset(arrows_)) for val, arrows_, _, _ in buckets]


def local_unit(ctx: Context, fs: Iterable[Element]) -> Element:
    """Unit-set indicator fixing every listed element on both sides."""
    gpd = ctx.gpd
    units = set()
    for f in fs:
        for a in f.coeffs:
            units.add(gpd.src[a])
            units.add(gpd.rng[a])
    return char_fn(ctx, units)


def coboundary_iso(ctx_src: Context, ctx_dst: Context, b, f: Element) -> Element:
    """Pointwise multiplication by the coboundary, an isomorphism between
    the two twisted algebras when src cocycle == dst cocycle perturbed by b.
    """
    from .cocycle import apply_coboundary

    if ctx_src.gpd != ctx_dst.gpd or ctx_src.ring != ctx_dst.ring:
        raise ValueError("contexts disagree on groupoid or ring")
    if ctx_src.tgrp != ctx_dst.tgrp:
        raise ValueError("contexts disagree on the unit subgroup")
    if apply_coboundary(ctx_dst.coc, b) != ctx_src.coc:
        raise ValueError("coboundary does not connect the two cocycles")
    if f.ctx != ctx_src:
        raise ValueError("element lives in a different context")
    r = ctx_src.ring
    t = ctx_src.tgrp
    return Element(ctx_dst, {a: r.mul(t.embed(b[a]), c) for a, c in f.coeffs.items()})


def graded_component(f: Element, grading: Grading, label) -> Element:
    bad = validate_grading(grading)
    if bad:
        raise ValueError("invalid grading: " + "; ".join(bad[:4]))
    if grading.gpd != f.ctx.gpd:
        raise ValueError("grading lives over a different groupoid")
    deg = grading.deg
    return Element(f.ctx, {a: c for a, c in f.coeffs.items() if deg[a] == label})


def graded_components(f: Element, grading: Grading) -> dict:
    """label -> nonzero component, sorted by label."""
    bad = validate_grading(grading)
    if bad:
        raise ValueError("invalid grading: " + "; ".join(bad[:4]))
    labels = sorted({grading.deg[a] for a in f.coeffs})
    out = {}
    for lab in labels:
        part = Element(
            f.ctx, {a: c for a, c in f.coeffs.items() if grading.deg[a] == lab}
        )
        if part.coeffs:
            out[lab] = part
    return out


# --- the equivariant picture -------------------------------------------------


class EquivContext:
    """A twist, a chosen section, and the coefficient data."""

    def __init__(
        self,
        twist: Twist,
        section,
        ring: Ring,
        tgrp: UnitSubgroup,
        conj: Optional[Involution] = None,
    ):
        bad = validate_section(twist, section)
        if bad:
            raise ValueError("; ".join(bad))
        if tgrp.order != twist.n:
            raise ValueError("unit subgroup order does not match the twist")
        if tgrp.ring != ring:
            raise ValueError("unit subgroup lives in a different ring")
        if conj is not None and not rings.check_t_inverse_involution(ring, conj, tgrp):
            raise ValueError("involution does not invert the unit subgroup")
        self.twist = twist
        self.section = tuple(section)
        self.ring = ring
        self.tgrp = tgrp
        self.conj = conj

    def __eq__(self, other):
        return (
            isinstance(other, EquivContext)
            and self.twist == other.twist
            and self.section == other.section
            and self.ring == other.ring
            and self.tgrp == other.tgrp
            and self.conj == other.conj
        )

    def __hash__(self):
        return hash((self.twist, self.section, self.ring, self.tgrp, self.conj))


class EquivariantElement:
    """Fiber-scaling function on the total groupoid, stored by its values
    on the section: the full function is value(e) = g^k * h(a) where e sits
    over a and k is the unique scalar from sec(a) to e."""

    __slots__ = ("ectx", "h")

    def __init__(self, ectx: EquivContext, h: dict):
        self.ectx = ectx
        r = ectx.ring
        self.h = {a: c for a, c in h.items() if not r.is_zero(c)}

    def value(self, e: int):
        """Evaluate at any total arrow."""
        tw = self.ectx.twist
        a = tw.proj[e]
        c = self.h.get(a)
        if c is None:
            return self.ectx.ring.zero()
        k = unique_scalar(tw, self.ectx.section[a], e)
        return self.ectx.ring.mul(self.ectx.tgrp.embed(k), c)

    def __eq__(self, other):
        return (
            isinstance(other, EquivariantElement)
            and self.ectx == other.ectx
            and self.h == other.h
        )

    def __repr__(self):
        return "EquivariantElement(%d arrows)" % len(self.h)


def equiv_convolve(f: EquivariantElement, g: EquivariantElement) -> EquivariantElement:
    """Convolution in the equivariant picture, computed entirely from the
    twist's own composition tables: the value over a sums f(sec(a) sec(c))
    g(inv(sec(c))) over arrows c into src(a)."""
    if f.ectx != g.ectx:
        raise ValueError("elements live in different equivariant contexts")
    ectx = f.ectx
    tw = ectx.twist
    base = tw.base
    total = tw.total
    sec = ectx.section
    r = ectx.ring
    by_rng = base.arrows_by_rng()
    out = {}
    for a in range(base.m):
        acc = r.zero()
        for c in by_rng.get(base.src[a], ()):
            left = f.value(total.comp[(sec[a], sec[c])])
            if r.is_zero(left):
                continue
            right = g.value(total.inv[sec[c]])
            if r.is_zero(right):
                continue
            acc = r.add(acc, r.mul(left, right))
        if not r.is_zero(acc):
            out[a] = acc
    return EquivariantElement(ectx, out)


def equiv_star(f: EquivariantElement) -> EquivariantElement:
    """Star in the equivariant picture: conjugate of the value at the
    total-groupoid inverse."""
    ectx = f.ectx
    if ectx.conj is None:
        raise ValueError("context carries no involution")
    tw = ectx.twist
    out = {}
    for a in range(tw.base.m):
        val = f.value(tw.total.inv[ectx.section[a]])
        if not ectx.ring.is_zero(val):
            out[a] = ectx.conj(val)
    return EquivariantElement(ectx, out)


def psi(f: EquivariantElement, ctx: Context) -> Element:
    """Restriction along the section: an isomorphism onto the algebra of
    the inverted induced cocycle.  The target context must carry exactly
    that cocycle (and the same ring data)."""
    ectx = f.ectx
    expected = invert_cocycle(induced_cocycle(ectx.twist, ectx.section))
    if ctx.gpd != ectx.twist.base:
        raise ValueError("target context lives over a different groupoid")
    if ctx.coc != expected:
        raise ValueError("target cocycle is not the inverted induced cocycle")
    if ctx.ring != ectx.ring or ctx.tgrp != ectx.tgrp or ctx.conj != ectx.conj:
        raise ValueError("target context disagrees on coefficient data")
    return Element(ctx, dict(f.h))


def psi_inverse(ectx: EquivContext, f: Element) -> EquivariantElement:
    expected = invert_cocycle(induced_cocycle(ectx.twist, ectx.section))
    if f.ctx.coc != expected or f.ctx.gpd != ectx.twist.base:
        raise ValueError("element context does not match the twist and section")
    if f.ctx.ring != ectx.ring or f.ctx.tgrp != ectx.tgrp or f.ctx.conj != ectx.conj:
        raise ValueError("element context disagrees on coefficient data")
    return EquivariantElement(ectx, dict(f.coeffs))
