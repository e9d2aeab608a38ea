"""Two-sided ideals over a field and the uniqueness/simplicity machinery.

Ideals are stored as reduced row echelon bases in the delta-arrow
coordinate system.  Since the unit space is finite the algebra is unital,
so the two-sided ideal generated by f is already the linear span of
delta_a * f * delta_b over all arrow pairs (a, b); ideal_generated takes
that span, row reduces it with deterministic least-index pivoting, and
then verifies closure under one-sided delta multiplication.

ck_witness and graded_ck_witness realize the kernel-side constructions of
the uniqueness theorems: slide a support arrow to a unit with a delta
factor, cut down by a singleton unit set (principality of an effective
groupoid makes the singleton work), and certify the resulting unit
indicator by row-space membership.

is_simple has two deliberately independent modes.  Exhaustive mode scans
every nonzero element of the finite algebra (finite field, capped size) in
lexicographic order and checks that each generates the full algebra,
returning the first failure as certificate; structural mode answers from
minimality of an effective groupoid, with a proper invariant-orbit ideal
as the negative certificate, and reports None (unknown) when the groupoid
is not effective.
"""

from __future__ import annotations

import itertools
from collections import namedtuple
from typing import Iterable, Optional

from .algebra import Context, Element, char_fn, convolve, delta, graded_components
from .cocycle import Grading, validate_grading, kernel_arrows
from .groupoid import is_effective, is_minimal, orbits, subgroupoid


def to_vec(f: Element) -> list:
    z = f.ctx.ring.zero()
    vec = [z] * f.ctx.gpd.m
    for a, c in f.coeffs.items():
        vec[a] = c
    return vec


def from_vec(ctx: Context, vec) -> Element:
    return Element(ctx, {a: c for a, c in enumerate(vec)})


def rref(ring, rows: list) -> list:
    """Reduced row echelon form, least-index pivots, leading ones, sorted."""
    rows = [list(r) for r in rows]
    out = []
    for row in rows:
        for basis_row, piv in out:
            c = row[piv]
            if not ring.is_zero(c):
                for j in range(len(row)):
                    row[j] = ring.sub(row[j], ring.mul(c, basis_row[j]))
        piv = next((j for j, c in enumerate(row) if not ring.is_zero(c)), None)
        if piv is None:
            continue
        cinv = ring.inv(row[piv])
        row = [ring.mul(cinv, c) for c in row]
        # back-substitute into the rows already collected
        for prev, ppiv in out:
            c = prev[piv]
            if not ring.is_zero(c):
                for j in range(len(prev)):
                    prev[j] = ring.sub(prev[j], ring.mul(c, row[j]))
        out.append((row, piv))
    out.sort(key=lambda t: t[1])
    return [tuple(r) for r, _ in out]


def reduce_against(ring, basis: list, vec) -> list:
    """Remainder of vec after elimination by an RREF basis."""
    rem = list(vec)
    for row in basis:
        piv = next(j for j, c in enumerate(row) if not ring.is_zero(c))
        c = rem[piv]
        if not ring.is_zero(c):
            for j in range(len(rem)):
                rem[j] = ring.sub(rem[j], ring.mul(c, row[j]))
    return rem


class Ideal:
    """Two-sided ideal with an RREF basis; closure verified at build time."""

    def __init__(self, ctx: Context, basis, verify: bool = True):
        if not ctx.ring.is_field:
            raise ValueError("ideals require field coefficients")
        self.ctx = ctx
        self.basis = tuple(tuple(r) for r in basis)
        if verify:
            bad = self._closure_violations()
            if bad:
                raise ValueError("; ".join(bad[:3]))

    def _closure_violations(self):
        bad = []
        for row in self.basis:
            f = from_vec(self.ctx, row)
            for a in range(self.ctx.gpd.m):
                d = delta(self.ctx, a)
                if not self.member(convolve(d, f)):
                    bad.append("not closed under left delta_%d" % a)
                if not self.member(convolve(f, d)):
                    bad.append("not closed under right delta_%d" % a)
        return bad

    @property
    def dim(self) -> int:
        return len(self.basis)

    def member(self, f: Element) -> bool:
        if f.ctx != self.ctx:
            raise ValueError("element lives in a different context")
        rem = reduce_against(self.ctx.ring, list(self.basis), to_vec(f))
        return all(self.ctx.ring.is_zero(c) for c in rem)

    def __eq__(self, other):
        return (
            isinstance(other, Ideal)
            and self.ctx == other.ctx
            and self.basis == other.basis
        )


def ideal_generated(ctx: Context, elems: Iterable[Element], verify: bool = True) -> Ideal:
    """Smallest two-sided ideal containing the given elements."""
    if not ctx.ring.is_field:
        raise ValueError("ideals require field coefficients")
    rows = []
    m = ctx.gpd.m
    for f in elems:
        if f.ctx != ctx:
            raise ValueError("generator lives in a different context")
        for a in range(m):
            da = delta(ctx, a)
            left = convolve(da, f)
            if not left.coeffs:
                continue
            for b in range(m):
                prod = convolve(left, delta(ctx, b))
                if prod.coeffs:
                    rows.append(to_vec(prod))
    return Ideal(ctx, rref(ctx.ring, rows), verify=verify)


def ck_witness(ctx: Context, ideal: Ideal) -> frozenset:
    """Nonempty unit set V with the indicator of V inside the ideal.

    Construction: take the first basis element f and its least support
    arrow, slide that arrow to a unit by convolving with the inverse
    delta, and cut down by the singleton at the source.  Effectiveness
    (principality here) collapses the cut to a scalar multiple of the
    indicator.  Membership is certified against the row space.
    """
    if ctx != ideal.ctx:
        raise ValueError("ideal lives in a different context")
    if not is_effective(ctx.gpd):
        raise ValueError("groupoid is not effective")
    if not ideal.basis:
        raise ValueError("zero ideal has no witness")
    f = from_vec(ctx, ideal.basis[0])
    arrow = min(f.coeffs)
    slid = convolve(delta(ctx, ctx.gpd.inv[arrow]), f)
    unit = ctx.gpd.src[arrow]
    assert not ctx.ring.is_zero(slid.value(unit))
    witness = frozenset([unit])
    if not ideal.member(char_fn(ctx, witness)):
        raise RuntimeError("witness indicator escaped the row space")
    return witness


def is_graded_ideal(ideal: Ideal, grading: Grading) -> bool:
    """Every homogeneous component of every basis element stays inside."""
    bad = validate_grading(grading)
    if bad:
        raise ValueError("invalid grading: " + "; ".join(bad[:4]))
    for row in ideal.basis:
        f = from_vec(ideal.ctx, row)
        for part in graded_components(f, grading).values():
            if not ideal.member(part):
                return False
    return True


def graded_ck_witness(ctx: Context, grading: Grading, ideal: Ideal) -> frozenset:
    """Witness for graded ideals: pick a homogeneous component, slide it
    into the identity-degree subgroupoid, and cut down there.  Needs that
    subgroupoid (not necessarily the whole groupoid) to be effective."""
    if ctx != ideal.ctx:
        raise ValueError("ideal lives in a different context")
    bad = validate_grading(grading)
    if bad:
        raise ValueError("invalid grading: " + "; ".join(bad[:4]))
    if not ideal.basis:
        raise ValueError("zero ideal has no witness")
    kernel, _ = subgroupoid(ctx.gpd, kernel_arrows(grading))
    if not is_effective(kernel):
        raise ValueError("identity-degree subgroupoid is not effective")
    if not is_graded_ideal(ideal, grading):
        raise ValueError("ideal is not graded")
    f = from_vec(ctx, ideal.basis[0])
    arrow = min(f.coeffs)
    part = graded_components(f, grading)[grading.deg[arrow]]
    slid = convolve(delta(ctx, ctx.gpd.inv[arrow]), part)
    # slid lives in the identity-degree subalgebra and in the ideal
    e = grading.group.identity
    assert all(grading.deg[a] == e for a in slid.coeffs)
    unit = ctx.gpd.src[arrow]
    assert not ctx.ring.is_zero(slid.value(unit))
    witness = frozenset([unit])
    if not ideal.member(char_fn(ctx, witness)):
        raise RuntimeError("witness indicator escaped the row space")
    return witness


# --- simplicity --------------------------------------------------------------

SimpleResult = namedtuple("SimpleResult", "simple certificate reason")


def _product_recipes(ctx: Context):
    """Per arrow pair (a, b), how delta_a * v * delta_b reads off v:
    entries (c, target, scalar) with target = a c b.  Recipes are emitted
    round-robin across the range classes of the left factor so that a
    rank scan touches many pivot positions early."""
    gpd = ctx.gpd
    by_rng = gpd.arrows_by_rng()
    buckets = {}
    for a in range(gpd.m):
        for b in range(gpd.m):
            entries = []
            for c in by_rng.get(gpd.src[a], ()):
                if gpd.src[c] != gpd.rng[b]:
                    continue
                ac = gpd.comp[(a, c)]
                target = gpd.comp[(ac, b)]
                scalar = ctx.ring.mul(ctx.coc_val(a, c), ctx.coc_val(ac, b))
                entries.append((c, target, scalar))
            if entries:
                buckets.setdefault(gpd.rng[a], []).append(entries)
    order = sorted(buckets)
    out = []
    idx = 0
    while True:
        emitted = False
        for key in order:
            lst = buckets[key]
            if idx < len(lst):
                out.append(lst[idx])
                emitted = True
        if not emitted:
            return out
        idx += 1


def _generates_everything(ring, m, vec, recipes) -> bool:
    """Rank of span{delta_a vec delta_b} reaches m, by incremental
    insertion into a pivot table with early exit."""
    pivots = {}
    rank = 0
    zero = ring.zero()
    for recipe in recipes:
        w = {}
        for c, target, scalar in recipe:
            vc = vec[c]
            if ring.is_zero(vc):
                continue
            prev = w.get(target)
            term = ring.mul(scalar, vc)
            w[target] = term if prev is None else ring.add(prev, term)
        while w:
            j = min(w)
            lead = w.pop(j)
            if ring.is_zero(lead):
                continue
            row = pivots.get(j)
            if row is None:
                cinv = ring.inv(lead)
                pivots[j] = {j: ring.one()}
                pivots[j].update(
                    (k, ring.mul(cinv, val)) for k, val in w.items() if not ring.is_zero(val)
                )
                rank += 1
                if rank == m:
                    return True
                break
            for k, val in row.items():
                if k == j:
                    continue
                nval = ring.sub(w.get(k, zero), ring.mul(lead, val))
                if ring.is_zero(nval):
                    w.pop(k, None)
                else:
                    w[k] = nval
    return rank == m


def _generates_everything_gf2(m, bits, recipes_gf2) -> bool:
    """GF(2) fast path: vectors are bit masks, reduction is xor."""
    pivots = [0] * m
    rank = 0
    for recipe in recipes_gf2:
        w = 0
        for c, target in recipe:
            if (bits >> c) & 1:
                w ^= 1 << target
        while w:
            j = w.bit_length() - 1
            row = pivots[j]
            if row:
                w ^= row
            else:
                pivots[j] = w
                rank += 1
                if rank == m:
                    return True
                break
    return rank == m


def _candidates(ring, m):
    """All nonzero vectors with leading coefficient fixed to the least
    nonzero field element, in ascending lexicographic order.  The first
    failing candidate here is the lexicographically first failing element
    of the whole algebra, since scaling preserves the generated ideal."""
    elems = list(ring.elements())
    lead = next(e for e in elems if not ring.is_zero(e))
    z = ring.zero()
    for pos in range(m - 1, -1, -1):
        head = [z] * pos + [lead]
        for tail in itertools.product(elems, repeat=m - 1 - pos):
            yield head + list(tail)


def is_simple(ctx: Context, mode: str = "structural", cap: int = 2 ** 20) -> SimpleResult:
    """Simplicity of the twisted convolution algebra.

    exhaustive: every nonzero element must generate the full algebra;
    needs a finite field with size**arrows <= cap.  The certificate of a
    negative answer is the first failing element.  structural: answers
    from minimality when the groupoid is effective, with a proper ideal
    built from a nontrivial invariant unit set as negative certificate;
    on a non-effective groupoid the verdict is None (unknown).
    """
    if not ctx.ring.is_field:
        raise ValueError("simplicity is defined here over field coefficients")
    gpd = ctx.gpd
    if mode == "exhaustive":
        if ctx.ring.size is None:
            raise ValueError("exhaustive mode needs a finite field")
        if ctx.ring.size ** gpd.m > cap:
            raise ValueError(
                "search space %d**%d exceeds cap %d" % (ctx.ring.size, gpd.m, cap)
            )
        m = gpd.m
        recipes = _product_recipes(ctx)
        if ctx.ring.kind == ("GF", 2):
            recipes2 = [[(c, t) for c, t, _ in rec] for rec in recipes]
            for vec in _candidates(ctx.ring, m):
                bits = 0
                for i, c in enumerate(vec):
                    if c:
                        bits |= 1 << i
                if not _generates_everything_gf2(m, bits, recipes2):
                    cert = from_vec(ctx, vec)
                    return SimpleResult(False, cert, "element generates a proper ideal")
        else:
            for vec in _candidates(ctx.ring, m):
                if not _generates_everything(ctx.ring, m, vec, recipes):
                    cert = from_vec(ctx, vec)
                    return SimpleResult(False, cert, "element generates a proper ideal")
        return SimpleResult(True, None, "every nonzero element generates the algebra")
    if mode == "structural":
        if not is_effective(gpd):
            return SimpleResult(None, None, "groupoid is not effective")
        if is_minimal(gpd):
            return SimpleResult(True, None, "effective and minimal")
        orb = orbits(gpd)[0]
        inside = set(orb)
        rows = [
            to_vec(delta(ctx, a))
            for a in range(gpd.m)
            if gpd.src[a] in inside
        ]
        cert = Ideal(ctx, rref(ctx.ring, rows))
        return SimpleResult(False, cert, "proper ideal over invariant units %s" % (sorted(orb),))
    raise ValueError("unknown mode %r" % mode)
