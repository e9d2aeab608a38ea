"""Shared helpers plus the acceptance-criteria report.

Acceptance tests call record(n) as their last statement; the terminal
summary then prints one PASS/FAIL line per criterion.  A criterion whose
test failed (or never ran) stays FAIL.
"""

import random

import twistalg as T

CRITERIA = {
    1: "groupoid axiom suite over the whole catalog, exhaustive associativity",
    2: "convolution associativity and star laws on random elements, 6+ contexts",
    3: "characteristic-function identities for every bisection, twisted",
    4: "cohomologous = isomorphic twists = matching induced cocycles, with class counts",
    5: "canonical section induces its own cocycle; all sections checked",
    6: "equivariant picture is a star-preserving algebra isomorphism",
    7: "unit-set witness lands inside every randomly generated ideal",
    8: "exhaustive and structural simplicity verdicts agree on effective contexts",
    9: "simplicity flip on the order-two group over GF(3)",
    10: "grading reassembly, component products, graded witnesses",
    11: "free module of rank |G|; local units absorb every finite family",
    12: "CLI output byte-stable and re-parseable",
}

_passed = set()
_acceptance_seen = False


def record(num: int) -> None:
    _passed.add(num)


def pytest_collection_modifyitems(items):
    global _acceptance_seen
    for item in items:
        if "test_acceptance" in item.nodeid:
            _acceptance_seen = True
            break


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance_seen:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(CRITERIA):
        status = "PASS" if num in _passed else "FAIL"
        terminalreporter.write_line("criterion %02d %s  %s" % (num, status, CRITERIA[num]))


# --- shared constructors --------------------------------------------------


def all_sections(tw):
    """Every global section: units are forced, other fibers are free."""
    import itertools

    slots = []
    for a in range(tw.base.m):
        if a in tw.base.unit_set:
            slots.append((tw.embed[(a, 0)],))
        else:
            slots.append(tw.fiber(a))
    return [list(choice) for choice in itertools.product(*slots)]


def carry_cocycle(n: int):
    """On the order-n cyclic group: exponent 1 exactly when the sum of two
    elements wraps.  The total number of wraps in a triple sum is the same
    however it is bracketed, so the identity holds over the integers; the
    extension it classifies is the order-n^2 cyclic group, which has an
    element of order n^2, so for n > 1 this is never a coboundary."""
    g = T.build("z%d" % n)
    table = {(a, b): (1 if a + b >= n else 0) for (a, b) in g.comp}
    coc = T.Cocycle(g, n, table)
    assert T.validate_cocycle(coc) == []
    return coc


def make_context(g, ring_spec, coc=None, involution=None):
    ring = T.parse_ring(ring_spec)
    if coc is None:
        coc = T.trivial_cocycle(g, 1)
    tgrp = T.unit_subgroup(ring, coc.n)
    conj = T.parse_involution(ring, involution) if involution else None
    return T.Context(g, ring, tgrp, coc, conj)


def random_element(ctx, rnd: random.Random, density: float = 0.6):
    coeffs = {}
    for a in range(ctx.gpd.m):
        if rnd.random() < density:
            coeffs[a] = ctx.ring.random_element(rnd)
    return T.from_coeffs(ctx, coeffs)


def random_nonzero(ctx, rnd: random.Random, density: float = 0.6):
    while True:
        f = random_element(ctx, rnd, density)
        if f.coeffs:
            return f
