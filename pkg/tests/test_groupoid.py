"""Groupoid axioms, predicates, restriction, bisections."""

import pytest

import twistalg as T


def mutate(g, **kw):
    parts = dict(
        units=list(g.units), src=list(g.src), rng=list(g.rng),
        inv=list(g.inv), comp=dict(g.comp),
    )
    parts.update(kw)
    return T.Groupoid(**parts)


def test_catalog_passes_validator():
    for name in T.CATALOG:
        assert T.validate_groupoid(T.build(name)) == []


def test_validator_catches_broken_inverse():
    g = T.build("pair2")
    inv = list(g.inv)
    inv[1] = 1  # (1,2) is not its own inverse
    bad = T.validate_groupoid(mutate(g, inv=inv))
    assert bad and any("inv" in v or "inverse" in v for v in bad)


def test_validator_catches_wrong_composition_target():
    g = T.build("pair2")
    comp = dict(g.comp)
    comp[(1, 2)] = 3  # (1,2)(2,1) = (1,1), not (2,2)
    assert T.validate_groupoid(mutate(g, comp=comp))


def test_validator_catches_missing_composition():
    g = T.build("pair2")
    comp = dict(g.comp)
    del comp[(1, 2)]
    bad = T.validate_groupoid(mutate(g, comp=comp))
    assert bad


def test_validator_catches_extra_composition():
    g = T.build("pair2")
    comp = dict(g.comp)
    comp[(1, 1)] = 0  # src(1) = 3 != 0 = rng(1); pair is not composable
    assert T.validate_groupoid(mutate(g, comp=comp))


def test_validator_catches_nonunit_source():
    g = T.build("pair2")
    src = list(g.src)
    src[1] = 2
    assert T.validate_groupoid(mutate(g, src=src))


def test_validator_catches_broken_associativity():
    # a 3-cycle composition table on the s3 carrier cannot stay associative
    # once one product is redirected; easier: corrupt z4's table
    g = T.build("z4")
    comp = dict(g.comp)
    comp[(1, 1)] = 3
    bad = T.validate_groupoid(mutate(g, comp=comp))
    assert bad


def test_check_groupoid_raises():
    g = T.build("pair2")
    inv = list(g.inv)
    inv[1] = 1
    with pytest.raises(ValueError):
        T.check_groupoid(mutate(g, inv=inv))


def test_isotropy_and_effective():
    assert T.isotropy(T.build("pair3")) == frozenset([0, 4, 8])
    assert T.is_effective(T.build("pair3"))
    z4 = T.build("z4")
    assert T.isotropy(z4) == frozenset(range(4))
    assert not T.is_effective(z4)
    fix3 = T.build("fix3")
    # the swap fixes point 2, so the non-unit arrow (swap, 2) is isotropy
    assert not T.is_effective(fix3)
    assert len(T.isotropy(fix3)) == 4


def test_orbits_and_minimal():
    assert T.orbits(T.build("pair3")) == [(0, 4, 8)]
    assert T.is_minimal(T.build("pair3"))
    uu = T.build("pair2_pair2")
    assert T.orbits(uu) == [(0, 3), (4, 7)]
    assert not T.is_minimal(uu)
    assert T.orbits(T.build("fix3")) == [(0, 1), (2,)]


def test_restrict_to_invariant_units():
    uu = T.build("pair2_pair2")
    block = T.restrict(uu, [0, 3])
    assert T.validate_groupoid(block) == []
    assert block.m == 4
    assert block == T.build("pair2")


def test_restrict_rejects_noninvariant_set():
    p2 = T.build("pair2")
    with pytest.raises(ValueError):
        T.restrict(p2, [0])


def test_subgroupoid_reindexes():
    p3 = T.build("pair3")
    # arrows among points {1,2}: indices (i-1)*3+(j-1) for i,j in {1,2}
    sub, old_of_new = T.subgroupoid(p3, [0, 1, 3, 4])
    assert T.validate_groupoid(sub) == []
    assert sub.m == 4
    assert [old_of_new[a] for a in range(4)] == [0, 1, 3, 4]
    assert sub == T.build("pair2")


def test_bisection_counts():
    assert len(T.enumerate_bisections(T.build("pair3"))) == 34
    assert len(T.enumerate_bisections(T.build("z4"))) == 5
    assert len(T.enumerate_bisections(T.build("pair1"))) == 2


def test_bisection_cap():
    with pytest.raises(ValueError):
        T.enumerate_bisections(T.build("pair4"), cap=10)


def test_bisection_inverse_semigroup_closure():
    g = T.build("pair2")
    bis = T.enumerate_bisections(g)
    bset = set(bis)
    for b in bis:
        assert T.bisection_inverse(g, b) in bset
        for d in bis:
            prod = T.bisection_product(g, b, d)
            assert prod in bset
    # product of a bisection with its inverse is the range unit set
    for b in bis:
        rb = frozenset(g.rng[a] for a in b)
        assert T.bisection_product(g, b, T.bisection_inverse(g, b)) == rb


def test_is_bisection():
    g = T.build("pair2")
    assert T.is_bisection(g, [1, 2])
    assert T.is_bisection(g, [])
    assert not T.is_bisection(g, [0, 1])  # both have source/range clashes
