import math

import pytest

from equivote.analysis import certified_subgroup, is_equitable, is_k_equitable
from equivote.perms import PermGroup, Permutation
from equivote.randomized import (
    ConstructionFailed,
    IntersectingSet,
    build_3_equitable_rule,
    build_rule_from_group,
    group_from_descriptor,
    intersecting_set,
    orbit_family,
    verify_intersecting_set,
)
from equivote.rules import CoalitionRule


def cyclic(n):
    return group_from_descriptor({"kind": "cyclic", "n": n})


def test_group_from_descriptor():
    c5 = cyclic(5)
    assert c5.order == 5
    assert Permutation.rotation(5) in c5.elements
    assert group_from_descriptor({"kind": "pgl2", "p": 3}).order == 24
    with pytest.raises(ValueError):
        group_from_descriptor({"kind": "frieze"})


def test_intersecting_set_c16():
    got = intersecting_set(cyclic(16), seed=0)
    assert isinstance(got, IntersectingSet)
    assert got.ell == 12
    assert got.attempts == 1
    assert got.group_order == 16
    assert got.certified
    assert all(0 <= v < 16 for v in got.points)
    assert len(got.points) <= 2 * got.ell
    assert got == intersecting_set(cyclic(16), seed=0)
    assert got != intersecting_set(cyclic(16), seed=1)


def test_intersecting_set_c100():
    got = intersecting_set(cyclic(100), seed=7)
    assert got.ell == math.ceil(10 * math.log(100)) == 47
    assert len(got.points) <= 94
    assert got.certified
    assert verify_intersecting_set(cyclic(100), got.points)


def test_intersecting_set_rejects_tiny_group():
    with pytest.raises(ValueError):
        intersecting_set(cyclic(2))


def test_intersecting_set_needs_enumerated_group():
    lazy = PermGroup(n=5, generators=(Permutation.rotation(5),))
    with pytest.raises(ValueError):
        intersecting_set(lazy)
    with pytest.raises(ValueError):
        verify_intersecting_set(lazy, (0, 1))


def test_construction_failure_carries_attempts():
    with pytest.raises(ConstructionFailed) as exc:
        intersecting_set(cyclic(16), max_attempts=0)
    assert exc.value.attempts == 0


def test_verify_intersecting_set():
    assert not verify_intersecting_set(cyclic(16), (0,))
    assert verify_intersecting_set(cyclic(16), tuple(range(9)))


def test_orbit_family_frozen():
    fam = orbit_family(cyclic(4), {0, 1})
    assert fam == (
        frozenset({0, 1}),
        frozenset({0, 3}),
        frozenset({1, 2}),
        frozenset({2, 3}),
    )


def test_build_rule_from_group():
    group = cyclic(16)
    desc = {"kind": "cyclic", "n": 16}
    rule = build_rule_from_group(group, desc, seed=0)
    assert isinstance(rule, CoalitionRule)
    assert rule.n == 16
    assert rule == build_rule_from_group(group, desc, seed=0)

    prov = rule.provenance
    assert prov["kind"] == "group_orbit"
    assert prov["group"] == desc
    assert prov["seed"] == 0
    assert prov["ell"] == 12
    assert prov["attempts"] == 1

    points = frozenset(prov["points"])
    family = set(rule.family)
    assert points in family
    for g in group.elements:
        assert frozenset(g.images[v] for v in points) in family
        for member in family:
            assert frozenset(g.images[v] for v in member) in family


def test_built_rule_is_certified_equitable():
    rule = build_rule_from_group(cyclic(16), {"kind": "cyclic", "n": 16}, seed=0)
    cert = certified_subgroup(rule)
    assert cert.kind == "family_group"
    assert cert.validated
    assert cert.group.order == 16
    assert is_equitable(rule) is True


def test_build_3_equitable_rule():
    got = build_3_equitable_rule(3)
    assert got.rule.n == 4
    assert got.group_order == 24
    assert got.size_ok
    assert got.points == tuple(sorted(got.points))
    assert is_k_equitable(got.rule, 3) is True
    again = build_3_equitable_rule(3)
    assert got == again
