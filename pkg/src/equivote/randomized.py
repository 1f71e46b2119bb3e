"""Seeded randomized construction of group-symmetric coalition rules.

The target object is a small set of voters meeting every translate under a
given permutation group; its orbit then forms a pairwise-intersecting
coalition family, and the group certifies the equity of the induced rule.

All randomness flows through Python's Mersenne Twister (random.Random)
seeded explicitly, with draws taken by randrange in stream order, so every
construction is reproducible byte for byte from (group, seed).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .geometry import pgl2_elements
from .perms import PermGroup, Permutation, generate_closure
from .rules import CoalitionRule, make_coalition_rule

MAX_ATTEMPTS = 64


class ConstructionFailed(RuntimeError):
    def __init__(self, message: str, attempts: int):
        super().__init__(message)
        self.attempts = attempts


@dataclass(frozen=True)
class IntersectingSet:
    """A set of points meeting all its translates under a group."""

    points: tuple[int, ...]
    ell: int
    attempts: int
    group_order: int
    certified: bool


def verify_intersecting_set(group: PermGroup, points) -> bool:
    """Re-check translate overlap, written independently of the search loop."""
    if group.elements is None:
        raise ValueError("verification needs enumerated group elements")
    pts = frozenset(points)
    return all(
        not pts.isdisjoint(frozenset(g.images[v] for v in pts))
        for g in group.elements
    )


def intersecting_set(
    group: PermGroup, seed: int = 0, max_attempts: int = MAX_ATTEMPTS
) -> IntersectingSet:
    """Draw a set of at most 2*ceil(sqrt(n)*ln(m)) points meeting every
    translate.

    The fixed block {0..ell-1} is joined with ell seeded uniform draws;
    failed attempts redraw the random half on the same stream. Success is
    confirmed twice, by the search predicate and by an independent pass.
    """
    if group.elements is None:
        raise ValueError("construction needs enumerated group elements")
    n = group.n
    m = group.order
    if m <= 2:
        raise ValueError("group order must exceed 2")
    ell = math.ceil(math.sqrt(n) * math.log(m))
    rng = random.Random(seed)
    base = tuple(range(min(ell, n)))
    for attempt in range(1, max_attempts + 1):
        draws = [rng.randrange(n) for _ in range(ell)]
        point_set = set(base) | set(draws)
        ok = True
        for g in group.elements:
            if not any(g.images[v] in point_set for v in point_set):
                ok = False
                break
        if ok:
            points = tuple(sorted(point_set))
            if not verify_intersecting_set(group, points):
                raise AssertionError("verification disagrees with search")
            return IntersectingSet(
                points=points,
                ell=ell,
                attempts=attempt,
                group_order=m,
                certified=True,
            )
    raise ConstructionFailed(
        f"no intersecting set within {max_attempts} attempts", max_attempts
    )


def group_from_descriptor(desc: dict) -> PermGroup:
    """Rebuild an enumerated group from its serializable description."""
    kind = desc.get("kind")
    if kind == "cyclic":
        n = desc["n"]
        return generate_closure(n, [Permutation.rotation(n)])
    if kind == "pgl2":
        return pgl2_elements(desc["p"])
    raise ValueError(f"unknown group descriptor {kind!r}")


def orbit_family(group: PermGroup, members) -> tuple[frozenset[int], ...]:
    """All translates of the member set, deduplicated."""
    if group.elements is None:
        raise ValueError("orbit needs enumerated group elements")
    seen = {frozenset(g.images[v] for v in members) for g in group.elements}
    return tuple(sorted(seen, key=lambda s: (len(s), sorted(s))))


def build_rule_from_group(
    group: PermGroup,
    descriptor: dict,
    seed: int = 0,
    max_attempts: int = MAX_ATTEMPTS,
) -> CoalitionRule:
    """Coalition rule whose family is the orbit of a drawn intersecting set.

    Pairwise intersection of the family is re-validated directly by the rule
    constructor, and every group element is checked to permute the family,
    which makes the input group a certified automorphism subgroup.
    """
    found = intersecting_set(group, seed=seed, max_attempts=max_attempts)
    family = orbit_family(group, found.points)
    rule = make_coalition_rule(
        group.n,
        family,
        provenance={
            "kind": "group_orbit",
            "group": descriptor,
            "seed": seed,
            "ell": found.ell,
            "attempts": found.attempts,
            "points": list(found.points),
        },
    )
    family_set = frozenset(rule.family)
    for g in group.elements:
        mapped = {frozenset(g.images[v] for v in member) for member in family_set}
        if mapped != family_set:
            raise AssertionError("group element does not permute the family")
    return rule


@dataclass(frozen=True)
class EquitableConstruction:
    rule: CoalitionRule
    points: tuple[int, ...]
    ell: int
    attempts: int
    group_order: int
    set_size_bound: float
    coalition_size_bound: float

    @property
    def size_ok(self) -> bool:
        size = len(self.points)
        return size <= self.set_size_bound and size <= self.coalition_size_bound


def build_3_equitable_rule(p: int, seed: int = 0) -> EquitableConstruction:
    """Rule on p+1 voters with a sharply 3-transitive symmetry group.

    The fractional-linear group on the projective line has order
    n(n-1)(n-2), so the drawn set is within 2*sqrt(n)*ln(n(n-1)(n-2)) + 2
    voters and in particular within 6*sqrt(n)*ln(n) + 2.
    """
    group = pgl2_elements(p)
    n = group.n
    rule = build_rule_from_group(group, {"kind": "pgl2", "p": p}, seed=seed)
    prov = rule.provenance
    points = prov["points"]
    m = group.order
    return EquitableConstruction(
        rule=rule,
        points=tuple(sorted(points)),
        ell=prov["ell"],
        attempts=prov["attempts"],
        group_order=m,
        set_size_bound=2.0 * math.sqrt(n) * math.log(m) + 2.0,
        coalition_size_bound=6.0 * math.sqrt(n) * math.log(n) + 2.0,
    )
