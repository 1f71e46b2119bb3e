"""Voting rule variants, evaluation, and the profile-space axiom checks.

A rule maps profiles over {-1, 0, +1} to a collective vote in {-1, 0, +1}.
Variants: plain majority, cyclic longest-run, dictatorship, recursive majority
over a partition tree (GRD), crosscutting row/column grids (CCC), and rules
induced by a pairwise-intersecting family of coalitions (consensus on a family
member wins, otherwise majority decides).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Optional, Union

from .profiles import VoteProfile, votes_from_code

GRDTree = Union[int, tuple]

PROFILE_SCAN_CAP = 12  # 3^n table scans refused above this degree


class InfeasibleError(ValueError):
    """The requested exhaustive computation exceeds its cap."""


def sign(x: int) -> int:
    return (x > 0) - (x < 0)


def eval_majority(votes: tuple[int, ...]) -> int:
    return sign(sum(votes))


@dataclass(frozen=True)
class Majority:
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be positive")


@dataclass(frozen=True)
class LongestRun:
    """Unique strictly-longest cyclic block of identical nonzero votes decides,
    otherwise majority."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be positive")


@dataclass(frozen=True)
class Dictatorship:
    n: int
    dictator: int = 0

    def __post_init__(self) -> None:
        if not 0 <= self.dictator < self.n:
            raise ValueError("dictator out of range")


@dataclass(frozen=True)
class GRD:
    """Recursive majority over a partition tree; leaves are voter indices."""

    tree: GRDTree

    def __post_init__(self) -> None:
        leaves = tree_leaves(self.tree)
        if sorted(leaves) != list(range(len(leaves))):
            raise ValueError("leaves must be exactly 0..n-1")

    @cached_property
    def n(self) -> int:
        return len(tree_leaves(self.tree))


@dataclass(frozen=True)
class CCC:
    """Coalition rule over all row-union-column sets of a rows x cols grid."""

    rows: int
    cols: int

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise ValueError("grid dimensions must be positive")

    @property
    def n(self) -> int:
        return self.rows * self.cols


@dataclass(frozen=True)
class CoalitionRule:
    """Consensus on any family member forces the outcome; majority otherwise.

    The family must be pairwise intersecting, so the two consensus branches
    can never both fire.
    """

    n: int
    family: tuple[frozenset[int], ...]
    provenance: Optional[dict] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if not self.family:
            raise ValueError("family must be nonempty")
        members = list(self.family)
        for m in members:
            if not m:
                raise ValueError("family members must be nonempty")
            if not all(0 <= v < self.n for v in m):
                raise ValueError("family member out of range")
        for a, b in itertools.combinations(members, 2):
            if a.isdisjoint(b):
                raise ValueError(f"family members {sorted(a)} and {sorted(b)} are disjoint")


VotingRule = Union[Majority, LongestRun, Dictatorship, GRD, CCC, CoalitionRule]


def make_coalition_rule(
    n: int, members: Iterable[Iterable[int]], provenance: Optional[dict] = None
) -> CoalitionRule:
    """Canonicalize (dedupe, sort) and validate a coalition family."""
    fam = sorted({frozenset(m) for m in members}, key=lambda s: (len(s), sorted(s)))
    return CoalitionRule(n=n, family=tuple(fam), provenance=provenance)


def tree_leaves(tree: GRDTree) -> list[int]:
    if isinstance(tree, int):
        return [tree]
    if not isinstance(tree, tuple) or not tree:
        raise ValueError("tree nodes must be nonempty tuples")
    out: list[int] = []
    for child in tree:
        out.extend(tree_leaves(child))
    return out


def is_uniform_tree(tree: GRDTree) -> bool:
    """Every level is all-leaves or all-nodes of one arity."""
    level = [tree]
    while True:
        if all(isinstance(t, int) for t in level):
            return True
        if any(isinstance(t, int) for t in level):
            return False
        arities = {len(t) for t in level}
        if len(arities) != 1:
            return False
        level = [child for t in level for child in t]


def uniform_tree(branching: tuple[int, ...]) -> GRDTree:
    """Build the tree with the given arity at each level, leaves in order."""

    def build(level: int, start: int) -> tuple[GRDTree, int]:
        if level == len(branching):
            return start, start + 1
        children = []
        cursor = start
        for _ in range(branching[level]):
            child, cursor = build(level + 1, cursor)
            children.append(child)
        return tuple(children), cursor

    tree, _ = build(0, 0)
    return tree


def uniform_grd(branching: Iterable[int]) -> GRD:
    return GRD(tree=uniform_tree(tuple(branching)))


@lru_cache(maxsize=64)
def ccc_family(rows: int, cols: int) -> tuple[frozenset[int], ...]:
    members = []
    for i in range(rows):
        for j in range(cols):
            row = {i * cols + c for c in range(cols)}
            col = {r * cols + j for r in range(rows)}
            members.append(frozenset(row | col))
    return tuple(sorted(set(members), key=lambda s: (len(s), sorted(s))))


def rule_degree(rule: VotingRule) -> int:
    return rule.n


def eval_longest_run(votes: tuple[int, ...]) -> int:
    n = len(votes)
    first = votes[0]
    if all(v == first for v in votes):
        return first  # single run covering the cycle, or no runs at all
    start = next(i for i in range(n) if votes[i] != votes[i - 1])
    blocks: list[tuple[int, int]] = []
    value = votes[start]
    length = 0
    for k in range(n):
        v = votes[(start + k) % n]
        if v == value:
            length += 1
        else:
            blocks.append((value, length))
            value, length = v, 1
    blocks.append((value, length))
    runs = [(val, ln) for val, ln in blocks if val != 0]
    if runs:
        best = max(ln for _, ln in runs)
        top = [val for val, ln in runs if ln == best]
        if len(top) == 1:
            return top[0]
    return eval_majority(votes)


def eval_grd(tree: GRDTree, votes: tuple[int, ...]) -> int:
    if isinstance(tree, int):
        return votes[tree]
    return sign(sum(eval_grd(child, votes) for child in tree))


def eval_coalition(family: tuple[frozenset[int], ...], votes: tuple[int, ...]) -> int:
    for x in (1, -1):
        for member in family:
            if all(votes[v] == x for v in member):
                return x
    return eval_majority(votes)


def outcome(rule: VotingRule, votes: tuple[int, ...]) -> int:
    if isinstance(rule, Majority):
        return eval_majority(votes)
    if isinstance(rule, LongestRun):
        return eval_longest_run(votes)
    if isinstance(rule, Dictatorship):
        return votes[rule.dictator]
    if isinstance(rule, GRD):
        return eval_grd(rule.tree, votes)
    if isinstance(rule, CCC):
        return eval_coalition(ccc_family(rule.rows, rule.cols), votes)
    if isinstance(rule, CoalitionRule):
        return eval_coalition(rule.family, votes)
    raise TypeError(f"unknown rule type {type(rule).__name__}")


def evaluate(rule: VotingRule, phi: VoteProfile) -> int:
    if phi.n != rule_degree(rule):
        raise ValueError("profile degree does not match rule degree")
    return outcome(rule, phi.votes)


def has_monotone_certificate(rule: VotingRule) -> bool:
    """Rule families whose outcome is coordinatewise monotone by construction.

    Coalition-family rules are positively responsive, majority and
    dictatorship are monotone directly, and recursive majority preserves
    monotonicity through composition. The longest-run rule carries no
    certificate: it fails monotonicity for some degrees (first at n=10).
    """
    return isinstance(rule, (Majority, Dictatorship, GRD, CCC, CoalitionRule))


def _require_scan(n: int, cap: int) -> None:
    if n > cap:
        raise InfeasibleError(f"3^{n} profile scan exceeds cap n<={cap}")


def is_neutral(rule: VotingRule, cap: int = PROFILE_SCAN_CAP, workers: int = 1) -> bool:
    """f(-phi) == -f(phi) over every profile."""
    import numpy as np

    from .tables import outcome_table

    n = rule_degree(rule)
    _require_scan(n, cap)
    table = outcome_table(rule, workers=workers)
    return bool(np.array_equal(table[::-1], -table))


def is_symmetric(rule: VotingRule, cap: int = PROFILE_SCAN_CAP, workers: int = 1) -> bool:
    """The outcome depends only on the vote tally."""
    import numpy as np

    from .tables import digits_matrix, outcome_table

    n = rule_degree(rule)
    _require_scan(n, cap)
    table = outcome_table(rule, workers=workers)
    digits = digits_matrix(n)
    pos = (digits == 2).sum(axis=1)
    neg = (digits == 0).sum(axis=1)
    key = pos * (n + 1) + neg
    order = np.argsort(key, kind="stable")
    sk, st = key[order], table[order]
    return bool(np.all((sk[1:] != sk[:-1]) | (st[1:] == st[:-1])))


def is_positively_responsive(
    rule: VotingRule, cap: int = PROFILE_SCAN_CAP, workers: int = 1
) -> bool:
    """Raising one vote from an outcome in {0, +1} must force +1, and the
    mirrored lowering condition must force -1."""
    import numpy as np

    from .tables import digits_matrix, outcome_table

    n = rule_degree(rule)
    _require_scan(n, cap)
    table = outcome_table(rule, workers=workers)
    digits = digits_matrix(n)
    codes = np.arange(3**n)
    for v in range(n):
        step = 3**v
        up = (digits[:, v] <= 1) & (table >= 0)
        if not np.all(table[codes[up] + step] == 1):
            return False
        down = (digits[:, v] >= 1) & (table <= 0)
        if not np.all(table[codes[down] - step] == -1):
            return False
    return True


def is_positively_responsive_by_pairs(rule: VotingRule, cap: int = 5) -> bool:
    """Oracle over all comparable profile pairs; kept separate from the
    single-step scan so the two can cross-check each other."""
    n = rule_degree(rule)
    if n > cap:
        raise InfeasibleError(f"pair oracle limited to n<={cap}")
    profiles = [votes_from_code(c, n) for c in range(3**n)]
    results = [outcome(rule, p) for p in profiles]
    for i, a in enumerate(profiles):
        for j, b in enumerate(profiles):
            if i == j:
                continue
            if all(x >= y for x, y in zip(a, b)):
                if results[j] >= 0 and results[i] != 1:
                    return False
                if results[i] <= 0 and results[j] != -1:
                    return False
    return True


def is_monotone(rule: VotingRule, cap: int = PROFILE_SCAN_CAP, workers: int = 1) -> bool:
    """Weak coordinatewise monotonicity of the outcome, by table scan."""
    import numpy as np

    from .tables import digits_matrix, outcome_table

    n = rule_degree(rule)
    _require_scan(n, cap)
    table = outcome_table(rule, workers=workers)
    digits = digits_matrix(n)
    codes = np.arange(3**n)
    for v in range(n):
        step = 3**v
        up = digits[:, v] <= 1
        if not np.all(table[codes[up] + step] >= table[codes[up]]):
            return False
    return True
