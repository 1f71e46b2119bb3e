"""Equity analysis: winning coalitions, automorphisms, and voter influence.

Verdicts about automorphism structure are three-valued: True and False are
exact, None means undecidable within the configured caps. A True equity
verdict only needs a certified transitive subgroup; a False verdict always
requires the exhaustively computed full automorphism group.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np

from .perms import (
    DEFAULT_MAX_ORDER,
    PermGroup,
    Permutation,
    cycle_lengths,
    find_n_cycle,
    generate_closure,
    is_k_transitive,
    is_transitive,
    iter_permutations,
    orbit,
    symmetric_generators,
)
from .rules import (
    CCC,
    GRD,
    CoalitionRule,
    Dictatorship,
    GRDTree,
    InfeasibleError,
    LongestRun,
    Majority,
    PROFILE_SCAN_CAP,
    VotingRule,
    ccc_family,
    has_monotone_certificate,
    is_uniform_tree,
    outcome,
    rule_degree,
)
from .tables import (
    automorphism_filter,
    outcome_table,
    permutation_code_map,
    respects_table,
    slab_unanimous_codes,
)

FACTORIAL_CAP = 8
ASSIGNMENT_CAP = 5
PIVOT_BINARY_CAP = 20
PIVOT_TERNARY_CAP = 12

Verdict = Optional[bool]


def verdict_str(v: Verdict) -> str:
    return "unknown" if v is None else ("true" if v else "false")


def _check_members(n: int, members: Iterable[int]) -> frozenset[int]:
    ms = frozenset(members)
    if not ms:
        raise ValueError("coalition must be nonempty")
    if not all(0 <= v < n for v in ms):
        raise ValueError("coalition member out of range")
    return ms


def _extremal_votes(n: int, members: frozenset[int], x: int) -> tuple[int, ...]:
    return tuple(x if v in members else -x for v in range(n))


def is_winning_coalition(
    rule: VotingRule,
    members: Iterable[int],
    method: str = "exhaustive",
    assume_monotone: bool = False,
    scan_cap: int = PROFILE_SCAN_CAP,
) -> bool:
    """Whether unanimity on the coalition forces the outcome either way.

    "exhaustive" enumerates every completion outside the coalition.
    "monotone" checks only the two extremal completions, which is sound
    exactly for monotone rules; it is refused unless the rule carries a
    monotone certificate or the caller attests one with assume_monotone.
    """
    n = rule_degree(rule)
    ms = _check_members(n, members)
    if method == "monotone":
        if not (has_monotone_certificate(rule) or assume_monotone):
            raise ValueError("monotone method needs a monotone certificate")
        return all(
            outcome(rule, _extremal_votes(n, ms, x)) == x for x in (1, -1)
        )
    if method != "exhaustive":
        raise ValueError(f"unknown method {method!r}")
    free = n - len(ms)
    if free > scan_cap:
        raise InfeasibleError(f"3^{free} completions exceed cap {scan_cap}")
    others = sorted(set(range(n)) - ms)
    for x in (1, -1):
        if outcome(rule, _extremal_votes(n, ms, x)) != x:
            return False
        votes = [x] * n
        for combo in itertools.product((-1, 0, 1), repeat=free):
            for v, val in zip(others, combo):
                votes[v] = val
            if outcome(rule, tuple(votes)) != x:
                return False
    return True


@dataclass(frozen=True)
class MinCoalitionSearch:
    """Outcome of the ascending-size minimal winning coalition search."""

    min_size: Optional[int]
    witnesses: tuple[tuple[int, ...], ...]
    exact: bool
    lower_bound: int
    subsets_checked: int
    method: str
    witnesses_complete: bool


def _winning_by_table(
    table: np.ndarray,
    n: int,
    ms: Sequence[int],
    monotone: bool,
) -> bool:
    pos_code = sum(2 * 3**v for v in ms)
    neg_code = sum(2 * 3**v for v in range(n)) - pos_code
    if table[pos_code] != 1 or table[neg_code] != -1:
        return False
    if monotone:
        return True
    pos = slab_unanimous_codes(n, ms, 1)
    if not np.all(table[pos] == 1):
        return False
    neg = slab_unanimous_codes(n, ms, -1)
    return bool(np.all(table[neg] == -1))


def _scan_size_chunk(args) -> tuple[int, list[tuple[int, ...]]]:
    rule, n, k, lo, hi, monotone, use_table = args
    combos = itertools.islice(itertools.combinations(range(n), k), lo, hi)
    table = outcome_table(rule) if use_table else None
    winners: list[tuple[int, ...]] = []
    checked = 0
    for ms in combos:
        checked += 1
        if use_table:
            won = _winning_by_table(table, n, ms, monotone)
        elif monotone:
            fs = frozenset(ms)
            won = all(
                outcome(rule, _extremal_votes(n, fs, x)) == x for x in (1, -1)
            )
        else:
            won = is_winning_coalition(rule, ms, method="exhaustive")
        if won:
            winners.append(ms)
    return checked, winners


def min_winning_coalitions(
    rule: VotingRule,
    budget: int = 2_000_000,
    witness_limit: int = 20_000,
    workers: int = 1,
    scan_cap: int = PROFILE_SCAN_CAP,
) -> MinCoalitionSearch:
    """Smallest winning coalition size with all witnesses of that size.

    Sizes are scanned in ascending order; a budget exhaustion returns a
    lower-bound-only partial result instead of silently truncating.
    """
    n = rule_degree(rule)
    monotone = has_monotone_certificate(rule)
    use_table = n <= scan_cap
    if use_table:
        outcome_table(rule, workers=workers)  # warm the cache before forking
    elif not monotone:
        raise InfeasibleError(
            "degree above table cap requires a monotone certificate"
        )
    method = ("table" if use_table else "direct") + (
        "+monotone" if monotone else "+slab"
    )
    checked = 0
    for k in range(1, n + 1):
        count_k = math.comb(n, k)
        if checked + count_k > budget:
            return MinCoalitionSearch(
                min_size=None,
                witnesses=(),
                exact=False,
                lower_bound=k,
                subsets_checked=checked,
                method=method,
                witnesses_complete=False,
            )
        if workers > 1 and count_k >= 4 * workers:
            import multiprocessing as mp

            bounds = np.linspace(0, count_k, workers * 2 + 1, dtype=np.int64)
            jobs = [
                (rule, n, k, int(bounds[i]), int(bounds[i + 1]), monotone, use_table)
                for i in range(len(bounds) - 1)
                if bounds[i] < bounds[i + 1]
            ]
            with mp.get_context("fork").Pool(workers) as pool:
                parts = pool.map(_scan_size_chunk, jobs)
            got = sum(c for c, _ in parts)
            winners = [w for _, ws in parts for w in ws]
        else:
            got, winners = _scan_size_chunk(
                (rule, n, k, 0, count_k, monotone, use_table)
            )
        checked += got
        if winners:
            complete = len(winners) <= witness_limit
            return MinCoalitionSearch(
                min_size=k,
                witnesses=tuple(winners[:witness_limit]),
                exact=True,
                lower_bound=k,
                subsets_checked=checked,
                method=method,
                witnesses_complete=complete,
            )
    return MinCoalitionSearch(
        min_size=None,
        witnesses=(),
        exact=True,
        lower_bound=n + 1,
        subsets_checked=checked,
        method=method,
        witnesses_complete=True,
    )


def grd_min_coalition_structural(tree: GRDTree) -> int:
    """Cheapest winning coalition by recursion on the tree.

    A node is forced iff a strict majority of children are forced, which is
    exact for odd branching (blocking a child there needs a full winning set);
    for even branching the value is an upper bound.
    """
    if isinstance(tree, int):
        return 1
    costs = sorted(grd_min_coalition_structural(child) for child in tree)
    need = len(costs) // 2 + 1
    return sum(costs[:need])


def grd_recursion_bound(n: int) -> int:
    """min over divisors d of (majority count of d) times the bound at n/d."""
    if n == 1:
        return 1
    best = None
    for d in range(2, n + 1):
        if n % d == 0:
            val = (d // 2 + 1) * grd_recursion_bound(n // d)
            best = val if best is None else min(best, val)
    assert best is not None
    return best


def _family_of(rule: VotingRule) -> Optional[tuple[frozenset[int], ...]]:
    if isinstance(rule, CoalitionRule):
        return rule.family
    if isinstance(rule, CCC):
        return ccc_family(rule.rows, rule.cols)
    return None


def _preserves_family(
    perm: Permutation, family_set: frozenset[frozenset[int]]
) -> bool:
    return all(
        frozenset(perm.images[v] for v in member) in family_set
        for member in family_set
    )


def automorphism_group(
    rule: VotingRule,
    method: str = "exhaustive",
    cap: int = FACTORIAL_CAP,
    max_order: Optional[int] = None,
) -> PermGroup:
    """Relabelling symmetries of the rule.

    "exhaustive" filters all n! permutations against the outcome table and
    returns the full automorphism group. "coalition_preserving" returns the
    setwise stabilizer of the coalition family, a subgroup of the former.
    """
    n = rule_degree(rule)
    if n > cap:
        raise InfeasibleError(f"{n}! permutations exceed cap n<={cap}")
    if method == "exhaustive":
        table = outcome_table(rule)
        kept = automorphism_filter(table, n, iter_permutations(n))
    elif method == "coalition_preserving":
        family = _family_of(rule)
        if family is None:
            raise ValueError("coalition_preserving needs a coalition family")
        family_set = frozenset(family)
        kept = [p for p in iter_permutations(n) if _preserves_family(p, family_set)]
    else:
        raise ValueError(f"unknown method {method!r}")
    if max_order is not None and len(kept) > max_order:
        raise InfeasibleError(f"group order {len(kept)} exceeds {max_order}")
    return PermGroup.from_elements(n, kept)


@dataclass(frozen=True)
class EquityCertificate:
    """A subgroup of the automorphism group with how it was justified."""

    group: PermGroup
    kind: str
    validated: bool


def _grid_shift_perms(rows: int, cols: int) -> tuple[Permutation, Permutation]:
    row_shift = Permutation(
        tuple(((i + 1) % rows) * cols + j for i in range(rows) for j in range(cols))
    )
    col_shift = Permutation(
        tuple(i * cols + (j + 1) % cols for i in range(rows) for j in range(cols))
    )
    return row_shift, col_shift


def _tree_branching(tree: GRDTree) -> tuple[int, ...]:
    branching = []
    node = tree
    while not isinstance(node, int):
        branching.append(len(node))
        node = node[0]
    return tuple(branching)


def _torus_generators(branching: tuple[int, ...]) -> list[Permutation]:
    """One generator per level, rotating every block at that level in step."""
    n = math.prod(branching)
    gens = []
    for level, b in enumerate(branching):
        inner = math.prod(branching[level + 1 :])
        images = []
        for leaf in range(n):
            block = (leaf // inner) % b
            base = leaf - ((leaf // inner) % b) * inner
            images.append(base + ((block + 1) % b) * inner)
        gens.append(Permutation(tuple(images)))
    return gens


def _odometer(branching: tuple[int, ...]) -> Permutation:
    """Increment the top-level block index, carrying into deeper levels."""
    n = math.prod(branching)
    radii = list(branching)
    images = []
    for leaf in range(n):
        digits = []
        rest = leaf
        for b in reversed(radii):
            digits.append(rest % b)
            rest //= b
        digits.reverse()  # digits[0] is the top-level block
        for level in range(len(digits)):
            digits[level] += 1
            if digits[level] < radii[level]:
                break
            digits[level] = 0
        img = 0
        for level, b in enumerate(radii):
            img = img * b + digits[level]
        images.append(img)
    return Permutation(tuple(images))


def _group_from_provenance(prov: dict) -> Optional[PermGroup]:
    kind = prov.get("kind")
    if kind == "projective_plane":
        from .geometry import pgl3_elements, pgl3_order

        p = prov["p"]
        return pgl3_elements(p, max_order=pgl3_order(p))
    if kind == "group_orbit":
        from .randomized import group_from_descriptor

        return group_from_descriptor(prov["group"])
    return None


def certified_subgroup(
    rule: VotingRule, scan_cap: int = PROFILE_SCAN_CAP
) -> Optional[EquityCertificate]:
    """A by-construction automorphism subgroup, validated where feasible.

    Generators of profile-defined rules are validated by a full outcome-table
    scan when the degree is within the scan cap; coalition families validate
    their groups by set preservation at any degree.
    """
    n = rule_degree(rule)
    family = _family_of(rule)
    if family is not None:
        family_set = frozenset(family)
        if isinstance(rule, CCC):
            gens = list(_grid_shift_perms(rule.rows, rule.cols))
            kind = "grid_shifts"
            group = PermGroup(n=n, generators=tuple(gens))
        else:
            prov = rule.provenance or {}
            group = _group_from_provenance(prov)
            if group is None:
                if n > FACTORIAL_CAP:
                    return None
                group = automorphism_group(rule, method="coalition_preserving")
                kind = "family_stabilizer"
            else:
                kind = "family_group"
            gens = list(group.generating_set())
        for g in gens:
            if not _preserves_family(g, family_set):
                raise AssertionError("certificate generator breaks the family")
        return EquityCertificate(group=group, kind=kind, validated=True)
    if isinstance(rule, Majority):
        gens = list(symmetric_generators(n))
        kind = "symmetric"
    elif isinstance(rule, LongestRun):
        gens = [Permutation.rotation(n)]
        kind = "rotation"
    elif isinstance(rule, GRD) and is_uniform_tree(rule.tree):
        gens = _torus_generators(_tree_branching(rule.tree))
        kind = "torus"
    else:
        return None
    validated = False
    if n <= scan_cap:
        table = outcome_table(rule)
        for g in gens:
            if not respects_table(table, n, g):
                raise AssertionError("certificate generator is not an automorphism")
        validated = True
    return EquityCertificate(
        group=PermGroup(n=n, generators=tuple(gens)), kind=kind, validated=validated
    )


def is_equitable(
    rule: VotingRule,
    factorial_cap: int = FACTORIAL_CAP,
    scan_cap: int = PROFILE_SCAN_CAP,
) -> Verdict:
    """True iff some automorphism maps any voter to any other."""
    cert = certified_subgroup(rule, scan_cap=scan_cap)
    if cert is not None and is_transitive(cert.group):
        return True
    n = rule_degree(rule)
    if n <= factorial_cap and n <= scan_cap:
        full = automorphism_group(rule, method="exhaustive", cap=factorial_cap)
        return is_transitive(full)
    return None


def is_k_equitable(
    rule: VotingRule,
    k: int,
    factorial_cap: int = FACTORIAL_CAP,
    scan_cap: int = PROFILE_SCAN_CAP,
) -> Verdict:
    """True iff the automorphisms act transitively on distinct k-tuples."""
    n = rule_degree(rule)
    if not 1 <= k <= n:
        raise ValueError("k out of range")
    cert = certified_subgroup(rule, scan_cap=scan_cap)
    if cert is not None:
        if cert.kind == "symmetric":
            return True
        group = cert.group
        if group.elements is None:
            try:
                group = generate_closure(n, group.generators)
            except Exception:
                group = None
        if group is not None and is_k_transitive(group, k):
            return True
    if n <= factorial_cap and n <= scan_cap:
        full = automorphism_group(rule, method="exhaustive", cap=factorial_cap)
        return is_k_transitive(full, k)
    return None


def is_cyclic_rule(
    rule: VotingRule,
    factorial_cap: int = FACTORIAL_CAP,
    scan_cap: int = PROFILE_SCAN_CAP,
) -> Verdict:
    """True iff the automorphism group contains a single n-cycle."""
    n = rule_degree(rule)
    cert = certified_subgroup(rule, scan_cap=scan_cap)
    certified: list[Permutation] = []
    if cert is not None:
        if cert.kind in ("symmetric", "rotation"):
            certified.append(Permutation.rotation(n))
        elif cert.kind == "torus" and isinstance(rule, GRD):
            certified.append(_odometer(_tree_branching(rule.tree)))
        elif cert.kind == "grid_shifts" and isinstance(rule, CCC):
            if math.gcd(rule.rows, rule.cols) == 1:
                row_shift, col_shift = _grid_shift_perms(rule.rows, rule.cols)
                diag = Permutation(
                    tuple(row_shift.images[col_shift.images[v]] for v in range(n))
                )
                certified.append(diag)
        if cert.group.elements is not None:
            cyc = find_n_cycle(cert.group)
            if cyc is not None:
                certified.append(cyc)
    if any(cycle_lengths(g) == (n,) for g in certified):
        return True
    rot = Permutation.rotation(n)
    family = _family_of(rule)
    if family is not None and _preserves_family(rot, frozenset(family)):
        return True
    if n <= scan_cap and respects_table(outcome_table(rule), n, rot):
        return True
    if n <= factorial_cap and n <= scan_cap:
        full = automorphism_group(rule, method="exhaustive", cap=factorial_cap)
        return find_n_cycle(full) is not None
    return None


def pivotality(
    rule: VotingRule,
    distribution: str = "binary",
    binary_cap: int = PIVOT_BINARY_CAP,
    ternary_cap: int = PIVOT_TERNARY_CAP,
) -> tuple[Fraction, ...]:
    """Per-voter probability that changing the vote can change the outcome.

    Exact rational counts under the uniform distribution over {-1,+1}^n
    ("binary") or over {-1,0,+1}^n ("ternary").
    """
    n = rule_degree(rule)
    if distribution == "ternary":
        if n > ternary_cap:
            raise InfeasibleError(f"3^{n} scan exceeds cap {ternary_cap}")
        table = outcome_table(rule)
        from .tables import digits_matrix

        digits = digits_matrix(n)
        codes = np.arange(3**n, dtype=np.int64)
        out = []
        for v in range(n):
            step = 3**v
            base = codes - digits[:, v].astype(np.int64) * step
            own = table[codes]
            pivotal = (
                (table[base] != own)
                | (table[base + step] != own)
                | (table[base + 2 * step] != own)
            )
            out.append(Fraction(int(pivotal.sum()), 3**n))
        return tuple(out)
    if distribution != "binary":
        raise ValueError(f"unknown distribution {distribution!r}")
    if n > binary_cap:
        raise InfeasibleError(f"2^{n} scan exceeds cap {binary_cap}")
    if n <= PROFILE_SCAN_CAP:
        table = outcome_table(rule)
        bits = (np.arange(2**n, dtype=np.int64)[:, None] >> np.arange(n)) & 1
        codes = (bits * 2) @ (3 ** np.arange(n, dtype=np.int64))
        out = []
        for v in range(n):
            step = 3**v
            base = codes - bits[:, v] * 2 * step
            own = table[codes]
            pivotal = (
                (table[base] != own)
                | (table[base + step] != own)
                | (table[base + 2 * step] != own)
            )
            out.append(Fraction(int(pivotal.sum()), 2**n))
        return tuple(out)
    counts = [0] * n
    for bits in itertools.product((-1, 1), repeat=n):
        votes = list(bits)
        ref = outcome(rule, tuple(votes))
        for v in range(n):
            for alt in (-1, 0, 1):
                if alt == bits[v]:
                    continue
                votes[v] = alt
                if outcome(rule, tuple(votes)) != ref:
                    counts[v] += 1
                    break
            votes[v] = bits[v]
    return tuple(Fraction(c, 2**n) for c in counts)


def check_sqrt_lower_bound(
    rule: VotingRule,
    search: Optional[MinCoalitionSearch] = None,
    max_group_order: int = DEFAULT_MAX_ORDER,
) -> dict:
    """Equitable rules cannot have winning coalitions smaller than sqrt(n).

    Rejects rules not certified equitable. Returns the measured minimum, the
    squared comparison, and a translate-overlap audit of every witness
    against the certified subgroup.
    """
    n = rule_degree(rule)
    if is_equitable(rule) is not True:
        raise ValueError("rule is not certified equitable")
    if search is None:
        search = min_winning_coalitions(rule)
    if not search.exact or search.min_size is None:
        raise InfeasibleError("minimal coalition search did not complete")
    size = search.min_size
    cert = certified_subgroup(rule)
    assert cert is not None
    overlap_ok = True
    if cert.kind == "symmetric":
        # every relabelling of a witness is reachable, so overlap for all
        # translates needs 2*size > n
        overlap_ok = 2 * size > n
    else:
        group = cert.group
        if group.elements is None:
            group = generate_closure(n, group.generators, max_order=max_group_order)
        for g in group.elements:
            for w in search.witnesses:
                if all(g.images[v] not in w for v in w):
                    overlap_ok = False
    return {
        "n": n,
        "min_size": size,
        "bound_ok": size * size >= n,
        "witness_overlap_ok": overlap_ok,
    }


def assignment_table(rule: VotingRule, assignment: Permutation) -> np.ndarray:
    """Outcome table of the rule after seating voters by the assignment."""
    n = rule_degree(rule)
    if assignment.n != n:
        raise ValueError("assignment degree mismatch")
    if n > PROFILE_SCAN_CAP:
        raise InfeasibleError("assignment comparison exceeds scan cap")
    table = outcome_table(rule)
    return table[permutation_code_map(n, assignment)]


def assignments_equivalent(
    rule: VotingRule, a: Permutation, b: Permutation
) -> bool:
    """Whether two voter-to-role assignments induce the same rule on voters."""
    return bool(np.array_equal(assignment_table(rule, a), assignment_table(rule, b)))


def assignment_classes(
    rule: VotingRule, cap: int = ASSIGNMENT_CAP
) -> dict[bytes, list[Permutation]]:
    """All n! assignments grouped by the rule they induce."""
    n = rule_degree(rule)
    if n > cap:
        raise InfeasibleError(f"{n}! assignments exceed cap {cap}")
    classes: dict[bytes, list[Permutation]] = {}
    for a in iter_permutations(n):
        classes.setdefault(assignment_table(rule, a).tobytes(), []).append(a)
    return classes


def roles_equivalent(
    rule: VotingRule, r1: int, r2: int, cap: int = ASSIGNMENT_CAP
) -> bool:
    """Two roles are equivalent when no voter can tell them apart: any seating
    that gives the voter one role has an outcome-identical seating giving the
    other."""
    n = rule_degree(rule)
    if not (0 <= r1 < n and 0 <= r2 < n):
        raise ValueError("role out of range")
    for members in assignment_classes(rule, cap=cap).values():
        for v in range(n):
            roles_here = {a.images[v] for a in members}
            if r1 in roles_here and r2 not in roles_here:
                return False
            if r2 in roles_here and r1 not in roles_here:
                return False
    return True


def has_uniform_assignment_menu(rule: VotingRule, cap: int = ASSIGNMENT_CAP) -> bool:
    """Whether one outcome-equivalence class of seatings realizes every
    voter-role pair."""
    n = rule_degree(rule)
    for members in assignment_classes(rule, cap=cap).values():
        if all(
            {a.images[v] for a in members} == set(range(n)) for v in range(n)
        ):
            return True
    return False


def identity_class_realizes_all(rule: VotingRule, cap: int = ASSIGNMENT_CAP) -> bool:
    """Whether the seatings outcome-identical to the standard one already
    give every voter access to every role."""
    n = rule_degree(rule)
    key = assignment_table(rule, Permutation.identity(n)).tobytes()
    members = assignment_classes(rule, cap=cap)[key]
    return all(
        {a.images[v] for a in members} == set(range(n)) for v in range(n)
    )


@dataclass(frozen=True)
class AnalysisReport:
    """Bundle of analysis results for one rule, ready for serialization."""

    n: int
    equitable: Optional[str] = None
    k_equity: Optional[dict] = None
    aut_order: Optional[int] = None
    cyclic: Optional[str] = None
    min_coalition: Optional[dict] = None
    pivotality: Optional[dict] = None
    methods: Optional[dict] = None


def analyze_rule(
    rule: VotingRule,
    want_equity: bool = True,
    k: Optional[int] = None,
    want_min_coalition: bool = False,
    want_aut: bool = False,
    want_cyclic: bool = False,
    pivot_distributions: Sequence[str] = (),
    budget: int = 2_000_000,
    workers: int = 1,
    scan_cap: int = PROFILE_SCAN_CAP,
    factorial_cap: int = FACTORIAL_CAP,
) -> AnalysisReport:
    n = rule_degree(rule)
    methods: dict[str, str] = {}
    equitable = None
    if want_equity:
        verdict = is_equitable(rule, factorial_cap=factorial_cap, scan_cap=scan_cap)
        equitable = verdict_str(verdict)
        cert = certified_subgroup(rule, scan_cap=scan_cap)
        if verdict is True and cert is not None:
            methods["equitable"] = cert.kind + (
                "" if cert.validated else "+structural"
            )
        elif verdict is not None:
            methods["equitable"] = "exhaustive"
        else:
            methods["equitable"] = "capped"
    k_equity = None
    if k is not None:
        k_equity = {
            str(k): verdict_str(
                is_k_equitable(rule, k, factorial_cap=factorial_cap, scan_cap=scan_cap)
            )
        }
    aut_order = None
    if want_aut:
        try:
            aut_order = automorphism_group(
                rule, method="exhaustive", cap=factorial_cap
            ).order
            methods["aut_order"] = "exhaustive"
        except InfeasibleError:
            methods["aut_order"] = "infeasible"
    cyclic = None
    if want_cyclic:
        cyclic = verdict_str(
            is_cyclic_rule(rule, factorial_cap=factorial_cap, scan_cap=scan_cap)
        )
    min_coalition = None
    if want_min_coalition:
        try:
            search = min_winning_coalitions(
                rule, budget=budget, workers=workers, scan_cap=scan_cap
            )
        except InfeasibleError:
            search = None
            methods["min_coalition"] = "infeasible"
        if search is not None:
            min_coalition = {
                "size": search.min_size,
                "exact": search.exact,
                "lower_bound": search.lower_bound,
                "witness_count": len(search.witnesses),
                "witnesses_complete": search.witnesses_complete,
                "witnesses": [list(w) for w in search.witnesses[:64]],
                "subsets_checked": search.subsets_checked,
            }
            methods["min_coalition"] = search.method
    pivot = None
    if pivot_distributions:
        pivot = {}
        for dist in pivot_distributions:
            try:
                pivot[dist] = [str(f) for f in pivotality(rule, distribution=dist)]
            except InfeasibleError:
                pivot[dist] = None
        methods["pivotality"] = "exhaustive"
    return AnalysisReport(
        n=n,
        equitable=equitable,
        k_equity=k_equity,
        aut_order=aut_order,
        cyclic=cyclic,
        min_coalition=min_coalition,
        pivotality=pivot,
        methods=methods or None,
    )
