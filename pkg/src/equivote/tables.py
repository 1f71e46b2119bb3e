"""Vectorized outcome tables over the full profile space of a rule.

The table of a degree-n rule assigns the collective vote to every base-3
profile code; all exhaustive scans (axioms, automorphisms, winningness slabs)
reduce to index arithmetic on it.
"""

from __future__ import annotations

from collections import OrderedDict
from typing import Iterable, Sequence

import numpy as np

from .perms import Permutation
from .profiles import votes_from_code
from .rules import (
    CCC,
    GRD,
    CoalitionRule,
    Dictatorship,
    GRDTree,
    LongestRun,
    Majority,
    VotingRule,
    ccc_family,
    outcome,
    rule_degree,
)

_DIGITS: dict[int, np.ndarray] = {}
_TABLES: "OrderedDict[VotingRule, np.ndarray]" = OrderedDict()
_TABLE_CACHE_SIZE = 8


def digits_matrix(n: int) -> np.ndarray:
    """Shape (3^n, n) int8; row c holds the base-3 digits of code c."""
    if n not in _DIGITS:
        codes = np.arange(3**n, dtype=np.int64)
        mat = np.empty((3**n, n), dtype=np.int8)
        for v in range(n):
            mat[:, v] = (codes // 3**v) % 3
        _DIGITS[n] = mat
    return _DIGITS[n]


def _grd_column(tree: GRDTree, digits: np.ndarray) -> np.ndarray:
    if isinstance(tree, int):
        return digits[:, tree].astype(np.int16) - 1
    total = sum(_grd_column(child, digits) for child in tree)
    return np.sign(total).astype(np.int16)


def _vector_table(rule: VotingRule, n: int) -> np.ndarray | None:
    digits = digits_matrix(n)
    if isinstance(rule, Majority):
        return np.sign((digits.astype(np.int16) - 1).sum(axis=1)).astype(np.int8)
    if isinstance(rule, Dictatorship):
        return (digits[:, rule.dictator].astype(np.int8)) - 1
    if isinstance(rule, GRD):
        return _grd_column(rule.tree, digits).astype(np.int8)
    if isinstance(rule, (CCC, CoalitionRule)):
        family = ccc_family(rule.rows, rule.cols) if isinstance(rule, CCC) else rule.family
        table = np.sign((digits.astype(np.int16) - 1).sum(axis=1)).astype(np.int8)
        for member in family:
            cols = digits[:, sorted(member)]
            table[(cols == 2).all(axis=1)] = 1
            table[(cols == 0).all(axis=1)] = -1
        return table
    return None


def _loop_chunk(rule: VotingRule, n: int, lo: int, hi: int) -> np.ndarray:
    out = np.empty(hi - lo, dtype=np.int8)
    for c in range(lo, hi):
        out[c - lo] = outcome(rule, votes_from_code(c, n))
    return out


def _loop_chunk_star(args) -> np.ndarray:
    return _loop_chunk(*args)


def outcome_table(rule: VotingRule, workers: int = 1) -> np.ndarray:
    """Full outcome table of the rule, cached; read-only."""
    if rule in _TABLES:
        _TABLES.move_to_end(rule)
        return _TABLES[rule]
    n = rule_degree(rule)
    table = _vector_table(rule, n)
    if table is None:
        total = 3**n
        if workers > 1:
            import multiprocessing as mp

            bounds = np.linspace(0, total, workers * 2 + 1, dtype=np.int64)
            jobs = [
                (rule, n, int(bounds[i]), int(bounds[i + 1]))
                for i in range(len(bounds) - 1)
                if bounds[i] < bounds[i + 1]
            ]
            with mp.get_context("fork").Pool(workers) as pool:
                parts = pool.map(_loop_chunk_star, jobs)
            table = np.concatenate(parts)
        else:
            table = _loop_chunk(rule, n, 0, total)
    table.setflags(write=False)
    _TABLES[rule] = table
    if len(_TABLES) > _TABLE_CACHE_SIZE:
        _TABLES.popitem(last=False)
    return table


def permutation_code_map(n: int, perm: Permutation) -> np.ndarray:
    """codes such that entry c is the code of the perm-relabelled profile."""
    digits = digits_matrix(n).astype(np.int64)
    weights = np.array([3 ** perm.images[u] for u in range(n)], dtype=np.int64)
    return digits @ weights


def respects_table(table: np.ndarray, n: int, perm: Permutation) -> bool:
    """Whether relabelling voters by perm leaves every outcome unchanged."""
    mapped = permutation_code_map(n, perm)
    return bool(np.array_equal(table[mapped], table))


def automorphism_filter(
    table: np.ndarray,
    n: int,
    perms: Iterable[Permutation],
    chunk_size: int = 2000,
) -> list[Permutation]:
    """All perms in the iterable that preserve the outcome table."""
    digits = digits_matrix(n).astype(np.int32)
    pw3 = 3 ** np.arange(n, dtype=np.int32)
    kept: list[Permutation] = []
    batch: list[Permutation] = []

    def flush() -> None:
        if not batch:
            return
        weights = np.empty((n, len(batch)), dtype=np.int32)
        for j, p in enumerate(batch):
            weights[:, j] = pw3[np.array(p.images)]
        codes = digits @ weights
        ok = (table[codes] == table[:, None]).all(axis=0)
        for j, good in enumerate(ok):
            if good:
                kept.append(batch[j])
        batch.clear()

    for p in perms:
        batch.append(p)
        if len(batch) >= chunk_size:
            flush()
    flush()
    return kept


def slab_unanimous_codes(n: int, members: Sequence[int], value: int) -> np.ndarray:
    """Codes of every profile where the members all vote value."""
    others = sorted(set(range(n)) - set(members))
    base = sum((value + 1) * 3**v for v in members)
    if not others:
        return np.array([base], dtype=np.int64)
    combos = digits_matrix(len(others)).astype(np.int64)
    weights = np.array([3**v for v in others], dtype=np.int64)
    return base + combos @ weights
