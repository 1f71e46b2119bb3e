"""Canonical JSON interchange for rules, profiles, and reports.

Serialized forms carry a format version and sort all keys, so equal objects
always produce byte-identical documents.
"""

from __future__ import annotations

import dataclasses
import json
from typing import Any

from .analysis import AnalysisReport
from .profiles import VoteProfile
from .rules import (
    CCC,
    GRD,
    CoalitionRule,
    Dictatorship,
    GRDTree,
    LongestRun,
    Majority,
    VotingRule,
    make_coalition_rule,
)

FORMAT_VERSION = 1


def canonical_json(obj: Any, indent: int | None = None) -> str:
    if indent is None:
        return json.dumps(obj, sort_keys=True, separators=(",", ":"))
    return json.dumps(obj, sort_keys=True, indent=indent)


def _tree_to_json(tree: GRDTree):
    if isinstance(tree, int):
        return tree
    return [_tree_to_json(child) for child in tree]


def _tree_from_json(node) -> GRDTree:
    if isinstance(node, int):
        return node
    if isinstance(node, list):
        return tuple(_tree_from_json(child) for child in node)
    raise ValueError(f"bad tree node {node!r}")


def rule_to_dict(rule: VotingRule) -> dict:
    doc: dict[str, Any] = {"format": FORMAT_VERSION}
    if isinstance(rule, Majority):
        doc.update(type="majority", n=rule.n)
    elif isinstance(rule, LongestRun):
        doc.update(type="longest_run", n=rule.n)
    elif isinstance(rule, Dictatorship):
        doc.update(type="dictatorship", n=rule.n, dictator=rule.dictator)
    elif isinstance(rule, GRD):
        doc.update(type="grd", tree=_tree_to_json(rule.tree))
    elif isinstance(rule, CCC):
        doc.update(type="ccc", rows=rule.rows, cols=rule.cols)
    elif isinstance(rule, CoalitionRule):
        doc.update(
            type="coalition",
            n=rule.n,
            family=[sorted(member) for member in rule.family],
        )
        if rule.provenance is not None:
            doc["provenance"] = rule.provenance
    else:
        raise TypeError(f"unknown rule {type(rule).__name__}")
    return doc


def rule_from_dict(doc: dict) -> VotingRule:
    if doc.get("format") != FORMAT_VERSION:
        raise ValueError(f"unsupported format {doc.get('format')!r}")
    kind = doc.get("type")
    if kind == "majority":
        return Majority(n=doc["n"])
    if kind == "longest_run":
        return LongestRun(n=doc["n"])
    if kind == "dictatorship":
        return Dictatorship(n=doc["n"], dictator=doc.get("dictator", 0))
    if kind == "grd":
        return GRD(tree=_tree_from_json(doc["tree"]))
    if kind == "ccc":
        return CCC(rows=doc["rows"], cols=doc["cols"])
    if kind == "coalition":
        return make_coalition_rule(
            doc["n"],
            [frozenset(member) for member in doc["family"]],
            provenance=doc.get("provenance"),
        )
    raise ValueError(f"unknown rule type {kind!r}")


def dumps_rule(rule: VotingRule, indent: int | None = 2) -> str:
    return canonical_json(rule_to_dict(rule), indent=indent)


def loads_rule(text: str) -> VotingRule:
    return rule_from_dict(json.loads(text))


def profile_to_dict(phi: VoteProfile) -> dict:
    return {"format": FORMAT_VERSION, "votes": list(phi.votes)}


def profile_from_dict(doc: dict) -> VoteProfile:
    if doc.get("format") != FORMAT_VERSION:
        raise ValueError(f"unsupported format {doc.get('format')!r}")
    return VoteProfile.of(doc["votes"])


def dumps_profile(phi: VoteProfile, indent: int | None = 2) -> str:
    return canonical_json(profile_to_dict(phi), indent=indent)


def loads_profile(text: str) -> VoteProfile:
    return profile_from_dict(json.loads(text))


def report_to_dict(report: AnalysisReport) -> dict:
    doc = {"format": FORMAT_VERSION, "kind": "analysis"}
    for field in dataclasses.fields(report):
        value = getattr(report, field.name)
        if value is not None:
            doc[field.name] = value
    return doc


def load_rule_file(path: str) -> VotingRule:
    with open(path, "r", encoding="utf-8") as fh:
        return rule_from_dict(json.load(fh))


def save_rule_file(rule: VotingRule, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_rule(rule) + "\n")


def load_profile_file(path: str) -> VoteProfile:
    with open(path, "r", encoding="utf-8") as fh:
        return profile_from_dict(json.load(fh))
