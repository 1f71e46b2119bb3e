"""Command-line surface: construct, eval, analyze, verify.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
Machine-format output is canonical JSON with sorted keys and no timing
data, so identical inputs produce byte-identical documents.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .analysis import FACTORIAL_CAP, analyze_rule
from .geometry import build_projective_rule
from .profiles import VoteProfile
from .randomized import build_rule_from_group, group_from_descriptor
from .rules import (
    CCC,
    Dictatorship,
    InfeasibleError,
    LongestRun,
    Majority,
    PROFILE_SCAN_CAP,
    evaluate,
    uniform_grd,
)
from .serialize import (
    FORMAT_VERSION,
    canonical_json,
    dumps_rule,
    load_rule_file,
    report_to_dict,
    rule_to_dict,
)
from .verify import CLAIM_IDS, report_to_dict as verification_to_dict, verify_claim


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _parse_votes(raw: str) -> VoteProfile:
    try:
        votes = [int(tok) for tok in raw.replace(" ", "").split(",") if tok != ""]
    except ValueError as exc:
        raise ValueError(f"bad profile {raw!r}: {exc}") from None
    return VoteProfile.of(votes)


def _parse_int_list(raw: str) -> list[int]:
    """Accept "4..16", "3,5,7", or a single integer."""
    raw = raw.strip()
    if ".." in raw:
        lo, hi = raw.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(tok) for tok in raw.split(",") if tok != ""]


def cmd_construct(args: argparse.Namespace) -> int:
    kind = args.type
    if kind == "majority":
        rule = Majority(_require(args.n, "--n"))
    elif kind == "longest_run":
        rule = LongestRun(_require(args.n, "--n"))
    elif kind == "dictatorship":
        rule = Dictatorship(_require(args.n, "--n"), dictator=args.dictator)
    elif kind == "grd":
        branching = tuple(
            int(tok) for tok in _require(args.branching, "--branching").split(",")
        )
        rule = uniform_grd(branching)
    elif kind == "ccc":
        rule = CCC(_require(args.rows, "--rows"), _require(args.cols, "--cols"))
    elif kind == "fano":
        rule = build_projective_rule(_require(args.p, "--p"))
    elif kind == "group_orbit":
        desc = _group_descriptor(args)
        rule = build_rule_from_group(
            group_from_descriptor(desc), desc, seed=args.seed
        )
    else:
        raise ValueError(f"unknown rule type {kind!r}")
    _emit(dumps_rule(rule), args.out)
    return 0


def _require(value, flag: str):
    if value is None:
        raise ValueError(f"{flag} is required for this type")
    return value


def _group_descriptor(args: argparse.Namespace) -> dict:
    if args.group == "cyclic":
        return {"kind": "cyclic", "n": _require(args.n, "--n")}
    if args.group == "pgl2":
        return {"kind": "pgl2", "p": _require(args.p, "--p")}
    raise ValueError("--group must be cyclic or pgl2")


def cmd_eval(args: argparse.Namespace) -> int:
    rule = load_rule_file(args.rule)
    phi = _parse_votes(args.profile)
    print(evaluate(rule, phi))
    return 0


_CAP_KEYS = ("scan", "factorial", "budget")


def _parse_caps(raw: Optional[str]) -> dict[str, int]:
    """Parse "scan=10,factorial=7,budget=50000" into cap overrides."""
    caps: dict[str, int] = {}
    if not raw:
        return caps
    for token in raw.split(","):
        if "=" not in token:
            raise ValueError(f"bad cap {token!r}, expected KEY=VALUE")
        key, value = token.split("=", 1)
        key = key.strip()
        if key not in _CAP_KEYS:
            raise ValueError(f"unknown cap {key!r}, known: {', '.join(_CAP_KEYS)}")
        caps[key] = int(value)
    return caps


def cmd_analyze(args: argparse.Namespace) -> int:
    rule = load_rule_file(args.rule)
    distributions: list[str] = []
    if args.pivotality in ("binary", "both"):
        distributions.append("binary")
    if args.pivotality in ("ternary", "both"):
        distributions.append("ternary")
    caps = _parse_caps(args.caps)
    budget = caps.get("budget", args.budget)
    effective = {
        "scan": caps.get("scan", PROFILE_SCAN_CAP),
        "factorial": caps.get("factorial", FACTORIAL_CAP),
        "budget": budget,
        "workers": args.workers,
    }
    report = analyze_rule(
        rule,
        want_equity=args.equity,
        k=args.k,
        want_min_coalition=args.min_coalition,
        want_aut=args.aut_order,
        want_cyclic=args.cyclic,
        pivot_distributions=distributions,
        budget=budget,
        workers=args.workers,
        scan_cap=effective["scan"],
        factorial_cap=effective["factorial"],
    )
    doc = report_to_dict(report)
    doc["rule"] = rule_to_dict(rule)
    doc["caps"] = effective
    _emit(canonical_json(doc, indent=None if args.format == "machine" else 2), args.out)
    return 0


def _verify_params(claim: str, args: argparse.Namespace) -> dict:
    """Map the override flags onto the claim's verifier parameters."""
    params: dict = {}
    if claim in ("thm1", "lemma3") and args.n is not None:
        params["ns"] = _parse_int_list(args.n)
    if claim == "thm3" and args.depth is not None:
        params["depths"] = _parse_int_list(args.depth)
    if claim == "thm8":
        if args.p is not None:
            params["primes"] = _parse_int_list(args.p)
        if args.seed is not None:
            params["seed"] = args.seed
    if claim == "prop4" and args.group is not None:
        seed = args.seed if args.seed is not None else 0
        if args.group == "cyclic":
            sizes = _parse_int_list(_require(args.n, "--n"))
            params["configs"] = [({"kind": "cyclic", "n": n}, seed) for n in sizes]
        else:
            primes = _parse_int_list(_require(args.p, "--p"))
            params["configs"] = [({"kind": "pgl2", "p": p}, seed) for p in primes]
    return params


def cmd_verify(args: argparse.Namespace) -> int:
    overridden = any(
        v is not None for v in (args.n, args.depth, args.p, args.group, args.seed)
    )
    if args.claim == "all" and overridden:
        raise ValueError("parameter overrides require a single claim, not 'all'")
    claims = list(CLAIM_IDS) if args.claim == "all" else [args.claim]
    reports = {
        claim: verify_claim(claim, workers=args.workers, **_verify_params(claim, args))
        for claim in claims
    }
    overall = all(r.passed for r in reports.values())
    if args.format == "machine":
        doc = {
            "format": FORMAT_VERSION,
            "kind": "verification_suite",
            "passed": overall,
            "reports": {
                claim: verification_to_dict(r, machine=True)
                for claim, r in reports.items()
            },
        }
        _emit(canonical_json(doc), args.out)
    else:
        lines = []
        for claim, report in reports.items():
            n_checks = len(report.checks)
            n_pass = sum(1 for c in report.checks if c.passed)
            tag = "PASS" if report.passed else "FAIL"
            lines.append(
                f"[{tag}] {claim}: {n_pass}/{n_checks} checks"
                f" ({report.wall_time:.2f}s)"
            )
            for c in report.checks:
                if not c.passed:
                    lines.append(f"  FAIL {c.name}: {c.detail}")
        lines.append("overall: " + ("PASS" if overall else "FAIL"))
        _emit("\n".join(lines), args.out)
    return 0 if overall else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="equivote",
        description="Voting rules with symmetric structure: construction, "
        "evaluation, analysis, verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_construct = sub.add_parser("construct", help="emit a rule document")
    p_construct.add_argument(
        "--type",
        required=True,
        choices=[
            "majority",
            "longest_run",
            "dictatorship",
            "grd",
            "ccc",
            "fano",
            "group_orbit",
        ],
    )
    p_construct.add_argument("--n", type=int)
    p_construct.add_argument("--p", type=int)
    p_construct.add_argument("--dictator", type=int, default=0)
    p_construct.add_argument("--branching", help="comma list, e.g. 3,3")
    p_construct.add_argument("--rows", type=int)
    p_construct.add_argument("--cols", type=int)
    p_construct.add_argument("--group", choices=["cyclic", "pgl2"])
    p_construct.add_argument("--seed", type=int, default=0)
    p_construct.add_argument("--out")
    p_construct.set_defaults(fn=cmd_construct)

    p_eval = sub.add_parser("eval", help="evaluate a rule on one profile")
    p_eval.add_argument("--rule", required=True, help="rule document file")
    p_eval.add_argument("--profile", required=True, help="comma votes, e.g. 1,0,-1")
    p_eval.set_defaults(fn=cmd_eval)

    p_analyze = sub.add_parser("analyze", help="emit an analysis report")
    p_analyze.add_argument("--rule", required=True)
    p_analyze.add_argument("--equity", action="store_true")
    p_analyze.add_argument("--k", type=int)
    p_analyze.add_argument("--min-coalition", action="store_true")
    p_analyze.add_argument("--aut-order", action="store_true")
    p_analyze.add_argument("--cyclic", action="store_true")
    p_analyze.add_argument(
        "--pivotality", choices=["binary", "ternary", "both"], default=None
    )
    p_analyze.add_argument("--budget", type=int, default=2_000_000)
    p_analyze.add_argument(
        "--caps", help="cap overrides, e.g. scan=10,factorial=7,budget=50000"
    )
    p_analyze.add_argument("--workers", type=int, default=1)
    p_analyze.add_argument("--format", choices=["human", "machine"], default="human")
    p_analyze.add_argument("--out")
    p_analyze.set_defaults(fn=cmd_analyze)

    p_verify = sub.add_parser("verify", help="run the verification suite")
    p_verify.add_argument("claim", choices=list(CLAIM_IDS) + ["all"])
    p_verify.add_argument("--n", help="size grid, e.g. 4..16 or 3,4,5,6")
    p_verify.add_argument("--depth", help="tree depth grid, e.g. 1..3")
    p_verify.add_argument("--p", help="prime grid, e.g. 3,5,7")
    p_verify.add_argument("--group", choices=["cyclic", "pgl2"])
    p_verify.add_argument("--seed", type=int)
    p_verify.add_argument("--workers", type=int, default=1)
    p_verify.add_argument("--format", choices=["human", "machine"], default="human")
    p_verify.add_argument("--out")
    p_verify.set_defaults(fn=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, InfeasibleError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
