"""Re-check a CLI report against its input document.

Witnesses are re-derived from explicit members (remainder lower bounds,
coordinate gaps); certificates are re-checked at the reported indices,
including minimality of each K0 and a direct distance spot-check at N.
"""

from __future__ import annotations

from .compactness import set_from_dict, set_tail_bound
from .convergence import (
    _check_coordinate,
    family_from_dict,
    functional,
    tail_measure,
)
from .spaces import SeqElement, norm_bounds, tail_norm_bounds, unit_vector, zero_element


def _recheck_convergence(report: dict, doc: dict) -> list[str]:
    problems = []
    family = family_from_dict(doc)
    candidate = SeqElement.from_dict(doc["candidate"]) if "candidate" in doc else zero_element(family.space)
    delta = report["config"]["delta"]
    slack = report["config"]["slack"]
    tag = report["verdict"]

    if tag == "diverges":
        w = report["witness"]
        if w["type"] == "tail_lower_bound":
            phi = tail_measure(w["form"], family.space)
            for K, n, lb in w["pairs"]:
                actual = tail_norm_bounds(family.member(n), K, slack).lo
                if actual < lb:
                    problems.append(f"||R_{K} x_{n}|| lower bound {actual} < reported {lb}")
                if not phi(lb) >= w["epsilon"]:
                    problems.append(f"pair (K={K}, n={n}) does not reach eps = {w['epsilon']}")
        else:
            k = w["k"]
            chk = _check_coordinate(family, candidate, k, delta)
            if chk.status != "certified_fail" or chk.gap < w["gap"]:
                problems.append(f"coordinate {k} gap {w['gap']} is not reproduced")
            law = family.law(k)
            if law is not None and law.converges:
                gap = (law.values[0] - functional(candidate, k)).mag_lower()
                if gap < w["gap"]:
                    problems.append(f"coordinate {k}: limit distance {gap} < reported gap")
    elif tag == "converges":
        cert = report["certificate"]
        phi = tail_measure(cert["form"], family.space)
        for row in cert["per_epsilon"]:
            eps, K0, N = row["epsilon"], row["K0"], row["N"]
            if not phi(family.uniform_tail(K0, slack)) < eps:
                problems.append(f"eps={eps}: uniform tail at K0={K0} is not below eps")
            if K0 > 0 and phi(family.uniform_tail(K0 - 1, slack)) < eps:
                problems.append(f"eps={eps}: K0={K0} is not minimal")
            for n in (N, 2 * N):
                d = norm_bounds(family.difference(n, candidate), slack).hi
                if not d < eps:
                    problems.append(f"eps={eps}: ||x_{n} - x|| <= {d} is not below eps")
    return problems


def _recheck_compactness(report: dict, doc: dict) -> list[str]:
    problems = []
    s = set_from_dict(doc)
    slack = report["config"]["slack"]
    if report["verdict"] == "not_precompact":
        w = report["witness"]
        for K, lb in w["pairs"]:
            actual = tail_norm_bounds(unit_vector(s.space, K + 1, w["size"]), K, slack).lo
            if actual < lb or lb < w["epsilon"]:
                problems.append(f"witness at K={K} does not reach eps = {w['epsilon']}")
    elif report["verdict"] == "precompact":
        for row in report["certificate"]["per_epsilon"]:
            eps, K0 = row["epsilon"], row["K0"]
            if not set_tail_bound(s, K0, slack) < eps:
                problems.append(f"eps={eps}: set tail at K0={K0} is not below eps")
            if K0 > 0 and set_tail_bound(s, K0 - 1, slack) < eps:
                problems.append(f"eps={eps}: K0={K0} is not minimal")
    return problems


def recheck_report(report: dict, doc: dict) -> list[str]:
    """List of problems found; empty when every claim in the report holds."""
    command = report.get("command")
    if command == "check-convergence":
        return _recheck_convergence(report, doc)
    if command == "check-compactness":
        return _recheck_compactness(report, doc)
    return []
