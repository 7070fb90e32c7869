"""Canonical families and sets, with their documented verdicts."""

from __future__ import annotations

from .compactness import Ball, BasisVectors, HilbertCube, SetDescriptor
from .convergence import Alternating, BasisShift, Constant, Family, GeometricRamp, PlateauShift
from .spaces import Geometric, SeqElement, SpaceKind

L2 = SpaceKind.lp(2)


def canonical_families() -> dict[str, tuple[Family, SeqElement | None, str, str]]:
    """name -> (family, candidate, decider, expected verdict)."""
    anchor = SeqElement(L2, (1.0, 0.5), 0.0, Geometric(0.25, 0.5))
    return {
        "constant": (Constant(anchor), anchor, "general", "converges"),
        "basis_shift": (BasisShift(L2, 1.0), None, "general", "diverges"),
        "alternating": (Alternating(L2, 1.0), None, "general", "diverges"),
        "geometric_ramp": (GeometricRamp(L2, 0.5), None, "general", "converges"),
        "plateau_shift": (PlateauShift(1.0), None, "c", "diverges"),
    }


def canonical_sets() -> dict[str, tuple[SetDescriptor, str]]:
    return {
        "hilbert_cube": (HilbertCube(L2, Geometric(1.0, 0.5)), "precompact"),
        "basis_vectors": (BasisVectors(L2, 1.0), "not_precompact"),
        "ball": (Ball(L2, 1.0), "not_precompact"),
    }


def fixture_documents() -> dict[str, dict]:
    """JSON documents as written by ``schauderkit fixtures``."""
    docs = {}
    for name, (family, candidate, decider, expected) in canonical_families().items():
        d = family.to_dict()
        if candidate is not None:
            d["candidate"] = candidate.to_dict()
        d["decider"] = decider
        d["command"] = "check-convergence"
        d["expected_verdict"] = expected
        docs[name] = d
    for name, (s, expected) in canonical_sets().items():
        d = s.to_dict()
        d["command"] = "check-compactness"
        d["expected_verdict"] = expected
        docs[name] = d
    return docs
