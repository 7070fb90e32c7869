"""Precompactness of subsets: boundedness plus uniformly small remainders.

Only precompactness is decided.  Whether a described set is closed (and hence
compact) cannot be read off these descriptors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .convergence import DEFAULT_EPS_GRID, K_SEARCH_CAP, _smallest
from .spaces import (
    DEFAULT_SLACK,
    SeqElement,
    SpaceKind,
    TailModel,
    ValidationError,
    norm_bounds,
    tail_from_dict,
    tail_norm_bounds,
    unit_vector,
)
from .verdict import Verdict


class SetDescriptor:
    space: SpaceKind
    kind: str = ""

    def to_dict(self) -> dict:
        d = {"set": self.kind}
        d.update(self.space.to_dict())
        return d


@dataclass(frozen=True)
class FiniteSet(SetDescriptor):
    space: SpaceKind
    members: tuple[SeqElement, ...]
    kind = "finite"

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))
        for i, x in enumerate(self.members):
            if x.space != self.space:
                raise ValidationError(f"member {i} lives in {x.space}, set in {self.space}")

    def to_dict(self):
        d = super().to_dict()
        d["members"] = [x.to_dict() for x in self.members]
        return d


@dataclass(frozen=True)
class HilbertCube(SetDescriptor):
    """{x : |x_k| <= a_k for all k} with a_k = envelope(k)."""

    space: SpaceKind
    envelope: TailModel
    kind = "hilbert_cube"

    def __post_init__(self):
        self.envelope.validate(self.space)

    def to_dict(self):
        d = super().to_dict()
        d["envelope"] = self.envelope.to_dict()
        return d


@dataclass(frozen=True)
class BasisVectors(SetDescriptor):
    """{scale * e_n : n >= 1}."""

    space: SpaceKind
    scale: float = 1.0
    kind = "basis_vectors"

    def to_dict(self):
        d = super().to_dict()
        d["scale"] = self.scale
        return d


@dataclass(frozen=True)
class Ball(SetDescriptor):
    """Closed ball {x : ||x|| <= radius}."""

    space: SpaceKind
    radius: float = 1.0
    kind = "ball"

    def __post_init__(self):
        if not (math.isfinite(self.radius) and self.radius >= 0):
            raise ValidationError(f"ball radius must be finite and >= 0, got {self.radius!r}")

    def to_dict(self):
        d = super().to_dict()
        d["radius"] = self.radius
        return d


def set_from_dict(d: dict) -> SetDescriptor:
    if not isinstance(d, dict):
        raise ValidationError("set descriptor must be a JSON object")
    kind = d.get("set")
    space = SpaceKind.from_dict(d)
    try:
        if kind == "finite":
            return FiniteSet(space, tuple(SeqElement.from_dict(x) for x in d["members"]))
        if kind == "hilbert_cube":
            return HilbertCube(space, tail_from_dict(d["envelope"]))
        if kind == "basis_vectors":
            return BasisVectors(space, float(d.get("scale", 1.0)))
        if kind == "ball":
            return Ball(space, float(d.get("radius", 1.0)))
    except KeyError as exc:
        raise ValidationError(f"set {kind!r} is missing field {exc.args[0]!r}") from None
    raise ValidationError(f"unknown set kind {kind!r}")


def check_bounded(s: SetDescriptor, slack: float = DEFAULT_SLACK) -> float:
    """An upper bound on sup_{x in s} ||x||."""
    if isinstance(s, FiniteSet):
        return max((norm_bounds(x, slack).hi for x in s.members), default=0.0)
    if isinstance(s, HilbertCube):
        return s.envelope.tail_bound(0, s.space.exponent) + slack
    if isinstance(s, BasisVectors):
        return abs(s.scale)
    if isinstance(s, Ball):
        return s.radius
    raise ValidationError(f"unsupported set descriptor {type(s).__name__}")


@dataclass(frozen=True)
class SetTailCheck:
    epsilon: float
    K0: int | None = None
    witness: tuple[tuple[int, float], ...] = ()
    reason: str = ""

    @property
    def failed(self) -> bool:
        return bool(self.witness)


def _uniform_size(s: SetDescriptor) -> float | None:
    """Norm of the vectors size*e_{K+1} the set contains for every K, if any."""
    if isinstance(s, BasisVectors):
        return abs(s.scale)
    if isinstance(s, Ball):
        return s.radius
    return None


def set_tail_bound(s: SetDescriptor, K: int, slack: float = DEFAULT_SLACK) -> float | None:
    """Bound on sup_{x in s} ||R_K x||, when the descriptor admits one."""
    if isinstance(s, FiniteSet):
        return max((tail_norm_bounds(x, K, slack).hi for x in s.members), default=slack)
    if isinstance(s, HilbertCube):
        return s.envelope.tail_bound(K, s.space.exponent) + slack
    size = _uniform_size(s)
    if size == 0.0:
        return slack
    return None


def check_uniform_tail_set(s: SetDescriptor, epsilon: float, k_max: int = 64,
                           slack: float = DEFAULT_SLACK) -> SetTailCheck:
    """Smallest K0 with ||R_K x|| < eps on the whole set, or an e_{K+1} witness."""
    if not epsilon > 0:
        raise ValidationError(f"epsilon must be > 0, got {epsilon!r}")
    if set_tail_bound(s, 0, slack) is not None:
        K0 = _smallest(lambda K: set_tail_bound(s, K, slack) < epsilon)
        if K0 is None:
            return SetTailCheck(epsilon, reason=f"tail bound does not drop below eps by K = {K_SEARCH_CAP}")
        return SetTailCheck(epsilon, K0)
    size = _uniform_size(s)
    pairs = []
    for K in range(k_max + 1):
        # size * e_{K+1} lies in the set and R_K fixes it
        lb = tail_norm_bounds(unit_vector(s.space, K + 1, size), K, slack).lo
        if not lb >= epsilon:
            return SetTailCheck(epsilon, reason=f"witness size {size:g} is below eps")
        pairs.append((K, lb))
    return SetTailCheck(epsilon, witness=tuple(pairs))


def check_precompact(s: SetDescriptor, eps_grid=DEFAULT_EPS_GRID, k_max: int = 64,
                     slack: float = DEFAULT_SLACK) -> Verdict:
    eps_grid = tuple(float(e) for e in eps_grid)
    if not eps_grid or any(e <= 0 for e in eps_grid):
        raise ValidationError("eps grid must be nonempty and strictly positive")
    bound = check_bounded(s, slack)
    checks = [check_uniform_tail_set(s, eps, k_max, slack) for eps in eps_grid]
    for chk in checks:
        if chk.failed:
            return Verdict("not_precompact", {
                "type": "tail_failure",
                "epsilon": chk.epsilon,
                "member": "size * e_{K+1}",
                "size": _uniform_size(s),
                "pairs": [list(w) for w in chk.witness],
            })
    blocked = next((c for c in checks if c.K0 is None), None)
    if blocked is not None:
        return Verdict("inconclusive", {"reason": blocked.reason, "epsilon": blocked.epsilon})
    return Verdict("precompact", {
        "norm_bound": bound,
        "per_epsilon": [{"epsilon": c.epsilon, "K0": c.K0} for c in checks],
    })
