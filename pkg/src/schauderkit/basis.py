"""Schauder expansions, partial-sum and remainder operators.

Three bases are supported: the unit vectors of l_p / c_0 / l_2, the standard
basis of c (``e_0`` is the all-ones vector, ``e_k`` the unit vectors), and a
finite orthogonal rotation of the first ``d`` unit vectors of l_2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .spaces import (
    DEFAULT_SLACK,
    Interval,
    NormInterval,
    SeqElement,
    SpaceKind,
    ValidationError,
    Zero,
    coordinate,
    norm_bounds,
    pnorm,
)

# Reference value of ||A^{-1}|| for the standard bases; guarded by
# estimate_operator_norm in the test-suite rather than assumed.
BASIS_CONSTANT = 1.0


class UnresolvedCoordinate(ArithmeticError):
    """A coordinate cannot be pinned down to within the slack."""

    def __init__(self, index: int, width: float):
        super().__init__(f"coordinate {index} is only known to within {width:.3g}")
        self.index = index
        self.width = width


@dataclass(frozen=True, eq=False)
class BasisDescriptor:
    space: SpaceKind
    family: str = "standard"
    matrix: np.ndarray | None = None

    def __post_init__(self):
        if self.family == "standard":
            if self.space.kind == "c":
                object.__setattr__(self, "family", "c_standard")
        elif self.family == "c_standard":
            if self.space.kind != "c":
                raise ValidationError("the c standard basis lives in c only")
        elif self.family == "rotation":
            if self.space.kind != "hilbert" and self.space != SpaceKind.lp(2):
                raise ValidationError("finite rotations are only defined on l_2")
            q = np.asarray(self.matrix, dtype=float)
            if q.ndim != 2 or q.shape[0] != q.shape[1] or q.shape[0] == 0:
                raise ValidationError("rotation matrix must be square and nonempty")
            if not np.allclose(q.T @ q, np.eye(q.shape[0]), atol=DEFAULT_SLACK, rtol=0):
                raise ValidationError("rotation matrix columns are not orthonormal")
            object.__setattr__(self, "matrix", q)
        else:
            raise ValidationError(f"unknown basis family {self.family!r}")

    @property
    def d(self) -> int:
        return 0 if self.matrix is None else self.matrix.shape[0]

    @property
    def first_index(self) -> int:
        return 0 if self.family == "c_standard" else 1

    def vector_norm(self, k: int) -> float:
        """||e_k||; every supported basis is normalized."""
        return 1.0


def standard_basis(space: SpaceKind) -> BasisDescriptor:
    return BasisDescriptor(space)


def rotation_basis(space: SpaceKind, matrix) -> BasisDescriptor:
    return BasisDescriptor(space, "rotation", np.asarray(matrix, dtype=float))


def _resolve(basis: BasisDescriptor | None, x: SeqElement) -> BasisDescriptor:
    if basis is None:
        return standard_basis(x.space)
    if basis.space != x.space:
        raise ValidationError(f"basis for {basis.space} applied to element of {x.space}")
    return basis


def basis_coordinate(x: SeqElement, k: int, basis: BasisDescriptor | None = None) -> Interval:
    """Enclosure of c_k(x) relative to ``basis``."""
    basis = _resolve(basis, x)
    if basis.family != "rotation" or k > basis.d:
        return coordinate(x, k)
    if k < 1:
        raise IndexError(f"coordinate index must be >= 1, got {k}")
    # c_k = (x, Q e_k) = sum_i Q[i, k] x_i over the rotated block
    col = basis.matrix[:, k - 1]
    known = min(x.m, basis.d)
    center = math.fsum(col[i] * x.prefix[i] for i in range(known))
    radius = math.fsum(abs(col[i]) * x.tail.envelope(i + 1) for i in range(known, basis.d))
    return Interval(center - radius, center + radius)


def apply_S(x: SeqElement, K: int, basis: BasisDescriptor | None = None) -> SeqElement:
    """Partial sum S_K x = sum_{k <= K} c_k(x) e_k.

    If K runs past the prefix the unknown entries keep the envelope of ``x``,
    which still bounds them (entries past K are zero).
    """
    basis = _resolve(basis, x)
    if K < 0:
        raise ValidationError(f"K must be >= 0, got {K}")
    if basis.family == "rotation" and K < basis.d:
        coords = expand(x, basis, K)
        return reconstruct(x.space, basis, coords)
    if K > x.m:
        return x
    if basis.family == "c_standard":
        # (x_1, ..., x_K, L, L, ...)
        return SeqElement(x.space, x.prefix[:K], x.limit, Zero())
    return SeqElement(x.space, x.prefix[:K], 0.0, Zero())


def apply_R(x: SeqElement, K: int, basis: BasisDescriptor | None = None) -> SeqElement:
    """Remainder R_K x = x - S_K x."""
    basis = _resolve(basis, x)
    if K < 0:
        raise ValidationError(f"K must be >= 0, got {K}")
    if basis.family == "rotation" and K < basis.d:
        s = apply_S(x, K, basis)
        n = max(x.m, s.m)
        xs = x.prefix + (0.0,) * (n - x.m)
        ss = s.prefix + (0.0,) * (n - s.m)
        return SeqElement(x.space, tuple(a - b for a, b in zip(xs, ss)), 0.0, x.tail)
    centered = x.centered_prefix()
    prefix = (0.0,) * min(K, x.m) + centered[K:]
    if K > x.m:
        prefix += (0.0,) * (K - x.m)
    return SeqElement(x.space, prefix, 0.0, x.tail)


def expand(x: SeqElement, basis: BasisDescriptor | None = None, K: int = 0,
           delta: float = DEFAULT_SLACK) -> list[float]:
    """Coordinates c_1..c_K (c_0..c_K in c).

    Raises UnresolvedCoordinate at the first index whose enclosure is wider
    than ``2 * delta``.
    """
    basis = _resolve(basis, x)
    out = []
    for k in range(basis.first_index, K + 1):
        iv = basis_coordinate(x, k, basis)
        if iv.width > 2 * delta:
            raise UnresolvedCoordinate(k, iv.width)
        out.append(iv.mid)
    return out


def reconstruct(space: SpaceKind, basis: BasisDescriptor | None, coords,
                limit_coord: float | None = None) -> SeqElement:
    """Finite synthesis sum_k coords[k] e_k (plus limit_coord * e_0 in c)."""
    basis = basis or standard_basis(space)
    coords = [float(v) for v in coords]
    if basis.family == "c_standard":
        L = 0.0 if limit_coord is None else float(limit_coord)
        return SeqElement(space, tuple(v + L for v in coords), L, Zero())
    if limit_coord is not None:
        raise ValidationError("a limit coordinate only exists for the c standard basis")
    if basis.family == "rotation":
        d = basis.d
        head = coords[:d]
        block = basis.matrix[:, : len(head)] @ np.asarray(head) if head else np.zeros(d)
        return SeqElement(space, tuple(float(v) for v in block) + tuple(coords[d:]), 0.0, Zero())
    return SeqElement(space, tuple(coords), 0.0, Zero())


def y_norm(x: SeqElement, basis: BasisDescriptor | None = None, N: int = 1,
           delta: float = DEFAULT_SLACK) -> NormInterval:
    """Enclosure of sup_n ||S_n x||.

    ``lo`` is the largest partial-sum norm up to N; ``hi`` uses
    ||S_n x|| <= ||x||, valid for all three bases here.
    """
    basis = _resolve(basis, x)
    if N < 1:
        raise ValidationError(f"N must be >= 1, got {N}")
    lo = 0.0
    for n in range(basis.first_index, N + 1):
        lo = max(lo, norm_bounds(apply_S(x, n, basis), delta).lo)
    hi = max(BASIS_CONSTANT * norm_bounds(x, delta).hi, lo + delta)
    return Interval(lo, hi)


# ---------------------------------------------------------------------------
# Operator-norm sampling
# ---------------------------------------------------------------------------

SUPPORT_SIZE = 32
SUPPORT_RANGE = 64


def _exact_norm(x: SeqElement) -> float:
    if isinstance(x.tail, Zero):
        # entries past the prefix all equal the limit
        return max(pnorm(x.prefix, x.space.exponent), abs(x.limit))
    return norm_bounds(x, delta=0.0).hi


def _sample_unit(space: SpaceKind, rng: np.random.Generator) -> SeqElement:
    size = int(rng.integers(1, SUPPORT_SIZE + 1))
    support = rng.choice(SUPPORT_RANGE, size=size, replace=False)
    prefix = np.zeros(int(support.max()) + 1)
    prefix[support] = rng.uniform(-1.0, 1.0, size=size)
    limit = float(rng.uniform(-1.0, 1.0)) if space.kind == "c" else 0.0
    nrm = max(pnorm(prefix.tolist(), space.exponent), abs(limit))
    if nrm == 0.0:
        return SeqElement(space, (1.0,))
    return SeqElement(space, tuple((prefix / nrm).tolist()), limit / nrm, Zero())


@lru_cache(maxsize=64)
def _samples(space: SpaceKind, trials: int, seed: int) -> tuple[SeqElement, ...]:
    # independent of the operator, so shared across calls
    return tuple(_sample_unit(space, np.random.default_rng([seed, t])) for t in range(trials))


def _probes(space: SpaceKind, count: int):
    # unit vectors are the extremal witnesses for coordinate/remainder maps
    start = space.first_index
    for n in range(start, start + count):
        if n == 0:
            yield SeqElement(space, (), 1.0)
        else:
            yield SeqElement(space, (0.0,) * (n - 1) + (1.0,))


def estimate_operator_norm(op: str, index: int, space: SpaceKind,
                           basis: BasisDescriptor | None = None,
                           trials: int = 1000, seed: int = 0) -> float:
    """Sampled lower bound on the norm of S_K, R_K, c_k, or S_K + R_K.

    ``op`` is one of ``"S"``, ``"R"``, ``"coordinate"``, ``"identity"``.
    Trial ``t`` draws from a generator seeded by ``(seed, t)``, so results are
    deterministic and trials may be sharded.  The unit vectors
    ``e_first .. e_{index+2}`` are always included as probes.
    """
    if trials < 1:
        raise ValidationError("trials must be >= 1")
    basis = basis or standard_basis(space)

    def ratio(x: SeqElement) -> float:
        if op == "S":
            return _exact_norm(apply_S(x, index, basis))
        if op == "R":
            return _exact_norm(apply_R(x, index, basis))
        if op == "identity":
            s, r = apply_S(x, index, basis), apply_R(x, index, basis)
            n = max(s.m, r.m, x.m)
            ps = s.prefix + (s.limit,) * (n - s.m)
            pr = r.prefix + (r.limit,) * (n - r.m)
            return _exact_norm(SeqElement(space, tuple(a + b for a, b in zip(ps, pr)), s.limit + r.limit))
        if op == "coordinate":
            return abs(basis_coordinate(x, index, basis).mid)
        raise ValidationError(f"unknown operator {op!r}")

    best = 0.0
    for x in _probes(space, index + 3 - space.first_index):
        best = max(best, ratio(x))
    for x in _samples(space, trials, seed):
        best = max(best, ratio(x))
    return best


def operator_bound(op: str, basis_constant: float = BASIS_CONSTANT) -> float:
    """Upper bound on the operator norm (times ||e_k|| for c_k)."""
    return {"S": basis_constant, "R": 2 * basis_constant,
            "coordinate": 2 * basis_constant, "identity": 1.0}[op]
