"""Deciding norm convergence of a family from coordinate and tail evidence.

A family ``(x_n)`` converges to ``x`` exactly when every coordinate converges
and the remainders ``R_K x_n`` are uniformly small in ``n`` once ``K`` is
large.  Both halves are checked separately:

* condition (1): for each ``k <= k_max`` the family states how ``c_k(x_n)``
  behaves (a limit with a vanishing discrepancy envelope, or a set of
  cluster values), and that is compared with ``c_k(x)``;
* condition (2): a symbolic majorant ``tau(K) >= sup_n ||R_K x_n||`` yields
  the smallest ``K0`` with ``tau(K0) < eps``, or the family supplies members
  whose remainders stay above ``eps`` for every ``K``.

A certified failure of either half refutes convergence.  A positive verdict
needs both halves symbolic, and each certificate row also carries the index
``N`` beyond which ``||x_n - x|| < eps``, obtained by splitting
``x_n - x = S_K(x_n - x) + R_K x_n - R_K x`` into three pieces below
``eps / 3``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .spaces import (
    DEFAULT_SLACK,
    Geometric,
    Interval,
    NormInterval,
    SeqElement,
    SpaceKind,
    TailModel,
    ValidationError,
    add,
    norm_bounds,
    pnorm,
    sub,
    tail_from_dict,
    tail_norm_bounds,
    unit_vector,
    zero_element,
)
from .verdict import Verdict

DEFAULT_EPS_GRID = (1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6)
DEFAULT_K_MAX = 64
DEFAULT_DELTA = 1e-9
K_SEARCH_CAP = 2**62
N_SEARCH_CAP = 2**60
RAMP_PREFIX = 16
COORD_LOOP_CAP = 2**16


# ---------------------------------------------------------------------------
# Coordinate laws
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CoordinateEnvelope:
    """Discrepancy bound ``amplitude * n**(-rate)``, valid for ``n > settle``."""

    amplitude: float
    rate: float = 1.0
    settle: int = 0

    def __post_init__(self):
        if not (math.isfinite(self.amplitude) and self.amplitude >= 0):
            raise ValidationError(f"envelope amplitude must be finite and >= 0, got {self.amplitude!r}")
        if self.rate < 0 or self.settle < 0:
            raise ValidationError("envelope rate and settle must be >= 0")

    @property
    def vanishes(self) -> bool:
        return self.amplitude == 0.0 or self.rate > 0

    def __call__(self, n: int) -> float:
        if n <= self.settle:
            return math.inf
        if self.amplitude == 0.0:
            return 0.0
        return self.amplitude * float(n) ** (-self.rate)

    def to_dict(self) -> dict:
        return {"amplitude": self.amplitude, "rate": self.rate, "settle": self.settle}

    @classmethod
    def from_dict(cls, d: dict) -> CoordinateEnvelope:
        return cls(float(d["amplitude"]), float(d.get("rate", 1.0)), int(d.get("settle", 0)))


EXACT_AFTER = CoordinateEnvelope(0.0)


@dataclass(frozen=True)
class CoordinateLaw:
    """Asymptotics of one coordinate over the family.

    With one value, ``c_k(x_n) -> values[0]`` at the rate of ``envelope``.
    With several, each value is a cluster point attained along a subsequence.
    """

    values: tuple[Interval, ...]
    envelope: CoordinateEnvelope | None = None

    @classmethod
    def tends_to(cls, value: float | Interval, envelope: CoordinateEnvelope) -> CoordinateLaw:
        iv = value if isinstance(value, Interval) else Interval.point(value)
        return cls((iv,), envelope)

    @property
    def converges(self) -> bool:
        return len(self.values) == 1 and self.envelope is not None and self.envelope.vanishes


def functional(x: SeqElement, k: int) -> Interval:
    """k-th coordinate as condition (1) uses it: the limit for k = 0 (c only),
    the entry x_k otherwise."""
    if k == 0:
        if x.space.kind != "c":
            raise IndexError(f"the limit functional exists only in c, not {x.space}")
        return Interval.point(x.limit)
    return x.entry(k)


# ---------------------------------------------------------------------------
# Families
# ---------------------------------------------------------------------------


class Family:
    """A sequence ``(x_n)_{n >= 1}`` in one space.

    Subclasses provide members and whatever symbolic knowledge they have:
    coordinate laws, a uniform remainder majorant, remainder witnesses.
    """

    space: SpaceKind
    generator: str = ""

    @property
    def size(self) -> int | None:
        """Number of members, or None for an infinite family."""
        return None

    def member(self, n: int) -> SeqElement:
        raise NotImplementedError

    def reference(self) -> SeqElement | None:
        """The element the laws are stated against, when there is one."""
        return None

    def law(self, k: int) -> CoordinateLaw | None:
        return None

    def declared_discrepancy(self, k: int) -> CoordinateEnvelope | None:
        """User-asserted bound on |c_k(x_n) - c_k(x)| for the candidate x."""
        return None

    def uniform_tail(self, K: int, slack: float = DEFAULT_SLACK) -> float | None:
        """Symbolic bound on sup_n ||R_K x_n||, or None."""
        return None

    def tail_witness(self, K: int, slack: float = DEFAULT_SLACK) -> tuple[int, float] | None:
        """A member index n with a lower bound on ||R_K x_n||, valid for every K."""
        return None

    def difference(self, n: int, candidate: SeqElement) -> SeqElement:
        return sub(self.member(n), candidate)

    def partial_sum_amplitude(self, candidate: SeqElement) -> float | None:
        """B with sup_K ||S_K(x_n - candidate)|| <= B / n for all n, if known."""
        return None

    def params(self) -> dict:
        return {}

    def to_dict(self) -> dict:
        d = {"generator": self.generator}
        d.update(self.space.to_dict())
        d["params"] = self.params()
        return d


@dataclass(frozen=True)
class Constant(Family):
    element: SeqElement
    generator = "constant"

    @property
    def space(self):
        return self.element.space

    def member(self, n):
        return self.element

    def reference(self):
        return self.element

    def law(self, k):
        return CoordinateLaw.tends_to(functional(self.element, k), EXACT_AFTER)

    def uniform_tail(self, K, slack=DEFAULT_SLACK):
        return tail_norm_bounds(self.element, K, slack).hi

    def difference(self, n, candidate):
        if candidate == self.element:
            return zero_element(self.space)
        return super().difference(n, candidate)

    def partial_sum_amplitude(self, candidate):
        return 0.0 if candidate == self.element else None

    def params(self):
        return {"element": self.element.to_dict()}


@dataclass(frozen=True)
class BasisShift(Family):
    """x_n = scale * e_n: every coordinate tends to 0, no remainder does."""

    space: SpaceKind
    scale: float = 1.0
    generator = "basis_shift"

    def member(self, n):
        return unit_vector(self.space, n, self.scale)

    def reference(self):
        return zero_element(self.space)

    def law(self, k):
        return CoordinateLaw.tends_to(0.0, CoordinateEnvelope(0.0, settle=k))

    def uniform_tail(self, K, slack=DEFAULT_SLACK):
        return slack if self.scale == 0.0 else None

    def tail_witness(self, K, slack=DEFAULT_SLACK):
        return K + 1, tail_norm_bounds(self.member(K + 1), K, slack).lo

    def params(self):
        return {"scale": self.scale}


@dataclass(frozen=True)
class Alternating(Family):
    """x_n = (-1)**n * scale * e_1: finite support, first coordinate oscillates."""

    space: SpaceKind
    scale: float = 1.0
    generator = "alternating"

    def member(self, n):
        return unit_vector(self.space, 1, (-1.0) ** n * self.scale)

    def law(self, k):
        if k == 1 and self.scale != 0.0:
            return CoordinateLaw((Interval.point(self.scale), Interval.point(-self.scale)))
        return CoordinateLaw.tends_to(0.0, EXACT_AFTER)

    def uniform_tail(self, K, slack=DEFAULT_SLACK):
        return max(tail_norm_bounds(self.member(n), K, slack).hi for n in (1, 2))

    def params(self):
        return {"scale": self.scale}


@dataclass(frozen=True)
class GeometricRamp(Family):
    """x_n = base + ramp_n with ramp_n = (scale * a**k / n)_k.

    In c the ramp also shifts every entry and the limit by ``limit_shift / n``.
    The family converges to ``base``.
    """

    space: SpaceKind
    a: float = 0.5
    scale: float = 1.0
    base: SeqElement | None = None
    limit_shift: float = 0.0
    prefix_len: int = RAMP_PREFIX
    generator = "geometric_ramp"

    def __post_init__(self):
        if not 0 < self.a < 1:
            raise ValidationError(f"geometric ramp needs 0 < a < 1, got {self.a!r}")
        if self.base is None:
            object.__setattr__(self, "base", zero_element(self.space))
        elif self.base.space != self.space:
            raise ValidationError(f"ramp base lives in {self.base.space}, family in {self.space}")
        if self.limit_shift != 0.0 and self.space.kind != "c":
            raise ValidationError("limit_shift is only meaningful in c")

    def ramp(self, n: int) -> SeqElement:
        shift = self.limit_shift / n
        prefix = tuple(self.scale * self.a**k / n + shift for k in range(1, self.prefix_len + 1))
        return SeqElement(self.space, prefix, shift, Geometric(abs(self.scale) / n, self.a))

    def member(self, n):
        return add(self.base, self.ramp(n))

    def reference(self):
        return self.base

    def law(self, k):
        if k == 0:
            return CoordinateLaw.tends_to(self.base.limit, CoordinateEnvelope(abs(self.limit_shift)))
        amp = abs(self.scale) * self.a**k + abs(self.limit_shift)
        return CoordinateLaw.tends_to(self.base.entry(k), CoordinateEnvelope(amp))

    def uniform_tail(self, K, slack=DEFAULT_SLACK):
        ramp = abs(self.scale) * Geometric(1.0, self.a).tail_bound(K, self.space.exponent)
        return tail_norm_bounds(self.base, K, slack).hi + ramp

    def difference(self, n, candidate):
        if candidate == self.base:
            return self.ramp(n)
        return super().difference(n, candidate)

    def partial_sum_amplitude(self, candidate):
        if candidate != self.base:
            return None
        # S_K ramp_n is a truncation of ramp_n, so ||ramp_n|| * n bounds it
        if self.space.kind == "c":
            return abs(self.scale) * self.a + abs(self.limit_shift)
        return abs(self.scale) * Geometric(1.0, self.a).tail_bound(0, self.space.exponent)

    def params(self):
        d = {"a": self.a, "scale": self.scale, "base": self.base.to_dict()}
        if self.space.kind == "c":
            d["limit_shift"] = self.limit_shift
        return d


@dataclass(frozen=True)
class PlateauShift(Family):
    """In c: x_n = (0, ..., 0, h, h, ...) with h from position n + 1.

    Every entry tends to 0 while every limit equals h.
    """

    height: float = 1.0
    space: SpaceKind = SpaceKind.c()
    generator = "plateau_shift"

    def __post_init__(self):
        if self.space.kind != "c":
            raise ValidationError("plateau shift lives in c")

    def member(self, n):
        return SeqElement(self.space, (0.0,) * n, self.height)

    def law(self, k):
        if k == 0:
            return CoordinateLaw.tends_to(self.height, EXACT_AFTER)
        return CoordinateLaw.tends_to(0.0, CoordinateEnvelope(0.0, settle=k))

    def tail_witness(self, K, slack=DEFAULT_SLACK):
        return K + 1, tail_norm_bounds(self.member(K + 1), K, slack).lo

    def params(self):
        return {"height": self.height}


@dataclass(frozen=True)
class FiniteFamily(Family):
    """Explicit members x_1..x_N, optionally with symbolic continuation data.

    ``discrepancy`` maps k to a declared envelope for |c_k(x_n) - c_k(x)|
    against the candidate being tested; ``uniform_tail`` is an envelope whose
    tail bound majorizes ||R_K x_n|| for every n, listed or not.
    """

    space: SpaceKind
    members: tuple[SeqElement, ...]
    discrepancy: dict = field(default_factory=dict)
    uniform_envelope: TailModel | None = None

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))
        if not self.members:
            raise ValidationError("a finite family needs at least one member")
        for i, x in enumerate(self.members, 1):
            if x.space != self.space:
                raise ValidationError(f"member {i} lives in {x.space}, family in {self.space}")
        if self.uniform_envelope is not None:
            self.uniform_envelope.validate(self.space)

    @property
    def size(self):
        return len(self.members)

    def member(self, n):
        if not 1 <= n <= len(self.members):
            raise IndexError(f"member {n} outside 1..{len(self.members)}")
        return self.members[n - 1]

    def declared_discrepancy(self, k):
        return self.discrepancy.get(k)

    def listed_tail(self, K: int, slack: float = DEFAULT_SLACK) -> float:
        return max(tail_norm_bounds(x, K, slack).hi for x in self.members)

    def uniform_tail(self, K, slack=DEFAULT_SLACK):
        if self.uniform_envelope is None:
            return None
        env = self.uniform_envelope.tail_bound(K, self.space.exponent) + slack
        return max(env, self.listed_tail(K, slack))

    def to_dict(self):
        d = self.space.to_dict()
        d["members"] = [x.to_dict() for x in self.members]
        if self.discrepancy:
            d["discrepancy"] = {str(k): v.to_dict() for k, v in sorted(self.discrepancy.items())}
        if self.uniform_envelope is not None:
            d["uniform_tail"] = self.uniform_envelope.to_dict()
        return d


_GENERATORS = {
    "constant": Constant,
    "basis_shift": BasisShift,
    "alternating": Alternating,
    "geometric_ramp": GeometricRamp,
    "plateau_shift": PlateauShift,
}


def family_from_dict(d: dict) -> Family:
    if not isinstance(d, dict):
        raise ValidationError("family must be a JSON object")
    if "members" in d:
        space = SpaceKind.from_dict(d)
        members = tuple(SeqElement.from_dict(x) for x in d["members"])
        disc = {int(k): CoordinateEnvelope.from_dict(v) for k, v in d.get("discrepancy", {}).items()}
        tail = tail_from_dict(d["uniform_tail"]) if "uniform_tail" in d else None
        return FiniteFamily(space, members, disc, tail)
    name = d.get("generator")
    if name not in _GENERATORS:
        raise ValidationError(f"unknown generator {name!r}; expected 'members' or one of {sorted(_GENERATORS)}")
    params = dict(d.get("params", {}))
    if name == "constant":
        return Constant(SeqElement.from_dict(params["element"]))
    space = SpaceKind.from_dict(d)
    if "base" in params:
        params["base"] = SeqElement.from_dict(params["base"])
    try:
        return _GENERATORS[name](space=space, **params)
    except TypeError as exc:
        raise ValidationError(f"bad params for generator {name!r}: {exc}") from None


# ---------------------------------------------------------------------------
# Condition (1): coordinates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CoordinateCheck:
    k: int
    status: str  # certified_pass | certified_fail | empirical_pass | empirical_fail | unresolved
    gap: float | None = None
    envelope: CoordinateEnvelope | None = None

    @property
    def certified(self) -> bool:
        return self.status.startswith("certified")

    def to_dict(self) -> dict:
        d = {"k": self.k, "status": self.status}
        if self.gap is not None:
            d["gap"] = self.gap
        if self.envelope is not None:
            d["envelope"] = self.envelope.to_dict()
        return d


def _empirical(family: Family, candidate: SeqElement, k: int, delta: float) -> CoordinateCheck:
    size = family.size
    if not size:
        return CoordinateCheck(k, "unresolved")
    target = functional(candidate, k)
    d = [(functional(family.member(n), k) - target).mag_upper() for n in range(1, size + 1)]
    half = d[len(d) // 2:]
    settling = all(b <= a for a, b in zip(half, half[1:]))
    ok = d[-1] <= delta or (settling and d[-1] < d[0])
    return CoordinateCheck(k, "empirical_pass" if ok else "empirical_fail")


def _check_coordinate(family: Family, candidate: SeqElement, k: int, delta: float) -> CoordinateCheck:
    declared = family.declared_discrepancy(k)
    if declared is not None and declared.vanishes:
        target = functional(candidate, k)
        for n in range(declared.settle + 1, (family.size or 0) + 1):
            gap = (functional(family.member(n), k) - target).mag_lower()
            if gap > declared(n):
                raise ValidationError(
                    f"declared envelope for coordinate {k} is violated by member {n} "
                    f"({gap:.6g} > {declared(n):.6g})")
        return CoordinateCheck(k, "certified_pass", envelope=declared)

    law = family.law(k)
    if law is None:
        return _empirical(family, candidate, k, delta)
    target = functional(candidate, k)
    if law.converges:
        value = law.values[0]
        same = candidate == family.reference() or (value.is_point and target.is_point and value.lo == target.lo)
        if same:
            return CoordinateCheck(k, "certified_pass", envelope=law.envelope)
        gap = (value - target).mag_lower()
        if gap >= delta:
            return CoordinateCheck(k, "certified_fail", gap=gap)
        return CoordinateCheck(k, "unresolved")
    if len(law.values) > 1:
        # limsup_n |c_k(x_n) - c| >= max over cluster values of |v - c|
        gap = max((v - target).mag_lower() for v in law.values)
        if gap >= delta:
            return CoordinateCheck(k, "certified_fail", gap=gap)
    return _empirical(family, candidate, k, delta)


def check_condition1(family: Family, candidate: SeqElement, k_max: int = DEFAULT_K_MAX,
                     delta: float = DEFAULT_DELTA) -> list[CoordinateCheck]:
    """Per-coordinate verdicts for k = first..k_max (k = 0 is the limit in c)."""
    _check_spaces(family, candidate)
    first = family.space.first_index
    if k_max < first:
        raise ValidationError(f"k_max must be >= {first}")
    return [_check_coordinate(family, candidate, k, delta) for k in range(first, k_max + 1)]


# ---------------------------------------------------------------------------
# Condition (2): uniform remainders
# ---------------------------------------------------------------------------


def _smallest(pred, start: int = 0, cap: int = K_SEARCH_CAP) -> int | None:
    """Smallest i >= start with pred(i), assuming pred is monotone."""
    if pred(start):
        return start
    lo, step = start, 1
    while True:
        hi = start + step
        if hi > cap:
            return None
        if pred(hi):
            break
        lo, step = hi, step * 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if pred(mid):
            hi = mid
        else:
            lo = mid
    return hi


def tail_measure(form: str, space: SpaceKind):
    """Map ||R_K x|| to the quantity the specialised criteria compare with eps."""
    if form == "norm":
        return lambda t: t
    if form == "power":
        p = space.exponent
        return lambda t: t**p
    if form == "square":
        return lambda t: t * t
    raise ValidationError(f"unknown tail form {form!r}")


@dataclass(frozen=True)
class TailCheck:
    epsilon: float
    K0: int | None = None
    certified: bool = False
    witness: tuple[tuple[int, int, float], ...] = ()
    reason: str = ""

    @property
    def failed(self) -> bool:
        return bool(self.witness)

    def to_dict(self) -> dict:
        d = {"epsilon": self.epsilon, "K0": self.K0, "certified": self.certified}
        if self.witness:
            d["witness"] = [list(w) for w in self.witness]
        if self.reason:
            d["reason"] = self.reason
        return d


def check_condition2(family: Family, epsilon: float, *, form: str = "norm", k_max: int = DEFAULT_K_MAX,
                     slack: float = DEFAULT_SLACK) -> TailCheck:
    """Smallest K0 with sup_n ||R_K x_n|| < eps for K >= K0, or a witness that none exists."""
    if not epsilon > 0:
        raise ValidationError(f"epsilon must be > 0, got {epsilon!r}")
    phi = tail_measure(form, family.space)

    if family.uniform_tail(0, slack) is not None:
        K0 = _smallest(lambda K: phi(family.uniform_tail(K, slack)) < epsilon)
        if K0 is None:
            return TailCheck(epsilon, reason=f"uniform majorant does not drop below eps by K = {K_SEARCH_CAP}")
        return TailCheck(epsilon, K0, certified=True)

    if family.tail_witness(0, slack) is not None:
        pairs = []
        for K in range(k_max + 1):
            n, lb = family.tail_witness(K, slack)
            if not phi(lb) >= epsilon:
                return TailCheck(epsilon, reason=f"remainder witness at K = {K} is below eps")
            pairs.append((K, n, lb))
        return TailCheck(epsilon, witness=tuple(pairs))

    if family.size:
        K0 = _smallest(lambda K: phi(family.listed_tail(K, slack)) < epsilon)
        return TailCheck(epsilon, K0, certified=False,
                         reason="K0 covers the listed members only; no uniform majorant for the rest")

    return TailCheck(epsilon, reason="family provides neither a uniform majorant nor a remainder witness")


# ---------------------------------------------------------------------------
# Decision
# ---------------------------------------------------------------------------


def _check_spaces(family: Family, candidate: SeqElement):
    if family.space != candidate.space:
        raise ValidationError(f"family lives in {family.space} but candidate in {candidate.space}")


def _partial_sum_bound(space: SpaceKind, envelopes: list[CoordinateEnvelope]):
    """n -> bound on ||S_K(x_n - x)|| from per-coordinate envelopes (k = first..K)."""
    amp = np.array([e.amplitude for e in envelopes])
    rate = np.array([e.rate for e in envelopes])
    settle = np.array([e.settle for e in envelopes])
    p = space.exponent

    def bound(n: int) -> float:
        vals = np.where(n > settle, amp * float(n) ** (-rate), np.inf)
        if np.isinf(vals).any():
            return math.inf
        if space.kind == "c":
            # ||c_0 e_0 + sum c_k e_k||_inf <= |c_0| + max_k |c_k|
            return float(vals[0]) + pnorm(vals[1:].tolist(), p)
        return pnorm(vals.tolist(), p)

    return bound, int(settle.max(initial=0))


def _convergence_index(family: Family, candidate: SeqElement, epsilon: float, delta: float,
                       slack: float) -> dict | None:
    third = epsilon / 3.0
    K_fam = _smallest(lambda K: family.uniform_tail(K, slack) < third)
    K_cand = _smallest(lambda K: tail_norm_bounds(candidate, K, slack).hi < third)
    if K_fam is None or K_cand is None:
        return None
    K = max(K_fam, K_cand, family.space.first_index)
    amp = family.partial_sum_amplitude(candidate)
    if amp is not None:
        if amp == 0.0:
            return {"K": K, "N": 1}
        N = _smallest(lambda n: amp / n < third - slack, start=1, cap=N_SEARCH_CAP)
        return None if N is None else {"K": K, "N": N}
    if K - family.space.first_index >= COORD_LOOP_CAP:
        return None
    envelopes = []
    for k in range(family.space.first_index, K + 1):
        chk = _check_coordinate(family, candidate, k, delta)
        if chk.status != "certified_pass":
            return None
        envelopes.append(chk.envelope)
    bound, settle = _partial_sum_bound(family.space, envelopes)
    N = _smallest(lambda n: bound(n) < third - slack, start=settle + 1, cap=N_SEARCH_CAP)
    if N is None:
        return None
    return {"K": K, "N": N}


def decide_convergence(family: Family, candidate: SeqElement | None = None,
                       eps_grid=DEFAULT_EPS_GRID, k_max: int = DEFAULT_K_MAX,
                       delta: float = DEFAULT_DELTA, *, form: str = "norm",
                       slack: float = DEFAULT_SLACK) -> Verdict:
    """Decide x_n -> candidate from condition (1) and condition (2).

    Diverges on a certified failure of either condition (a coordinate gap is
    reported before a remainder witness); Converges only when both hold with
    symbolic evidence; Inconclusive otherwise, naming the first blocker.
    """
    candidate = candidate if candidate is not None else zero_element(family.space)
    _check_spaces(family, candidate)
    eps_grid = tuple(float(e) for e in eps_grid)
    if not eps_grid or any(e <= 0 for e in eps_grid):
        raise ValidationError("eps grid must be nonempty and strictly positive")

    coords = check_condition1(family, candidate, k_max, delta)
    for chk in coords:
        if chk.status == "certified_fail":
            if chk.k == 0:
                return Verdict("diverges", {"type": "limit_gap", "k": 0, "gap": chk.gap})
            return Verdict("diverges", {"type": "coordinate_gap", "k": chk.k, "gap": chk.gap})

    tails = [check_condition2(family, eps, form=form, k_max=k_max, slack=slack) for eps in eps_grid]
    for tc in tails:
        if tc.failed:
            return Verdict("diverges", {
                "type": "tail_lower_bound",
                "form": form,
                "epsilon": tc.epsilon,
                "rule": "n = K + 1",
                "pairs": [list(w) for w in tc.witness],
            })

    blocker = next((c for c in coords if c.status != "certified_pass"), None)
    if blocker is not None:
        return Verdict("inconclusive", {
            "reason": f"coordinate {blocker.k} is {blocker.status.replace('_', ' ')}",
            "k": blocker.k,
            "condition1": [c.to_dict() for c in coords],
        })
    weak = next((t for t in tails if not t.certified), None)
    if weak is not None:
        return Verdict("inconclusive", {
            "reason": weak.reason or "condition (2) not certified",
            "epsilon": weak.epsilon,
            "condition2": [t.to_dict() for t in tails],
        })

    rows = []
    for tc in tails:
        idx = _convergence_index(family, candidate, tc.epsilon, delta, slack)
        if idx is None:
            return Verdict("inconclusive", {
                "reason": "could not bound the partial sums S_K(x_n - x)",
                "epsilon": tc.epsilon,
            })
        rows.append({"epsilon": tc.epsilon, "K0": tc.K0, **idx})
    return Verdict("converges", {
        "form": form,
        "K0": max(r["K0"] for r in rows),
        "epsilon_checked": list(eps_grid),
        "coord_index_checked": k_max,
        "per_epsilon": rows,
    })


def decide_lp(family: Family, candidate: SeqElement | None = None, **kwargs) -> Verdict:
    """Convergence in l_p with the remainder measured as sum_{k>K} |x_k|^p."""
    if family.space.kind not in ("lp", "hilbert"):
        raise ValidationError(f"decide_lp needs an l_p family, got {family.space}")
    return decide_convergence(family, candidate, form="power", **kwargs)


def decide_c0(family: Family, candidate: SeqElement | None = None, **kwargs) -> Verdict:
    """Convergence in c_0 with the remainder measured as sup_{k>K} |x_k|."""
    if family.space.kind != "c0":
        raise ValidationError(f"decide_c0 needs a c_0 family, got {family.space}")
    return decide_convergence(family, candidate, form="norm", **kwargs)


def decide_hilbert(family: Family, candidate: SeqElement | None = None, **kwargs) -> Verdict:
    """Convergence in l_2 with the squared Fourier tail compared against eps itself."""
    if not (family.space.kind == "hilbert" or family.space == SpaceKind.lp(2)):
        raise ValidationError(f"decide_hilbert needs an l_2 family, got {family.space}")
    return decide_convergence(family, candidate, form="square", **kwargs)


def decide_c(family: Family, candidate: SeqElement | None = None, **kwargs) -> Verdict:
    """Convergence in c: limits and entries converge, recentred tails uniformly small."""
    if family.space.kind != "c":
        raise ValidationError(f"decide_c needs a c family, got {family.space}")
    return decide_convergence(family, candidate, form="norm", **kwargs)


def direct_norm_check(family: Family, candidate: SeqElement | None = None, n_max: int = 64,
                      slack: float = DEFAULT_SLACK) -> list[NormInterval]:
    """Enclosures of ||x_n - candidate|| for n = 1..n_max."""
    candidate = candidate if candidate is not None else zero_element(family.space)
    _check_spaces(family, candidate)
    if family.size is not None:
        n_max = min(n_max, family.size)
    return [norm_bounds(family.difference(n, candidate), slack) for n in range(1, n_max + 1)]
