"""Sequence spaces, certified elements and norm enclosures.

An element is stored as a finite prefix of coordinates plus a symbolic
envelope bounding every coordinate past the prefix.  Every norm we report is
an interval ``[lo, hi]``: ``lo`` comes from the stored coordinates alone and
``hi`` adds a closed-form bound for the unseen tail plus an additive slack.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

DEFAULT_SLACK = 2.0**-30
# relative widening that absorbs rounding in pow/fsum (a few ulps, with margin)
ROUNDING = 2.0**-46


class ValidationError(ValueError):
    """Raised when an element, tail model or descriptor is ill-formed."""


# ---------------------------------------------------------------------------
# Spaces
# ---------------------------------------------------------------------------

_KINDS = ("lp", "c0", "c", "hilbert")


@dataclass(frozen=True)
class SpaceKind:
    """One of l_p (1 <= p < inf), c_0, c, or the Hilbert space l_2."""

    kind: str
    p: float | None = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValidationError(f"unknown space kind {self.kind!r}")
        if self.kind == "lp":
            if self.p is None or not math.isfinite(self.p) or self.p < 1:
                raise ValidationError(f"l_p requires finite p >= 1, got {self.p!r}")
            object.__setattr__(self, "p", float(self.p))
        elif self.p is not None:
            raise ValidationError(f"space {self.kind!r} takes no exponent")

    @classmethod
    def lp(cls, p: float) -> SpaceKind:
        return cls("lp", p)

    @classmethod
    def c0(cls) -> SpaceKind:
        return cls("c0")

    @classmethod
    def c(cls) -> SpaceKind:
        return cls("c")

    @classmethod
    def hilbert(cls) -> SpaceKind:
        return cls("hilbert")

    @property
    def exponent(self) -> float:
        """Norm exponent: p for l_p, 2 for the Hilbert space, inf otherwise."""
        if self.kind == "lp":
            return self.p
        if self.kind == "hilbert":
            return 2.0
        return math.inf

    @property
    def is_sup(self) -> bool:
        return self.kind in ("c0", "c")

    @property
    def first_index(self) -> int:
        """Smallest basis index: 0 for c (the all-ones vector e_0), else 1."""
        return 0 if self.kind == "c" else 1

    def to_dict(self) -> dict:
        d = {"space": self.kind}
        if self.kind == "lp":
            d["p"] = self.p
        return d

    @classmethod
    def from_dict(cls, d: dict) -> SpaceKind:
        try:
            kind = d["space"]
        except KeyError:
            raise ValidationError("missing field 'space'") from None
        if kind == "lp":
            if "p" not in d:
                raise ValidationError("field 'p' is required for space 'lp'")
            return cls.lp(d["p"])
        return cls(kind)

    def __str__(self):
        return f"l_{self.p:g}" if self.kind == "lp" else self.kind


# ---------------------------------------------------------------------------
# Intervals and p-norm helpers
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Interval:
    lo: float
    hi: float

    def __post_init__(self):
        if not self.lo <= self.hi:
            raise ValidationError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, v: float) -> Interval:
        return cls(v, v)

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    @property
    def mid(self) -> float:
        return 0.5 * (self.lo + self.hi)

    @property
    def width(self) -> float:
        return self.hi - self.lo

    def contains(self, v: float) -> bool:
        return self.lo <= v <= self.hi

    def __sub__(self, other: Interval) -> Interval:
        return Interval(self.lo - other.hi, self.hi - other.lo)

    def mag_lower(self) -> float:
        """Smallest |v| over the interval."""
        if self.lo <= 0.0 <= self.hi:
            return 0.0
        return min(abs(self.lo), abs(self.hi))

    def mag_upper(self) -> float:
        return max(abs(self.lo), abs(self.hi))

    def to_list(self) -> list[float]:
        return [self.lo, self.hi]


# Norm enclosures are intervals with nonnegative ends.
NormInterval = Interval


def pnorm(values: Iterable[float], p: float) -> float:
    """p-norm of a finite list (p = inf gives the max-norm)."""
    vals = [abs(v) for v in values]
    if not vals:
        return 0.0
    if math.isinf(p):
        return max(vals)
    if p == 1.0:
        return math.fsum(vals)
    nonzero = [v for v in vals if v != 0.0]
    if len(nonzero) <= 1:
        return nonzero[0] if nonzero else 0.0
    return math.fsum(v**p for v in nonzero) ** (1.0 / p)


def combine(a: float, b: float, p: float) -> float:
    """Norm of the concatenation of two blocks with norms a and b."""
    if math.isinf(p):
        return max(a, b)
    if b == 0.0:
        return a
    if a == 0.0:
        return b
    return (a**p + b**p) ** (1.0 / p)


# ---------------------------------------------------------------------------
# Tail models
# ---------------------------------------------------------------------------


class TailModel:
    """Envelope ``env(k)`` for coordinates past a prefix.

    ``tail_bound(K, p)`` majorizes the p-norm of ``(env(k))_{k > K}``; it is
    nonincreasing in K and tends to 0.
    """

    def envelope(self, k: int) -> float:
        raise NotImplementedError

    def tail_bound(self, K: int, p: float) -> float:
        raise NotImplementedError

    def scaled(self, a: float) -> TailModel:
        raise NotImplementedError

    def validate(self, space: SpaceKind) -> None:
        pass

    def to_dict(self) -> dict:
        raise NotImplementedError


@dataclass(frozen=True)
class Zero(TailModel):
    def envelope(self, k):
        return 0.0

    def tail_bound(self, K, p):
        return 0.0

    def scaled(self, a):
        return self

    def to_dict(self):
        return {"type": "zero"}


@dataclass(frozen=True)
class Geometric(TailModel):
    """env(k) = c * r**k with 0 <= r < 1."""

    c: float
    r: float

    def __post_init__(self):
        if not (math.isfinite(self.c) and self.c >= 0):
            raise ValidationError(f"geometric tail needs finite c >= 0, got {self.c!r}")
        if not 0 <= self.r < 1:
            raise ValidationError(f"geometric tail needs 0 <= r < 1, got {self.r!r}")

    def envelope(self, k):
        return self.c * self.r**k

    def tail_bound(self, K, p):
        if self.c == 0.0 or self.r == 0.0:
            return 0.0
        head = self.c * self.r ** (K + 1)
        if math.isinf(p):
            return head
        return head * (1.0 - self.r**p) ** (-1.0 / p)

    def scaled(self, a):
        return Geometric(abs(a) * self.c, self.r)

    def to_dict(self):
        return {"type": "geometric", "c": self.c, "r": self.r}


@dataclass(frozen=True)
class Power(TailModel):
    """env(k) = c * k**(-s) with s > 0 (s*p > 1 in l_p)."""

    c: float
    s: float

    def __post_init__(self):
        if not (math.isfinite(self.c) and self.c >= 0):
            raise ValidationError(f"power tail needs finite c >= 0, got {self.c!r}")
        if not (math.isfinite(self.s) and self.s > 0):
            raise ValidationError(f"power tail needs s > 0, got {self.s!r}")

    def validate(self, space):
        q = self.s * space.exponent
        if not math.isinf(q) and q <= 1:
            raise ValidationError(
                f"power tail with s={self.s} is not {space.exponent:g}-summable (s*p <= 1)"
            )

    def envelope(self, k):
        return self.c * float(k) ** (-self.s)

    def tail_bound(self, K, p):
        if self.c == 0.0:
            return 0.0
        if math.isinf(p):
            return self.c * float(K + 1) ** (-self.s)
        q = self.s * p
        # integral test; K = 0 adds the k = 1 term explicitly
        if K == 0:
            total = q / (q - 1.0)
        else:
            total = float(K) ** (1.0 - q) / (q - 1.0)
        return self.c * total ** (1.0 / p)

    def scaled(self, a):
        return Power(abs(a) * self.c, self.s)

    def to_dict(self):
        return {"type": "power", "c": self.c, "s": self.s}


@dataclass(frozen=True)
class Head(TailModel):
    """Explicit envelope values on ``(offset, offset + len(values)]``, then ``rest``.

    Produced when elements with prefixes of different lengths are combined.
    """

    offset: int
    values: tuple[float, ...]
    rest: TailModel = field(default_factory=Zero)

    def __post_init__(self):
        vals = tuple(abs(float(v)) for v in self.values)
        if not all(math.isfinite(v) for v in vals):
            raise ValidationError("head envelope values must be finite")
        object.__setattr__(self, "values", vals)

    @property
    def end(self) -> int:
        return self.offset + len(self.values)

    def envelope(self, k):
        if self.offset < k <= self.end:
            return self.values[k - self.offset - 1]
        return self.rest.envelope(k)

    def tail_bound(self, K, p):
        start = max(K - self.offset, 0)
        return combine(pnorm(self.values[start:], p), self.rest.tail_bound(max(K, self.end), p), p)

    def scaled(self, a):
        return Head(self.offset, tuple(abs(a) * v for v in self.values), self.rest.scaled(a))

    def validate(self, space):
        self.rest.validate(space)

    def to_dict(self):
        return {"type": "head", "offset": self.offset, "values": list(self.values),
                "rest": self.rest.to_dict()}


@dataclass(frozen=True)
class Sum(TailModel):
    """Pointwise sum of envelopes; tail bounds add by the triangle inequality."""

    terms: tuple[TailModel, ...]

    def envelope(self, k):
        return math.fsum(t.envelope(k) for t in self.terms)

    def tail_bound(self, K, p):
        return math.fsum(t.tail_bound(K, p) for t in self.terms)

    def scaled(self, a):
        return Sum(tuple(t.scaled(a) for t in self.terms))

    def validate(self, space):
        for t in self.terms:
            t.validate(space)

    def to_dict(self):
        return {"type": "sum", "terms": [t.to_dict() for t in self.terms]}


def tail_sum(*terms: TailModel) -> TailModel:
    """Sum of envelopes with zero terms dropped and nested sums flattened."""
    flat = []
    for t in terms:
        if isinstance(t, Sum):
            flat.extend(t.terms)
        elif not isinstance(t, Zero):
            flat.append(t)
    if not flat:
        return Zero()
    if len(flat) == 1:
        return flat[0]
    return Sum(tuple(flat))


def tail_from_dict(d: dict) -> TailModel:
    kind = d.get("type")
    try:
        if kind == "zero":
            return Zero()
        if kind == "geometric":
            return Geometric(float(d["c"]), float(d["r"]))
        if kind == "power":
            return Power(float(d["c"]), float(d["s"]))
        if kind == "head":
            return Head(int(d["offset"]), tuple(d["values"]), tail_from_dict(d.get("rest", {"type": "zero"})))
        if kind == "sum":
            return Sum(tuple(tail_from_dict(t) for t in d["terms"]))
    except KeyError as exc:
        raise ValidationError(f"tail of type {kind!r} is missing field {exc.args[0]!r}") from None
    except TypeError as exc:
        raise ValidationError(f"malformed tail: {exc}") from None
    raise ValidationError(f"unknown tail type {kind!r}")


# ---------------------------------------------------------------------------
# Elements
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SeqElement:
    """Prefix ``x_1..x_m``, a limit (c only) and an envelope for ``k > m``.

    The envelope bounds ``|x_k - limit|``.  Prefix entries are authoritative and
    need not respect the envelope.
    """

    space: SpaceKind
    prefix: tuple[float, ...] = ()
    limit: float = 0.0
    tail: TailModel = field(default_factory=Zero)

    def __post_init__(self):
        prefix = tuple(float(v) for v in self.prefix)
        if not all(math.isfinite(v) for v in prefix):
            raise ValidationError("prefix entries must be finite")
        object.__setattr__(self, "prefix", prefix)
        limit = float(self.limit)
        if not math.isfinite(limit):
            raise ValidationError("limit must be finite")
        if self.space.kind != "c" and limit != 0.0:
            raise ValidationError(f"a nonzero limit is only meaningful in c, not {self.space}")
        object.__setattr__(self, "limit", limit)
        if not isinstance(self.tail, TailModel):
            raise ValidationError(f"tail must be a TailModel, got {type(self.tail).__name__}")
        self.tail.validate(self.space)

    @property
    def m(self) -> int:
        return len(self.prefix)

    def centered_prefix(self) -> tuple[float, ...]:
        """Prefix minus the limit (the c-space coordinates c_1..c_m)."""
        if self.limit == 0.0:
            return self.prefix
        return tuple(v - self.limit for v in self.prefix)

    def entry(self, k: int) -> Interval:
        """Enclosure of the sequence entry x_k (k >= 1)."""
        if k < 1:
            raise IndexError(f"sequence entries start at 1, got {k}")
        if k <= self.m:
            return Interval.point(self.prefix[k - 1])
        e = self.tail.envelope(k)
        return Interval(self.limit - e, self.limit + e)

    def to_dict(self) -> dict:
        d = self.space.to_dict()
        d["prefix"] = list(self.prefix)
        if self.space.kind == "c":
            d["limit"] = self.limit
        d["tail"] = self.tail.to_dict()
        return d

    @classmethod
    def from_dict(cls, d: dict) -> SeqElement:
        if not isinstance(d, dict):
            raise ValidationError(f"element must be a JSON object, got {type(d).__name__}")
        space = SpaceKind.from_dict(d)
        if space.kind == "c" and "limit" not in d:
            raise ValidationError("elements of c must carry an explicit 'limit'")
        prefix = d.get("prefix", [])
        if not isinstance(prefix, list):
            raise ValidationError("'prefix' must be a list of numbers")
        tail = tail_from_dict(d.get("tail", {"type": "zero"}))
        return cls(space, tuple(prefix), d.get("limit", 0.0), tail)


def zero_element(space: SpaceKind) -> SeqElement:
    return SeqElement(space)


def unit_vector(space: SpaceKind, n: int, scale: float = 1.0) -> SeqElement:
    """scale * e_n; for c, n = 0 gives the all-ones vector."""
    if n == 0:
        if space.kind != "c":
            raise IndexError("e_0 exists only in c")
        return SeqElement(space, (), scale)
    if n < 1:
        raise IndexError(f"basis index must be >= 1, got {n}")
    return SeqElement(space, (0.0,) * (n - 1) + (float(scale),))


def scale(x: SeqElement, a: float) -> SeqElement:
    return SeqElement(x.space, tuple(a * v for v in x.prefix), a * x.limit, x.tail.scaled(a))


def _pad(x: SeqElement, m: int) -> SeqElement:
    # with a Zero tail the entries past the prefix are exactly the limit
    if x.m >= m or not isinstance(x.tail, Zero):
        return x
    return SeqElement(x.space, x.prefix + (x.limit,) * (m - x.m), x.limit, x.tail)


def add(x: SeqElement, y: SeqElement, sign: float = 1.0) -> SeqElement:
    """x + sign*y.  The shorter prefix's unknown entries become envelope terms."""
    if x.space != y.space:
        raise ValidationError(f"cannot combine elements of {x.space} and {y.space}")
    if sign != 1.0:
        y = scale(y, sign)
    x, y = _pad(x, y.m), _pad(y, x.m)
    m = min(x.m, y.m)
    prefix = tuple(a + b for a, b in zip(x.prefix[:m], y.prefix[:m]))
    limit = x.limit + y.limit
    tails = []
    for u in (x, y):
        if u.m > m:
            extra = tuple(v - u.limit for v in u.prefix[m:])
            tails.append(Head(m, extra, u.tail))
        else:
            tails.append(u.tail)
    return SeqElement(x.space, prefix, limit, tail_sum(*tails))


def sub(x: SeqElement, y: SeqElement) -> SeqElement:
    return add(x, y, -1.0)


# ---------------------------------------------------------------------------
# Coordinates and norms
# ---------------------------------------------------------------------------


def coordinate(x: SeqElement, k: int) -> Interval:
    """Standard-basis coordinate c_k(x).

    In c, c_0 is the limit and c_k = x_k - limit; elsewhere c_k = x_k.
    Coordinates past the prefix come back as the envelope interval.
    """
    if k == 0:
        if x.space.kind != "c":
            raise IndexError(f"coordinate 0 exists only in c, not {x.space}")
        return Interval.point(x.limit)
    if k < 0:
        raise IndexError(f"negative coordinate index {k}")
    if k <= x.m:
        return Interval.point(x.prefix[k - 1] - x.limit)
    e = x.tail.envelope(k)
    return Interval(-e, e)


def tail_norm_bounds(x: SeqElement, K: int, delta: float = DEFAULT_SLACK) -> NormInterval:
    """Enclosure of ||R_K x||, the norm of the coordinates past K.

    In c the coordinates are recentred at the limit.
    """
    if K < 0:
        raise ValidationError(f"tail index must be >= 0, got {K}")
    p = x.space.exponent
    lo = pnorm(x.centered_prefix()[K:], p)
    tb = x.tail.tail_bound(max(K, x.m), p)
    hi = combine(lo, tb, p)
    if tb or not math.isinf(p):
        hi *= 1.0 + ROUNDING
    hi += delta
    if p not in (1.0, math.inf) and sum(1 for v in x.centered_prefix()[K:] if v != 0.0) > 1:
        lo *= 1.0 - ROUNDING
    return Interval(lo, hi)


def norm_bounds(x: SeqElement, delta: float = DEFAULT_SLACK) -> NormInterval:
    """Enclosure of ||x|| (p-norm or sup-norm)."""
    if x.space.kind != "c":
        return tail_norm_bounds(x, 0, delta)
    head = pnorm(x.prefix, math.inf)
    lo = max(head, abs(x.limit))
    tb = x.tail.tail_bound(x.m, math.inf)
    hi = max(head, abs(x.limit) + tb)
    if tb:
        hi *= 1.0 + ROUNDING
    hi += delta
    return Interval(lo, hi)

