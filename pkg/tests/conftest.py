import pytest

from schauderkit import Alternating, BasisShift, Constant, Geometric, GeometricRamp, Power, SeqElement, SpaceKind, Zero

SPACES = [SpaceKind.lp(1), SpaceKind.lp(2), SpaceKind.lp(1.5), SpaceKind.lp(3),
          SpaceKind.c0(), SpaceKind.c(), SpaceKind.hilbert()]
FOUR_SPACES = [SpaceKind.lp(1), SpaceKind.lp(2), SpaceKind.c0(), SpaceKind.c()]


def random_tail(rng, space, kinds=("zero", "geometric", "power")):
    kind = kinds[rng.integers(len(kinds))]
    if kind == "zero":
        return Zero()
    if kind == "geometric":
        return Geometric(float(rng.uniform(0, 2)), float(rng.choice([0.0, rng.uniform(0, 0.95)])))
    lo = 1.0 / space.exponent if not space.is_sup else 0.0
    return Power(float(rng.uniform(0, 2)), float(lo + rng.uniform(0.5, 3.0)))


def random_element(rng, space=None, max_prefix=12, tails=("zero", "geometric", "power")):
    if space is None:
        space = SPACES[rng.integers(len(SPACES))]
    m = int(rng.integers(0, max_prefix + 1))
    prefix = tuple(rng.normal(0, 2, size=m).tolist())
    limit = float(rng.normal()) if space.kind == "c" else 0.0
    return SeqElement(space, prefix, limit, random_tail(rng, space, tails))


def random_l2_family(rng, space=SpaceKind.lp(2)):
    kind = rng.integers(4)
    if kind == 0:
        return BasisShift(space, float(rng.choice([-1, 1]) * rng.uniform(0.1, 3)))
    if kind == 1:
        return Alternating(space, float(rng.uniform(0.1, 3)))
    base = random_element(rng, space, max_prefix=6, tails=("zero", "geometric"))
    if kind == 2:
        return Constant(base)
    return GeometricRamp(space, float(rng.uniform(0.05, 0.9)), float(rng.uniform(-2, 2)), base)


def random_c_family(rng):
    """Twin families in c (limit 0) and c_0."""
    kind = rng.integers(4)
    if kind == 3:
        prefix = tuple(rng.normal(size=int(rng.integers(0, 6))).tolist())
        tail = Geometric(float(rng.uniform(0, 2)), float(rng.uniform(0, 0.9)))
        return (Constant(SeqElement(SpaceKind.c(), prefix, 0.0, tail)),
                Constant(SeqElement(SpaceKind.c0(), prefix, 0.0, tail)))
    if kind == 0:
        s = float(rng.uniform(0.1, 3))
        return BasisShift(SpaceKind.c(), s), BasisShift(SpaceKind.c0(), s)
    if kind == 1:
        s = float(rng.uniform(0.1, 3))
        return Alternating(SpaceKind.c(), s), Alternating(SpaceKind.c0(), s)
    a, s = float(rng.uniform(0.05, 0.9)), float(rng.uniform(-2, 2))
    prefix = tuple(rng.normal(size=int(rng.integers(0, 6))).tolist())
    c, c0 = SpaceKind.c(), SpaceKind.c0()
    return GeometricRamp(c, a, s, SeqElement(c, prefix, 0.0)), GeometricRamp(c0, a, s, SeqElement(c0, prefix, 0.0))


_LINES = []


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line per acceptance criterion."""

    def record(label, ok, detail=""):
        _LINES.append(f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  ({detail})" if detail else ""))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in _LINES:
            terminalreporter.write_line(line)
