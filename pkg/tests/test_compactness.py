import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schauderkit import (
    DEFAULT_SLACK,
    Ball,
    BasisVectors,
    FiniteSet,
    Geometric,
    GeometricRamp,
    HilbertCube,
    Power,
    SeqElement,
    SpaceKind,
    ValidationError,
    check_bounded,
    check_precompact,
    check_uniform_tail_set,
    decide_convergence,
    tail_norm_bounds,
    unit_vector,
)
from schauderkit.compactness import set_from_dict

from conftest import FOUR_SPACES, SPACES, random_element
from oracles import brute_smallest_K

L2 = SpaceKind.lp(2)
D = DEFAULT_SLACK
GRID = (1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6)


class TestBounded:
    def test_finite(self):
        b = check_bounded(FiniteSet(L2, (unit_vector(L2, 1), unit_vector(L2, 2, 2.0))))
        assert 2.0 <= b <= 2.0 * (1 + 1e-12) + D

    def test_cube(self):
        b = check_bounded(HilbertCube(L2, Geometric(1.0, 0.5)))
        assert b == pytest.approx(1 / math.sqrt(3) + D, abs=1e-12)

    def test_ball(self):
        assert check_bounded(Ball(L2, 5.0)) == 5.0

    def test_negative_radius(self):
        with pytest.raises(ValidationError):
            Ball(L2, -1.0)


class TestUniformTail:
    def test_cube_K0_brute_force(self):
        chk = check_uniform_tail_set(HilbertCube(L2, Geometric(1.0, 0.5)), 1e-2)
        # the cube's largest remainder is the envelope's own remainder
        brute = brute_smallest_K(0.5 ** np.arange(1, 10_001), L2, 1e-2)
        assert abs(chk.K0 - brute) <= 1

    def test_basis_vectors_witness(self):
        chk = check_uniform_tail_set(BasisVectors(L2, 1.0), 0.5)
        assert chk.failed and [K for K, _ in chk.witness] == list(range(65))
        for K, lb in chk.witness:
            assert tail_norm_bounds(unit_vector(L2, K + 1), K).lo == lb >= 0.5

    def test_finite_support(self):
        s = FiniteSet(L2, (SeqElement(L2, (1.0, 0.0, 2.0)), SeqElement(L2, (3.0,))))
        assert check_uniform_tail_set(s, 1e-4).K0 == 3

    def test_bad_eps(self):
        with pytest.raises(ValidationError):
            check_uniform_tail_set(Ball(L2), -0.1)


class TestPrecompact:
    def test_unit_ball(self):
        v = check_precompact(Ball(L2, 1.0))
        assert v.tag == "not_precompact" and v.payload["size"] == 1.0

    @pytest.mark.parametrize("space", SPACES)
    def test_basis_vectors(self, space):
        assert check_precompact(BasisVectors(space, 1.0)).tag == "not_precompact"

    def test_cube(self):
        v = check_precompact(HilbertCube(L2, Geometric(1.0, 0.5)))
        assert v.tag == "precompact"
        assert [r["epsilon"] for r in v.payload["per_epsilon"]] == list(GRID)

    def test_zero_ball(self):
        assert check_precompact(Ball(L2, 0.0)).tag == "precompact"

    def test_empty_finite_set(self):
        assert check_precompact(FiniteSet(L2, ())).tag == "precompact"

    def test_json_round_trip(self):
        for s in (FiniteSet(L2, (unit_vector(L2, 2),)), HilbertCube(L2, Power(1.0, 2.0)),
                  BasisVectors(SpaceKind.c(), 3.0), Ball(SpaceKind.c0(), 2.0)):
            assert set_from_dict(s.to_dict()) == s

    def test_bad_json(self):
        with pytest.raises(ValidationError, match="unknown set"):
            set_from_dict({"set": "sphere", "space": "lp", "p": 2})
        with pytest.raises(ValidationError, match="envelope"):
            set_from_dict({"set": "hilbert_cube", "space": "lp", "p": 2})


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 2**32 - 1))
def test_finite_sets_precompact(seed):
    rng = np.random.default_rng(seed)
    space = SPACES[rng.integers(len(SPACES))]
    members = tuple(random_element(rng, space) for _ in range(int(rng.integers(1, 6))))
    v = check_precompact(FiniteSet(space, members))
    assert v.tag == "precompact" and len(v.payload["per_epsilon"]) == len(GRID)


@settings(max_examples=60, deadline=None)
@given(scale=st.floats(1e-3, 1e3), eps=st.floats(1e-4, 1e4))
def test_basis_vectors_threshold_scales(scale, eps):
    # fails exactly when eps lies below |s|; the strict condition also fails at eps = |s|
    for s in (scale, -scale):
        chk = check_uniform_tail_set(BasisVectors(L2, s), eps)
        assert chk.failed == (eps <= abs(s))
        if chk.failed:
            assert all(lb == abs(s) for _, lb in chk.witness)


@settings(max_examples=60, deadline=None)
@given(c=st.floats(0.01, 5), r=st.floats(0.01, 0.95), shrink=st.floats(0.0, 1.0), r_shrink=st.floats(0.0, 1.0))
def test_dominated_cube_needs_no_larger_K0(c, r, shrink, r_shrink):
    big = HilbertCube(L2, Geometric(c, r))
    small = HilbertCube(L2, Geometric(c * shrink, r * r_shrink))
    for eps in (1e-1, 1e-3, 1e-6):
        assert check_uniform_tail_set(small, eps).K0 <= check_uniform_tail_set(big, eps).K0


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2**32 - 1))
def test_convergent_family_is_precompact(seed):
    rng = np.random.default_rng(seed)
    space = FOUR_SPACES[rng.integers(4)]
    base = random_element(rng, space, max_prefix=5, tails=("zero", "geometric"))
    fam = GeometricRamp(space, float(rng.uniform(0.1, 0.9)), float(rng.uniform(-2, 2)), base)
    assert decide_convergence(fam, base).tag == "converges"
    lo = int(rng.integers(1, 50))
    members = tuple(fam.member(n) for n in range(lo, lo + 20)) + (base,)
    assert check_precompact(FiniteSet(space, members)).tag == "precompact"
