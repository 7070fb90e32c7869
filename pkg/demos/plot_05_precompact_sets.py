"""
Which sets are precompact?
==========================

Bounded is not enough in infinite dimensions: the remainders must be small
uniformly over the set.
"""

from schauderkit import Ball, BasisVectors, FiniteSet, Geometric, HilbertCube, SpaceKind, check_precompact, unit_vector

l2 = SpaceKind.lp(2)
sets = {
    "{e_1, 2 e_2}": FiniteSet(l2, (unit_vector(l2, 1), unit_vector(l2, 2, 2.0))),
    "cube |x_k| <= 2^-k": HilbertCube(l2, Geometric(1.0, 0.5)),
    "{e_n}": BasisVectors(l2, 1.0),
    "unit ball": Ball(l2, 1.0),
}
for name, s in sets.items():
    v = check_precompact(s, eps_grid=(1e-1, 1e-2, 1e-3))
    if v.tag == "precompact":
        table = ", ".join(f"K0({r['epsilon']:g})={r['K0']}" for r in v.payload["per_epsilon"])
        print(f"{name:20s} precompact      bound {v.payload['norm_bound']:.6f}; {table}")
    else:
        print(f"{name:20s} {v.tag:15s} witness {v.payload['member']} at eps={v.payload['epsilon']:g}")
