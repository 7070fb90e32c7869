"""
Partial sums, remainders and the basis constant
===============================================

S_K keeps the first K terms of the expansion, R_K keeps the rest, and they
add back up to the identity.  Sampling shows ||S_K|| <= 1 and ||R_K|| <= 2.
"""

from schauderkit import (
    SeqElement,
    SpaceKind,
    apply_R,
    apply_S,
    estimate_operator_norm,
    expand,
    norm_bounds,
    reconstruct,
    rotation_basis,
    standard_basis,
    unit_vector,
    y_norm,
)

c = SpaceKind.c()
x = SeqElement(c, (2.0, 1.5, 1.25), 1.0)

# in c the expansion starts with c_0 = lim x_k
coords = expand(x, K=3)
print("coordinates c_0..c_3:", coords)
print("S_1 x =", apply_S(x, 1))
print("R_1 x =", apply_R(x, 1))
print("rebuilt:", reconstruct(c, standard_basis(c), coords[1:], limit_coord=coords[0]))

# the Y-norm sup_n ||S_n x|| equals ||x|| for these bases
v = SeqElement(SpaceKind.lp(1), (1.0, -1.0, 1.0))
print("Y-norm of (1, -1, 1) in l_1:", y_norm(v, N=3))

# a quarter turn of the first two coordinates of l_2
quarter = rotation_basis(SpaceKind.lp(2), [[0.0, 1.0], [-1.0, 0.0]])
print("e_1 in the rotated basis:", expand(unit_vector(SpaceKind.lp(2), 1), quarter, K=3))

# sampled operator norms (deterministic for a given seed)
print("\n  space     ||S_5||    ||R_5||    ||c_5||")
for space in (SpaceKind.lp(1), SpaceKind.lp(2), SpaceKind.c0(), c):
    est = [estimate_operator_norm(op, 5, space, trials=1000, seed=0) for op in ("S", "R", "coordinate")]
    print(f"  {str(space):8s}" + "".join(f"{e:10.6f} " for e in est))

# the remainder really can double the norm in c: x = (-1, ..., -1, 1, -1, -1, ...)
spike = SeqElement(c, (-1.0,) * 5 + (1.0,), -1.0)
print("\n||x||     =", norm_bounds(spike))
print("||R_5 x|| =", norm_bounds(apply_R(spike, 5)))
