"""
Coordinatewise convergence is not enough
========================================

A family converges in norm exactly when every coordinate converges and the
remainders are uniformly small.  Three families show what happens when one
of the two fails.
"""

from schauderkit import (
    Alternating,
    BasisShift,
    GeometricRamp,
    SpaceKind,
    check_condition1,
    check_condition2,
    decide_convergence,
    direct_norm_check,
    zero_element,
)

l2 = SpaceKind.lp(2)

# x_n = e_n: each coordinate is eventually 0, yet ||x_n|| = 1 forever
shift = BasisShift(l2, 1.0)
print("coordinates of e_n:", {c.status for c in check_condition1(shift, zero_element(l2), k_max=10)})
tail = check_condition2(shift, 0.5)
print("remainder witnesses (K, n, ||R_K x_n||):", tail.witness[:4], "...")
print("verdict:", decide_convergence(shift).to_dict()["verdict"])

# x_n = (-1)**n e_1: one coordinate, which oscillates
flip = Alternating(l2, 1.0)
print("\nalternating:", decide_convergence(flip).to_dict())

# x_n = (2**-k / n)_k: both conditions hold, and the certificate says when
ramp = GeometricRamp(l2, 0.5)
verdict = decide_convergence(ramp)
print("\nramp:", verdict.tag)
for row in verdict.payload["per_epsilon"]:
    N = row["N"]
    dist = direct_norm_check(ramp, n_max=N)[-1]
    print(f"  eps={row['epsilon']:.0e}  K0={row['K0']:2d}  N={N:8d}  ||x_N|| <= {dist.hi:.3e}")
