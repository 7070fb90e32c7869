"""
Convergent sequences: the limit is a coordinate too
===================================================

In c every entry of x_n = (0, ..., 0, 1, 1, ...) tends to 0, but the limits
do not, so the family stays at distance 1 from 0.
"""

from schauderkit import PlateauShift, SpaceKind, check_condition1, decide_c, direct_norm_check, zero_element

plateau = PlateauShift(1.0)
checks = check_condition1(plateau, zero_element(SpaceKind.c()), k_max=6)
for c in checks:
    label = "lim" if c.k == 0 else f"x_{c.k}"
    print(f"{label:4s} {c.status}")

print("verdict:", decide_c(plateau).to_dict())
print("distances:", [iv.to_list() for iv in direct_norm_check(plateau, n_max=4)])
