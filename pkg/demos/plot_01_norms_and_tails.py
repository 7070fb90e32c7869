"""
Norm enclosures for sequences with infinite tails
=================================================

An element is a finite list of coordinates plus a closed-form envelope for
everything after it.  Norms come back as intervals.
"""

from schauderkit import Geometric, Power, SeqElement, SpaceKind, norm_bounds, tail_norm_bounds

# (1, 1/2, 0, 0, ...) in l_1: the interval is [1.5, 1.5 + slack]
x = SeqElement(SpaceKind.lp(1), (1.0, 0.5))
print("||x||_1           ", norm_bounds(x))

# x_k = 2**-k in l_2, stored with no explicit coordinates at all
y = SeqElement(SpaceKind.lp(2), (), 0.0, Geometric(1.0, 0.5))
print("||y||_2           ", norm_bounds(y), " exact:", (1 / 3) ** 0.5)

# remainders shrink as K grows
for K in (0, 2, 5, 10, 20):
    print(f"||R_{K:<2} y||         ", tail_norm_bounds(y, K))

# power envelopes must be p-summable: k**-1 is fine in c_0, not in l_1
z = SeqElement(SpaceKind.c0(), (), 0.0, Power(1.0, 1.0))
print("||z||_inf         ", norm_bounds(z))

# in c the norm sees the limit, and the remainder is recentred at it
w = SeqElement(SpaceKind.c(), (2.0, 1.5, 1.25), 1.0, Geometric(2.0, 0.5))
print("||w||_c           ", norm_bounds(w))
print("||R_1 w||_c       ", tail_norm_bounds(w, 1))
