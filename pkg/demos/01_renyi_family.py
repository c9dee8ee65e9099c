#!/usr/bin/env python
"""The Renyi entropy family of a small distribution.

S_q falls from ln(support size) at q = 0 through the Shannon entropy at
q = 1 down to -ln(max p) as q grows without bound.
"""
import math

import numpy as np

from renyitherm import INFINITY, ONE, ZERO, make_dist, renyi, renyi_curve

p = make_dist([0.7, 0.2, 0.1])
print("p =", p)

print(f"S_0   (max-entropy)  = {renyi(p, ZERO):.6f}   ln 3 = {math.log(3):.6f}")
print(f"S_1   (Shannon)      = {renyi(p, ONE):.6f}")
print(f"S_2   (collision)    = {renyi(p, 2):.6f}   -ln 0.54 = {-math.log(0.54):.6f}")
print(f"S_inf (min-entropy)  = {renyi(p, INFINITY):.6f}   -ln 0.7 = {-math.log(0.7):.6f}")

print("\nq        S_q")
for q, s in renyi_curve(p, [0, 0.25, 0.5, 1, 2, 4, 8, 16, math.inf]):
    print(f"{q:<8} {s:.6f}")

# the uniform distribution is the only one where every order agrees
u = make_dist(np.ones(5))
print("\nuniform over 5:", {q: round(s, 12) for q, s in renyi_curve(u, [0, 1, 2, math.inf])})
