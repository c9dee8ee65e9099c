#!/usr/bin/env python
"""Quench ratio: free-energy drop per unit temperature change.

Start in equilibrium at T0 and divide the temperature by q. The ratio
-(F(T0/q) - F(T0)) / (T0/q - T0) equals the order-q Renyi entropy of the
starting state, for any spectrum.
"""
import numpy as np

from renyitherm import gibbs_state, quench_ratio, renyi

rng = np.random.default_rng(3)
levels = rng.uniform(0, 4, size=12)
T0 = 1.5
p0 = gibbs_state(levels, T0)

print(f"{'q':>5} {'T0/q':>7} {'quench ratio':>14} {'S_q(initial)':>14}")
for q in [0.1, 0.5, 0.9, 1.1, 2.0, 5.0, 10.0]:
    print(f"{q:5.1f} {T0 / q:7.3f} {quench_ratio(levels, T0, q):14.10f} {renyi(p0, q):14.10f}")
