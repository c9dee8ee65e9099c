#!/usr/bin/env python
"""Renyi entropy as a secant slope of the free energy.

Embed p as a Gibbs state at T0 (E_i = -T0 ln p_i). Then for T = T0/q the
slope of -F between T0 and T is S_q(p), and as T -> T0 the secant turns
into the tangent -dF/dT = Shannon entropy.
"""
from renyitherm import embed_distribution, free_energy, make_dist, relation_check, relation_limit_check, renyi

p = make_dist([0.7, 0.2, 0.1])
T0 = 1.0
levels = embed_distribution(p, T0)
print("energies:", levels.levels)
print("F(T0) =", free_energy(levels, T0).F)

print(f"\n{'q':>6} {'T':>8} {'S_q(p)':>12} {'secant':>12} {'residual':>10}")
for q in [0.25, 0.5, 0.8, 1.25, 2.0, 4.0]:
    r = relation_check(levels, T0, q)
    print(f"{r.q:6.2f} {r.T:8.4f} {r.lhs:12.9f} {r.rhs:12.9f} {r.residual:10.1e}")

# with F(T0) = 0 the identity is F(T) = -(T - T0) S_{T0/T}
T = 0.5
print(f"\nF({T}) = {free_energy(levels, T).F:.9f},  -(T-T0) S_2 = {-(T - T0) * renyi(p, 2):.9f}")

print(f"\n{'delta':>10} {'secant':>12} {'tangent':>12} {'gap':>12}")
for row in relation_limit_check(levels, T0, [0.2 / 2**k for k in range(8)]):
    print(f"{row.delta:10.5f} {row.secant:12.9f} {row.tangent:12.9f} {row.gap:12.3e}")
print("(the gap halves with delta: a first-order secant)")
