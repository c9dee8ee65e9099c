#!/usr/bin/env python
"""Quantum states reduce to their spectra.

A random Hamiltonian's Gibbs state has the same Renyi entropies as the
classical Gibbs distribution over its eigenvalues, and the identity holds
for the Hamiltonian directly.
"""
import numpy as np

from renyitherm import (
    HermitianOperator,
    eigh,
    gibbs_state,
    gibbs_state_quantum,
    relation_check,
    renyi,
    renyi_quantum,
)

rng = np.random.default_rng(7)
x = rng.normal(size=(6, 6)) + 1j * rng.normal(size=(6, 6))
H = HermitianOperator((x + x.conj().T) / 2)

spec = eigh(H)
print("energies:", np.round(spec.eigenvalues, 4), f"({spec.sweeps} Jacobi sweeps)")

T0 = 0.8
rho = gibbs_state_quantum(H, T0)
p = gibbs_state(spec.eigenvalues, T0)
print("tr rho =", rho.trace())
for q in [0, 0.5, 1, 2, np.inf]:
    print(f"q={q:<4} quantum S_q = {renyi_quantum(rho, q):.10f}   classical S_q = {renyi(p, q):.10f}")

r = relation_check(H, T0, 3.0)
print(f"\nidentity at q=3 for H: lhs={r.lhs:.12f} rhs={r.rhs:.12f} residual={r.residual:.1e}")
