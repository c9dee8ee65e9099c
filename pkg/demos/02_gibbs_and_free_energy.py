#!/usr/bin/env python
"""Gibbs states, partition functions and free energy for a three-level system."""
import numpy as np

from renyitherm import EnergySpectrum, free_energy, gibbs_state, von_neumann_from_temperature

levels = EnergySpectrum([0.0, 0.5, 2.0])

print(f"{'T':>6} {'lnZ':>10} {'F':>10} {'S=-dF/dT':>10}   Gibbs weights")
for T in [0.05, 0.2, 0.5, 1.0, 2.0, 10.0, 100.0]:
    pt = free_energy(levels, T)
    p = gibbs_state(levels, T)
    print(f"{T:6.2f} {pt.lnZ:10.5f} {pt.F:10.5f} {von_neumann_from_temperature(levels, T):10.5f}   {np.round(p.weights, 4)}")

# low temperature: Z = sum exp(-E/T) would underflow, ln Z does not
cold = free_energy(EnergySpectrum([500.0, 501.0]), 1e-2)
print(f"\nT=0.01, levels near 500: lnZ = {cold.lnZ:.3f}, F = {cold.F:.6f}")

# shifting every level moves F by the shift and leaves the state alone
shifted = levels.shifted(3.0)
print("F shift:", free_energy(shifted, 1.0).F - free_energy(levels, 1.0).F)
print("same Gibbs state:", gibbs_state(shifted, 1.0) == gibbs_state(levels, 1.0))
