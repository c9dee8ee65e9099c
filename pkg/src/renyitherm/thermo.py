"""Partition functions, free energies and Gibbs states (k_B = 1).

Everything goes through the shifted log-partition function

    L(T) = ln sum_i exp(-(E_i - E_min) / T),   ln Z(T) = -E_min / T + L(T),

which neither overflows at low temperature nor depends on where the energy
zero sits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .distributions import ProbDist, make_dist
from .entropy import ONE, renyi
from .errors import EmptyInput, NonFinite, NonpositiveTemperature, ZeroProbability
from .spectral import HermitianOperator, eigh


@dataclass(frozen=True, eq=False)
class EnergySpectrum:
    """Energy levels of a finite system, one entry per microstate."""

    levels: np.ndarray

    def __post_init__(self):
        e = np.array(self.levels, dtype=float).ravel()
        if e.size == 0:
            raise EmptyInput("energy spectrum is empty")
        if not np.all(np.isfinite(e)):
            raise NonFinite("energy spectrum has non-finite levels")
        e.setflags(write=False)
        object.__setattr__(self, "levels", e)

    def __len__(self):
        return self.levels.size

    def shifted(self, c: float) -> "EnergySpectrum":
        return EnergySpectrum(self.levels + c)

    @classmethod
    def from_hamiltonian(cls, h, method: str = "jacobi") -> "EnergySpectrum":
        return cls(eigh(h, vectors=False, method=method).eigenvalues)


@dataclass(frozen=True)
class ThermalPoint:
    T: float
    lnZ: float
    F: float

    @property
    def Z(self) -> float:
        return math.exp(self.lnZ)


def as_spectrum(e) -> EnergySpectrum:
    """Coerce levels, a Hamiltonian, or an existing spectrum to ``EnergySpectrum``."""
    if isinstance(e, EnergySpectrum):
        return e
    if isinstance(e, HermitianOperator):
        return EnergySpectrum.from_hamiltonian(e)
    return EnergySpectrum(e)


def _check_temperature(T):
    if not (T > 0) or math.isinf(T):
        raise NonpositiveTemperature(f"temperature must be positive and finite, got {T!r}")


def _shifted_terms(e: EnergySpectrum, T: float):
    gaps = (e.levels - e.levels.min()) / T
    return gaps, math.log(math.fsum(np.exp(-gaps)))


def shifted_log_partition(e, T: float) -> tuple[float, float]:
    """Return ``(E_min, L(T))`` with ``ln Z(T) = -E_min / T + L(T)``."""
    e = as_spectrum(e)
    _check_temperature(T)
    return float(e.levels.min()), _shifted_terms(e, T)[1]


def log_partition(e, T: float) -> float:
    """``ln sum_i exp(-E_i / T)``."""
    emin, lz = shifted_log_partition(e, T)
    return -emin / T + lz


def free_energy(e, T: float) -> ThermalPoint:
    """Free energy ``F = -T ln Z`` at temperature ``T``."""
    lnz = log_partition(e, T)
    return ThermalPoint(T, lnz, -T * lnz)


def gibbs_state(e, T: float) -> ProbDist:
    """Boltzmann weights ``exp(-E_i / T) / Z``.

    Only energy differences enter, so shifting every level by a constant gives
    the same bits whenever the shift itself is exact in floating point.
    """
    e = as_spectrum(e)
    _check_temperature(T)
    gaps, lz = _shifted_terms(e, T)
    return make_dist(np.exp(-gaps - lz))


def gibbs_state_quantum(h, T: float, method: str = "jacobi") -> HermitianOperator:
    """Density matrix ``exp(-H / T) / Z`` of a Hermitian Hamiltonian."""
    _check_temperature(T)
    spec = eigh(h, method=method)
    p = gibbs_state(EnergySpectrum(spec.eigenvalues), T).weights
    v = spec.eigenvectors
    return HermitianOperator((v * p) @ v.conj().T)


def embed_distribution(p: ProbDist, T0: float) -> EnergySpectrum:
    """Energies ``E_i = -T0 ln p_i`` whose Gibbs state at ``T0`` is ``p``.

    Requires full support; a zero probability would need an infinite level.
    """
    _check_temperature(T0)
    w = p.weights
    if np.any(w <= 0):
        raise ZeroProbability("cannot embed a distribution with zero entries")
    return EnergySpectrum(-T0 * np.log(w))


def von_neumann_from_temperature(e, T: float) -> float:
    """Entropy of the Gibbs state at ``T``, i.e. ``-dF/dT``."""
    return renyi(gibbs_state(e, T), ONE)
