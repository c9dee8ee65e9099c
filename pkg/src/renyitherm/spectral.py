"""Hermitian eigendecomposition and spectral matrix functions.

The default eigensolver is a cyclic complex Jacobi iteration. Each rotation
first removes the phase of the pivot element, then applies a real Givens
rotation that annihilates it. LAPACK (``numpy.linalg.eigh``) is available via
``method="lapack"`` for larger operators.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .distributions import ProbDist, make_dist
from .errors import (
    DomainError,
    NegativeEigenvalue,
    NoConvergence,
    NonFinite,
    NotHermitian,
    TraceNotOne,
    ValidationError,
)

HERMITICITY_TOLERANCE = 1e-9
RECONSTRUCTION_TOLERANCE = 1e-10
EIGEN_CLIP_TOLERANCE = 1e-8
TRACE_TOLERANCE = 1e-8
MAX_SWEEPS = 100
OFFDIAG_TARGET = 1e-12


@dataclass(frozen=True, eq=False)
class HermitianOperator:
    """A square complex matrix, Hermitian to within 1e-9.

    The stored matrix is the symmetrized ``(A + A^H) / 2`` so downstream code
    sees an exactly Hermitian array.
    """

    entries: np.ndarray

    def __post_init__(self):
        a = np.array(self.entries, dtype=complex)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
            raise ValidationError(f"operator must be a non-empty square matrix, got shape {a.shape}")
        if not np.all(np.isfinite(a)):
            raise NonFinite("operator has non-finite entries")
        dev = float(np.max(np.abs(a - a.conj().T)))
        if dev > HERMITICITY_TOLERANCE:
            raise NotHermitian(f"max |A_ij - conj(A_ji)| = {dev:.3g} exceeds {HERMITICITY_TOLERANCE}")
        a = 0.5 * (a + a.conj().T)
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def trace(self) -> float:
        return float(np.trace(self.entries).real)

    def conjugate_by(self, u) -> "HermitianOperator":
        """Return ``U A U^H``."""
        u = np.asarray(u, dtype=complex)
        return HermitianOperator(u @ self.entries @ u.conj().T)

    @classmethod
    def diagonal(cls, values) -> "HermitianOperator":
        return cls(np.diag(np.asarray(values, dtype=float)))


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Eigenvalues in non-increasing order, with optional eigenvectors as columns."""

    eigenvalues: np.ndarray
    eigenvectors: Optional[np.ndarray] = None
    sweeps: int = 0

    def reconstruct(self) -> np.ndarray:
        if self.eigenvectors is None:
            raise ValueError("spectrum was computed without eigenvectors")
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def _as_operator(a) -> HermitianOperator:
    return a if isinstance(a, HermitianOperator) else HermitianOperator(a)


def _jacobi(a: np.ndarray):
    a = a.copy()
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    target = OFFDIAG_TARGET * np.linalg.norm(a)
    tiny = np.finfo(float).tiny
    for sweep in range(MAX_SWEEPS + 1):
        off = np.linalg.norm(a - np.diag(np.diag(a)))
        if off <= target:
            return a.diagonal().real.copy(), v, sweep
        if sweep == MAX_SWEEPS:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                r = abs(apq)
                if r <= tiny:
                    continue
                phase = apq / r
                app, aqq = a[p, p].real, a[q, q].real
                theta = (aqq - app) / (2.0 * r)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                # G = diag(1, conj(phase)) @ [[c, s], [-s, c]]; A <- G^H A G, V <- V G
                g10 = -s * phase.conjugate()
                g11 = c * phase.conjugate()
                for m in (a, v):
                    cp, cq = m[:, p].copy(), m[:, q]
                    m[:, p] = c * cp + g10 * cq
                    m[:, q] = s * cp + g11 * cq
                rp, rq = a[p, :].copy(), a[q, :]
                a[p, :] = c * rp + g10.conjugate() * rq
                a[q, :] = s * rp + g11.conjugate() * rq
                a[p, q] = a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
    raise NoConvergence(f"Jacobi iteration did not converge in {MAX_SWEEPS} sweeps (off-diagonal norm {off:.3g})")


def eigh(a, vectors: bool = True, method: str = "jacobi") -> Spectrum:
    """Eigendecomposition of a Hermitian operator.

    Parameters
    ----------
    a : HermitianOperator or array_like
    vectors : bool
        Keep the eigenvectors in the result.
    method : {"jacobi", "lapack"}

    Returns
    -------
    Spectrum
        Eigenvalues sorted non-increasing; eigenvector columns in matching order.
    """
    op = _as_operator(a)
    if method == "jacobi":
        w, v, sweeps = _jacobi(np.array(op.entries))
    elif method == "lapack":
        w, v = np.linalg.eigh(op.entries)
        sweeps = 0
    else:
        raise ValueError(f"unknown eigensolver {method!r}")
    order = np.argsort(-w, kind="stable")
    w = w[order]
    v = v[:, order]
    w.setflags(write=False)
    if vectors:
        v.setflags(write=False)
    return Spectrum(w, v if vectors else None, sweeps)


def eigenvalues(a, method: str = "jacobi") -> np.ndarray:
    return eigh(a, vectors=False, method=method).eigenvalues


def validate_density(rho, strict: bool = False, method: str = "jacobi") -> ProbDist:
    """Check that ``rho`` is a density matrix and return its eigenvalue distribution.

    Eigenvalues in ``[-1e-8, 0)`` are clipped to zero; anything more negative
    raises :class:`NegativeEigenvalue`. In strict mode the trace must be 1 to
    within 1e-8, otherwise the spectrum is renormalized.
    """
    lam = np.array(eigenvalues(rho, method=method))
    if lam[-1] < -EIGEN_CLIP_TOLERANCE:
        raise NegativeEigenvalue(f"eigenvalue {lam[-1]:.3g} is below -{EIGEN_CLIP_TOLERANCE}")
    lam[lam < 0] = 0.0
    tr = math.fsum(lam)
    if strict and abs(tr - 1.0) > TRACE_TOLERANCE:
        raise TraceNotOne(f"trace {tr!r} differs from 1 by more than {TRACE_TOLERANCE}")
    return make_dist(lam)


def matrix_function(a, f: Callable, method: str = "jacobi") -> HermitianOperator:
    """Apply a real scalar function through the spectral decomposition.

    ``f`` is called once on the array of eigenvalues; plain scalar functions
    are vectorized automatically. Non-finite outputs (``log(0)``, ``sqrt(-1)``)
    raise :class:`DomainError`.
    """
    spec = eigh(a, method=method)
    lam = spec.eigenvalues
    with np.errstate(all="ignore"):
        try:
            fl = np.asarray(f(lam.copy()), dtype=float)
            if fl.shape != lam.shape:
                raise TypeError
        except (TypeError, ValueError):
            try:
                fl = np.array([f(float(x)) for x in lam], dtype=float)
            except (ValueError, ZeroDivisionError, OverflowError) as exc:
                raise DomainError(f"function is undefined on the spectrum: {exc}") from exc
    if not np.all(np.isfinite(fl)):
        bad = lam[~np.isfinite(fl)]
        raise DomainError(f"function is undefined at eigenvalue(s) {bad.tolist()}")
    v = spec.eigenvectors
    return HermitianOperator((v * fl) @ v.conj().T)
