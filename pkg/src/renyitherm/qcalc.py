"""q-derivatives and the secant identity between Renyi entropy and free energy.

For a system with levels E, reference temperature T0 and ``T = T0 / q``,

    S_q(gibbs(E, T0)) = -(F(T) - F(T0)) / (T - T0),

so Renyi entropy is minus the q^-1-derivative of the free energy in
temperature, and its q -> 1 limit is the ordinary ``-dF/dT``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, NamedTuple

from .entropy import Q_ONE_THRESHOLD, EntropyOrder, OrderKind, renyi
from .errors import DegenerateOrder, InvalidOrder, NonpositiveTemperature, ZeroPoint
from .thermo import as_spectrum, gibbs_state, shifted_log_partition, von_neumann_from_temperature


@dataclass(frozen=True)
class RelationReport:
    """Both sides of the secant identity at ``(T0, T = T0/q)``.

    ``residual`` is signed: ``lhs - rhs``.
    """

    T0: float
    T: float
    q: float
    lhs: float
    rhs: float
    residual: float

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in ("T0", "T", "q", "lhs", "rhs", "residual")}


class LimitRow(NamedTuple):
    delta: float
    secant: float
    tangent: float
    gap: float


def q_derivative(f: Callable[[float], float], x: float, q: float) -> float:
    """Jackson q-derivative ``(f(qx) - f(x)) / (qx - x)``."""
    if not q > 0:
        raise InvalidOrder(f"q must be positive, got {q!r}")
    if abs(q - 1.0) <= Q_ONE_THRESHOLD:
        raise DegenerateOrder(f"q = {q!r} is within {Q_ONE_THRESHOLD} of 1; use the ordinary derivative")
    if x == 0:
        raise ZeroPoint("q-derivative is undefined at x = 0")
    qx = q * x
    return (f(qx) - f(x)) / (qx - x)


def _check_order(q):
    if not (q > 0) or math.isinf(q):
        raise InvalidOrder(f"q must be positive and finite, got {q!r}")
    if abs(q - 1.0) <= Q_ONE_THRESHOLD:
        raise DegenerateOrder(f"q = {q!r} is within {Q_ONE_THRESHOLD} of 1")


def free_energy_secant(e, T0: float, T: float) -> float:
    """``-(F(T) - F(T0)) / (T - T0)`` formed from log-partition values.

    Uses ``(T ln Z(T) - T0 ln Z(T0)) / (T - T0)``; the ground-state energy
    cancels analytically, leaving ``(T L(T) - T0 L(T0)) / (T - T0)``, which is
    evaluated as ``L(T) + T0 (L(T) - L(T0)) / (T - T0)`` so that a flat
    ``L`` (degenerate levels) gives its value back exactly.
    """
    e = as_spectrum(e)
    if T == T0:
        raise DegenerateOrder("secant needs T != T0")
    _, l_t = shifted_log_partition(e, T)
    _, l_0 = shifted_log_partition(e, T0)
    return l_t + T0 * (l_t - l_0) / (T - T0)


def relation_check(e, T0: float, q: float) -> RelationReport:
    """Evaluate both sides of the Renyi/free-energy identity.

    Parameters
    ----------
    e : EnergySpectrum, HermitianOperator or array_like
        System energies; a Hamiltonian is reduced to its eigenvalues.
    T0 : float
        Temperature of the initial Gibbs state.
    q : float
        Renyi order; the comparison temperature is ``T0 / q``.
    """
    e = as_spectrum(e)
    if not (T0 > 0) or math.isinf(T0):
        raise NonpositiveTemperature(f"T0 must be positive and finite, got {T0!r}")
    _check_order(q)
    T = T0 / q
    lhs = renyi(gibbs_state(e, T0), EntropyOrder(OrderKind.FINITE, q))
    rhs = free_energy_secant(e, T0, T)
    return RelationReport(float(T0), T, float(q), lhs, rhs, lhs - rhs)


def quench_ratio(e, T0: float, q: float) -> float:
    """Free-energy drop per unit temperature change when ``T0 -> T0 / q``.

    This is the right-hand side of :func:`relation_check`; it equals the
    order-q Renyi entropy of the Gibbs state at ``T0``.
    """
    e = as_spectrum(e)
    if not (T0 > 0) or math.isinf(T0):
        raise NonpositiveTemperature(f"T0 must be positive and finite, got {T0!r}")
    _check_order(q)
    return free_energy_secant(e, T0, T0 / q)


def relation_limit_check(e, T0: float, steps: Iterable[float]) -> list[LimitRow]:
    """Secant slopes of ``-F`` against the tangent ``S_1(T0)`` for each step.

    Unlike :func:`relation_check`, arbitrarily small steps are allowed here,
    since studying the approach to the tangent is the point.
    """
    e = as_spectrum(e)
    tangent = von_neumann_from_temperature(e, T0)
    rows = []
    for d in steps:
        d = float(d)
        if d == 0:
            raise ZeroPoint("step must be nonzero")
        if not T0 + d > 0:
            raise NonpositiveTemperature(f"T0 + step = {T0 + d!r} is not positive")
        sec = free_energy_secant(e, T0, T0 + d)
        rows.append(LimitRow(d, sec, tangent, sec - tangent))
    return rows
