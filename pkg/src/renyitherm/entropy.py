"""The Renyi entropy family, classical and quantum, in nats."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Union

import numpy as np

from .distributions import ProbDist, max_weight, support_size
from .errors import InvalidOrder
from .spectral import validate_density

Q_ONE_THRESHOLD = 1e-6

# Below this distance from q = 1 the power sum is formed as 1 + sum p (p^(q-1) - 1)
# so that ln/(1 - q) sees the small deviation directly.
_NEAR_ONE = 0.5


class OrderKind(enum.Enum):
    ZERO = "0"
    ONE = "1"
    INFINITY = "inf"
    FINITE = "q"


@dataclass(frozen=True)
class EntropyOrder:
    """Order of a Renyi entropy.

    Use :meth:`of` to build one from a number; it maps ``0``, ``inf`` and
    anything within 1e-6 of 1 onto the three limiting orders.
    """

    kind: OrderKind
    q: float

    @classmethod
    def of(cls, q: Union[float, str, "EntropyOrder"]) -> "EntropyOrder":
        if isinstance(q, EntropyOrder):
            return q
        if isinstance(q, str):
            text = q.strip().lower()
            q = math.inf if text in ("inf", "infinity", "+inf") else float(text)
        q = float(q)
        if math.isnan(q) or q < 0:
            raise InvalidOrder(f"order must be >= 0, got {q!r}")
        if q == 0:
            return ZERO
        if math.isinf(q):
            return INFINITY
        if abs(q - 1.0) <= Q_ONE_THRESHOLD:
            return ONE
        return cls(OrderKind.FINITE, q)

    def __float__(self):
        return self.q

    def __str__(self):
        return "inf" if self.kind is OrderKind.INFINITY else repr(self.q)


ZERO = EntropyOrder(OrderKind.ZERO, 0.0)
ONE = EntropyOrder(OrderKind.ONE, 1.0)
INFINITY = EntropyOrder(OrderKind.INFINITY, math.inf)


def shannon(p: ProbDist) -> float:
    """Shannon entropy with ``0 ln 0 = 0``."""
    w = p.weights[p.weights > 0]
    return -math.fsum(w * np.log(w))


def log_power_sum(p: ProbDist, q: float) -> float:
    """``ln sum_i p_i^q`` over the support of ``p``, for finite ``q > 0``."""
    w = p.weights[p.weights > 0]
    logw = np.log(w)
    if abs(q - 1.0) < _NEAR_ONE:
        # sum p^q - 1 = sum p (p^(q-1) - 1), exact-ish for q near 1
        return math.log1p(math.fsum(w * np.expm1((q - 1.0) * logw)))
    scaled = q * logw
    top = scaled.max()
    return float(top) + math.log(math.fsum(np.exp(scaled - top)))


def renyi(p: ProbDist, order) -> float:
    """Renyi entropy of ``p`` in nats.

    Parameters
    ----------
    p : ProbDist
    order : float, str or EntropyOrder
        ``0`` gives the log of the support size, ``1`` the Shannon entropy,
        ``inf`` minus the log of the largest weight.

    Returns
    -------
    float
        A value in ``[0, ln len(p)]``.
    """
    order = EntropyOrder.of(order)
    if order.kind is OrderKind.ZERO:
        s = math.log(support_size(p, 0.0))
    elif order.kind is OrderKind.ONE:
        s = shannon(p)
    elif order.kind is OrderKind.INFINITY:
        s = -math.log(max_weight(p))
    else:
        s = log_power_sum(p, order.q) / (1.0 - order.q)
    # rounding can leave the result an ulp outside its mathematical range
    return float(min(max(s, 0.0), math.log(len(p))))


def renyi_quantum(rho, order, strict: bool = False) -> float:
    """Renyi entropy of a density matrix, through its eigenvalues."""
    return renyi(validate_density(rho, strict=strict), order)


def von_neumann(rho, strict: bool = False) -> float:
    return renyi_quantum(rho, ONE, strict=strict)


def renyi_curve(p: ProbDist, qs: Iterable) -> list[tuple[float, float]]:
    """Evaluate ``renyi`` at every order in ``qs``, keeping the input order."""
    return [(float(q), renyi(p, q)) for q in qs]
