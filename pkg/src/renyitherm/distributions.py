"""Validated finite probability distributions."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import EmptyInput, NegativeWeight, NonFinite, NotNormalizable

NEGATIVITY_TOLERANCE = 1e-12
STRICT_NORMALIZATION_TOLERANCE = 1e-9


@dataclass(frozen=True, eq=False)
class ProbDist:
    """A probability vector on a finite set.

    Build instances with :func:`make_dist`; the constructor assumes its input
    has already been validated. ``weights`` is a read-only float64 array.
    """

    weights: np.ndarray

    def __post_init__(self):
        w = np.array(self.weights, dtype=float)
        w.setflags(write=False)
        object.__setattr__(self, "weights", w)

    def __len__(self):
        return self.weights.size

    def __iter__(self):
        return iter(self.weights.tolist())

    def __eq__(self, other):
        if not isinstance(other, ProbDist):
            return NotImplemented
        return np.array_equal(self.weights, other.weights)

    def __hash__(self):
        return hash(self.weights.tobytes())

    def __repr__(self):
        return f"ProbDist({', '.join(repr(x) for x in self.weights.tolist())})"


def _snap_to_unit_sum(w):
    # Push the float residual of the normalization into the largest entry so
    # that fsum(w) == 1 holds exactly; this makes make_dist idempotent.
    k = int(np.argmax(w))
    for _ in range(4):
        r = 1.0 - math.fsum(w)
        if r == 0.0:
            break
        w[k] += r
    return w


def make_dist(raw, strict: bool = False) -> ProbDist:
    """Validate and normalize a weight vector.

    Parameters
    ----------
    raw : array_like
        Non-negative weights. Entries in ``[-1e-12, 0)`` are treated as
        round-off and clamped to zero.
    strict : bool
        If True, reject inputs whose sum differs from 1 by more than 1e-9
        instead of rescaling them.

    Returns
    -------
    ProbDist
    """
    w = np.array(raw, dtype=float).ravel()
    if w.size == 0:
        raise EmptyInput("probability vector is empty")
    if not np.all(np.isfinite(w)):
        raise NonFinite("probability vector contains non-finite entries")
    if np.any(w < -NEGATIVITY_TOLERANCE):
        raise NegativeWeight(f"weight {w.min()!r} is below -{NEGATIVITY_TOLERANCE}")
    w[w < 0] = 0.0
    total = math.fsum(w)
    if total <= 0:
        raise NotNormalizable("weights sum to zero")
    if strict and abs(total - 1.0) > STRICT_NORMALIZATION_TOLERANCE:
        raise NotNormalizable(f"weights sum to {total!r}, not 1 (strict mode)")
    if total != 1.0:
        w = _snap_to_unit_sum(w / total)
    return ProbDist(w)


def support_size(p: ProbDist, threshold: float = 0.0) -> int:
    """Number of entries strictly greater than ``threshold``."""
    if threshold < 0:
        raise ValueError("threshold must be non-negative")
    return int(np.count_nonzero(p.weights > threshold))


def max_weight(p: ProbDist) -> float:
    return float(p.weights.max())


def uniform(n: int) -> ProbDist:
    """Uniform distribution over ``n`` outcomes."""
    if n < 1:
        raise EmptyInput("uniform distribution needs n >= 1")
    return make_dist(np.ones(n))
