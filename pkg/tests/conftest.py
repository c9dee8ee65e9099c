import sys

import numpy as np
import pytest
from hypothesis import strategies as st

from renyitherm import make_dist


def random_unitary(rng, n, rotations=None):
    """Product of random 2x2 complex rotations embedded in the identity."""
    u = np.eye(n, dtype=complex)
    if n < 2:
        return u
    for _ in range(rotations or 3 * n * n):
        i, j = rng.choice(n, size=2, replace=False)
        theta, phi, chi = rng.uniform(0, 2 * np.pi, size=3)
        c, s = np.cos(theta), np.sin(theta)
        ri, rj = u[i].copy(), u[j].copy()
        u[i] = c * np.exp(1j * phi) * ri + s * np.exp(1j * chi) * rj
        u[j] = -s * np.exp(-1j * chi) * ri + c * np.exp(-1j * phi) * rj
    return u


def random_dist(rng, n, full_support=True):
    w = rng.dirichlet(np.ones(n))
    if not full_support:
        w[rng.random(n) < 0.3] = 0.0
        if w.sum() == 0:
            w[0] = 1.0
    return make_dist(w)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


weight_vectors = st.lists(
    st.floats(min_value=0, max_value=1e3, allow_nan=False, allow_infinity=False), min_size=1, max_size=20
).filter(lambda xs: sum(xs) > 1e-300)

positive_weight_vectors = st.lists(
    st.floats(min_value=1e-6, max_value=1.0, allow_nan=False), min_size=1, max_size=20
)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "ACCEPTANCE_LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
