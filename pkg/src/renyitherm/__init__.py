"""Renyi entropy as the secant slope of free energy in temperature."""

from .distributions import ProbDist, make_dist, max_weight, support_size, uniform
from .entropy import INFINITY, ONE, ZERO, EntropyOrder, renyi, renyi_curve, renyi_quantum, shannon, von_neumann
from .errors import *  # noqa: F401,F403
from .qcalc import (
    LimitRow,
    RelationReport,
    free_energy_secant,
    q_derivative,
    quench_ratio,
    relation_check,
    relation_limit_check,
)
from .spectral import HermitianOperator, Spectrum, eigh, eigenvalues, matrix_function, validate_density
from .thermo import (
    EnergySpectrum,
    ThermalPoint,
    as_spectrum,
    embed_distribution,
    free_energy,
    gibbs_state,
    gibbs_state_quantum,
    log_partition,
    von_neumann_from_temperature,
)

__version__ = "0.1.0"
