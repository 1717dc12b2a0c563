"""Bipartition-sum entanglement measures for multi-qubit pure states.

The package evaluates four global entanglement measures (linear, von
Neumann, and Renyi-infinity entropy sums, and the negativity sum) over
all bipartitions of an n-qubit pure state, samples their distribution
over Haar-random states, and searches for maximally entangled states by
adaptive stochastic hill climbing.
"""

__version__ = "0.1.0"

from .distribution import Histogram, marker_values, sample_distribution, sample_values
from .linalg import EigenResult, hermitian_eigenvalues, partial_transpose
from .measures import (
    GlobalMeasureEvaluator,
    MeasureKind,
    MeasureReport,
    MixednessSummary,
    global_measure,
    linear_entropy,
    marginal_mixedness_report,
    meyer_wallach_q,
    negativity,
    negativity_oracle,
    renyi_inf_entropy,
    scott_q_m,
    upper_bound,
    von_neumann_entropy,
)
from .partitions import (
    Bipartition,
    enumerate_bipartitions,
    reduced_density,
    schmidt_spectrum,
)
from .search import (
    InitialState,
    MoveRule,
    SearchConfig,
    SearchTrace,
    hill_climb,
    multi_restart,
    perturb_additive,
    perturb_brown,
)
from .states import (
    PureState,
    catalog_state,
    from_amplitudes,
    haar_random_state,
    load_state,
    save_state,
)
