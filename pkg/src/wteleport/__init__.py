"""Teleportation of entanglement over the |W_n> channel family.

A small numpy library that enumerates every measurement branch of the
protocol exactly, computes the concurrence of each branch as a ground-truth
oracle, and checks the closed-form efficiency predictions against it.
"""

from .analysis import (
    DEFAULT_ALPHA_SQ_GRID,
    DEFAULT_N_GRID,
    DEFAULT_P_GRID,
    QuarticReport,
    Region,
    SignRegion,
    StateIndependentPoint,
    VerificationRow,
    classify_region,
    efficiency_ratio,
    input_concurrence,
    predicted_branch_matrix_phi,
    predicted_branch_matrix_psi,
    predicted_concurrence_phi,
    predicted_concurrence_psi,
    predicted_concurrence_werner,
    quartic,
    quartic_roots,
    state_independent_alpha_sq,
    sweep,
)
from .concurrence import (
    SIGMA_YY,
    concurrence_mixed,
    concurrence_pure,
    spin_flip_mixed,
    spin_flip_pure,
)
from .protocol import (
    BellOutcome,
    BobOutcome,
    Branch,
    ProtocolResult,
    branch_map,
    compose_joint,
    input_pair,
    run_protocol_mixed,
    run_protocol_pure,
    w_normalization,
    w_state,
    werner,
)
from .states import (
    DensityMatrix,
    InvalidBasis,
    InvalidInput,
    MeasurementBasis,
    NumericalFailure,
    StateVector,
    bell_basis,
    computational_basis,
    density_from_pure,
    ket,
    measure,
    partial_trace,
    tensor,
)

__version__ = "0.1.0"

__all__ = [
    "BellOutcome",
    "BobOutcome",
    "Branch",
    "DEFAULT_ALPHA_SQ_GRID",
    "DEFAULT_N_GRID",
    "DEFAULT_P_GRID",
    "DensityMatrix",
    "InvalidBasis",
    "InvalidInput",
    "MeasurementBasis",
    "NumericalFailure",
    "ProtocolResult",
    "QuarticReport",
    "Region",
    "SIGMA_YY",
    "SignRegion",
    "StateIndependentPoint",
    "StateVector",
    "VerificationRow",
    "bell_basis",
    "branch_map",
    "classify_region",
    "compose_joint",
    "computational_basis",
    "concurrence_mixed",
    "concurrence_pure",
    "density_from_pure",
    "efficiency_ratio",
    "input_concurrence",
    "input_pair",
    "ket",
    "measure",
    "partial_trace",
    "predicted_branch_matrix_phi",
    "predicted_branch_matrix_psi",
    "predicted_concurrence_phi",
    "predicted_concurrence_psi",
    "predicted_concurrence_werner",
    "quartic",
    "quartic_roots",
    "run_protocol_mixed",
    "run_protocol_pure",
    "spin_flip_mixed",
    "spin_flip_pure",
    "state_independent_alpha_sq",
    "sweep",
    "tensor",
    "w_normalization",
    "w_state",
    "werner",
]
