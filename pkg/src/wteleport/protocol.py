"""Teleporting half of an entangled pair through the |W_n> channel family.

Setup: Alice holds the input pair on qubits (1, 2) and channel qubit 3; Bob
holds channel qubits 4 and 5.  Alice measures (2, 3) in the Bell basis, Bob
then measures qubit 5 in the computational basis, and the surviving pair
lives on (1, 4).  Every one of the 4 x 2 = 8 outcome branches is enumerated
exactly, with its probability, renormalized post-state and concurrence;
nothing is sampled.

Two equivalent executions are provided: a full five-qubit state-vector
enumeration for pure inputs, and per-branch linear maps (post-selected Kraus
operators) that also handle mixed inputs such as the Werner family.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import sqrt
from typing import Union

import numpy as np

from .concurrence import concurrence_mixed, concurrence_pure
from .states import (
    DensityMatrix,
    InvalidInput,
    NumericalFailure,
    StateVector,
    ZERO_PROBABILITY_CUTOFF,
    bell_basis,
    computational_basis,
    measure,
    tensor,
)

INPUT_LABELS = (1, 2)
CHANNEL_LABELS = (3, 4, 5)
OUTPUT_LABELS = (1, 4)


class BellOutcome(Enum):
    """Alice's Bell-measurement result on qubits (2, 3)."""

    PHI_PLUS = "PhiPlus"
    PHI_MINUS = "PhiMinus"
    PSI_PLUS = "PsiPlus"
    PSI_MINUS = "PsiMinus"


class BobOutcome(Enum):
    """Bob's computational-basis result on qubit 5."""

    ZERO = "Zero"
    ONE = "One"


BRANCH_ORDER: tuple[tuple[BellOutcome, BobOutcome], ...] = tuple(
    (bell, bob) for bell in BellOutcome for bob in BobOutcome
)

PostState = Union[StateVector, DensityMatrix]


@dataclass(frozen=True, eq=False)
class Branch:
    """One measurement branch: outcome pair, probability, post-state, concurrence.

    ``weighted_matrix`` is only set for mixed runs; it is the unnormalized
    M rho M' object whose trace is the branch probability.
    """

    bell: BellOutcome
    bob: BobOutcome
    probability: float
    post_state: PostState
    concurrence: float
    weighted_matrix: np.ndarray | None = None


@dataclass(frozen=True, eq=False)
class ProtocolResult:
    """All eight branches for one (input, channel) parameter point."""

    channel_n: float
    input_alpha: float | None
    input_p: float | None
    branches: tuple[Branch, ...]
    total_probability: float

    def branch(self, bell: BellOutcome, bob: BobOutcome) -> Branch:
        for b in self.branches:
            if b.bell is bell and b.bob is bob:
                return b
        raise KeyError((bell, bob))


def _check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not np.isfinite(alpha) or not 0.0 <= alpha <= 1.0:
        raise InvalidInput(f"alpha must lie in [0, 1], got {alpha}")
    return alpha


def _check_n(n: float) -> float:
    n = float(n)
    if not np.isfinite(n) or n <= 0.0:
        raise InvalidInput(f"channel parameter n must be positive, got {n}")
    return n


def _check_p(p: float) -> float:
    p = float(p)
    if not np.isfinite(p) or not 0.0 <= p <= 1.0:
        raise InvalidInput(f"mixing weight p must lie in [0, 1], got {p}")
    return p


def input_pair(alpha: float) -> StateVector:
    """The input pair alpha|00> + sqrt(1-alpha^2)|11> on qubits (1, 2)."""
    alpha = _check_alpha(alpha)
    beta = sqrt(1.0 - alpha * alpha)
    amps = np.zeros(4, dtype=complex)
    amps[0b00] = alpha
    amps[0b11] = beta
    return StateVector(INPUT_LABELS, amps)


def w_normalization(n: float) -> float:
    """Normalization constant 1/sqrt(2 + 2n) of the |W_n> family."""
    return 1.0 / sqrt(2.0 + 2.0 * n)


def w_state(n: float) -> StateVector:
    """|W_n> = f(n) (|100> + sqrt(n)|010> + sqrt(n+1)|001>) on qubits (3, 4, 5)."""
    n = _check_n(n)
    f = w_normalization(n)
    amps = np.zeros(8, dtype=complex)
    amps[0b100] = f
    amps[0b010] = f * sqrt(n)
    amps[0b001] = f * sqrt(n + 1.0)
    return StateVector(CHANNEL_LABELS, amps)


def werner(p: float) -> DensityMatrix:
    """Werner family p |Phi+><Phi+| + (1-p)/4 I on qubits (1, 2)."""
    p = _check_p(p)
    phi_plus = np.zeros(4)
    phi_plus[0b00] = phi_plus[0b11] = 1.0 / sqrt(2.0)
    entries = p * np.outer(phi_plus, phi_plus) + (1.0 - p) / 4.0 * np.eye(4)
    return DensityMatrix(INPUT_LABELS, entries)


def compose_joint(pair: StateVector, channel: StateVector) -> StateVector:
    """Five-qubit joint state of the input pair and the channel."""
    if pair.labels != INPUT_LABELS:
        raise InvalidInput(f"input pair must live on {INPUT_LABELS}, got {pair.labels}")
    if channel.labels != CHANNEL_LABELS:
        raise InvalidInput(f"channel must live on {CHANNEL_LABELS}, got {channel.labels}")
    return tensor(pair, channel)


def _dead_pure_branch(bell: BellOutcome, bob: BobOutcome, probability: float) -> Branch:
    sentinel = StateVector(OUTPUT_LABELS, np.zeros(4, dtype=complex))
    return Branch(bell, bob, probability, sentinel, 0.0)


def run_protocol_pure(alpha: float, n: float) -> ProtocolResult:
    """Run the protocol on the pure input pair by full five-qubit enumeration.

    Alice's four Bell outcomes and Bob's two computational outcomes yield
    exactly eight branches; joint probabilities multiply along the chain and
    sum to one.  Branches below the zero-probability cutoff carry the zero
    sentinel and concurrence 0.
    """
    alpha = _check_alpha(alpha)
    n = _check_n(n)
    joint = compose_joint(input_pair(alpha), w_state(n))

    branches: list[Branch] = []
    bell_results = measure(joint, (2, 3), bell_basis((2, 3)))
    for bell_outcome, (_, p_bell, mid_state) in zip(BellOutcome, bell_results):
        if p_bell < ZERO_PROBABILITY_CUTOFF:
            branches.append(_dead_pure_branch(bell_outcome, BobOutcome.ZERO, 0.0))
            branches.append(_dead_pure_branch(bell_outcome, BobOutcome.ONE, 0.0))
            continue
        bob_results = measure(mid_state, (5,), computational_basis((5,)))
        for bob_outcome, (_, p_bob, post) in zip(BobOutcome, bob_results):
            probability = p_bell * p_bob
            if probability < ZERO_PROBABILITY_CUTOFF:
                branches.append(_dead_pure_branch(bell_outcome, bob_outcome, probability))
            else:
                branches.append(
                    Branch(bell_outcome, bob_outcome, probability, post, concurrence_pure(post))
                )

    total = sum(b.probability for b in branches)
    if abs(total - 1.0) > 1e-12:
        raise NumericalFailure(f"branch probabilities sum to {total}, expected 1")
    return ProtocolResult(n, alpha, None, tuple(branches), total)


def branch_map(n: float, bell: BellOutcome, bob: BobOutcome) -> np.ndarray:
    """Post-selected linear map of one branch, as a 4x4 matrix on (1, 2) -> (1, 4).

    Applying it to any input pair and renormalizing reproduces the branch
    post-state of the full enumeration, and the squared norm of the image is
    the branch probability.  Summing M'M over all eight branches gives the
    identity (the eight maps form a complete measurement).

    Every map factors as identity on qubit 1 times a 2x2 action taking
    qubit 2 to qubit 4, scaled by f(n)/sqrt(2).
    """
    n = _check_n(n)
    g = w_normalization(n) / sqrt(2.0)
    rn = sqrt(n)
    rn1 = sqrt(n + 1.0)
    action = {
        (BellOutcome.PHI_PLUS, BobOutcome.ZERO): [[0.0, 1.0], [rn, 0.0]],
        (BellOutcome.PHI_MINUS, BobOutcome.ZERO): [[0.0, -1.0], [rn, 0.0]],
        (BellOutcome.PSI_PLUS, BobOutcome.ZERO): [[1.0, 0.0], [0.0, rn]],
        (BellOutcome.PSI_MINUS, BobOutcome.ZERO): [[1.0, 0.0], [0.0, -rn]],
        (BellOutcome.PHI_PLUS, BobOutcome.ONE): [[rn1, 0.0], [0.0, 0.0]],
        (BellOutcome.PHI_MINUS, BobOutcome.ONE): [[rn1, 0.0], [0.0, 0.0]],
        (BellOutcome.PSI_PLUS, BobOutcome.ONE): [[0.0, rn1], [0.0, 0.0]],
        (BellOutcome.PSI_MINUS, BobOutcome.ONE): [[0.0, -rn1], [0.0, 0.0]],
    }[(bell, bob)]
    return g * np.kron(np.eye(2), np.array(action))


def run_protocol_mixed(p: float, n: float) -> ProtocolResult:
    """Run the protocol on a Werner input through the branch maps.

    Each branch reports probability tr(M rho M'), the renormalized post-state
    density matrix, its Wootters concurrence, and the unnormalized
    M rho M' matrix itself (``weighted_matrix``).
    """
    p = _check_p(p)
    n = _check_n(n)
    rho = werner(p).entries

    branches: list[Branch] = []
    for bell_outcome, bob_outcome in BRANCH_ORDER:
        m = branch_map(n, bell_outcome, bob_outcome)
        weighted = m @ rho @ m.conj().T
        probability = float(weighted.trace().real)
        if probability < ZERO_PROBABILITY_CUTOFF:
            post = DensityMatrix(OUTPUT_LABELS, np.zeros((4, 4), dtype=complex))
            branches.append(
                Branch(bell_outcome, bob_outcome, probability, post, 0.0, weighted)
            )
        else:
            post = DensityMatrix(OUTPUT_LABELS, weighted / probability)
            branches.append(
                Branch(
                    bell_outcome,
                    bob_outcome,
                    probability,
                    post,
                    concurrence_mixed(post),
                    weighted,
                )
            )

    total = sum(b.probability for b in branches)
    if abs(total - 1.0) > 1e-12:
        raise NumericalFailure(f"branch probabilities sum to {total}, expected 1")
    return ProtocolResult(n, None, p, tuple(branches), total)
