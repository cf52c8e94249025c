"""Two-qubit concurrence, the entanglement oracle for the whole package.

Pure states use the spin-flip overlap C = |<eta|eta~>| with
eta~ = (sigma_y x sigma_y) conj(eta).  Mixed states use the Wootters
formula C = max(0, l1 - l2 - l3 - l4), the l_i being the decreasingly
sorted square roots of the eigenvalues of rho * rho~.
"""
from __future__ import annotations

import numpy as np

from .states import DensityMatrix, InvalidInput, NumericalFailure, StateVector

# |11><00| - |01><10| - |10><01| + |00><11| in the computational basis.
SIGMA_YY = np.array(
    [
        [0.0, 0.0, 0.0, 1.0],
        [0.0, 0.0, -1.0, 0.0],
        [0.0, -1.0, 0.0, 0.0],
        [1.0, 0.0, 0.0, 0.0],
    ]
)
SIGMA_YY.setflags(write=False)

# Eigenvalues of rho * rho~ in [-EIGENVALUE_CLIP, 0) count as roundoff and
# clip to zero; anything below -EIGENVALUE_HARD_FLOOR is a logic bug.
EIGENVALUE_CLIP = 1e-10
EIGENVALUE_HARD_FLOOR = 1e-8
IMAG_TOL = 1e-9
# Mixed states this close to pure are routed through the pure-state formula:
# the sqrt of a near-zero eigenvalue amplifies roundoff to ~1e-8, while the
# dominant-eigenvector overlap stays exact.
PURITY_SHORTCUT = 1e-10


def _require_two_qubits(labels: tuple[int, ...]) -> None:
    if len(labels) != 2:
        raise InvalidInput(f"concurrence is defined for two qubits, register is {labels}")


def spin_flip_pure(state: StateVector) -> StateVector:
    """(sigma_y x sigma_y) applied to the complex conjugate of the state."""
    _require_two_qubits(state.labels)
    if not state.is_normalized():
        raise InvalidInput(f"state must be normalized, norm is {state.norm()}")
    return StateVector(state.labels, SIGMA_YY @ state.amplitudes.conj())


def concurrence_pure(state: StateVector) -> float:
    """Spin-flip overlap |<eta|eta~>|, in [0, 1]."""
    _require_two_qubits(state.labels)
    if not state.is_normalized():
        raise InvalidInput(f"state must be normalized, norm is {state.norm()}")
    flipped = SIGMA_YY @ state.amplitudes.conj()
    value = float(abs(np.vdot(state.amplitudes, flipped)))
    if value > 1.0 + EIGENVALUE_CLIP:
        raise NumericalFailure(f"concurrence {value} exceeds 1")
    return min(value, 1.0)


def spin_flip_mixed(rho: DensityMatrix) -> DensityMatrix:
    """rho~ = (sigma_y x sigma_y) conj(rho) (sigma_y x sigma_y)."""
    _require_two_qubits(rho.labels)
    return DensityMatrix(rho.labels, SIGMA_YY @ rho.entries.conj() @ SIGMA_YY)


def concurrence_mixed(rho: DensityMatrix) -> float:
    """Wootters concurrence of a two-qubit density matrix.

    The eigenvalues of rho * rho~ come from a general (non-Hermitian)
    eigenvalue routine; imaginary parts above ``IMAG_TOL`` or real parts
    below ``-EIGENVALUE_HARD_FLOOR`` raise ``NumericalFailure``.  Inputs
    within ``PURITY_SHORTCUT`` of a pure state are evaluated through the
    pure-state overlap on the dominant eigenvector instead.
    """
    _require_two_qubits(rho.labels)
    if rho.is_zero():
        raise InvalidInput("concurrence of the zero sentinel is undefined")
    m = rho.entries

    purity = float((m @ m).trace().real)
    if purity >= 1.0 - PURITY_SHORTCUT:
        w, v = np.linalg.eigh(m)
        return concurrence_pure(StateVector(rho.labels, v[:, int(np.argmax(w))]))

    product = m @ (SIGMA_YY @ m.conj() @ SIGMA_YY)
    eigenvalues = np.linalg.eigvals(product)
    if np.abs(eigenvalues.imag).max() > IMAG_TOL:
        raise NumericalFailure(
            f"eigenvalues of rho*rho~ should be real, worst imaginary part "
            f"{np.abs(eigenvalues.imag).max():.3e}"
        )
    real = eigenvalues.real
    if real.min() < -EIGENVALUE_HARD_FLOOR:
        raise NumericalFailure(f"eigenvalue of rho*rho~ is {real.min():.3e}, below roundoff range")
    lam = np.sort(np.sqrt(np.clip(real, 0.0, None)))[::-1]
    value = float(lam[0] - lam[1] - lam[2] - lam[3])
    if value > 1.0 + EIGENVALUE_CLIP:
        raise NumericalFailure(f"concurrence {value} exceeds 1")
    return max(0.0, min(value, 1.0))
