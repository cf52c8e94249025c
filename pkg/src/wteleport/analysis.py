"""Closed-form concurrence predictions, channel classification, and
oracle-vs-formula verification sweeps.

The closed forms are evaluated exactly as printed, with no clamping: where a
printed formula disagrees with the simulation oracle (the Werner case does,
see ``predicted_concurrence_werner``), the sweep reports both values and a
DISCREPANT verdict rather than guessing which side is right.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import sqrt
from typing import NamedTuple, Sequence

import numpy as np

from .protocol import (
    BellOutcome,
    BobOutcome,
    run_protocol_mixed,
    run_protocol_pure,
)
from .states import InvalidInput, NumericalFailure

MATCH_TOL = 1e-8

# Default verification grids; they span both classification regimes
# (0 < n < 1 and n > 1) and the full Werner mixing range.
DEFAULT_N_GRID: tuple[float, ...] = (0.1, 0.25, 0.5, 1.0, 2.0, 4.0, 10.0)
DEFAULT_ALPHA_SQ_GRID: tuple[float, ...] = tuple(np.linspace(0.05, 0.95, 19))
DEFAULT_P_GRID: tuple[float, ...] = tuple(np.linspace(0.0, 1.0, 11))

QUARTIC_COEFFICIENTS: tuple[float, ...] = (1.0, 4.0, 6.0, -60.0, 1.0)


class Region(Enum):
    PRESERVING = "PRESERVING"
    DEGRADED = "DEGRADED"


class StateIndependentPoint(NamedTuple):
    """Input weight at which the channel preserves concurrence exactly.

    ``any_alpha`` is True only at n = 1, where every input works and the
    reported value is just the symmetric point 1/2.
    """

    alpha_sq: float
    any_alpha: bool


class SignRegion(NamedTuple):
    """Sign of the channel-rating quartic on (lower, upper); upper None means unbounded."""

    lower: float
    upper: float | None
    sign: int


@dataclass(frozen=True)
class QuarticReport:
    coefficients: tuple[float, ...]
    roots_positive: tuple[float, ...]
    sign_regions: tuple[SignRegion, ...]


@dataclass(frozen=True)
class VerificationRow:
    """One sweep point: oracle concurrence next to its closed-form prediction."""

    mode: str
    n: float
    alpha_sq: float | None
    p: float | None
    bell: BellOutcome
    bob: BobOutcome
    probability: float
    oracle_concurrence: float
    formula_concurrence: float
    abs_diff: float
    verdict: str


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


def _check_alpha_sq(alpha_sq: float) -> float:
    alpha_sq = float(alpha_sq)
    if not np.isfinite(alpha_sq) or not 0.0 <= alpha_sq <= 1.0:
        raise InvalidInput(f"alpha^2 must lie in [0, 1], got {alpha_sq}")
    return alpha_sq


def input_concurrence(alpha: float) -> float:
    """Concurrence 2 alpha sqrt(1 - alpha^2) of the input pair."""
    alpha = _check_alpha(alpha)
    return 2.0 * alpha * sqrt(1.0 - alpha * alpha)


def efficiency_ratio(alpha_sq: float, n: float) -> float:
    """Final-to-initial concurrence ratio sqrt(n) / ((n-1) alpha^2 + 1)."""
    n = _check_n(n)
    alpha_sq = float(alpha_sq)
    if not 0.0 <= alpha_sq <= 1.0:
        raise InvalidInput(f"alpha^2 must lie in [0, 1], got {alpha_sq}")
    return sqrt(n) / ((n - 1.0) * alpha_sq + 1.0)


def predicted_concurrence_phi(alpha: float, n: float) -> float:
    """Closed-form branch concurrence 2 alpha sqrt(n (1-alpha^2)) / ((n-1) alpha^2 + 1).

    Applies to Alice outcome Phi+/Phi- with Bob outcome 0.
    """
    alpha = _check_alpha(alpha)
    n = _check_n(n)
    return 2.0 * alpha * sqrt(n * (1.0 - alpha * alpha)) / ((n - 1.0) * alpha * alpha + 1.0)


def predicted_concurrence_psi(alpha: float, n: float) -> float:
    """Mirror closed form for Psi+/Psi- with Bob outcome 0: alpha^2 -> beta^2."""
    alpha = _check_alpha(alpha)
    n = _check_n(n)
    beta_sq = 1.0 - alpha * alpha
    return 2.0 * sqrt(beta_sq) * sqrt(n * (1.0 - beta_sq)) / ((n - 1.0) * beta_sq + 1.0)


def predicted_concurrence_werner(p: float, n: float) -> float:
    """Printed closed form 4 sqrt(n) (3p-1) / (n+1)^2 for p > 1/3, else 0.

    Returned verbatim, never clamped to [0, 1]: at n = 1, p = 1 it evaluates
    to 2.0 while the branch-map oracle gives 1.0.  The sweep exists to expose
    exactly that kind of mismatch, so this evaluator must not mask it.
    """
    p = _check_p(p)
    n = _check_n(n)
    if p <= 1.0 / 3.0:
        return 0.0
    return 4.0 * sqrt(n) * (3.0 * p - 1.0) / ((n + 1.0) ** 2)


def predicted_branch_matrix_phi(p: float, n: float, sign: int = 1) -> np.ndarray:
    """Closed-form unnormalized post-state for Phi+/Phi- with Bob 0, Werner input.

    Returned exactly as the closed form states it (its trace is not 1 in
    general; compare against ``weighted_matrix`` after fixing the overall
    scale, e.g. by matching the top-left entries).  Note the |10><10| entry
    carries a factor n here, while the branch-map oracle produces it without
    that factor; the two therefore disagree entrywise whenever n != 1.
    """
    p = _check_p(p)
    n = _check_n(n)
    if sign not in (1, -1):
        raise InvalidInput(f"sign must be +1 or -1, got {sign}")
    c = sign * sqrt(n) * p / 4.0
    return np.array(
        [
            [(1.0 - p) / 8.0, 0.0, 0.0, 0.0],
            [0.0, n * (1.0 + p) / 8.0, c, 0.0],
            [0.0, c, n * (1.0 + p) / 8.0, 0.0],
            [0.0, 0.0, 0.0, n * (1.0 - p) / 8.0],
        ]
    )


def predicted_branch_matrix_psi(p: float, n: float, sign: int = 1) -> np.ndarray:
    """Closed-form unnormalized post-state for Psi+/Psi- with Bob 0, Werner input.

    Unlike the Phi case this one agrees with the branch-map oracle entrywise
    (up to the same overall scale).
    """
    p = _check_p(p)
    n = _check_n(n)
    if sign not in (1, -1):
        raise InvalidInput(f"sign must be +1 or -1, got {sign}")
    c = sign * sqrt(n) * p / 4.0
    return np.array(
        [
            [(1.0 + p) / 8.0, 0.0, 0.0, c],
            [0.0, n * (1.0 - p) / 8.0, 0.0, 0.0],
            [0.0, 0.0, (1.0 - p) / 8.0, 0.0],
            [c, 0.0, 0.0, n * (1.0 + p) / 8.0],
        ]
    )


def state_independent_alpha_sq(n: float) -> StateIndependentPoint:
    """Input weight alpha^2 = 1/(sqrt(n)+1) at which concurrence is preserved.

    This is the continuous form of (sqrt(n)-1)/(n-1), which is 0/0 at n = 1;
    there the channel preserves concurrence for every input, flagged via
    ``any_alpha``.
    """
    n = _check_n(n)
    return StateIndependentPoint(1.0 / (sqrt(n) + 1.0), n == 1.0)


def classify_region(alpha_sq: float, n: float) -> Region:
    """DEGRADED when the efficiency ratio drops below 1, else PRESERVING.

    The boundary (ratio within 1e-12 of 1) counts as PRESERVING.  For n > 1
    the degraded inputs are alpha^2 > 1/(sqrt(n)+1); for 0 < n < 1 they are
    alpha^2 < 1/(sqrt(n)+1).
    """
    alpha_sq = float(alpha_sq)
    if not 0.0 < alpha_sq < 1.0:
        raise InvalidInput(f"alpha^2 must lie in (0, 1), got {alpha_sq}")
    ratio = efficiency_ratio(alpha_sq, n)
    return Region.DEGRADED if ratio < 1.0 - 1e-12 else Region.PRESERVING


def quartic(n: float) -> float:
    """Channel-rating quartic n^4 + 4n^3 + 6n^2 - 60n + 1."""
    n = float(n)
    return n**4 + 4.0 * n**3 + 6.0 * n**2 - 60.0 * n + 1.0


def _bisect(lo: float, hi: float, xtol: float = 1e-12) -> float:
    f_lo = quartic(lo)
    f_hi = quartic(hi)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if (f_lo < 0.0) == (f_hi < 0.0):
        raise NumericalFailure(f"no sign change on bracket ({lo}, {hi})")
    while hi - lo > xtol:
        mid = 0.5 * (lo + hi)
        f_mid = quartic(mid)
        if f_mid == 0.0:
            return mid
        if (f_mid < 0.0) == (f_lo < 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def quartic_roots() -> QuarticReport:
    """Both positive roots of the quartic, by bracketing bisection.

    The brackets (0, 0.1) and (2, 3) are fixed by sign evaluations
    (quartic(0) = 1 > 0, quartic(0.1) < 0, quartic(2) < 0, quartic(3) = 64);
    the sign pattern on (0, inf) is therefore (+, -, +).
    """
    r1 = _bisect(0.0, 0.1)
    r2 = _bisect(2.0, 3.0)
    regions = (
        SignRegion(0.0, r1, +1),
        SignRegion(r1, r2, -1),
        SignRegion(r2, None, +1),
    )
    return QuarticReport(QUARTIC_COEFFICIENTS, (r1, r2), regions)


def _formula_for_branch(
    mode: str, bell: BellOutcome, bob: BobOutcome, alpha: float, p: float, n: float
) -> float:
    if bob is BobOutcome.ONE:
        return 0.0
    if mode == "pure":
        if bell in (BellOutcome.PHI_PLUS, BellOutcome.PHI_MINUS):
            return predicted_concurrence_phi(alpha, n)
        return predicted_concurrence_psi(alpha, n)
    return predicted_concurrence_werner(p, n)


def sweep(
    mode: str,
    n_values: Sequence[float] | None = None,
    alpha_sq_values: Sequence[float] | None = None,
    p_values: Sequence[float] | None = None,
) -> list[VerificationRow]:
    """Pair the enumeration oracle with the closed forms over a parameter grid.

    One row per grid point and branch, ordered lexicographically in the grid
    coordinates (n outermost) and then in the fixed branch order.  Verdict is
    MATCH when |oracle - formula| <= 1e-8.
    """
    mode = str(mode).lower()
    if mode not in ("pure", "werner"):
        raise InvalidInput(f"mode must be 'pure' or 'werner', got {mode!r}")
    n_grid = tuple(float(v) for v in (DEFAULT_N_GRID if n_values is None else n_values))
    if not n_grid:
        raise InvalidInput("empty n grid")

    if mode == "pure":
        if p_values is not None:
            raise InvalidInput("p grid does not apply to a pure sweep")
        second = tuple(
            float(v) for v in (DEFAULT_ALPHA_SQ_GRID if alpha_sq_values is None else alpha_sq_values)
        )
    else:
        if alpha_sq_values is not None:
            raise InvalidInput("alpha^2 grid does not apply to a werner sweep")
        second = tuple(float(v) for v in (DEFAULT_P_GRID if p_values is None else p_values))
    if not second:
        raise InvalidInput("empty parameter grid")

    rows: list[VerificationRow] = []
    for n in n_grid:
        for value in second:
            if mode == "pure":
                alpha = sqrt(_check_alpha_sq(value))
                result = run_protocol_pure(alpha, n)
                alpha_sq, p = value, None
            else:
                alpha = 0.0
                result = run_protocol_mixed(value, n)
                alpha_sq, p = None, value
            for branch in result.branches:
                formula = _formula_for_branch(
                    mode, branch.bell, branch.bob, alpha, value if mode == "werner" else 0.0, n
                )
                diff = abs(branch.concurrence - formula)
                rows.append(
                    VerificationRow(
                        mode=mode,
                        n=n,
                        alpha_sq=alpha_sq,
                        p=p,
                        bell=branch.bell,
                        bob=branch.bob,
                        probability=branch.probability,
                        oracle_concurrence=branch.concurrence,
                        formula_concurrence=formula,
                        abs_diff=diff,
                        verdict="MATCH" if diff <= MATCH_TOL else "DISCREPANT",
                    )
                )
    return rows
