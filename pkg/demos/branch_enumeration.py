#!/usr/bin/env python3
"""Walk through one run of the protocol, branch by branch.

Alice holds an entangled pair alpha|00> + beta|11> on qubits (1, 2) plus
qubit 3 of the shared channel |W_n>; Bob holds channel qubits 4 and 5.
Alice measures (2, 3) in the Bell basis, Bob measures 5 in the computational
basis, and whatever entanglement survives now lives on the pair (1, 4).

Instead of sampling outcomes, the library enumerates all eight branches with
exact probabilities, so we can inspect every possible ending of the story.
"""
import numpy as np

from wteleport import (
    BellOutcome,
    BobOutcome,
    compose_joint,
    concurrence_pure,
    input_concurrence,
    input_pair,
    run_protocol_pure,
    w_state,
)

ALPHA_SQ = 1.0 / 3.0
N = 4.0

alpha = np.sqrt(ALPHA_SQ)
pair = input_pair(alpha)
channel = w_state(N)

print(f"input pair:   alpha^2 = {ALPHA_SQ:.4f}, concurrence = {concurrence_pure(pair):.6f}")
print(f"channel:      |W_n> with n = {N}")
print(f"joint state:  {compose_joint(pair, channel).num_qubits} qubits, "
      f"norm {compose_joint(pair, channel).norm():.6f}")
print()

# Enumerate the eight (Alice, Bob) outcome pairs.
result = run_protocol_pure(alpha, N)
print(f"{'Alice':<9} {'Bob':<5} {'probability':>12} {'concurrence':>12}")
for branch in result.branches:
    print(
        f"{branch.bell.value:<9} {branch.bob.value:<5} "
        f"{branch.probability:>12.6f} {branch.concurrence:>12.6f}"
    )
print(f"{'total':<15} {result.total_probability:>12.6f}")
print()

# Whenever Bob sees |1> the surviving pair is a product state: those four
# branches are useless for entanglement sharing, whatever Alice saw.
dead = [b for b in result.branches if b.bob is BobOutcome.ONE]
print(f"max concurrence across the Bob=1 branches: "
      f"{max(b.concurrence for b in dead):.2e}")

# At n = 4 the special input alpha^2 = 1/3 passes through the Phi branches
# with its concurrence intact.
phi = result.branch(BellOutcome.PHI_PLUS, BobOutcome.ZERO)
print(f"Phi+/0 branch concurrence {phi.concurrence:.6f} "
      f"vs input {input_concurrence(alpha):.6f}")
