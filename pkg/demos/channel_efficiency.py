#!/usr/bin/env python3
"""Map out how well each |W_n> channel preserves entanglement.

The Phi-branch output concurrence factors into the input concurrence times
the ratio sqrt(n) / ((n-1) alpha^2 + 1).  A channel is PRESERVING for a
given input when that ratio is at least 1 and DEGRADED otherwise.  n = 1 is
special: it preserves every input.  Every other n preserves exactly one
input weight, alpha^2 = 1/(sqrt(n)+1).
"""
import numpy as np

from wteleport import (
    Region,
    classify_region,
    efficiency_ratio,
    predicted_concurrence_phi,
    state_independent_alpha_sq,
)

print("state-independent input weight per channel")
print(f"{'n':>6} {'alpha^2':>10} {'works for':>12}")
for n in (0.1, 0.25, 0.5, 1.0, 2.0, 4.0, 9.0):
    point = state_independent_alpha_sq(n)
    scope = "any input" if point.any_alpha else "one input"
    print(f"{n:>6.2f} {point.alpha_sq:>10.4f} {scope:>12}")
print()

# Classification landscape: P = preserving, d = degraded.  For n > 1 the
# degraded inputs sit above the special weight; for n < 1, below it.
alpha_sq_grid = np.linspace(0.05, 0.95, 19)
print("classification over the input weight (columns: alpha^2)")
print(" " * 7 + " ".join(f"{s:+.2f}"[1:] for s in alpha_sq_grid))
for n in (0.1, 0.25, 0.5, 1.0, 2.0, 4.0, 10.0):
    marks = [
        "P" if classify_region(s, n) is Region.PRESERVING else "d"
        for s in alpha_sq_grid
    ]
    print(f"n={n:<5.2g}  " + "    ".join(marks))
print()

# The output concurrence is unimodal in alpha^2 and its peak value is 1 for
# every n, reached at alpha^2 = 1/(n+1).
print("peak of the output concurrence")
for n in (0.25, 1.0, 4.0):
    peak_weight = 1.0 / (n + 1.0)
    peak = predicted_concurrence_phi(np.sqrt(peak_weight), n)
    print(f"  n={n:<5.3g} alpha^2={peak_weight:.4f} concurrence={peak:.12f}")
print()

# Sample efficiency ratios: >= 1 means preserved.
print("efficiency ratio sqrt(n)/((n-1) alpha^2 + 1)")
for n, s in ((0.25, 0.1), (0.25, 0.9), (4.0, 0.1), (4.0, 0.9)):
    print(f"  n={n:<5.3g} alpha^2={s:.2f}: {efficiency_ratio(s, n):.4f}")
