#!/usr/bin/env python3
"""Locate where the quartic channel-rating inequality holds.

Requiring the closed-form Werner branch concurrence not to exceed the input
concurrence reduces to n^4 + 4n^3 + 6n^2 - 60n + 1 >= 0.  The quartic has
exactly two positive roots; the inequality fails strictly between them
(n = 1 included, quartic(1) = -48) and holds outside.

Since the closed form it derives from is itself discrepant against the
branch-map oracle, the library reports the quartic exactly as stated and the
oracle-side ratio separately, without declaring either one "the" efficiency
condition.
"""
import numpy as np

from wteleport import quartic, quartic_roots

report = quartic_roots()
r1, r2 = report.roots_positive

print("quartic(n) = n^4 + 4n^3 + 6n^2 - 60n + 1")
print(f"  positive roots: {r1:.12g} and {r2:.12g}")
print(f"  residuals:      {quartic(r1):.3e} and {quartic(r2):.3e}")
print()

print("sign regions on (0, inf)")
for region in report.sign_regions:
    upper = "inf" if region.upper is None else f"{region.upper:.6g}"
    verdict = "inequality holds" if region.sign > 0 else "inequality fails"
    print(f"  ({region.lower:.6g}, {upper}): {verdict}")
print()

# Spot-evaluate on a log-spaced grid to see the (+, -, +) pattern directly.
print(f"{'n':>10} {'quartic(n)':>14} sign")
for n in np.geomspace(0.005, 20.0, 12):
    value = quartic(n)
    print(f"{n:>10.4g} {value:>14.4g} {'+' if value >= 0 else '-'}")
