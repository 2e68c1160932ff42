#!/usr/bin/env python3
"""Hop-amplitude profiles of the fractional translation operator.

At integer time intervals the walk translation is a strict cyclic shift:
the particle hops exactly dt sites.  At fractional dt the same operator
spreads over many neighbors with a closed-form amplitude, so the
interaction range is set by the time discretization itself.  This script
tabulates the hop probabilities for several intervals and compares the
finite lattice against the infinite-lattice limit.
"""

import numpy as np

from diracwalk import emit_profile, infinite_limit_prob

N = 64
INTERVALS = [1.0, 0.75, 0.5, 0.25]

profiles = emit_profile(INTERVALS, N)

print(f"hop probabilities |A_q|^2 on {N} sites (rows sum to 1)\n")
header = "    q " + "".join(f"  dt={dt:<5g}" for dt in INTERVALS)
print(header)
for q in range(-6, 7):
    row = f"{q:5d} "
    for profile in profiles:
        idx = int(np.where(profile.offsets == q)[0][0])
        row += f"  {profile.probabilities[idx]:8.5f}"
    print(row)

print("\ntail mass beyond |q| > 6 (wider interaction range for fractional dt):")
for profile in profiles:
    tail = profile.probabilities[np.abs(profile.offsets) > 6].sum()
    print(f"  dt={profile.dt:<5g}  {tail:.6f}")

print(f"\nfinite N={N} vs infinite lattice at dt = 1/2:")
(half,) = emit_profile([0.5], N)
print("    q   finite      infinite    |gap|")
for q in range(-4, 5):
    idx = int(np.where(half.offsets == q)[0][0])
    finite = half.probabilities[idx]
    infinite = infinite_limit_prob(q, 0.5)
    print(f"{q:5d}   {finite:.6f}    {infinite:.6f}    {abs(finite - infinite):.2e}")

print("\nstay probability at dt = 1/2 tends to 4/pi^2 =", 4 / np.pi**2)
