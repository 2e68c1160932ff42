#!/usr/bin/env python3
"""Spacetime picture of a localized walk: light cones, entanglement,
velocity trembling.

A spin-up particle released on a single site splits into left- and
right-moving fronts.  Massless, the spin never mixes: no entanglement, a
constant velocity of -1.  Massive, the coin couples the branches: spin and
position entangle, and the velocity expectation oscillates rapidly around
its drift (the trembling interference of positive- and negative-energy
components).  Writes CSV matrices (and PNG heatmaps when matplotlib is
available) under demos/out/.
"""

import os

import numpy as np

from diracwalk import InitialCondition, WalkParams, display_order, observable_series

OUT = os.path.join(os.path.dirname(__file__), "out")
os.makedirs(OUT, exist_ok=True)

N, STEPS = 64, 64
MASS = np.pi / 4

for dt in (1.0, 0.5):
    for mass, tag in ((0.0, "massless"), (MASS, "massive")):
        params = WalkParams(N, dt, mass, steps=STEPS)
        series = observable_series(
            InitialCondition((1, 0), site=0), params, keep_positions=True
        )
        order = display_order(N)
        matrix = series.positions[:, order]

        label = f"{tag}_dt{dt:g}".replace(".", "p")
        path = os.path.join(OUT, f"spacetime_{label}.csv")
        np.savetxt(path, matrix, delimiter=",")

        peak_s = series.entropy_bits.max()
        swing = series.velocities.max() - series.velocities.min()
        print(
            f"dt={dt:<4g} {tag:9s}  peak entropy {peak_s:7.4f} bits, "
            f"velocity swing {swing:7.4f}, final norm {series.norms[-1]:.12f}"
        )
        print(f"    wrote {path}")

        try:
            import matplotlib

            matplotlib.use("Agg")
            import matplotlib.pyplot as plt

            fig, (ax0, ax1) = plt.subplots(2, 1, figsize=(7, 7), height_ratios=[3, 1])
            ax0.imshow(
                matrix,
                aspect="auto",
                origin="lower",
                extent=(-N / 2 + 1, N / 2, 0, STEPS * dt),
                cmap="magma",
            )
            ax0.set_xlabel("x")
            ax0.set_ylabel("t")
            ax0.set_title(f"{tag}, dt = {dt:g}")
            ax1.plot(series.times, series.velocities, label="velocity")
            ax1.plot(series.times, series.entropy_bits, label="entropy (bits)")
            ax1.set_xlabel("t")
            ax1.legend(loc="upper right")
            fig.tight_layout()
            png = os.path.join(OUT, f"spacetime_{label}.png")
            fig.savefig(png, dpi=120)
            plt.close(fig)
            print(f"    wrote {png}")
        except ImportError:
            pass
