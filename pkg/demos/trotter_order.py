#!/usr/bin/env python3
"""Order of the symmetric splitting behind one walk step.

Restricted to one momentum mode, the step is the 2x2 product
diag(e^{ik dt}, 1) . coin(2 mu dt) . diag(1, e^{-ik dt}), a symmetric
splitting of the exact propagator exp(-i(-sigma_z k + mu sigma_x) dt).
The local error should shrink as dt^3; halving dt should divide it by 8.
When either term vanishes (mu = 0 or k = 0) the factors commute and the
splitting is exact.
"""

import numpy as np

from diracwalk import trotter_local_error

K, MU = 1.0, 1.0
dts = np.array([0.2, 0.1, 0.05, 0.025])
errors = np.array([trotter_local_error(K, MU, dt) for dt in dts])

print(f"local splitting error at k = {K}, mu = {MU}")
print("      dt        error     ratio to previous")
previous = None
for dt, err in zip(dts, errors):
    ratio = "" if previous is None else f"{previous / err:8.2f}"
    print(f"  {dt:8.3f}   {err:.3e}   {ratio}")
    previous = err

slope = np.polyfit(np.log(dts), np.log(errors), 1)[0]
print(f"\nfitted error exponent: {slope:.3f} (third order: halving dt -> /8)")
print(f"commuting limits: mu=0 error {trotter_local_error(1.3, 0.0, 0.7):.1e}, "
      f"k=0 error {trotter_local_error(0.0, 0.9, 0.7):.1e}")
