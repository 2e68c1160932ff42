"""Closed-form hop amplitudes of the fractional cyclic translation.

The amplitude to hop q sites in one application of the translation with
time interval dt on N sites is the geometric sum

    A_q = (1/N) * sum_{j=0}^{N-1} exp(2*pi*i*j*(dt -+ q)/N)
        = (1/N) * (1 - exp(2*pi*i*(dt -+ q))) / (1 - exp(2*pi*i*(dt -+ q)/N))

with sign '+' using dt - q and sign '-' using dt + q; positive q is the
right-hand neighbor.  When dt -+ q is a multiple of N every summand is 1
and the removable singularity evaluates to 1.  For integer dt the profile
collapses to a single unit hop; for fractional dt it spreads over many
neighbors, with the infinite-lattice probability
(1 - cos(2*pi*a)) / (2*pi^2*a^2), a = dt -+ q.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .state import require_power_of_two

__all__ = [
    "transition_amplitude",
    "transition_amplitude_bruteforce",
    "infinite_limit_prob",
    "AmplitudeProfile",
    "emit_profile",
]

_LIMIT_EPS = 1e-12  # treat |dt -+ q mod N| below this as the removable point


def _offset_argument(q: int, dt: float, sign: str) -> float:
    if sign == "+":
        return dt - q
    if sign == "-":
        return dt + q
    raise ValueError(f"sign must be '+' or '-', got {sign!r}")


def transition_amplitude(q: int, dt: float, n_sites: int, sign: str = "+") -> complex:
    """Closed-form hop amplitude to the q-th neighbor; periodic in q mod N."""
    require_power_of_two(n_sites)
    a = _offset_argument(q, dt, sign)
    residue = a - n_sites * round(a / n_sites)
    if abs(residue) < _LIMIT_EPS:
        return 1.0 + 0.0j
    return complex(
        (1 - np.exp(2j * np.pi * a)) / (1 - np.exp(2j * np.pi * a / n_sites)) / n_sites
    )


def transition_amplitude_bruteforce(
    q: int, dt: float, n_sites: int, sign: str = "+"
) -> complex:
    """Literal summation oracle for :func:`transition_amplitude`."""
    require_power_of_two(n_sites)
    a = _offset_argument(q, dt, sign)
    j = np.arange(n_sites)
    return complex(np.sum(np.exp(2j * np.pi * j * a / n_sites)) / n_sites)


def infinite_limit_prob(q: int, dt: float, sign: str = "+") -> float:
    """Hop probability |A_q|^2 in the infinite-lattice limit; 1 at dt -+ q = 0."""
    a = _offset_argument(q, dt, sign)
    if abs(a) < _LIMIT_EPS:
        return 1.0
    return float((1 - np.cos(2 * np.pi * a)) / (2 * np.pi**2 * a**2))


@dataclass(frozen=True)
class AmplitudeProfile:
    """Hop amplitudes of one translation over a range of signed offsets."""

    dt: float
    n_sites: int
    sign: str
    offsets: np.ndarray
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        offsets = np.array(self.offsets, dtype=int)
        amplitudes = np.array(self.amplitudes, dtype=complex)
        offsets.flags.writeable = False
        amplitudes.flags.writeable = False
        object.__setattr__(self, "offsets", offsets)
        object.__setattr__(self, "amplitudes", amplitudes)

    @property
    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2


def emit_profile(
    dts: Sequence[float],
    n_sites: int,
    q_min: int | None = None,
    q_max: int | None = None,
    sign: str = "+",
) -> list[AmplitudeProfile]:
    """Tabulate hop amplitudes for each dt over a signed offset range.

    The default range is one full period (-N/2, N/2], over which the
    probabilities of each row sum to 1 by unitarity.
    """
    require_power_of_two(n_sites)
    if q_min is None:
        q_min = -(n_sites // 2) + 1
    if q_max is None:
        q_max = n_sites // 2
    if q_min > q_max:
        raise ValueError(f"empty offset range [{q_min}, {q_max}]")
    offsets = np.arange(q_min, q_max + 1)
    profiles = []
    for dt in dts:
        amps = np.array(
            [transition_amplitude(int(q), dt, n_sites, sign) for q in offsets]
        )
        profiles.append(AmplitudeProfile(float(dt), n_sites, sign, offsets, amps))
    return profiles
