"""Spinor states on a periodic one-dimensional lattice.

A two-component spinor over N sites is stored as 2N complex amplitudes in
spin-major layout: index s*N + x holds psi_s(x).  Component s=0 is the
right-handed component ("R", the sigma_z eigenvector with eigenvalue +1)
and s=1 is the left-handed component ("L").  Site 0 is the displayed
origin x=0; negative display coordinates wrap to high internal indices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "SpinorField",
    "InitialCondition",
    "init_state",
    "display_coord",
    "display_order",
    "norm",
]


def require_power_of_two(n: int, what: str = "site count") -> None:
    if not isinstance(n, (int, np.integer)) or n < 2 or (n & (n - 1)) != 0:
        raise ValueError(f"{what} must be a power of two >= 2, got {n!r}")


@dataclass(frozen=True)
class SpinorField:
    """Immutable two-component spinor over ``n_sites`` lattice sites.

    The amplitude buffer is copied on construction and marked read-only;
    evolution produces new fields instead of mutating, so instances are
    safe to share freely.
    """

    n_sites: int
    amps: np.ndarray

    def __post_init__(self) -> None:
        require_power_of_two(self.n_sites)
        amps = np.array(self.amps, dtype=complex)
        if amps.shape != (2 * self.n_sites,):
            raise ValueError(
                f"expected {2 * self.n_sites} amplitudes, got shape {amps.shape}"
            )
        amps.flags.writeable = False
        object.__setattr__(self, "amps", amps)

    def component(self, s: int) -> np.ndarray:
        """Amplitudes psi_s(x) of one spin component (0 = R, 1 = L)."""
        if s not in (0, 1):
            raise ValueError("spin component must be 0 or 1")
        n = self.n_sites
        return self.amps[s * n : (s + 1) * n]

    def as_matrix(self) -> np.ndarray:
        """The amplitudes viewed as a (2, n_sites) array indexed [s, x]."""
        return self.amps.reshape(2, self.n_sites)

    @classmethod
    def from_matrix(cls, mat: np.ndarray) -> "SpinorField":
        mat = np.asarray(mat, dtype=complex)
        if mat.ndim != 2 or mat.shape[0] != 2:
            raise ValueError(f"expected a (2, N) array, got shape {mat.shape}")
        return cls(mat.shape[1], mat.reshape(-1))


@dataclass(frozen=True)
class InitialCondition:
    """A product state: spin pair tensored with a position profile.

    The position profile is either a single site index (a delta) or a
    Gaussian given as (center, sigma) in lattice units, wrapped
    periodically and renormalized.  The spin pair is normalized on
    construction; an all-zero pair is rejected.
    """

    spin: tuple[complex, complex]
    site: int | None = None
    gaussian: tuple[float, float] | None = None

    def __post_init__(self) -> None:
        c_r, c_l = complex(self.spin[0]), complex(self.spin[1])
        nrm = math.hypot(abs(c_r), abs(c_l))
        if nrm < 1e-12:
            raise ValueError("zero spin vector")
        object.__setattr__(self, "spin", (c_r / nrm, c_l / nrm))
        if (self.site is None) == (self.gaussian is None):
            raise ValueError("exactly one of site / gaussian must be given")
        if self.gaussian is not None:
            center, sigma = self.gaussian
            if not sigma > 0:
                raise ValueError(f"gaussian sigma must be positive, got {sigma}")
            object.__setattr__(self, "gaussian", (float(center), float(sigma)))


def init_state(ic: InitialCondition, n_sites: int) -> SpinorField:
    """Build the normalized product state spin (x) position on ``n_sites`` sites."""
    require_power_of_two(n_sites)
    if ic.site is not None:
        if not 0 <= ic.site < n_sites:
            raise ValueError(f"site index {ic.site} out of range [0, {n_sites})")
        profile = np.zeros(n_sites, dtype=complex)
        profile[ic.site] = 1.0
    else:
        center, sigma = ic.gaussian
        x = np.arange(n_sites, dtype=float)
        # minimal-image distance to the center on the periodic lattice
        d = (x - center + n_sites / 2) % n_sites - n_sites / 2
        profile = np.exp(-(d**2) / (4.0 * sigma**2)).astype(complex)
        profile /= np.linalg.norm(profile)
    amps = np.concatenate([ic.spin[0] * profile, ic.spin[1] * profile])
    return SpinorField(n_sites, amps)


def display_coord(x: int, n_sites: int) -> int:
    """Signed display coordinate of internal site ``x``, in (-N/2, N/2]."""
    if not 0 <= x < n_sites:
        raise ValueError(f"site index {x} out of range [0, {n_sites})")
    return x if x <= n_sites // 2 else x - n_sites


def display_order(n_sites: int) -> list[int]:
    """Internal site indices sorted by ascending display coordinate."""
    half = n_sites // 2
    return list(range(half + 1, n_sites)) + list(range(half + 1))


def norm(field: SpinorField) -> float:
    """Euclidean 2-norm of the amplitude sequence."""
    return float(np.linalg.norm(field.amps))
