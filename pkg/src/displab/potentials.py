"""Separable potentials V(t,x) = phi(t) * V0(x).

The time profile phi is a finite sum of Fourier atoms
``phi(t) = sum_nu c_nu exp(2*pi*i*f_nu*t)`` and is required to be
real-valued, which means the atoms come in conjugate pairs (f, c),
(-f, conj(c)).  The spatial part V0 is radial and drawn from a small
family of profiles that covers everything the norm and kernel machinery
needs: piecewise-constant radial steps, Gaussians, inverse powers
(1+|x|^2)^(-1-eps), and ball indicators.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

__all__ = [
    "SpatialPotential",
    "TimeProfile",
    "SeparablePotential",
    "eval_potential",
    "fourier_mass",
]

_KINDS = ("radial-piecewise", "gaussian", "inverse-power", "ball")


@dataclass(frozen=True)
class SpatialPotential:
    """Radial spatial profile V0(|x|).

    Radial piecewise profiles evaluate left-continuously at their
    breakpoints (value of the piece ending there); sets of measure zero
    are irrelevant to every norm and integral computed from these.
    """

    kind: str
    amplitude: float = 1.0
    width: float = 1.0          # gaussian
    radius: float = 1.0         # ball
    epsilon: float = 1.0        # inverse-power
    breakpoints: tuple = ()     # radial-piecewise, increasing radii
    values: tuple = ()          # radial-piecewise, one value per piece

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown spatial profile kind {self.kind!r}")
        if self.kind == "inverse-power" and not self.epsilon > 0:
            raise ValueError("inverse-power profile requires epsilon > 0")
        if self.kind == "ball" and not self.radius > 0:
            raise ValueError("ball profile requires radius > 0")
        if self.kind == "gaussian" and not self.width > 0:
            raise ValueError("gaussian profile requires width > 0")
        if self.kind == "radial-piecewise":
            bp = tuple(float(b) for b in self.breakpoints)
            if len(bp) == 0 or len(bp) != len(self.values):
                raise ValueError("radial-piecewise needs one value per breakpoint")
            if any(b <= 0 for b in bp) or any(np.diff(bp) <= 0):
                raise ValueError("breakpoints must be positive and increasing")
            object.__setattr__(self, "breakpoints", bp)
            object.__setattr__(self, "values", tuple(float(v) for v in self.values))

    # -- construction helpers ------------------------------------------------

    @staticmethod
    def gaussian(amplitude: float = 1.0, width: float = 1.0) -> "SpatialPotential":
        return SpatialPotential("gaussian", amplitude=amplitude, width=width)

    @staticmethod
    def ball(amplitude: float = 1.0, radius: float = 1.0) -> "SpatialPotential":
        return SpatialPotential("ball", amplitude=amplitude, radius=radius)

    @staticmethod
    def inverse_power(amplitude: float = 1.0, epsilon: float = 1.0) -> "SpatialPotential":
        return SpatialPotential("inverse-power", amplitude=amplitude, epsilon=epsilon)

    @staticmethod
    def piecewise(breakpoints: Sequence[float], values: Sequence[float]) -> "SpatialPotential":
        return SpatialPotential(
            "radial-piecewise", breakpoints=tuple(breakpoints), values=tuple(values)
        )

    # -- evaluation ----------------------------------------------------------

    def radial(self, r):
        """V0 at radius r (vectorized, left-continuous at breakpoints)."""
        r = np.asarray(r, dtype=float)
        a = self.amplitude
        if self.kind == "gaussian":
            return a * np.exp(-((r / self.width) ** 2))
        if self.kind == "inverse-power":
            return a * (1.0 + r * r) ** (-1.0 - self.epsilon)
        if self.kind == "ball":
            return np.where(r <= self.radius, a, 0.0)
        bp = np.asarray(self.breakpoints)
        vals = np.asarray(self.values)
        # piece i covers (bp[i-1], bp[i]]; searchsorted with side="left"
        # maps r = bp[i] to piece i, i.e. left-continuity.
        idx = np.searchsorted(bp, r, side="left")
        out = np.where(idx < len(vals), vals[np.minimum(idx, len(vals) - 1)], 0.0)
        return np.where(r > bp[-1], 0.0, out)

    def __call__(self, x):
        """V0 at a point (or array of points with last axis = 3)."""
        x = np.asarray(x, dtype=float)
        return self.radial(np.sqrt(np.sum(x * x, axis=-1)))

    # -- structural data used by the norm machinery ---------------------------

    @property
    def length_scale(self) -> float:
        """Natural radial scale; quadrature grids are built relative to it."""
        if self.kind == "gaussian":
            return self.width
        if self.kind == "ball":
            return self.radius
        if self.kind == "radial-piecewise":
            return self.breakpoints[-1]
        return 1.0

    @property
    def support_radius(self) -> float:
        """Radius of the support, inf for profiles with unbounded support."""
        if self.kind == "ball":
            return self.radius
        if self.kind == "radial-piecewise":
            return self.breakpoints[-1]
        return np.inf

    @property
    def abs_nonincreasing(self) -> bool:
        """True when |V0| is radially non-increasing (Kato sup is then at 0)."""
        if self.kind in ("gaussian", "inverse-power", "ball"):
            return True
        mags = np.abs(np.asarray(self.values))
        return bool(np.all(np.diff(mags) <= 0))

    def scaled(self, scale: float) -> "SpatialPotential":
        """The rescaled profile scale^2 * V0(scale * x) (Rollnik/Kato invariant)."""
        R = float(scale)
        if self.kind == "gaussian":
            return SpatialPotential.gaussian(R * R * self.amplitude, self.width / R)
        if self.kind == "ball":
            return SpatialPotential.ball(R * R * self.amplitude, self.radius / R)
        if self.kind == "radial-piecewise":
            return SpatialPotential.piecewise(
                tuple(b / R for b in self.breakpoints),
                tuple(R * R * v for v in self.values),
            )
        raise ValueError(f"no exact rescaling for kind {self.kind!r}")

    def with_amplitude(self, amplitude: float) -> "SpatialPotential":
        kw = {k: getattr(self, k) for k in
              ("width", "radius", "epsilon", "breakpoints", "values")}
        return SpatialPotential(self.kind, amplitude=amplitude, **kw)


@dataclass(frozen=True)
class TimeProfile:
    """Finite atomic time spectrum: phi(t) = sum c_nu exp(2*pi*i*f_nu*t).

    Atoms are (frequency, complex coefficient) pairs.  Frequencies are in
    cycles per unit time, so the angular frequency entering kernel
    computations is 2*pi*f.  Realness of phi is enforced at construction.
    """

    atoms: tuple = field(default=((0.0, 1.0 + 0.0j),))
    require_real: bool = True

    def __post_init__(self):
        merged: dict[float, complex] = {}
        for f, c in self.atoms:
            f = float(f)
            merged[f] = merged.get(f, 0.0 + 0.0j) + complex(c)
        atoms = tuple(sorted(merged.items()))
        if not atoms:
            raise ValueError("time profile needs at least one atom")
        object.__setattr__(self, "atoms", atoms)
        if self.require_real and not self._is_real():
            raise ValueError("coefficients must come in conjugate-frequency pairs "
                             "for a real-valued time profile")

    def _is_real(self) -> bool:
        table = dict(self.atoms)
        scale = max(abs(c) for _, c in self.atoms)
        for f, c in self.atoms:
            if abs(table.get(-f, 0.0 + 0.0j) - np.conj(c)) > 1e-12 * scale:
                return False
        return True

    @staticmethod
    def constant(value: float = 1.0) -> "TimeProfile":
        return TimeProfile(((0.0, complex(value)),))

    @staticmethod
    def cosine(angular_frequency: float = 1.0, amplitude: float = 1.0) -> "TimeProfile":
        """amplitude * cos(angular_frequency * t)."""
        f = angular_frequency / (2.0 * np.pi)
        c = 0.5 * amplitude
        return TimeProfile(((f, complex(c)), (-f, complex(c))))

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        out = sum(c * np.exp(2j * np.pi * f * t) for f, c in self.atoms)
        return np.real(out) if self.require_real else out

    @property
    def fourier_mass(self) -> float:
        """Total-variation mass of the time Fourier transform, sum |c_nu|."""
        return float(sum(abs(c) for _, c in self.atoms))

    @property
    def angular_frequencies(self) -> np.ndarray:
        return np.array([2.0 * np.pi * f for f, _ in self.atoms])

    @property
    def coefficients(self) -> np.ndarray:
        return np.array([c for _, c in self.atoms])


@dataclass(frozen=True)
class SeparablePotential:
    """V(t,x) = phi(t) * V0(x); immutable, safe for concurrent reads."""

    time: TimeProfile
    space: SpatialPotential

    @staticmethod
    def time_independent(space: SpatialPotential) -> "SeparablePotential":
        return SeparablePotential(TimeProfile.constant(), space)

    def __call__(self, t, x):
        return np.real(self.time(t)) * self.space(x)

    def radial(self, t, r):
        return np.real(self.time(t)) * self.space.radial(r)

    @property
    def fourier_mass(self) -> float:
        return self.time.fourier_mass


def eval_potential(V: SeparablePotential, t: float, x) -> float:
    """V(t,x) = phi(t) * V0(x) at a single space-time point."""
    return float(V(t, x))


def fourier_mass(V: SeparablePotential) -> float:
    """Total-variation mass sum |c_nu| of the time Fourier transform."""
    return V.fourier_mass
