"""Closed-form kernels of the free theory.

Branch convention: sqrt(z) is taken with nonnegative imaginary part for
Im z >= 0, so the outgoing resolvent boundary value at energy lam >= 0 is
exp(i*sqrt(lam)*r)/(4*pi*r) and the incoming one is its conjugate.  For
lam < 0 both boundary values coincide with the real decaying kernel.

Propagator convention: psi(t) = exp(-i t (-Laplace)) psi0, i.e. the kernel
(4*pi*i*t)^(-3/2) exp(i r^2 / (4 t)) with modulus (4*pi*|t|)^(-3/2).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "KernelPoint",
    "free_resolvent_kernel",
    "spectral_density_kernel",
    "free_propagator_kernel",
    "green_function",
]


@dataclass(frozen=True)
class KernelPoint:
    """Evaluation point for resolvent boundary values."""

    lam: float
    r: float
    branch: str = "plus"  # plus | minus

    def __post_init__(self):
        if self.branch not in ("plus", "minus"):
            raise ValueError("branch must be 'plus' or 'minus'")


def free_resolvent_kernel(p: KernelPoint) -> complex:
    """Boundary value of the free resolvent kernel at (lam, r=|x-y|)."""
    if not p.r > 0:
        raise ValueError("resolvent kernel is singular on the diagonal (r=0)")
    if p.lam >= 0:
        phase = np.exp(1j * np.sqrt(p.lam) * p.r)
        if p.branch == "minus":
            phase = np.conj(phase)
        return complex(phase / (4.0 * np.pi * p.r))
    # negative energy: real, branch independent
    return complex(np.exp(-np.sqrt(-p.lam) * p.r) / (4.0 * np.pi * p.r))


def spectral_density_kernel(lam, r):
    """Density of the free spectral measure, sin(sqrt(lam) r)/(4 pi r).

    Vanishes for lam <= 0 and equals Im of the outgoing resolvent kernel
    on the positive axis.  Vectorized in both arguments.
    """
    lam = np.asarray(lam, dtype=float)
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0):
        raise ValueError("spectral density kernel needs r > 0")
    pos = lam > 0
    out = np.zeros(np.broadcast(lam, r).shape)
    rt = np.sqrt(np.where(pos, lam, 0.0))
    with np.errstate(invalid="ignore"):
        vals = np.sin(rt * r) / (4.0 * np.pi * r)
    out = np.where(pos, vals, 0.0)
    return out if out.ndim else float(out)


def free_propagator_kernel(t: float, r) -> complex:
    """Kernel of exp(-i t (-Laplace)) at distance r, t != 0."""
    if t == 0:
        raise ValueError("free propagator kernel is distributional at t = 0")
    r = np.asarray(r, dtype=float)
    amp = (4j * np.pi * t) ** (-1.5)  # principal branch
    out = amp * np.exp(1j * r * r / (4.0 * t))
    return out if out.ndim else complex(out)


def green_function(r: float, n: int = 3) -> float:
    """Zero-energy Green function |x-y|^(-(n-2)), normalized constant-free."""
    if not r > 0:
        raise ValueError("green function is singular at r = 0")
    if n < 3:
        raise ValueError("green function defined for dimension n >= 3")
    return float(r ** (-(n - 2)))
