"""Numerical laboratory for dispersive decay of 3D Schrodinger evolutions.

Built from five pieces that can be exercised independently or through the
``displab`` command line tool:

* ``potentials`` -- separable potentials V(t,x) = phi(t) V0(x) with atomic
  time spectra and radial spatial profiles,
* ``norms`` -- the scaling-invariant Rollnik / global-Kato / L^{3/2} norms
  and the composite smallness gate,
* ``kernels`` -- closed-form free resolvent, spectral density, propagator
  and Green function kernels,
* ``oscillatory`` -- quadrature for the two degenerate oscillatory phase
  families together with their certified upper bounds,
* ``born`` -- iterated Kato integrals, the sine telescope and
  partial-fraction identities, and low-order Born/Duhamel kernels,
* ``propagator`` -- periodic-box split-step solver, Duhamel iteration and
  decay/Strichartz measurements.

Sign convention used everywhere: i d/dt psi = -Laplace psi + V psi, so the
free flow acts as multiplication by exp(-i |xi|^2 t) on Fourier modes.
"""

from displab.potentials import SeparablePotential, SpatialPotential, TimeProfile

__all__ = ["SpatialPotential", "TimeProfile", "SeparablePotential"]

__version__ = "0.1.0"
