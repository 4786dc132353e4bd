"""Oscillatory integrals over the two degenerate phase families.

Family one lives on the half line with phase lambda^2/2 +- sum_j b_j *
sqrt(lambda^2 + sigma_j); family two arises from the substitution
u = sqrt(rho - lambda^2) near singular endpoints and has phase
u^2/2 +- sum_j b_j * sqrt(tau_j - u^2).  Both admit at most one interior
stationary point, possibly degenerate to third order, and the quadrature
engine sizes its panels off the first four phase derivatives so the
stationary window is always resolved.
"""

from displab.oscillatory.phases import (
    PhaseLambda,
    PhaseU,
    critical_point_lambda,
    critical_point_u,
    phase_lambda_derivatives,
    phase_u_derivatives,
)
from displab.oscillatory.weights import DampedWeight, bump_c2, bump_smooth, chi_cutoff
from displab.oscillatory.quadrature import (
    OscQuadConfig,
    OscResult,
    osc_integral_lambda,
    osc_integral_statphase,
    osc_integral_u,
    paper_bound_osc1,
    paper_bound_u,
)

__all__ = [
    "PhaseLambda",
    "PhaseU",
    "DampedWeight",
    "OscResult",
    "OscQuadConfig",
    "critical_point_lambda",
    "critical_point_u",
    "phase_lambda_derivatives",
    "phase_u_derivatives",
    "osc_integral_lambda",
    "osc_integral_u",
    "osc_integral_statphase",
    "paper_bound_osc1",
    "paper_bound_u",
    "bump_c2",
    "bump_smooth",
    "chi_cutoff",
]
