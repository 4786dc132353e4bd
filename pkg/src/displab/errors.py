"""Exception types shared across the package."""


class DisplabError(Exception):
    """Base class for all package-specific failures."""


class DivergentIntegralError(DisplabError):
    """A norm or kernel integral is divergent for the given potential."""


class QuadratureError(DisplabError):
    """Adaptive quadrature failed to reach the requested tolerance."""


class DegenerateInputError(DisplabError):
    """Inputs too close to a degenerate configuration (conditioning guard)."""


class StabilityError(DisplabError):
    """A solver stability or accuracy guard was violated."""


class ConfigError(DisplabError):
    """Malformed experiment configuration."""
