"""pcurv: exact p-curvature and algebraicity criteria for linear differential operators."""

__version__ = "0.4.0"
