"""betaquad: a machine-checked catalog of beta-function definite integrals.

The package bundles a small special-function library (Gamma, log-Gamma,
Beta, digamma), double-exponential quadrature engines including Cauchy
principal values, a catalog of integral identities with validity domains
and closed forms, and a harness that verifies every identity numerically
at randomly sampled parameters.
"""

from . import catalog, quad, specfun, verify

__version__ = "0.1.0"

__all__ = ["catalog", "quad", "specfun", "verify", "__version__"]
