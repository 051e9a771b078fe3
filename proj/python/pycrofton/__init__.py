"""Crofton formulae for tensorial curvature measures of polytopes."""

from ._core import (
    DegenerateError,
    ExactScalar,
    IdentityCheck,
    Polytope,
    PreconditionError,
    Tensor,
    coefficients,
    coefficients_csv,
    formulas,
    gamma,
    generalized_sine,
    identities,
    kappa_ball,
    lemma61,
    lemma62,
    lemma63,
    lemma64,
    omega,
    reciprocal_gamma,
    rising_factorial,
    verify,
)

__all__ = [
    "DegenerateError",
    "ExactScalar",
    "IdentityCheck",
    "Polytope",
    "PreconditionError",
    "Tensor",
    "coefficients",
    "coefficients_csv",
    "formulas",
    "gamma",
    "generalized_sine",
    "identities",
    "kappa_ball",
    "lemma61",
    "lemma62",
    "lemma63",
    "lemma64",
    "omega",
    "reciprocal_gamma",
    "rising_factorial",
    "verify",
]
