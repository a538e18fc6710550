"""g-rational orthonormal functions on the half line ``[1/4, inf)``."""

from .basisops import (
    InterpolationProblem,
    TransitionMatrix,
    gram_schmidt_verify,
    interpolate,
    pascal_identity_check,
    power_to_g,
    transition_matrices,
)
from .exactseq import (
    CharRoots,
    ExactPolynomial,
    GPolyCoeffs,
    char_roots,
    chebyshev_u_eval,
    g_ode_residual,
    g_poly_coeffs,
    g_poly_eval,
    g_poly_special,
)
from .exceptions import DomainError, EvaluationError, SingularMatrixError
from .gseq import (
    GenFunKind,
    SLProblem,
    dirichlet_kernel,
    g_even_exact,
    g_fun_derivative,
    g_fun_eval,
    g_fun_limit_inf,
    generating_function,
    generating_function_partial,
    sl_residual,
)
from .hilbert import (
    FourierExpansion,
    MembershipCase,
    expansion_eval,
    fourier_coefficients,
    inner_product,
    odd_even_coeff,
    parseval_partial,
    power_membership,
    truncation_error,
)
from .measure import (
    DomainPoint,
    QuadratureRule,
    build_quadrature,
    integrate,
    theta_of_z,
    weight_density,
    z_of_theta,
)

__version__ = "0.1.0"
