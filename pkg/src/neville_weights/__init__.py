"""Weight-functions that combine Neville substencil interpolants into the
full Lagrange interpolant and its derivatives."""
from .algebra import Poly, RatFunc, evaluate, format_scalar, poly_gcd, scalar
from .deriv_weights import (DerivWeightFamily, candidate_pole_factors, candidate_pole_poly, deriv_one_level,
                            deriv_weights, pole_report)
from .errors import (ArityError, InconsistentSystemError, ModeError, OrderError, PoleError,
                     RangeError, SingularSystemError, WeightsError)
from .lagrange import fundamental, interp_derivative, interpolate, neville_eval, sample
from .oracle import VerificationReport, run_suite, verify_family, weights_via_linear_system
from .stencil import (Stencil, SubdivisionSpec, make_stencil, stencil_from_json, substencil,
                      substencils)
from .weights import (WeightFamily, one_level_weights, positivity_interval, varsigma,
                      weights_by_recurrence, weights_explicit)

__version__ = "0.1.0"
