"""Exact invariants of the essential spanning surfaces of 2-bridge knots.

A 2-bridge knot K(alpha, beta) has finitely many essential spanning
surfaces, indexed by the continued fraction expansions of alpha/beta and
alpha/(beta - alpha) with all quotients of absolute value at least 2.  This
package enumerates them and computes, entirely in exact rational
arithmetic: the state polynomial det(V - t*V^T) and state signature
sigma(V + V^T) of every surface, boundary slopes as signature differences,
and the knot's determinant, signature, Alexander polynomial, genus and
crosscap number.
"""

from .continued_fractions import (
    Expansion,
    cf_value,
    enumerate_expansions,
    surfaces_expansions,
)
from .errors import BridgestateError, ConsistencyError, InvalidInputError
from .invariants import (
    InvariantReport,
    StatePolynomial,
    SurfaceReport,
    alexander_polynomial,
    boundary_slope,
    boundary_slope_ht,
    canonical_representative,
    full_report,
    knot_genus_twice,
    knot_signature,
    nonorientable_genus_twice,
    poly_equivalent,
    state_polynomial,
    state_polynomial_det,
    state_polynomial_oracle,
    state_signature,
    state_signature_minors,
    symmetric_signature,
)
from .laurent import LaurentPolynomial, frac, laurent
from .state_matrices import (
    GLMatrix,
    StateMatrix,
    flip_normal,
    flip_orientation,
    gl_matrix,
    standard_state_matrix,
    state_matrix,
)
from .surfaces import (
    EssentialSurface,
    TwoBridgeKnot,
    essential_surfaces,
    find_seifert,
    make_knot,
    make_surface,
    sign_counts,
)

__version__ = "0.1.0"
