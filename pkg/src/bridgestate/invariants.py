"""State polynomials, state signatures, boundary slopes, knot invariants.

Conventions, fixed once here:

* The state polynomial of a surface is det(V - t*V^T) for any of its state
  matrices; it is well defined up to a unit +-t^j.  We publish the canonical
  representative: lowest degree shifted to 0 and lowest coefficient positive.
  It always has degree k, |constant| = |leading| = |n1*...*nk| / 2^k, and
  |value at -1| equal to the knot determinant alpha.
* The state signature is the signature of V + V^T; it equals
  n_plus - n_minus of the expansion, and is recomputed independently from
  the leading principal minors as a cross-check.
* The boundary slope of a surface is 2 * (sigma_S - sigma_K), where sigma_K
  is the state signature of the unique all-even (Seifert) expansion.  The
  Seifert surface itself always has slope 0.  Mirroring the knot
  (beta -> alpha - beta) negates all signatures and slopes.

The tridiagonal determinant is computed by the three-term recurrence
d_0 = 1, d_1 = (n1/2)(1-t), d_j = (-1)**(j+1) * (nj/2)(1-t) * d_{j-1}
+ t * d_{j-2}, carried out on 2**s-scaled integer coefficient lists (s grows
only at odd terms), which keeps the whole census exact and fast.  A plain
cofactor expansion over Laurent arithmetic is kept as a bounded,
structurally independent oracle.
"""

import os
from dataclasses import dataclass
from fractions import Fraction

from .continued_fractions import Expansion, surfaces_expansions
from .errors import ConsistencyError, InvalidInputError
from .laurent import ZERO, LaurentPolynomial
from .state_matrices import StateMatrix, gl_matrix
from .surfaces import (
    EssentialSurface,
    TwoBridgeKnot,
    essential_surfaces,
    find_seifert,
    sign_counts,
)

ORACLE_MAX_K_ENV = "BRIDGESTATE_ORACLE_MAX_K"
DEFAULT_ORACLE_MAX_K = 8


# ---------------------------------------------------------------------------
# state polynomial


def _det_scaled(terms) -> tuple:
    """Integer coefficient list of 2**s * det(V - t*V^T), plus s.

    V is the standard state matrix of ``terms``; the determinant is returned
    uncanonicalized, lowest degree first (its constant term det(V) is never
    zero).  s is the number of odd terms: every denominator in the exact
    determinant divides 2**s, so the scaled coefficients are integers.
    """
    n1 = terms[0]
    if n1 % 2 == 0:
        cur, s_cur = [n1 // 2, -(n1 // 2)], 0
    else:
        cur, s_cur = [n1, -n1], 1
    prev, s_prev = [1], 0
    for j in range(2, len(terms) + 1):
        n = terms[j - 1]
        odd = n % 2 != 0
        half = n if odd else n // 2
        mult = half if j % 2 == 1 else -half
        s_new = s_cur + 1 if odd else s_cur
        shift = s_new - s_prev
        a, b = cur, prev
        if shift:
            mid = [mult * (x - y) + (z << shift) for x, y, z in zip(a[1:], a, b)]
        else:
            mid = [mult * (x - y) + z for x, y, z in zip(a[1:], a, b)]
        new = [mult * a[0]]
        new.extend(mid)
        new.append(-mult * a[-1])
        prev, s_prev, cur, s_cur = a, s_cur, new, s_new
    return cur, s_cur


def state_polynomial_det(e: Expansion) -> LaurentPolynomial:
    """det(V - t*V^T) for the standard state matrix, uncanonicalized."""
    coeffs, scale = _det_scaled(e.terms)
    den = 1 << scale
    return LaurentPolynomial(0, tuple(Fraction(c, den) for c in coeffs))


def canonical_representative(p: LaurentPolynomial) -> LaurentPolynomial:
    """The representative of {+-t^j * p} with min degree 0 and positive
    lowest coefficient."""
    if p.is_zero:
        return p
    q = LaurentPolynomial(0, p.coeffs)
    if q.coeffs[0] < 0:
        q = -q
    return q


def poly_equivalent(p: LaurentPolynomial, q: LaurentPolynomial) -> bool:
    """True iff p = +-t^j * q for some integer j."""
    return canonical_representative(p) == canonical_representative(q)


@dataclass(frozen=True)
class StatePolynomial:
    """Canonical state polynomial of a surface with k bands.

    ``canonical`` has min degree 0 and degree exactly k; its coefficient
    sequence is palindromic for even k and anti-palindromic for odd k.
    """

    canonical: LaurentPolynomial
    k: int


def _canonical_from_scaled(coeffs, scale: int, k: int) -> StatePolynomial:
    if coeffs[0] < 0:
        coeffs = [-c for c in coeffs]
    if coeffs[-1] == 0 or len(coeffs) != k + 1:
        raise ConsistencyError(
            f"state polynomial of a k={k} expansion must have degree {k}"
        )
    den = 1 << scale
    poly = LaurentPolynomial(0, tuple(Fraction(c, den) for c in coeffs))
    return StatePolynomial(canonical=poly, k=k)


def state_polynomial(e: Expansion) -> StatePolynomial:
    """Canonical state polynomial of the surface of ``e``.

    >>> str(state_polynomial(Expansion((2, 3))).canonical)
    '3/2 - 4*t + 3/2*t^2'
    """
    coeffs, scale = _det_scaled(e.terms)
    return _canonical_from_scaled(coeffs, scale, len(e.terms))


# ---------------------------------------------------------------------------
# cofactor oracle


def oracle_size_bound() -> int:
    """Largest matrix size the cofactor oracle will accept.

    Controlled by the BRIDGESTATE_ORACLE_MAX_K environment variable
    (default 8); the oracle's cost grows exponentially with size.
    """
    raw = os.environ.get(ORACLE_MAX_K_ENV)
    if raw is None:
        return DEFAULT_ORACLE_MAX_K
    try:
        return int(raw)
    except ValueError:
        raise InvalidInputError(
            f"{ORACLE_MAX_K_ENV} must be an integer, got {raw!r}"
        ) from None


def characteristic_matrix(v: StateMatrix) -> tuple:
    """V - t*V^T as a matrix of Laurent polynomials.

    For a standard state matrix this is tridiagonal with diagonal
    (-1)**(j+1) * (nj/2) * (1 - t) and off-diagonal pairs {1, -t};
    specializing t = -1 gives the Gordon-Litherland matrix V + V^T.
    """
    t = v.transpose_entries()
    return tuple(
        tuple(LaurentPolynomial(0, (a, -b)) for a, b in zip(row, trow))
        for row, trow in zip(v.entries, t)
    )


def _cofactor_det(m) -> LaurentPolynomial:
    if len(m) == 1:
        return m[0][0]
    total = ZERO
    for j, entry in enumerate(m[0]):
        if entry.is_zero:
            continue
        minor = tuple(row[:j] + row[j + 1 :] for row in m[1:])
        term = entry * _cofactor_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def state_polynomial_oracle(v: StateMatrix, max_size: int = None) -> LaurentPolynomial:
    """det(V - t*V^T) by full cofactor expansion, uncanonicalized.

    Exists purely to cross-check the recurrence path, so it refuses
    matrices larger than the configured bound rather than grind.
    """
    bound = oracle_size_bound() if max_size is None else max_size
    if v.size > bound:
        raise InvalidInputError(
            f"cofactor oracle refuses size {v.size} > bound {bound}"
        )
    return _cofactor_det(characteristic_matrix(v))


# ---------------------------------------------------------------------------
# signatures


def state_signature(e: Expansion) -> int:
    """n_plus - n_minus: the signature of V + V^T for any state matrix of e."""
    plus, minus = sign_counts(e)
    return plus - minus


def _minor_signature(terms) -> int:
    """Signature of the standard V + V^T from its leading principal minors.

    D_0 = 1, D_1 = a_1, D_j = a_j * D_{j-1} - D_{j-2} with diagonal
    a_j = (-1)**(j+1) * nj (the off-diagonal pairs multiply to 1); the
    signature is the number of consecutive sign agreements minus the number
    of sign changes.  Every D_j is a product of pivots of absolute value
    > 1, so a zero minor is impossible and reported as a bug.
    """
    sig = 0
    dm, d = None, 1
    for idx, n in enumerate(terms):
        a = n if idx % 2 == 0 else -n
        new = a * d if idx == 0 else a * d - dm
        if new == 0:
            raise ConsistencyError(
                f"zero leading principal minor at size {idx + 1} for {list(terms)}"
            )
        sig += 1 if (new > 0) == (d > 0) else -1
        dm, d = d, new
    return sig


def state_signature_minors(v: StateMatrix) -> int:
    """Signature of V + V^T via the leading-principal-minor recurrence.

    Valid for any matrix produced by the constructors in state_matrices
    (V + V^T is then tridiagonal with off-diagonal pairs multiplying to 1);
    anything else is rejected.
    """
    gl = gl_matrix(v)
    k = gl.size
    ent = gl.entries
    for i in range(k):
        for j in range(i + 2, k):
            if ent[i][j] != 0:
                raise InvalidInputError(
                    "minor recurrence needs a tridiagonal V + V^T"
                )
    for i in range(k - 1):
        if ent[i][i + 1] * ent[i + 1][i] != 1:
            raise InvalidInputError(
                "minor recurrence needs off-diagonal pairs with product 1"
            )
    sig = 0
    dm, d = None, Fraction(1)
    for idx in range(k):
        a = ent[idx][idx]
        new = a * d if idx == 0 else a * d - dm
        if new == 0:
            raise ConsistencyError(
                f"zero leading principal minor at size {idx + 1}"
            )
        sig += 1 if (new > 0) == (d > 0) else -1
        dm, d = d, new
    return sig


def symmetric_signature(rows) -> int:
    """Signature of an arbitrary symmetric matrix of Fractions.

    Exact congruence diagonalization (Schur-complement elimination with the
    standard zero-diagonal repair move).  General-purpose and slower than
    the minor recurrence; used to check transformed matrices that are no
    longer tridiagonal, e.g. after a simultaneous row/column permutation.
    """
    m = [[Fraction(x) for x in row] for row in rows]
    n = len(m)
    if any(len(r) != n for r in m):
        raise InvalidInputError("matrix must be square")
    sig = 0
    for i in range(n):
        if m[i][i] == 0:
            r = next((r for r in range(i + 1, n) if m[r][r] != 0), None)
            if r is not None:
                m[i], m[r] = m[r], m[i]
                for row in m:
                    row[i], row[r] = row[r], row[i]
            else:
                r = next((r for r in range(i + 1, n) if m[i][r] != 0), None)
                if r is None:
                    continue  # zero row/column: contributes nothing
                for c in range(n):
                    m[i][c] += m[r][c]
                for rr in range(n):
                    m[rr][i] += m[rr][r]
        p = m[i][i]
        sig += 1 if p > 0 else -1
        for r in range(i + 1, n):
            f = m[r][i] / p
            if f == 0:
                continue
            for c in range(i + 1, n):
                m[r][c] -= f * m[i][c]
    return sig


# ---------------------------------------------------------------------------
# knot-level invariants


def knot_signature(knot: TwoBridgeKnot) -> int:
    """Signature of the knot: the state signature of its Seifert surface."""
    seifert = find_seifert(essential_surfaces(knot))
    return seifert.n_plus - seifert.n_minus


def boundary_slope(e: Expansion, knot: TwoBridgeKnot) -> int:
    """Boundary slope 2 * (sigma_S - sigma_K) of the surface of ``e``."""
    if e.terms not in {x.terms for x in surfaces_expansions(knot)}:
        raise InvalidInputError(
            f"{e} is not an essential-surface expansion of {knot}"
        )
    return 2 * (state_signature(e) - knot_signature(knot))


def boundary_slope_ht(e: Expansion, seifert: Expansion) -> int:
    """Boundary slope from sign counts alone:
    2*(N+ - N-) - 2*(N0+ - N0-), the Seifert expansion giving the N0 terms.
    """
    if any(n % 2 for n in seifert.terms):
        raise InvalidInputError(
            f"reference expansion {seifert} must be all even (a Seifert surface)"
        )
    plus, minus = sign_counts(e)
    plus0, minus0 = sign_counts(seifert)
    return 2 * (plus - minus) - 2 * (plus0 - minus0)


def alexander_polynomial(knot: TwoBridgeKnot) -> StatePolynomial:
    """State polynomial of the Seifert surface; integer coefficients."""
    seifert = find_seifert(essential_surfaces(knot))
    poly = state_polynomial(seifert.expansion)
    if any(c.denominator != 1 for c in poly.canonical.coeffs):
        raise ConsistencyError(
            f"all-even expansion {seifert.expansion} gave non-integer coefficients"
        )
    return poly


def knot_genus_twice(knot: TwoBridgeKnot) -> int:
    """Twice the genus of the knot: the length of its Seifert expansion
    (equivalently, the degree of its Alexander polynomial)."""
    return find_seifert(essential_surfaces(knot)).genus_twice


def nonorientable_genus_twice(knot: TwoBridgeKnot) -> int:
    """Twice the crosscap number of the knot.

    The minimum genus among nonorientable essential surfaces if that
    minimum is at most g(K) + 1/2; otherwise g(K) + 1/2, realized by a
    crosscap added to a minimal Seifert surface.
    """
    surfaces = essential_surfaces(knot)
    g2 = find_seifert(surfaces).genus_twice
    candidates = [s.genus_twice for s in surfaces if not s.orientable]
    return min(min(candidates, default=g2 + 1), g2 + 1)


# ---------------------------------------------------------------------------
# aggregation


@dataclass(frozen=True)
class SurfaceReport:
    surface: EssentialSurface
    polynomial: StatePolynomial
    signature: int
    slope: int


@dataclass(frozen=True)
class InvariantReport:
    knot: TwoBridgeKnot
    surfaces: tuple
    determinant: int
    signature: int
    alexander: StatePolynomial
    genus_twice: int
    nonorientable_genus_twice: int

    @property
    def slopes(self) -> list:
        """The knot's boundary slope set, sorted ascending.

        Distinct surfaces may share a slope (first at K(19,7), where a
        nonorientable surface joins the Seifert surface at slope 0), so
        this can be shorter than the surface list.
        """
        return sorted({r.slope for r in self.surfaces})


def full_report(knot: TwoBridgeKnot) -> InvariantReport:
    """Everything this package computes for one knot, cross-checked.

    Before returning, every surface is verified against the identities
    that must hold for it: |p(-1)| equals the determinant alpha, the
    sign-count signature equals the minor-recurrence signature, and the
    signature-difference slope equals the sign-count slope formula.
    """
    surfaces = essential_surfaces(knot)
    seifert = find_seifert(surfaces)
    sigma_k = seifert.n_plus - seifert.n_minus
    sigma_k_minors = _minor_signature(seifert.expansion.terms)
    alpha = knot.alpha
    reports = []
    alexander = None
    for s in surfaces:
        terms = s.expansion.terms
        coeffs, scale = _det_scaled(terms)
        at_minus_one = sum(-c if i % 2 else c for i, c in enumerate(coeffs))
        if abs(at_minus_one) != alpha << scale:
            raise ConsistencyError(
                f"determinant identity |p(-1)| = alpha failed for "
                f"{s.expansion} of {knot}: got {Fraction(abs(at_minus_one), 1 << scale)}"
            )
        sigma = s.n_plus - s.n_minus
        sigma_minors = _minor_signature(terms)
        if sigma_minors != sigma:
            raise ConsistencyError(
                f"sign-count signature disagrees with minor recurrence for "
                f"{s.expansion} of {knot}"
            )
        slope = 2 * (sigma - sigma_k)
        # recompute along the matrix route: both signatures from minors
        if 2 * (sigma_minors - sigma_k_minors) != boundary_slope_ht(
            s.expansion, seifert.expansion
        ):
            raise ConsistencyError(
                f"signature-difference slope disagrees with sign-count "
                f"formula for {s.expansion} of {knot}"
            )
        poly = _canonical_from_scaled(coeffs, scale, len(terms))
        reports.append(
            SurfaceReport(surface=s, polynomial=poly, signature=sigma, slope=slope)
        )
        if s is seifert:
            alexander = poly
    return InvariantReport(
        knot=knot,
        surfaces=tuple(reports),
        determinant=alpha,
        signature=sigma_k,
        alexander=alexander,
        genus_twice=seifert.genus_twice,
        nonorientable_genus_twice=min(
            min((s.genus_twice for s in surfaces if not s.orientable),
                default=seifert.genus_twice + 1),
            seifert.genus_twice + 1,
        ),
    )
