"""2-bridge knots and their essential spanning surfaces.

A 2-bridge knot is K(alpha, beta) with alpha odd (even alpha gives a link),
0 < beta < alpha and gcd = 1; alpha is the knot's determinant.  Each
essential spanning surface corresponds to one continued fraction expansion
of alpha/beta or alpha/(beta - alpha); the surface of the expansion
[n1, ..., nk] is a plumbing of k half-twisted bands, has genus k/2 (stored
doubled to stay integral) and is orientable exactly when every ni is even.
"""

import math
from dataclasses import dataclass

from .continued_fractions import Expansion, surfaces_expansions
from .errors import ConsistencyError, InvalidInputError


@dataclass(frozen=True)
class TwoBridgeKnot:
    alpha: int
    beta: int

    def __str__(self) -> str:
        return f"K({self.alpha},{self.beta})"


@dataclass(frozen=True)
class EssentialSurface:
    """One essential spanning surface, with its derived combinatorial data.

    n_plus counts expansion terms whose sign matches the alternating pattern
    +,-,+,-,... and n_minus the rest; their difference is the surface's
    state signature.
    """

    expansion: Expansion
    orientable: bool
    genus_twice: int
    n_plus: int
    n_minus: int


def make_knot(alpha: int, beta: int) -> TwoBridgeKnot:
    """Validated knot, with beta reduced mod alpha into (0, alpha)."""
    if alpha < 3:
        raise InvalidInputError(f"alpha must be at least 3, got {alpha}")
    if alpha % 2 == 0:
        raise InvalidInputError(
            f"alpha must be odd, got {alpha} (even alpha is a 2-bridge link)"
        )
    beta %= alpha
    if beta == 0:
        raise InvalidInputError("beta must not be divisible by alpha")
    if math.gcd(alpha, beta) != 1:
        raise InvalidInputError(
            f"alpha and beta must be coprime, got gcd({alpha},{beta}) = "
            f"{math.gcd(alpha, beta)}"
        )
    return TwoBridgeKnot(alpha, beta)


def sign_counts(e: Expansion) -> tuple:
    """(n_plus, n_minus): terms matching / breaking the pattern +,-,+,-,...

    >>> sign_counts(Expansion((3, -2, 2)))
    (3, 0)
    """
    plus = sum(1 for i, n in enumerate(e.terms) if (n > 0) == (i % 2 == 0))
    return plus, len(e.terms) - plus


def make_surface(e: Expansion) -> EssentialSurface:
    plus, minus = sign_counts(e)
    return EssentialSurface(
        expansion=e,
        orientable=all(n % 2 == 0 for n in e.terms),
        genus_twice=len(e.terms),
        n_plus=plus,
        n_minus=minus,
    )


def essential_surfaces(knot: TwoBridgeKnot) -> tuple:
    """All essential spanning surfaces of the knot, in expansion order."""
    return tuple(make_surface(e) for e in surfaces_expansions(knot))


def find_seifert(surfaces) -> EssentialSurface:
    """The unique orientable (all-even expansion) surface of a knot.

    Anything other than exactly one orientable surface in the full set
    signals an enumeration bug, not a property of the input.
    """
    orientable = [s for s in surfaces if s.orientable]
    if len(orientable) != 1:
        raise ConsistencyError(
            f"expected exactly one all-even expansion, found "
            f"{[str(s.expansion) for s in orientable]}"
        )
    return orientable[0]
