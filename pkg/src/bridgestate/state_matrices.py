"""State matrices of essential spanning surfaces, and the moves between them.

The standard state matrix of [n1, ..., nk] is lower bidiagonal: diagonal
entry (i, i) is (-1)**(i+1) * ni/2 (a half-integer when ni is odd) and each
subdiagonal entry (i+1, i) is 1.  The two moves below realize the choices
left open by the construction: flipping the normal vector at a band crossing
exchanges the (i, i+1)/(i+1, i) pair, and reversing a curve orientation
negates a row and column.  V + V^T is independent of the normal choices and
presents the Gordon-Litherland form (it is a Goeritz matrix of the knot).

Indices follow the band numbering: 1-based, as in the n_i themselves.
"""

from dataclasses import dataclass
from fractions import Fraction

from .continued_fractions import Expansion
from .errors import InvalidInputError


@dataclass(frozen=True)
class StateMatrix:
    """k x k matrix of Fractions; rows are tuples, entries[i][j] is 0-based."""

    entries: tuple

    @property
    def size(self) -> int:
        return len(self.entries)

    def transpose_entries(self) -> tuple:
        return tuple(zip(*self.entries))


@dataclass(frozen=True)
class GLMatrix:
    """Symmetric matrix of the Gordon-Litherland form, V + V^T."""

    entries: tuple

    @property
    def size(self) -> int:
        return len(self.entries)


def _as_matrix(rows) -> tuple:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def state_matrix(rows) -> StateMatrix:
    """Build a StateMatrix from any nested sequence of ints/Fractions."""
    m = _as_matrix(rows)
    if any(len(row) != len(m) for row in m):
        raise InvalidInputError("state matrix must be square")
    return StateMatrix(m)


def standard_state_matrix(e: Expansion) -> StateMatrix:
    """The canonical state matrix of an expansion.

    >>> standard_state_matrix(Expansion((2, 3))).entries
    ((Fraction(1, 1), Fraction(0, 1)), (Fraction(1, 1), Fraction(-3, 2)))
    """
    k = len(e.terms)
    half = Fraction(1, 2)
    rows = []
    for i, n in enumerate(e.terms):
        row = [Fraction(0)] * k
        row[i] = n * half if i % 2 == 0 else -n * half
        if i > 0:
            row[i - 1] = Fraction(1)
        rows.append(tuple(row))
    return StateMatrix(tuple(rows))


def _check_index(i: int, lo: int, hi: int, what: str):
    if not lo <= i <= hi:
        raise InvalidInputError(f"{what} index {i} out of range [{lo}, {hi}]")


def flip_normal(v: StateMatrix, i: int) -> StateMatrix:
    """Reverse the normal vector at the crossing of bands i and i+1.

    Exchanges the entries at (i, i+1) and (i+1, i); V + V^T is unchanged.
    An involution: applying it twice restores the matrix.
    """
    _check_index(i, 1, v.size - 1, "normal flip")
    a, b = i - 1, i  # 0-based row/col positions
    rows = [list(row) for row in v.entries]
    rows[a][b], rows[b][a] = rows[b][a], rows[a][b]
    return StateMatrix(tuple(tuple(row) for row in rows))


def flip_orientation(v: StateMatrix, i: int) -> StateMatrix:
    """Reverse the orientation of curve i: negate row i and column i.

    The diagonal entry (i, i) is negated twice, hence unchanged.
    """
    _check_index(i, 1, v.size, "orientation flip")
    a = i - 1
    rows = [list(row) for row in v.entries]
    for j in range(v.size):
        rows[a][j] = -rows[a][j]
        rows[j][a] = -rows[j][a]
    return StateMatrix(tuple(tuple(row) for row in rows))


def gl_matrix(v: StateMatrix) -> GLMatrix:
    """V + V^T, the matrix of the Gordon-Litherland form."""
    t = v.transpose_entries()
    return GLMatrix(
        tuple(
            tuple(a + b for a, b in zip(row, trow))
            for row, trow in zip(v.entries, t)
        )
    )
