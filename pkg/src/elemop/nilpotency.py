"""Exact characteristic polynomials and nilpotency decisions.

A square matrix over a field of characteristic zero is nilpotent exactly
when its d-th power vanishes (Cayley-Hamilton), equivalently when its
characteristic polynomial is x^d.  `is_nilpotent` decides by power
iteration and then re-decides from the characteristic polynomial; the two
routes must agree, and a disagreement raises IntegrityError.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IntegrityError, ShapeError
from .matrix import Matrix
from .scalars import ONE, ZERO, GaussianRational


@dataclass(frozen=True)
class EntryWitness:
    """A nonzero entry pinpointing why a matrix power is not zero."""

    row: int
    col: int
    value: GaussianRational


@dataclass(frozen=True)
class NilpotencyReport:
    """Decision, nilpotency index, and a witness for the penultimate power.

    `index` is the smallest k with M^k == 0 and is present exactly when
    `nilpotent` is true.  For index k > 1 the witness is a nonzero entry of
    M^(k-1); for index 1 (the zero matrix) there is nothing to witness.
    """

    nilpotent: bool
    index: int | None = None
    witness: EntryWitness | None = None


def char_poly(a: Matrix) -> tuple[GaussianRational, ...]:
    """Monic characteristic polynomial det(xI - a), leading coefficient first.

    Faddeev-LeVerrier recurrence: M_1 = I, then for k = 1..d
    c_{d-k} = -tr(a M_k) / k and M_{k+1} = a M_k + c_{d-k} I.  The only
    divisions are by the step index k, which are exact over Q(i).
    """
    if not a.is_square:
        raise ShapeError(f"characteristic polynomial of non-square {a.rows}x{a.cols}")
    d = a.rows
    ident = Matrix.identity(d)
    coeffs = [ZERO] * (d + 1)
    coeffs[0] = ONE  # coefficient of x^d
    m = ident
    for k in range(1, d + 1):
        am = a * m
        coeffs[k] = -(am.trace() / k)
        if k < d:
            m = am + coeffs[k] * ident
    return tuple(coeffs)


def is_nilpotent(a: Matrix) -> NilpotencyReport:
    """Decide nilpotency of a square matrix, with index and witness.

    The index never exceeds the dimension: if a^d != 0 the matrix is not
    nilpotent at all.
    """
    if not a.is_square:
        raise ShapeError(f"nilpotency of non-square {a.rows}x{a.cols}")
    d = a.rows
    index = None
    witness = None
    previous = None
    power = a
    for k in range(1, d + 1):
        if power.is_zero:
            index = k
            if k > 1:
                witness = _first_nonzero(previous)
            break
        if k < d:
            previous = power
            power = power * a

    by_poly = all(not c for c in char_poly(a)[1:])
    if by_poly != (index is not None):
        raise IntegrityError(
            "power iteration and characteristic polynomial disagree on nilpotency"
        )
    return NilpotencyReport(nilpotent=index is not None, index=index, witness=witness)


def _first_nonzero(m: Matrix) -> EntryWitness:
    for i, j, e in m.entries():
        if e:
            return EntryWitness(i, j, e)
    raise IntegrityError("witness requested for a zero matrix")
