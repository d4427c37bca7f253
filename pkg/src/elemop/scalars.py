"""Exact scalars: complex numbers with rational real and imaginary parts.

Q(i) is the scalar field of the whole package.  Every quantity here is exact,
so equality of matrices, vanishing of operator powers and polynomial
identities are all decidable without tolerances.  Canonical form (coprime
numerator/denominator, positive denominator) is maintained for free by
`fractions.Fraction`.

String form, shared with the JSON wire format:

    "3"            integer
    "-2/5"         rational
    "1/2+3/4*i"    complex; the real part is always written when im != 0
    "0-1*i"        pure imaginary

`format_scalar` emits exactly these whitespace-free forms; `parse_scalar`
is tolerant (whitespace, a bare "i", "2i" and "3*i" are all accepted).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError

_F0 = Fraction(0)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"cannot build an exact rational from {type(x).__name__}")


@dataclass(frozen=True)
class GaussianRational:
    """An element of Q(i), immutable and hashable."""

    re: Fraction = _F0
    im: Fraction = _F0

    def __post_init__(self):
        object.__setattr__(self, "re", _as_fraction(self.re))
        object.__setattr__(self, "im", _as_fraction(self.im))

    # ---- predicates -----------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    @property
    def is_zero(self) -> bool:
        return not self

    @property
    def is_real(self) -> bool:
        return not self.im

    # ---- arithmetic ------------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:  # the common all-real case
            return GaussianRational(a * c, _F0)
        return GaussianRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        """Squared modulus re^2 + im^2; rational, zero only at zero."""
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussianRational":
        n = self.norm()
        if not n:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussianRational(self.re / n, -self.im / n)

    def __str__(self) -> str:
        return format_scalar(self)

    def __repr__(self) -> str:
        return f"GaussianRational({format_scalar(self)!r})"


ZERO = GaussianRational()
ONE = GaussianRational(1)
IMAG = GaussianRational(0, 1)


def as_scalar(x) -> GaussianRational:
    """Coerce an int, Fraction, scalar string or GaussianRational into Q(i)."""
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x)
    if isinstance(x, str):
        return parse_scalar(x)
    raise TypeError(f"cannot interpret {type(x).__name__} as a scalar")


def _coerce(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x)
    return NotImplemented


def format_scalar(z: GaussianRational) -> str:
    """Canonical whitespace-free string form of a scalar."""
    if not z.im:
        return str(z.re)
    sign = "+" if z.im > 0 else "-"
    return f"{z.re}{sign}{abs(z.im)}*i"


def parse_scalar(text: str) -> GaussianRational:
    """Parse a scalar string; tolerant of whitespace and of "i" shorthands."""
    stripped = "".join(text.split())
    if not stripped:
        raise ParseError("empty scalar string")
    terms = _split_terms(stripped)
    re_part = None
    im_part = None
    for term in terms:
        value, imaginary = _parse_term(term, text)
        if imaginary:
            if im_part is not None:
                raise ParseError(f"two imaginary terms in scalar {text!r}")
            im_part = value
        else:
            if re_part is not None:
                raise ParseError(f"two real terms in scalar {text!r}")
            re_part = value
    return GaussianRational(re_part or _F0, im_part or _F0)


def _split_terms(s: str) -> list[str]:
    terms = []
    start = 0
    for pos in range(1, len(s)):
        if s[pos] in "+-" and s[pos - 1] not in "+-":
            terms.append(s[start:pos])
            start = pos
    terms.append(s[start:])
    return terms


def _parse_term(term: str, original: str) -> tuple[Fraction, bool]:
    body = term
    sign = 1
    while body and body[0] in "+-":
        if body[0] == "-":
            sign = -sign
        body = body[1:]
    imaginary = body.endswith("i")
    if imaginary:
        body = body[:-1].rstrip("*")
        if not body:
            body = "1"
    try:
        value = Fraction(body)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad scalar {original!r}: cannot read term {term!r}") from exc
    return sign * value, imaginary
