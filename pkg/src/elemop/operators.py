"""Elementary operators X -> sum_i A_i X B_i as first-class values.

An operator is a nonempty ordered list of coefficient pairs over one
dimension.  The term list is a representation, not an identity: two
different lists can induce the same linear map, so `op_equal` compares the
superoperator matrices instead.

The superoperator of X -> sum_i A_i X B_i under column-stacking vec is
sum_i kron(B_i.T, A_i); it satisfies superop * vec(X) == vec(op(X)) for
every X, and turns addition, composition and scaling of operators into the
matching matrix operations.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ShapeError
from .matrix import Matrix, kron
from .nilpotency import NilpotencyReport, is_nilpotent
from .scalars import as_scalar


@dataclass(frozen=True)
class ElementaryOperator:
    """A map X -> sum_i A_i X B_i on n x n matrices; immutable."""

    dim: int
    terms: tuple[tuple[Matrix, Matrix], ...]

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(tuple(t) for t in self.terms))
        if not self.terms:
            raise ShapeError("an elementary operator needs at least one term")
        for k, (a, b) in enumerate(self.terms):
            for side, m in (("left", a), ("right", b)):
                if m.shape != (self.dim, self.dim):
                    raise ShapeError(
                        f"term {k} {side} coefficient is {m.rows}x{m.cols}, "
                        f"expected {self.dim}x{self.dim}"
                    )

    @property
    def length(self) -> int:
        return len(self.terms)

    # ---- action ----------------------------------------------------------
    def __call__(self, x: Matrix) -> Matrix:
        if x.shape != (self.dim, self.dim):
            raise ShapeError(
                f"operator on {self.dim}x{self.dim} applied to {x.rows}x{x.cols}"
            )
        result = Matrix.zero(self.dim)
        for a, b in self.terms:
            result = result + a * x * b
        return result

    def superoperator(self) -> Matrix:
        s = Matrix.zero(self.dim * self.dim)
        for a, b in self.terms:
            s = s + kron(b.T, a)
        return s

    # ---- algebra -----------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, ElementaryOperator):
            return NotImplemented
        self._need_same_dim(other)
        return ElementaryOperator(self.dim, self.terms + other.terms)

    def compose(self, other: "ElementaryOperator") -> "ElementaryOperator":
        """self after other: terms (A_i C_j, D_j B_i) in lexicographic (i, j).

        The right-hand coefficients compose in reverse because they act from
        the right.
        """
        self._need_same_dim(other)
        terms = tuple(
            (a * c, d * b) for (a, b) in self.terms for (c, d) in other.terms
        )
        return ElementaryOperator(self.dim, terms)

    def __matmul__(self, other):
        if not isinstance(other, ElementaryOperator):
            return NotImplemented
        return self.compose(other)

    def scaled(self, c) -> "ElementaryOperator":
        c = as_scalar(c)
        return ElementaryOperator(
            self.dim, tuple((c * a, b) for (a, b) in self.terms)
        )

    def __mul__(self, other):
        try:
            return self.scaled(other)
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "ElementaryOperator":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = identity_operator(self.dim)
        for _ in range(k):
            result = result.compose(self)
        return result

    def _need_same_dim(self, other: "ElementaryOperator") -> None:
        if self.dim != other.dim:
            raise ShapeError(
                f"operators act on different dimensions: {self.dim} vs {other.dim}"
            )


# ---- constructors ----------------------------------------------------------

def make_multiplication(a: Matrix, b: Matrix) -> ElementaryOperator:
    """The length-one operator X -> A X B."""
    _need_square_pair(a, b)
    return ElementaryOperator(a.rows, ((a, b),))


def make_inner_derivation(a: Matrix) -> ElementaryOperator:
    """The commutator map X -> A X - X A."""
    if not a.is_square:
        raise ShapeError(f"derivation of non-square {a.rows}x{a.cols}")
    n = a.rows
    ident = Matrix.identity(n)
    return ElementaryOperator(n, ((a, ident), (-ident, a)))


def make_generalized_derivation(a: Matrix, b: Matrix) -> ElementaryOperator:
    """The map X -> A X - X B."""
    _need_square_pair(a, b)
    n = a.rows
    ident = Matrix.identity(n)
    return ElementaryOperator(n, ((a, ident), (-ident, b)))


def make_v_operator(a: Matrix, b: Matrix) -> ElementaryOperator:
    """The antisymmetric map X -> A X B - B X A."""
    _need_square_pair(a, b)
    return ElementaryOperator(a.rows, ((a, b), (-b, a)))


def identity_operator(n: int) -> ElementaryOperator:
    ident = Matrix.identity(n)
    return ElementaryOperator(n, ((ident, ident),))


def zero_operator(n: int) -> ElementaryOperator:
    z = Matrix.zero(n)
    return ElementaryOperator(n, ((z, z),))


def _need_square_pair(a: Matrix, b: Matrix) -> None:
    if not (a.is_square and b.is_square and a.rows == b.rows):
        raise ShapeError(
            f"need two square matrices of one size, got {a.rows}x{a.cols} and {b.rows}x{b.cols}"
        )


# ---- predicates --------------------------------------------------------------

def op_equal(op1: ElementaryOperator, op2: ElementaryOperator) -> bool:
    """Extensional equality: same induced linear map (equal superoperators)."""
    if op1.dim != op2.dim:
        raise ShapeError(
            f"operators act on different dimensions: {op1.dim} vs {op2.dim}"
        )
    return op1.superoperator() == op2.superoperator()


def op_is_nilpotent(op: ElementaryOperator) -> NilpotencyReport:
    """Nilpotency of the induced map; the index is bounded by dim^2."""
    return is_nilpotent(op.superoperator())
