"""Structural nilpotency criteria as executable checks.

Each checker evaluates its hypotheses on concrete matrices, decides the
conclusion (nilpotency of the associated operator) directly from the
superoperator, and reports both together with a consistency flag:
hypotheses holding must imply a nilpotent conclusion.

Two of the criteria are exact equivalences in finite dimension, not just
implications: the length-one criterion (`thm21_criterion`) and the common
scalar shift criterion for generalized derivations (`fong_sourour_check`).
For those, a violated biconditional raises IntegrityError, since it can
only mean an implementation bug.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import IntegrityError, PreconditionError, ShapeError
from .matrix import Matrix, column_vector, rank_one, row_vector
from .nilpotency import NilpotencyReport, is_nilpotent
from .operators import (
    ElementaryOperator,
    make_generalized_derivation,
    make_inner_derivation,
    make_multiplication,
    make_v_operator,
    op_is_nilpotent,
)
from .scalars import GaussianRational, as_scalar


@dataclass(frozen=True)
class TheoremCheckResult:
    """Outcome of one criterion check on one instance.

    `conclusion` is always computed, whether or not the hypotheses hold;
    `consistent` is the implication "hypotheses hold => conclusion
    nilpotent", which every criterion here guarantees.
    """

    hypotheses_hold: bool
    hypothesis_failures: tuple[str, ...]
    conclusion: NilpotencyReport
    consistent: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(
            self,
            "consistent",
            (not self.hypotheses_hold) or self.conclusion.nilpotent,
        )


@dataclass(frozen=True)
class ShiftCheckResult(TheoremCheckResult):
    """A criterion result that also carries the scalar shifts it found."""

    lam: GaussianRational | None = None
    mu: GaussianRational | None = None


@dataclass(frozen=True)
class ShiftWitness:
    """A scalar lam such that A - lam*I is nilpotent, when one exists.

    A nilpotent matrix has zero trace, so the only possible shift is
    trace(A)/dim; `scalar_shift_witness` validates that single candidate.
    """

    lam: GaussianRational | None
    shifted: NilpotencyReport | None = None

    @property
    def found(self) -> bool:
        return self.lam is not None


def scalar_shift_witness(a: Matrix) -> ShiftWitness:
    """Find the unique candidate shift and keep it only if it works."""
    if not a.is_square:
        raise ShapeError(f"shift witness of non-square {a.rows}x{a.cols}")
    candidate = a.trace() / a.rows
    report = is_nilpotent(a - candidate * Matrix.identity(a.rows))
    if report.nilpotent:
        return ShiftWitness(candidate, report)
    return ShiftWitness(None)


def thm21_criterion(a: Matrix, b: Matrix) -> TheoremCheckResult:
    """Length-one criterion: X -> AXB is nilpotent iff A or B is nilpotent.

    This is an equivalence, so the result's hypotheses and conclusion must
    match in both directions; a mismatch raises IntegrityError.
    """
    _need_square_pair(a, b)
    a_nil = is_nilpotent(a)
    b_nil = is_nilpotent(b)
    hold = a_nil.nilpotent or b_nil.nilpotent
    failures = () if hold else ("neither A nor B nilpotent",)
    conclusion = op_is_nilpotent(make_multiplication(a, b))
    if hold != conclusion.nilpotent:
        raise IntegrityError(
            "length-one biconditional violated: "
            f"hypotheses {hold} but operator nilpotent is {conclusion.nilpotent}"
        )
    return TheoremCheckResult(hold, failures, conclusion)


def thm22_check(
    a_tuple: Sequence[Matrix], b_tuple: Sequence[Matrix]
) -> TheoremCheckResult:
    """Commuting-families criterion for X -> sum_i A_i X B_i.

    Hypotheses: the A_i commute pairwise, the B_i commute pairwise (no
    cross condition between the tuples), and for each index i at least one
    of A_i, B_i is nilpotent.  Then the operator is nilpotent.
    """
    a_tuple = tuple(a_tuple)
    b_tuple = tuple(b_tuple)
    if not a_tuple or len(a_tuple) != len(b_tuple):
        raise ShapeError(
            f"need equal-length nonempty tuples, got {len(a_tuple)} and {len(b_tuple)}"
        )
    dim = a_tuple[0].rows
    for m in (*a_tuple, *b_tuple):
        if m.shape != (dim, dim):
            raise ShapeError(
                f"all coefficients must be {dim}x{dim}, got {m.rows}x{m.cols}"
            )

    failures = []
    for label, tup in (("A", a_tuple), ("B", b_tuple)):
        for i in range(len(tup)):
            for j in range(i + 1, len(tup)):
                if tup[i] * tup[j] != tup[j] * tup[i]:
                    failures.append(
                        f"{label}-tuple not pairwise commuting: "
                        f"{label}_{i + 1} and {label}_{j + 1}"
                    )
    for i, (ai, bi) in enumerate(zip(a_tuple, b_tuple)):
        if not (is_nilpotent(ai).nilpotent or is_nilpotent(bi).nilpotent):
            failures.append(f"index {i + 1}: neither A_{i + 1} nor B_{i + 1} nilpotent")

    op = ElementaryOperator(dim, tuple(zip(a_tuple, b_tuple)))
    conclusion = op_is_nilpotent(op)
    return TheoremCheckResult(not failures, tuple(failures), conclusion)


def thm23_check(a: Matrix, b: Matrix) -> ShiftCheckResult:
    """Scalar-shift criterion for the antisymmetric map X -> AXB - BXA.

    Hypotheses: A and B commute and both are scalar plus nilpotent, i.e.
    shift witnesses exist for both.  Then the map is nilpotent.  The shifts
    found are reported even when the commutation hypothesis fails.
    """
    _need_square_pair(a, b)
    failures = []
    if a * b != b * a:
        failures.append("A and B do not commute")
    wa = scalar_shift_witness(a)
    wb = scalar_shift_witness(b)
    if not wa.found:
        failures.append("no scalar shift makes A nilpotent")
    if not wb.found:
        failures.append("no scalar shift makes B nilpotent")
    conclusion = op_is_nilpotent(make_v_operator(a, b))
    return ShiftCheckResult(not failures, tuple(failures), conclusion, wa.lam, wb.lam)


def fong_sourour_check(s: Matrix, t: Matrix) -> ShiftCheckResult:
    """Common-shift criterion for the generalized derivation X -> SX - XT.

    The map is nilpotent iff one scalar lam makes both S - lam*I and
    T - lam*I nilpotent.  A valid shift forces lam = trace/dim on both
    sides, so a single candidate decides existence.  The equivalence must
    hold in finite dimension; a violation raises IntegrityError.
    """
    _need_square_pair(s, t)
    d = s.rows
    failures = []
    lam = None
    cand_s = s.trace() / d
    cand_t = t.trace() / d
    if cand_s != cand_t:
        failures.append("no common shift candidate: trace(S)/d != trace(T)/d")
    else:
        ident = Matrix.identity(d)
        if not is_nilpotent(s - cand_s * ident).nilpotent:
            failures.append("S - lam*I not nilpotent for the only candidate lam")
        if not is_nilpotent(t - cand_s * ident).nilpotent:
            failures.append("T - lam*I not nilpotent for the only candidate lam")
        if len(failures) == 0:
            lam = cand_s
    hold = not failures
    conclusion = op_is_nilpotent(make_generalized_derivation(s, t))
    if hold != conclusion.nilpotent:
        raise IntegrityError(
            "common-shift biconditional violated: "
            f"hypotheses {hold} but derivation nilpotent is {conclusion.nilpotent}"
        )
    return ShiftCheckResult(hold, tuple(failures), conclusion, lam, lam)


def eq1_identity_residual(
    a: Matrix, b: Matrix, lam, mu
) -> ElementaryOperator:
    """The difference between the shifted antisymmetric map and its expansion.

    Expanding X -> (A-lam*I)X(B-mu*I) - (B-mu*I)X(A-lam*I) gives the
    unshifted map plus lam*(BX-XB) - mu*(AX-XA); this builds
    left-hand-side minus right-hand-side as one operator.  Its
    superoperator is identically zero, commuting or not, and the tests
    assert exactly that.
    """
    _need_square_pair(a, b)
    lam = as_scalar(lam)
    mu = as_scalar(mu)
    ident = Matrix.identity(a.rows)
    lhs = make_v_operator(a - lam * ident, b - mu * ident)
    rhs = (
        make_v_operator(a, b)
        + make_inner_derivation(b).scaled(lam)
        + make_inner_derivation(a).scaled(-mu)
    )
    return lhs + rhs.scaled(-1)


@dataclass(frozen=True)
class ReplayStep:
    """One basis vector pushed through the rank-one construction."""

    x: Matrix
    rank_one_op: Matrix
    sandwich_zero: bool
    image_zero: bool


@dataclass(frozen=True)
class ProofReplay:
    """Trace of the rank-one argument that forces A^m = 0.

    Given X -> AXB nilpotent of index m with B^m != 0: pick z with
    B^m z != 0, a coordinate functional f with f(B^m z) != 0, and for every
    basis vector x sandwich the rank-one operator x*f between A^m and B^m.
    The sandwich vanishes, and evaluating it at z cancels the nonzero
    scalar f(B^m z), leaving A^m x = 0.  Ranging x over the basis gives
    A^m = 0.
    """

    m: int
    z: Matrix
    f: Matrix
    f_bz: GaussianRational
    steps: tuple[ReplayStep, ...]
    a_power: Matrix
    a_power_zero: bool


def thm21_proof_replay(a: Matrix, b: Matrix) -> ProofReplay:
    """Replay the rank-one construction on a concrete nilpotent pair."""
    _need_square_pair(a, b)
    d = a.rows
    report = op_is_nilpotent(make_multiplication(a, b))
    if not report.nilpotent:
        raise PreconditionError("X -> AXB is not nilpotent; nothing to replay")
    m = report.index
    bm = b**m
    if bm.is_zero:
        raise PreconditionError(
            f"B^{m} = 0: B is nilpotent at the operator index, "
            "so the short-circuit branch applies and there is nothing to construct"
        )

    zi, zj = _first_nonzero_position(bm)
    z = column_vector(1 if r == zj else 0 for r in range(d))
    f = row_vector(1 if c == zi else 0 for c in range(d))
    f_bz = (f * (bm * z))[0, 0]
    if not f_bz:
        raise IntegrityError("chosen functional vanishes on B^m z")

    am = a**m
    steps = []
    for k in range(d):
        x = column_vector(1 if r == k else 0 for r in range(d))
        xf = rank_one(f, x)
        sandwich_zero = (am * xf * bm).is_zero
        image_zero = (am * x).is_zero
        if not (sandwich_zero and image_zero):
            raise IntegrityError(
                f"rank-one construction failed at basis vector {k}: "
                f"sandwich zero {sandwich_zero}, image zero {image_zero}"
            )
        steps.append(ReplayStep(x, xf, sandwich_zero, image_zero))

    if not am.is_zero:
        raise IntegrityError("every column of A^m vanished but A^m != 0")
    return ProofReplay(m, z, f, f_bz, tuple(steps), am, am.is_zero)


def _first_nonzero_position(mat: Matrix) -> tuple[int, int]:
    for i, j, e in mat.entries():
        if e:
            return i, j
    raise IntegrityError("nonzero position requested in a zero matrix")


def _need_square_pair(a: Matrix, b: Matrix) -> None:
    if not (a.is_square and b.is_square and a.rows == b.rows):
        raise ShapeError(
            f"need two square matrices of one size, got {a.rows}x{a.cols} and {b.rows}x{b.cols}"
        )
