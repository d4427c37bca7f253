"""Instance generators, exhaustive and randomized sweeps, converse-failure
searches, and the two bundled reference instances.

Everything here is deterministic: a GeneratorConfig (including its seed)
fixes every generated instance, every sweep order and therefore every
report byte-for-byte.  Trials draw from disjoint per-trial streams derived
from the master seed, so they could run in any order or in parallel and
still merge identically by trial index.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import jsonio
from .criteria import (
    fong_sourour_check,
    scalar_shift_witness,
    thm21_criterion,
    thm22_check,
    thm23_check,
)
from .errors import IntegrityError, PreconditionError
from .matrix import Matrix, basis_matrix, matrix_poly
from .nilpotency import char_poly, is_nilpotent
from .operators import (
    ElementaryOperator,
    make_v_operator,
    op_equal,
    op_is_nilpotent,
    zero_operator,
)
from .scalars import ZERO, GaussianRational, as_scalar, format_scalar

RNG_NAME = "python-random-mt19937"

_THM22 = "2.2"
_THM23 = "2.3"
_FONG = "fong_sourour"


@dataclass(frozen=True)
class GeneratorConfig:
    """Reproducible generation parameters.

    Numerators and denominators of generated entries are drawn from
    [-entry_bound, entry_bound] (denominators nonzero); `gaussian` allows
    nonzero imaginary parts.
    """

    dim: int
    entry_bound: int = 3
    seed: int = 0
    gaussian: bool = False

    def __post_init__(self):
        if self.dim < 1:
            raise PreconditionError(f"dimension must be >= 1, got {self.dim}")
        if self.entry_bound < 1:
            raise PreconditionError(f"entry bound must be >= 1, got {self.entry_bound}")
        if not 0 <= self.seed < 2**64:
            raise PreconditionError(f"seed must fit in 64 unsigned bits, got {self.seed}")

    def to_obj(self) -> dict:
        return {
            "dim": self.dim,
            "entry_bound": self.entry_bound,
            "seed": self.seed,
            "gaussian": self.gaussian,
        }


@dataclass
class SweepReport:
    """Outcome of a sweep or search run.

    A sweep passed exactly when `violations` is empty; converse failures
    are findings, not failures.
    """

    theorem: str
    mode: str
    config: dict
    instances_tested: int = 0
    hypothesis_instances: int = 0
    violations: list = field(default_factory=list)
    converse_failures: list = field(default_factory=list)
    rng: str = RNG_NAME

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_obj(self) -> dict:
        return {
            "theorem": self.theorem,
            "mode": self.mode,
            "config": self.config,
            "rng": self.rng,
            "instances_tested": self.instances_tested,
            "hypothesis_instances": self.hypothesis_instances,
            "violations": self.violations,
            "converse_failures": self.converse_failures,
            "passed": self.passed,
        }


# ---- raw randomness --------------------------------------------------------

def _sub_seed(seed: int, index: int) -> int:
    # disjoint deterministic per-trial streams
    return seed * 1_000_003 + index


def _rand_fraction(rng: random.Random, bound: int) -> Fraction:
    num = rng.randint(-bound, bound)
    den = 0
    while den == 0:
        den = rng.randint(-bound, bound)
    return Fraction(num, den)


def _rand_scalar(rng: random.Random, bound: int, gaussian: bool) -> GaussianRational:
    re = _rand_fraction(rng, bound)
    im = _rand_fraction(rng, bound) if gaussian else 0
    return GaussianRational(re, im)


def _rand_matrix(
    rng: random.Random, dim: int, bound: int, gaussian: bool
) -> Matrix:
    return Matrix(
        [[_rand_scalar(rng, bound, gaussian) for _ in range(dim)] for _ in range(dim)]
    )


def _random_unimodular(rng: random.Random, dim: int) -> tuple[Matrix, Matrix]:
    """An exactly invertible integer matrix and its exact inverse.

    Built as a short product of row shears and swaps; the inverse is
    maintained alongside, so no elimination is ever needed.
    """
    s = Matrix.identity(dim)
    s_inv = Matrix.identity(dim)
    if dim == 1:
        return s, s_inv
    for _ in range(dim + 2):
        i, j = rng.sample(range(dim), 2)
        if rng.random() < 0.25:
            e = _swap_matrix(dim, i, j)
            s = e * s
            s_inv = s_inv * e
        else:
            c = rng.choice((-2, -1, 1, 2))
            s = _shear_matrix(dim, i, j, c) * s
            s_inv = s_inv * _shear_matrix(dim, i, j, -c)
    return s, s_inv


def _shear_matrix(dim: int, i: int, j: int, c: int) -> Matrix:
    # adds c times row i to row j
    m = Matrix.identity(dim).row_list()
    m[j][i] = m[j][i] + as_scalar(c)
    return Matrix(m)


def _swap_matrix(dim: int, i: int, j: int) -> Matrix:
    m = Matrix.identity(dim).row_list()
    m[i], m[j] = m[j], m[i]
    return Matrix(m)


# ---- generators --------------------------------------------------------------

def _gen_nilpotent(rng: random.Random, dim: int, bound: int, gaussian: bool) -> Matrix:
    upper = Matrix.zero(dim).row_list()
    for i in range(dim):
        for j in range(i + 1, dim):
            upper[i][j] = _rand_scalar(rng, bound, gaussian)
    s, s_inv = _random_unimodular(rng, dim)
    return s * Matrix(upper) * s_inv


def gen_nilpotent(config: GeneratorConfig) -> Matrix:
    """An exactly nilpotent matrix: a conjugated strictly upper triangle."""
    rng = random.Random(config.seed)
    return _gen_nilpotent(rng, config.dim, config.entry_bound, config.gaussian)


def _poly_coeffs(
    rng: random.Random, dim: int, bound: int, gaussian: bool, zero_constant: bool
) -> list[GaussianRational]:
    coeffs = [_rand_scalar(rng, bound, gaussian) for _ in range(dim)]
    if zero_constant:
        coeffs[0] = ZERO
    return coeffs


def _commuting_tuple(
    rng: random.Random,
    seed_matrix: Matrix,
    nilpotent_flags,
    bound: int,
    gaussian: bool,
) -> list[Matrix]:
    dim = seed_matrix.rows
    return [
        matrix_poly(_poly_coeffs(rng, dim, bound, gaussian, flag), seed_matrix)
        for flag in nilpotent_flags
    ]


def gen_commuting_tuple(
    config: GeneratorConfig,
    seed_matrix: Matrix,
    poly_count: int,
    nilpotent_flags,
) -> list[Matrix]:
    """Pairwise-commuting matrices as random polynomials in one seed matrix.

    Polynomial degrees stay below the dimension.  Where a flag asks for a
    nilpotent output the polynomial gets a zero constant term, which makes
    the value nilpotent provided the seed matrix is; a flagged request on a
    non-nilpotent seed is an error.
    """
    nilpotent_flags = list(nilpotent_flags)
    if seed_matrix.shape != (config.dim, config.dim):
        raise PreconditionError(
            f"seed matrix is {seed_matrix.rows}x{seed_matrix.cols}, config says {config.dim}"
        )
    if len(nilpotent_flags) != poly_count:
        raise PreconditionError(
            f"{poly_count} polynomials requested but {len(nilpotent_flags)} flags given"
        )
    if any(nilpotent_flags) and not is_nilpotent(seed_matrix).nilpotent:
        raise PreconditionError(
            "a nilpotent output was requested but the seed matrix is not nilpotent"
        )
    rng = random.Random(config.seed)
    return _commuting_tuple(
        rng, seed_matrix, nilpotent_flags, config.entry_bound, config.gaussian
    )


# ---- exhaustive sweeps ---------------------------------------------------------

def _all_square_matrices(dim: int, entry_set) -> list[Matrix]:
    cells = dim * dim
    return [
        Matrix([list(combo[r * dim : (r + 1) * dim]) for r in range(dim)])
        for combo in itertools.product(entry_set, repeat=cells)
    ]


def sweep_thm21_exhaustive(dim: int = 2, entry_set=(-1, 0, 1)) -> SweepReport:
    """Check the length-one biconditional on every ordered pair of small
    matrices: X -> AXB nilpotent exactly when A or B is."""
    if dim != 2:
        raise PreconditionError("the exhaustive length-one sweep is fixed at dimension 2")
    entry_set = tuple(entry_set)
    report = SweepReport(
        theorem="2.1",
        mode="exhaustive",
        config={"dim": dim, "entry_set": [str(e) for e in entry_set]},
    )
    mats = _all_square_matrices(dim, entry_set)
    for a in mats:
        for b in mats:
            report.instances_tested += 1
            try:
                result = thm21_criterion(a, b)
            except IntegrityError as exc:
                report.violations.append(_pair_dump(a, b, str(exc)))
                continue
            if result.hypotheses_hold:
                report.hypothesis_instances += 1
            if not result.consistent:
                report.violations.append(_pair_dump(a, b, "implication failed"))
    return report


def sweep_fong_sourour_exhaustive(dim: int = 2, entry_set=(-1, 0, 1)) -> SweepReport:
    """Check the common-shift biconditional for X -> SX - XT on every
    ordered pair of small matrices."""
    if dim != 2:
        raise PreconditionError("the exhaustive common-shift sweep is fixed at dimension 2")
    entry_set = tuple(entry_set)
    report = SweepReport(
        theorem="1.1",
        mode="exhaustive",
        config={"dim": dim, "entry_set": [str(e) for e in entry_set]},
    )
    mats = _all_square_matrices(dim, entry_set)
    for s in mats:
        for t in mats:
            report.instances_tested += 1
            try:
                result = fong_sourour_check(s, t)
            except IntegrityError as exc:
                report.violations.append(_pair_dump(s, t, str(exc)))
                continue
            if result.hypotheses_hold:
                report.hypothesis_instances += 1
            if not result.consistent:
                report.violations.append(_pair_dump(s, t, "implication failed"))
    return report


def _pair_dump(a: Matrix, b: Matrix, reason: str) -> dict:
    return {
        "a": jsonio.matrix_to_obj(a),
        "b": jsonio.matrix_to_obj(b),
        "reason": reason,
    }


# ---- randomized sweeps -----------------------------------------------------------

def sweep_thm(theorem: str, config: GeneratorConfig, trials: int) -> SweepReport:
    """Randomized sweep of one criterion.

    Each trial builds an instance satisfying the hypotheses by construction
    and runs the checker; any inconsistency is a violation.  Each trial
    also runs one unconstrained random instance to harvest converse
    failures (conclusion holds, hypotheses do not).
    """
    theorem = _normalize_theorem(theorem)
    if trials < 1:
        raise PreconditionError(f"trials must be >= 1, got {trials}")
    report = SweepReport(theorem=theorem, mode="random", config=config.to_obj())
    for trial in range(trials):
        rng = random.Random(_sub_seed(config.seed, trial))
        _run_structured_trial(theorem, config, rng, trial, report)
        _run_random_trial(theorem, config, rng, trial, report)
    return report


def _normalize_theorem(theorem: str) -> str:
    name = str(theorem)
    if name in (_THM22, _THM23, _FONG):
        return name
    if name == "1.1":
        return _FONG
    raise PreconditionError(f"unknown sweep target {theorem!r}")


def _run_structured_trial(
    theorem: str,
    config: GeneratorConfig,
    rng: random.Random,
    trial: int,
    report: SweepReport,
) -> None:
    dim, bound, gaussian = config.dim, config.entry_bound, config.gaussian
    report.instances_tested += 1

    if theorem == _THM22:
        length = rng.randint(1, 3)
        seed_a = _gen_nilpotent(rng, dim, bound, gaussian)
        seed_b = _gen_nilpotent(rng, dim, bound, gaussian)
        a_tuple, b_tuple = [], []
        for _ in range(length):
            a_side = rng.random() < 0.5
            a_tuple.append(
                matrix_poly(_poly_coeffs(rng, dim, bound, gaussian, a_side), seed_a)
            )
            b_tuple.append(
                matrix_poly(_poly_coeffs(rng, dim, bound, gaussian, not a_side), seed_b)
            )
        result = thm22_check(a_tuple, b_tuple)
        dump = _tuple_dump(trial, "structured", a_tuple, b_tuple)
        if not result.hypotheses_hold:
            report.violations.append(
                dump | {"reason": "generator broke the hypotheses", "failures": list(result.hypothesis_failures)}
            )
            return
        report.hypothesis_instances += 1
        if not result.conclusion.nilpotent:
            report.violations.append(dump | {"reason": "hypotheses hold but operator not nilpotent"})
        if not _commutation_fact_holds(a_tuple, b_tuple):
            report.violations.append(dump | {"reason": "commutation fact failed"})
        return

    if theorem == _THM23:
        seed = _gen_nilpotent(rng, dim, bound, gaussian)
        n1 = matrix_poly(_poly_coeffs(rng, dim, bound, gaussian, True), seed)
        n2 = matrix_poly(_poly_coeffs(rng, dim, bound, gaussian, True), seed)
        lam = _rand_scalar(rng, bound, gaussian)
        mu = _rand_scalar(rng, bound, gaussian)
        ident = Matrix.identity(dim)
        a = lam * ident + n1
        b = mu * ident + n2
        result = thm23_check(a, b)
        dump = _pair_dump(a, b, "") | {"trial": trial, "kind": "structured"}
        if not result.hypotheses_hold:
            dump["reason"] = "generator broke the hypotheses"
            dump["failures"] = list(result.hypothesis_failures)
            report.violations.append(dump)
            return
        report.hypothesis_instances += 1
        if not result.conclusion.nilpotent:
            dump["reason"] = "hypotheses hold but operator not nilpotent"
            report.violations.append(dump)
        return

    # common-shift criterion: same scalar on both sides by construction
    n1 = _gen_nilpotent(rng, dim, bound, gaussian)
    n2 = _gen_nilpotent(rng, dim, bound, gaussian)
    lam = _rand_scalar(rng, bound, gaussian)
    ident = Matrix.identity(dim)
    s = lam * ident + n1
    t = lam * ident + n2
    try:
        result = fong_sourour_check(s, t)
    except IntegrityError as exc:
        report.violations.append(_pair_dump(s, t, str(exc)) | {"trial": trial})
        return
    if not result.hypotheses_hold:
        report.violations.append(
            _pair_dump(s, t, "generator broke the hypotheses")
            | {"trial": trial, "failures": list(result.hypothesis_failures)}
        )
        return
    report.hypothesis_instances += 1
    if not result.conclusion.nilpotent:
        report.violations.append(
            _pair_dump(s, t, "hypotheses hold but derivation not nilpotent") | {"trial": trial}
        )


def _run_random_trial(
    theorem: str,
    config: GeneratorConfig,
    rng: random.Random,
    trial: int,
    report: SweepReport,
) -> None:
    dim, bound, gaussian = config.dim, config.entry_bound, config.gaussian
    report.instances_tested += 1

    if theorem == _THM22:
        length = rng.randint(1, 2)
        a_tuple = [_rand_matrix(rng, dim, bound, gaussian) for _ in range(length)]
        b_tuple = [_rand_matrix(rng, dim, bound, gaussian) for _ in range(length)]
        result = thm22_check(a_tuple, b_tuple)
        if result.hypotheses_hold:
            report.hypothesis_instances += 1
        if not result.consistent:
            report.violations.append(
                _tuple_dump(trial, "random", a_tuple, b_tuple) | {"reason": "implication failed"}
            )
        elif result.conclusion.nilpotent and not result.hypotheses_hold:
            report.converse_failures.append(
                _tuple_dump(trial, "random", a_tuple, b_tuple)
                | {"failures": list(result.hypothesis_failures)}
            )
        return

    a = _rand_matrix(rng, dim, bound, gaussian)
    b = _rand_matrix(rng, dim, bound, gaussian)
    if theorem == _THM23:
        result = thm23_check(a, b)
        if result.hypotheses_hold:
            report.hypothesis_instances += 1
        if not result.consistent:
            report.violations.append(
                _pair_dump(a, b, "implication failed") | {"trial": trial}
            )
        elif result.conclusion.nilpotent and not result.hypotheses_hold:
            report.converse_failures.append(
                _pair_dump(a, b, "") | {"trial": trial, "kind": "random", "failures": list(result.hypothesis_failures)}
            )
        return

    try:
        result = fong_sourour_check(a, b)
    except IntegrityError as exc:
        report.violations.append(_pair_dump(a, b, str(exc)) | {"trial": trial})
        return
    if result.hypotheses_hold:
        report.hypothesis_instances += 1


def _tuple_dump(trial: int, kind: str, a_tuple, b_tuple) -> dict:
    return {
        "trial": trial,
        "kind": kind,
        "a_tuple": [jsonio.matrix_to_obj(m) for m in a_tuple],
        "b_tuple": [jsonio.matrix_to_obj(m) for m in b_tuple],
    }


def _commutation_fact_holds(a_tuple, b_tuple) -> bool:
    """Superoperators of the leading partial sum and the last term commute
    whenever both coefficient tuples commute within themselves."""
    dim = a_tuple[0].rows
    if len(a_tuple) == 1:
        leading = zero_operator(dim)
    else:
        leading = ElementaryOperator(dim, tuple(zip(a_tuple[:-1], b_tuple[:-1])))
    last = ElementaryOperator(dim, ((a_tuple[-1], b_tuple[-1]),))
    s1 = leading.superoperator()
    s2 = last.superoperator()
    return s1 * s2 == s2 * s1


# ---- converse-failure search -----------------------------------------------------

def search_converse_failures(
    theorem: str,
    config: GeneratorConfig,
    trials: int,
    seed_instances=(),
) -> SweepReport:
    """Hunt for instances where a criterion's conclusion holds without its
    hypotheses.

    `seed_instances` are (a, b) matrix pairs checked before the random
    trials; each is interpreted per target exactly like a generated pair.
    For the length-2 target the pair (a, b) stands for the antisymmetric
    operator X -> aXb - bXa; for the tuple criterion it stands for the
    coefficient tuples (a, -b) / (b, a) of that operator.  Random trials at
    dimension 3 alternate with instances of the structured parametric
    family known to produce witnesses.  Findings are reported without any
    completeness claim.
    """
    target = _normalize_search_target(theorem)
    if trials < 1:
        raise PreconditionError(f"trials must be >= 1, got {trials}")
    report = SweepReport(theorem=target, mode="search", config=config.to_obj())
    for k, (a, b) in enumerate(seed_instances):
        _search_one(target, a, b, {"trial": f"seed:{k}", "kind": "seeded"}, report)
    for trial in range(trials):
        rng = random.Random(_sub_seed(config.seed, trial))
        structured = config.dim == 3 and trial % 2 == 0
        if structured:
            a, b = _family_pair(rng, config)
            meta = {"trial": trial, "kind": "structured"}
        else:
            a = _rand_matrix(rng, config.dim, config.entry_bound, config.gaussian)
            b = _rand_matrix(rng, config.dim, config.entry_bound, config.gaussian)
            meta = {"trial": trial, "kind": "random"}
        _search_one(target, a, b, meta, report)
    return report


def _normalize_search_target(theorem: str) -> str:
    name = str(theorem)
    if name in ("2.1-extension", "2.1-ext"):
        return "2.1-extension"
    if name in (_THM22, _THM23):
        return name
    raise PreconditionError(f"unknown search target {theorem!r}")


def _search_one(target: str, a: Matrix, b: Matrix, meta: dict, report: SweepReport) -> None:
    report.instances_tested += 1
    if target == "2.1-extension":
        op = make_v_operator(a, b)
        failures = []
        for i, (ai, bi) in enumerate(op.terms):
            if not (is_nilpotent(ai).nilpotent or is_nilpotent(bi).nilpotent):
                failures.append(f"index {i + 1}: neither coefficient nilpotent")
        conclusion = op_is_nilpotent(op)
        hold = not failures
        if hold:
            report.hypothesis_instances += 1
        if conclusion.nilpotent and not hold:
            report.converse_failures.append(
                meta
                | {
                    "operator": jsonio.operator_to_obj(op),
                    "failures": failures,
                    "conclusion": jsonio.report_to_obj(conclusion),
                }
            )
        return

    if target == _THM22:
        a_tuple = [a, -b]
        b_tuple = [b, a]
        result = thm22_check(a_tuple, b_tuple)
        if result.hypotheses_hold:
            report.hypothesis_instances += 1
        if not result.consistent:
            report.violations.append(
                _tuple_dump(meta.get("trial", 0), meta.get("kind", ""), a_tuple, b_tuple)
                | {"reason": "implication failed"}
            )
        elif result.conclusion.nilpotent and not result.hypotheses_hold:
            report.converse_failures.append(
                meta
                | {
                    "a_tuple": [jsonio.matrix_to_obj(m) for m in a_tuple],
                    "b_tuple": [jsonio.matrix_to_obj(m) for m in b_tuple],
                    "failures": list(result.hypothesis_failures),
                    "conclusion": jsonio.report_to_obj(result.conclusion),
                }
            )
        return

    result = thm23_check(a, b)
    if result.hypotheses_hold:
        report.hypothesis_instances += 1
    if not result.consistent:
        report.violations.append(_pair_dump(a, b, "implication failed") | meta)
    elif result.conclusion.nilpotent and not result.hypotheses_hold:
        report.converse_failures.append(
            _pair_dump(a, b, "") | meta | {
                "failures": list(result.hypothesis_failures),
                "conclusion": jsonio.report_to_obj(result.conclusion),
            }
        )


def _family_pair(rng: random.Random, config: GeneratorConfig) -> tuple[Matrix, Matrix]:
    """A random member of the parametric 3x3 family, randomly conjugated."""
    bound, gaussian = config.entry_bound, config.gaussian
    while True:
        pa = _rand_scalar(rng, bound, gaussian)
        pb = _rand_scalar(rng, bound, gaussian)
        k = pa + pb
        if not k:
            continue
        pc = _rand_scalar(rng, bound, gaussian)
        if pb + pc:
            break
    pd = k - pc
    a, b = _family_matrices(pa, pb, pc, pd, k)
    s, s_inv = _random_unimodular(rng, 3)
    return s * a * s_inv, s * b * s_inv


# ---- reference instances -----------------------------------------------------------

@dataclass(frozen=True)
class ExampleRecord:
    """A verified reference instance: inputs, derived artifacts, checked facts."""

    name: str
    facts: dict
    artifacts: dict

    def to_obj(self) -> dict:
        obj = {"example": self.name}
        obj.update(self.facts)
        obj.update(self.artifacts)
        return obj


def example_3_1() -> ExampleRecord:
    """The 2x2 non-commuting shift pair whose antisymmetric operator cubes
    to its own negative: nonzero, so never nilpotent."""
    a = Matrix([[0, 1], [0, 0]])
    b = Matrix([[0, 0], [1, 0]])
    v = make_v_operator(a, b)
    s = v.superoperator()

    images = {}
    diagonal_action = True
    for i in range(2):
        for j in range(2):
            e = basis_matrix(2, i, j)
            out = v(e)
            images[f"E{i + 1}{j + 1}"] = out
            expected = Matrix([[e[1, 1], 0], [0, -e[0, 0]]])
            diagonal_action = diagonal_action and out == expected

    facts = {
        "AB_ne_BA": a * b != b * a,
        "A_sq_zero": (a**2).is_zero,
        "B_sq_zero": (b**2).is_zero,
        "ABA_eq_A": a * b * a == a,
        "BAB_eq_B": b * a * b == b,
        "S_cubed_plus_S_zero": (s**3 + s).is_zero,
        "V_diagonal_action": diagonal_action,
        "V_not_nilpotent": not op_is_nilpotent(v).nilpotent,
    }
    _require_all(facts, "3.1")
    artifacts = {
        "A": jsonio.matrix_to_obj(a),
        "B": jsonio.matrix_to_obj(b),
        "superoperator": jsonio.matrix_to_obj(s),
        "images": {key: jsonio.matrix_to_obj(m) for key, m in images.items()},
    }
    return ExampleRecord("3.1", facts, artifacts)


def example_3_2(a, b, c, d, k) -> ExampleRecord:
    """The parametric 3x3 commuting family: its antisymmetric operator is
    nilpotent although neither matrix is, and no scalar shift exists.

    Parameters must satisfy a + b = c + d = k, k != 0 and b + c != 0.
    """
    pa, pb, pc, pd, pk = (as_scalar(x) for x in (a, b, c, d, k))
    if pa + pb != pk:
        raise PreconditionError('constraint "a + b = k" violated')
    if pc + pd != pk:
        raise PreconditionError('constraint "c + d = k" violated')
    if not pk:
        raise PreconditionError('constraint "k != 0" violated')
    if not (pb + pc):
        raise PreconditionError('constraint "b + c != 0" violated')

    mat_a, mat_b = _family_matrices(pa, pb, pc, pd, pk)
    n = mat_a - mat_b
    v = make_v_operator(mat_a, mat_b)
    v_nb = make_v_operator(n, mat_b)
    n_report = is_nilpotent(n)
    tuple_check = thm22_check([n, -mat_b], [mat_b, n])
    v_report = op_is_nilpotent(v)

    facts = {
        "AB_eq_BA": mat_a * mat_b == mat_b * mat_a,
        "N_nilpotent_index_2": n_report.nilpotent and n_report.index == 2,
        "V_eq_V_NB": op_equal(v, v_nb),
        "tuple_hypotheses_hold": tuple_check.hypotheses_hold,
        "V_nilpotent": v_report.nilpotent,
        "A_not_nilpotent": not is_nilpotent(mat_a).nilpotent,
        "B_not_nilpotent": not is_nilpotent(mat_b).nilpotent,
        "no_shift_A": not scalar_shift_witness(mat_a).found,
        "no_shift_B": not scalar_shift_witness(mat_b).found,
    }
    _require_all(facts, "3.2")
    artifacts = {
        "params": {
            "a": format_scalar(pa),
            "b": format_scalar(pb),
            "c": format_scalar(pc),
            "d": format_scalar(pd),
            "k": format_scalar(pk),
        },
        "A": jsonio.matrix_to_obj(mat_a),
        "B": jsonio.matrix_to_obj(mat_b),
        "N": jsonio.matrix_to_obj(n),
        "char_poly_A": [format_scalar(cf) for cf in char_poly(mat_a)],
        "V_nilpotency": jsonio.report_to_obj(v_report),
    }
    return ExampleRecord("3.2", facts, artifacts)


def _family_matrices(a, b, c, d, k) -> tuple[Matrix, Matrix]:
    mat_a = Matrix([[a, b, 1], [c, d, 1], [0, 0, k]])
    mat_b = Matrix([[a, b, 0], [c, d, 0], [0, 0, k]])
    return mat_a, mat_b


def _require_all(facts: dict, name: str) -> None:
    failed = [key for key, ok in facts.items() if not ok]
    if failed:
        raise IntegrityError(f"reference instance {name} checks failed: {failed}")
