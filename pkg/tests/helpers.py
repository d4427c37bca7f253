"""Seeded random value builders shared by the test modules."""

import random
from fractions import Fraction

from elemop import ElementaryOperator, GaussianRational, Matrix


def rand_fraction(rng: random.Random, bound: int = 3) -> Fraction:
    num = rng.randint(-bound, bound)
    den = rng.choice([d for d in range(-bound, bound + 1) if d != 0])
    return Fraction(num, den)


def rand_scalar(rng: random.Random, bound: int = 3, gaussian: bool = False) -> GaussianRational:
    im = rand_fraction(rng, bound) if gaussian else 0
    return GaussianRational(rand_fraction(rng, bound), im)


def rand_matrix(
    rng: random.Random,
    rows: int,
    cols: int | None = None,
    bound: int = 3,
    gaussian: bool = False,
) -> Matrix:
    cols = rows if cols is None else cols
    return Matrix(
        [[rand_scalar(rng, bound, gaussian) for _ in range(cols)] for _ in range(rows)]
    )


def rand_operator(
    rng: random.Random, dim: int, length: int, bound: int = 2, gaussian: bool = False
) -> ElementaryOperator:
    terms = tuple(
        (rand_matrix(rng, dim, bound=bound, gaussian=gaussian),
         rand_matrix(rng, dim, bound=bound, gaussian=gaussian))
        for _ in range(length)
    )
    return ElementaryOperator(dim, terms)
