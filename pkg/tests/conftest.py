import random
from fractions import Fraction

import pytest

from logcubic.forms import PRIMAL, TernaryForm, monomial_basis


def rand_fraction(rng: random.Random, lo: int = -9, hi: int = 9, max_den: int = 9) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den))


def rand_nonzero_fraction(rng: random.Random, **kw) -> Fraction:
    while True:
        x = rand_fraction(rng, **kw)
        if x != 0:
            return x


def rand_form(rng: random.Random, degree: int, space: str = PRIMAL, density: float = 0.6) -> TernaryForm:
    terms = {
        mono: rand_fraction(rng)
        for mono in monomial_basis(degree)
        if rng.random() < density
    }
    return TernaryForm(degree, terms, space)


def rand_hesse_t(rng: random.Random, exclude_cubes: tuple[int, ...] = (1,)) -> Fraction:
    """Random rational t avoiding t^3 in exclude_cubes (and optionally 0)."""
    while True:
        t = rand_fraction(rng, -12, 12, 8)
        if t**3 not in exclude_cubes:
            return t


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20260808)
