import random
from fractions import Fraction

import pytest


def distinct_rationals(rng: random.Random, count: int, lo: int = -9, hi: int = 9) -> list[Fraction]:
    """``count`` pairwise distinct nonzero small rationals."""
    out: list[Fraction] = []
    while len(out) < count:
        x = Fraction(rng.randint(lo, hi), rng.randint(1, 5))
        if x and x not in out:
            out.append(x)
    return out


@pytest.fixture
def rng():
    return random.Random(20240611)
