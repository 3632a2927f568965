import random
from fractions import Fraction

import pytest

from triality import SquareMatrix


def signed_permutation(seed: int) -> SquareMatrix:
    """Deterministic signed permutation matrix of size 8 (orthogonal, det +-1)."""
    rng = random.Random(seed)
    perm = list(range(8))
    rng.shuffle(perm)
    rows = [[Fraction(0)] * 8 for _ in range(8)]
    for i in range(8):
        rows[i][perm[i]] = Fraction(rng.choice((-1, 1)))
    return SquareMatrix(rows)


@pytest.fixture
def signed_permutations():
    return signed_permutation
