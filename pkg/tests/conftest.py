"""Shared helpers for the test suite.

The SEED environment variable drives every randomized property suite (fixed
default, never read by core computations).
"""

from __future__ import annotations

import os
import random
from fractions import Fraction

import pytest

SEED = int(os.environ.get("SEED", "271828"))


@pytest.fixture
def rng():
    return random.Random(SEED)


def rng_for(tag: str) -> random.Random:
    return random.Random(f"{SEED}:{tag}")


def int_vector(rng, n, lo=-3, hi=3):
    return tuple(Fraction(rng.randint(lo, hi)) for _ in range(n))


def combination(rng, basis_vectors, ambient_dim, lo=-2, hi=2):
    out = [Fraction(0)] * ambient_dim
    for v in basis_vectors:
        c = Fraction(rng.randint(lo, hi))
        if c:
            for i, x in enumerate(v):
                if x:
                    out[i] += c * x
    return tuple(out)
