from __future__ import annotations

import random

import pytest

from hvverma.algebra import HighestWeight
from hvverma.groups import INT, ZSQRT2_LEX, ZSQRT2_REAL
from hvverma.scalars import FieldScalar
from hvverma.textio import parse_vector
from hvverma.verma import VermaModule

GROUPS = {"int": INT, "zsqrt2-real": ZSQRT2_REAL, "zsqrt2-lex": ZSQRT2_LEX}


def module(group, *hw) -> VermaModule:
    return VermaModule(group, HighestWeight(*hw))


def vec(M: VermaModule, text: str):
    return parse_vector(text, M)


def random_rational(rng: random.Random, lo: int = -9, hi: int = 9, nonzero: bool = False) -> FieldScalar:
    while True:
        x = FieldScalar(rng.randint(lo, hi)) / rng.randint(1, 5)
        if not (nonzero and x.is_zero()):
            return x


@pytest.fixture
def rng():
    return random.Random(20240611)
