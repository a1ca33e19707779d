import json
import random

import pytest

from conftest import module, vec
from hvverma.errors import ParseError
from hvverma.groups import INT, ZSQRT2_REAL
from hvverma.sampling import random_weight_vector
from hvverma.scalars import FieldScalar
from hvverma.textio import (
    algebra_from_json,
    algebra_to_json,
    format_monomial,
    parse_algebra_element,
    parse_monomial,
    parse_vector,
    vector_from_json,
    vector_to_json,
)

SQ2 = FieldScalar.sqrt(2)


def test_monomial_text():
    M = module(INT, 0, 0, 0, 0, 0)
    m = M.monomial([2, 1], [3])
    assert format_monomial(m) == "I[-1] I[-2] L[-3] v"
    assert parse_monomial("I[-1] I[-2] L[-3] v", M) == m


def test_vector_format():
    M = module(INT, 2, 2, 0, 1, 0)
    v = M.basis_vector([], [1]) - M.basis_vector([1]) * 2
    assert str(v) == "L[-1] v - 2*I[-1] v"
    N = module(ZSQRT2_REAL, 0, 0, 0, 0, 0)
    w = N.basis_vector([SQ2, 1], [3], coeff=1 + SQ2)
    assert str(w) == "(1+√2)*I[-1] I[-√2] L[-3] v"
    assert str(M.zero()) == "0"


def test_parse_vector_normalises():
    M = module(INT, 0, 0, 0, 0, 0)
    # I commutes past L with a correction term
    assert vec(M, "L[-1] I[-2] v") == vec(M, "I[-2] L[-1] v + 2*I[-3] v")


def test_round_trip_random():
    rng = random.Random(5)
    for G in (INT, ZSQRT2_REAL):
        M = module(G, 1, 2, 3, 4, 5)
        for _ in range(50):
            v = random_weight_vector(M, rng)
            assert parse_vector(str(v), M) == v
            assert str(parse_vector(str(v), M)) == str(v)
            assert vector_from_json(json.loads(json.dumps(vector_to_json(v))), M) == v


def test_algebra_json_round_trip():
    u = parse_algebra_element("(1+√2)*L[-√2] - 2*CI + 1/3*I[2]", ZSQRT2_REAL)
    assert algebra_from_json(algebra_to_json(u), ZSQRT2_REAL) == u


@pytest.mark.parametrize(
    "text",
    ["I[-1] v +", "I[-1 v", "Q[-1] v", "I[-1]", "2*I[-1] w", "I[1/2] v", "(1+√2*I[-1] v"],
)
def test_parse_errors(text):
    M = module(INT, 0, 0, 0, 0, 0)
    with pytest.raises(ParseError):
        parse_vector(text, M)


def test_parse_error_has_position():
    M = module(INT, 0, 0, 0, 0, 0)
    with pytest.raises(ParseError) as exc:
        parse_vector("I[-1] v foo", M)
    assert exc.value.position is not None
