import itertools
from decimal import Decimal, getcontext

import pytest

from hvverma.errors import ContextError, DegenerateGroupError, PreconditionError, SearchExhaustedError
from hvverma.groups import (
    INT,
    ZSQRT2_LEX,
    ZSQRT2_REAL,
    Dense,
    Discrete,
    OrderedGroup,
    group_from_config,
    preset,
)
from hvverma.scalars import FieldScalar, parse_scalar

getcontext().prec = 50
SQ2 = FieldScalar.sqrt(2)


def E(G, text):
    return G.element(parse_scalar(text))


def real(m, n):
    return Decimal(m) + Decimal(n) * Decimal(2).sqrt()


def brute_below(bound_mn, forbidden=(), offsets=(), H=12):
    """Height-ordered lattice scan with Decimal comparisons."""
    bound = real(*bound_mn)
    pts = []
    for m, n in itertools.product(range(-H, H + 1), repeat=2):
        if 0 < real(m, n) < bound:
            pts.append((max(abs(m), abs(n)), m, n))
    for _, m, n in sorted(pts):
        if (m, n) in forbidden:
            continue
        if any((cm - m, cn - n) in forbidden for cm, cn in offsets):
            continue
        return (m, n)


def test_compare_examples():
    assert ZSQRT2_REAL.compare(E(ZSQRT2_REAL, "√2"), E(ZSQRT2_REAL, "1")) == 1
    x = E(ZSQRT2_REAL, "3-√2")
    assert ZSQRT2_REAL.compare(x, x) == 0
    assert ZSQRT2_LEX.compare(E(ZSQRT2_LEX, "1"), E(ZSQRT2_LEX, "√2")) == -1
    assert ZSQRT2_LEX.compare(E(ZSQRT2_LEX, "100"), E(ZSQRT2_LEX, "√2-100")) == -1
    with pytest.raises(ContextError):
        ZSQRT2_REAL.compare(E(ZSQRT2_REAL, "1"), E(ZSQRT2_LEX, "1"))


@pytest.mark.parametrize("G", [ZSQRT2_REAL, ZSQRT2_LEX])
def test_order_axioms(G, rng):
    def r():
        return G.from_coords((rng.randint(-6, 6), rng.randint(-6, 6)))

    for _ in range(1000):
        x, y, z = r(), r(), r()
        c = G.compare(x, y)
        assert c == -G.compare(y, x)
        assert (c == 0) == (x == y)
        if x < y and y < z:
            assert x < z
        if x > y:
            assert x + z > y + z


def test_classify():
    assert INT.classify() == Discrete(INT.element(1))
    assert isinstance(ZSQRT2_REAL.classify(), Dense)
    assert ZSQRT2_LEX.classify() == Discrete(ZSQRT2_LEX.element(1))
    assert OrderedGroup.cyclic(-3).classify().minimal_positive.value == FieldScalar(3)
    with pytest.raises(DegenerateGroupError):
        OrderedGroup.cyclic(0).classify()


def test_discrete_gap_by_enumeration():
    a = ZSQRT2_LEX.minimal_positive()
    for x in ZSQRT2_LEX.enumerate(8):
        assert not (ZSQRT2_LEX.zero < x < a)


def test_dense_has_shrinking_sequence():
    x = E(ZSQRT2_REAL, "√2-1")
    prev = ZSQRT2_REAL.element(1)
    for _ in range(6):
        assert ZSQRT2_REAL.zero < x < prev
        prev, x = x, ZSQRT2_REAL.element(x.value * (SQ2 - 1))


def test_find_positive_below_examples():
    G = ZSQRT2_REAL
    assert G.find_positive_below(G.element(1)) == E(G, "√2-1")
    # the next admissible element in height order has height 2
    nxt = G.find_positive_below(G.element(1), forbidden={E(G, "√2-1")})
    assert nxt == E(G, "-2+2√2")
    assert G.height(nxt) == 2
    with pytest.raises(SearchExhaustedError):
        INT.find_positive_below(INT.element(1))
    with pytest.raises(PreconditionError):
        G.find_positive_below(G.element(-1))


def test_find_positive_below_matches_brute_force(rng):
    G = ZSQRT2_REAL
    for _ in range(60):
        bm, bn = rng.randint(-4, 4), rng.randint(-4, 4)
        if real(bm, bn) <= 0:
            continue
        forb = {(rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(rng.randint(0, 5))}
        offs = {(rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(rng.randint(0, 3))}
        got = G.find_positive_below(
            G.from_coords((bm, bn)),
            {G.from_coords(c) for c in forb},
            {G.from_coords(c) for c in offs},
        )
        assert G.coords(got.value) == brute_below((bm, bn), forb, offs)
        assert G.zero < got < G.from_coords((bm, bn))


def test_decompose():
    G, a = ZSQRT2_LEX, ZSQRT2_LEX.element(1)
    assert G.decompose(E(G, "5"), a).kind == "Za"
    assert G.decompose(E(G, "5"), a).n == 5
    assert G.decompose(E(G, "3+√2"), a).kind == "H+"
    assert G.decompose(E(G, "7-2√2"), a).kind == "H-"
    with pytest.raises(PreconditionError):
        G.decompose(E(G, "3"), G.element(2))


def test_element_membership():
    with pytest.raises(ContextError):
        INT.element(FieldScalar(1) / 2)
    with pytest.raises(ContextError):
        INT.element(SQ2)
    assert ZSQRT2_REAL.coords(FieldScalar(3) - SQ2 * 2) == (3, -2)
    assert ZSQRT2_REAL.height(FieldScalar(3) - SQ2 * 2) == 3


def test_presets_and_config():
    assert preset("zsqrt2") == ZSQRT2_REAL
    assert preset("zsqrt2-real", "lex") == ZSQRT2_LEX
    assert preset("int", "natural") == INT
    g = group_from_config({"radicand": 2, "generators": [[1, 0], [0, 1]], "order": "lex"})
    assert g == ZSQRT2_LEX
    with pytest.raises(KeyError):
        preset("nope")


def test_height_enumeration_order():
    first = [ZSQRT2_REAL.coords(x.value) for x in ZSQRT2_REAL.enumerate(1)]
    assert first[0] == (0, 0)
    assert first[1:] == sorted(first[1:])
    assert len(first) == 9
