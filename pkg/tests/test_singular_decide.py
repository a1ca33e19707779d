import pytest

from conftest import module, random_rational, vec
from hvverma.algebra import HighestWeight
from hvverma.decide import (
    ClaimedReducibleNoWitness,
    Irreducible,
    Reducible,
    UnknownUpToLevel,
    decide,
    i_span_closure_check,
)
from hvverma.errors import PreconditionError
from hvverma.groups import INT, ZSQRT2_LEX, ZSQRT2_REAL, OrderedGroup
from hvverma.scalars import FieldScalar, parse_scalar
from hvverma.singular import first_singular, is_singular, level_matrix, singular_search
from hvverma.textio import parse_vector

F = FieldScalar
SQ2 = FieldScalar.sqrt(2)


def det2(hw):
    return 2 * hw.h * hw.c_I - hw.h_I * (hw.h_I - 2 * hw.c_LI)


def test_is_singular_examples():
    M = module(INT, F(3), 2, F(7), 0, 1)
    assert is_singular(vec(M, "I[-1] v"))
    assert not is_singular(M.vh)
    N = module(INT, 2, 2, 5, 1, 0)
    assert is_singular(vec(N, "-2*I[-1] v + L[-1] v"))
    assert not is_singular(vec(N, "I[-1] v"))
    with pytest.raises(PreconditionError):
        is_singular(vec(N, "I[-1] v + L[-2] v"))


def test_level1_matrix_is_the_2x2_oracle():
    hw = HighestWeight(F(3), F(5), 1, F(2), F(7))
    M = module(INT, *hw.as_tuple())
    basis, rows, labels = level_matrix(M, 1, INT.element(1))
    assert [str(m) for m in basis] == ["I[-1] v", "L[-1] v"]
    # only L_1 and I_1 reach v_h from level 1
    assert rows == [[hw.h_I - 2 * hw.c_LI, 2 * hw.h], [hw.c_I, hw.h_I]]


def test_singular_search_fixtures(rng):
    for _ in range(5):
        h, c = random_rational(rng), random_rational(rng)
        (lk,) = singular_search(HighestWeight(h, 2, c, 0, 1), 1, 1)
        assert len(lk.kernel) == 1
        M = module(INT, h, 2, c, 0, 1)
        assert lk.kernel[0] == vec(M, "I[-1] v")
    (lk,) = singular_search(HighestWeight(2, 2, 9, 1, 0), 1, 1)
    M = module(INT, 2, 2, 9, 1, 0)
    assert lk.kernel == [vec(M, "-2*I[-1] v + L[-1] v")]
    with pytest.raises(PreconditionError):
        singular_search(HighestWeight(0, 0, 0, 0, 0), 1, 0)


def test_level1_kernel_iff_determinant(rng):
    for k in range(200):
        if k % 2:
            hw = HighestWeight(*(random_rational(rng, -3, 3) for _ in range(5)))
        else:
            # force a vanishing determinant half of the time
            hI, cI, cLI = (random_rational(rng, -3, 3) for _ in range(3))
            cI = cI if not cI.is_zero() else F(1)
            h = hI * (hI - 2 * cLI) / (2 * cI)
            hw = HighestWeight(h, hI, random_rational(rng), cI, cLI)
        (lk,) = singular_search(hw, 1, 1)
        assert bool(lk.kernel) == det2(hw).is_zero()


def test_search_results_are_singular():
    hw = HighestWeight(0, 0, 0, 0, 0)
    M = module(INT, *hw.as_tuple())
    for lk in singular_search(hw, 1, 3):
        for w in lk.kernel:
            assert w.module == M
            assert is_singular(w)


def test_generic_search_is_empty_fixture():
    # regression fixture, recorded from an exact run
    hw = HighestWeight(F(3) / 7, F(5) / 2, F(-2) / 3, F(4) / 5, F(1) / 3)
    assert first_singular(singular_search(hw, 1, 3)) is None


def test_decide_dense():
    assert isinstance(decide(module(ZSQRT2_REAL, 0, 0, 0, 1, 0)), Irreducible)
    assert isinstance(decide(module(ZSQRT2_REAL, 0, 0, 0, 0, 3)), Irreducible)
    v = decide(module(ZSQRT2_REAL, 0, 0, 0, 0, 0))
    assert isinstance(v, Reducible) and v.kind == "submodule-generator"
    assert all(not m.js and not m.is_vh for m in v.witness.terms)
    v = decide(module(ZSQRT2_REAL, 1, 3, 0, 0, 0))
    assert isinstance(v, ClaimedReducibleNoWitness)
    M = module(ZSQRT2_REAL, 1, 3, 0, 0, 0)
    assert parse_vector(v.evidence["image"], M) == M.vh * parse_scalar(v.evidence["expected"])
    assert "witness" not in v.to_json()


def test_decide_dense_with_samples():
    v = decide(module(ZSQRT2_REAL, 1, 2, 0, 0, 1), samples=5, seed=1)
    assert len(v.samples) == 5
    for u, r in v.samples:
        assert not r.b.is_zero() and r.trace.replay() == r.trace.outcome


def test_i_span_closure_rejects_L_words():
    M = module(ZSQRT2_REAL, 0, 0, 0, 0, 0)
    assert i_span_closure_check(M, vec(M, "I[-1] I[-√2] v"), 4)
    assert not i_span_closure_check(M, vec(M, "L[-1] v"), 2)


def test_decide_discrete():
    v = decide(module(INT, 2, 2, 0, 1, 0), 1)
    assert isinstance(v, Reducible) and v.level == 1
    assert str(v.witness) == "L[-1] v - 2*I[-1] v"
    assert isinstance(decide(module(INT, F(3) / 7, F(5) / 2, 1, F(4) / 5, F(1) / 3), 2), UnknownUpToLevel)
    with pytest.raises(PreconditionError):
        decide(module(INT, 0, 0, 0, 0, 0), 0)


def test_decide_discrete_transports_witness():
    # on Z+Z√2 lex the cyclic part is Z*1, transport is the identity there
    v = decide(module(ZSQRT2_LEX, 2, 2, 0, 1, 0), 1)
    assert isinstance(v, Reducible) and is_singular(v.witness)
    # over 2Z, hw = (4, 4, 0, 2, 0) transports to (2, 2, 0, 1, 0), which has a level-1 witness
    G = OrderedGroup.cyclic(2)
    v = decide(module(G, 4, 4, 0, 2, 0), 1)
    assert isinstance(v, Reducible) and v.level == 1
    assert is_singular(v.witness)
    assert all(e.value == 2 for m in v.witness.terms for e in m.entries())
