import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hvverma.algebra import (
    C,
    CI,
    CLI,
    AlgebraElement,
    Generator,
    HighestWeight,
    I,
    L,
    bracket,
    generators_up_to,
    theta,
    theta_inverse,
    transport_highest_weight,
)
from hvverma.errors import ContextError, ParseError, PreconditionError
from hvverma.groups import INT, ZSQRT2_LEX, ZSQRT2_REAL, OrderedGroup
from hvverma.scalars import FieldScalar
from hvverma.textio import parse_algebra_element

SQ2 = FieldScalar.sqrt(2)
F = FieldScalar


def el(g, coeff=1, group=INT):
    return AlgebraElement({g: coeff}, group)


def gen_strategy(G):
    idx = st.tuples(st.integers(-5, 5), st.integers(-5, 5)).map(G.from_coords)
    indexed = st.builds(Generator, st.sampled_from(["L", "I"]), idx)
    return st.one_of(indexed, st.sampled_from([C, CI, CLI]))


def test_bracket_examples():
    i = INT.element
    assert bracket(el(L(i(2))), el(L(i(-2)))) == AlgebraElement({L(i(0)): 4, C: F(1) / 2})
    assert bracket(el(I(i(1))), el(I(i(-1)))) == el(CI)
    assert bracket(el(L(i(1))), el(I(i(0)))).is_zero()
    assert bracket(el(C), el(L(i(5)))).is_zero()
    # [L_1, I_-1] = I_0 - 2 C_LI
    assert bracket(el(L(i(1))), el(I(i(-1)))) == AlgebraElement({I(i(0)): 1, CLI: -2})
    # [L_3, L_-3] = 6 L_0 + 2 C
    assert bracket(el(L(i(3))), el(L(i(-3)))) == AlgebraElement({L(i(0)): 6, C: 2})


def test_bracket_irrational():
    G = ZSQRT2_REAL
    s = G.element(SQ2)
    out = bracket(el(L(s), group=G), el(I(-s), group=G))
    # -(-√2) I_0 - (2 + √2) C_LI
    assert out == AlgebraElement({I(G.zero): SQ2, CLI: -(F(2) + SQ2)}, G)


def test_context_mismatch():
    with pytest.raises(ContextError):
        bracket(el(C, group=ZSQRT2_REAL), el(C, group=ZSQRT2_LEX))
    with pytest.raises(ContextError):
        AlgebraElement({L(ZSQRT2_REAL.element(1)): 1}, INT)


def test_generator_validation():
    with pytest.raises(ValueError):
        Generator("C", INT.element(1))
    with pytest.raises(ValueError):
        Generator("L")
    with pytest.raises(ValueError):
        Generator("X", INT.element(1))


@pytest.mark.parametrize("G", [INT, ZSQRT2_REAL, ZSQRT2_LEX])
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_antisymmetry_and_jacobi(G, data):
    if G is INT:
        gs = st.one_of(
            st.builds(Generator, st.sampled_from(["L", "I"]), st.integers(-5, 5).map(INT.element)),
            st.sampled_from([C, CI, CLI]),
        )
    else:
        gs = gen_strategy(G)
    x, y, z = (el(data.draw(gs), group=G) for _ in range(3))
    assert (bracket(x, y) + bracket(y, x)).is_zero()
    jac = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))
    assert jac.is_zero()


def test_grading():
    gens = [g for g in generators_up_to(INT, 4) if not g.is_central]
    for g in gens:
        for h in gens:
            out = bracket(el(g), el(h))
            s = g.index + h.index
            for k in out.terms:
                if k.is_central:
                    assert s.is_zero()
                else:
                    assert k.index == s


def test_theta_examples():
    x = F(3)
    G3 = OrderedGroup.cyclic(3)
    out = theta(x, el(L(INT.element(0))))
    assert out == AlgebraElement({L(G3.zero): F(1) / 3, C: (F(3) - F(1) / 3) / 24}, G3)
    assert theta(1, el(I(INT.element(3)))) == AlgebraElement({I(OrderedGroup.cyclic(1).element(3)): 1}, OrderedGroup.cyclic(1))
    G2 = OrderedGroup.cyclic(2)
    assert theta(2, el(I(INT.element(0)))) == AlgebraElement({I(G2.zero): F(1) / 2, CLI: F(1) / 2}, G2)
    with pytest.raises(PreconditionError):
        theta(0, el(C))


@pytest.mark.parametrize("x", [F(1), F(2), SQ2])
def test_theta_homomorphism(x):
    gens = list(generators_up_to(INT, 5))
    for g in gens:
        for h in gens:
            u, v = el(g), el(h)
            assert bracket(theta(x, u), theta(x, v)) == theta(x, bracket(u, v))


@pytest.mark.parametrize("x", [F(2), SQ2, F(1) / 2])
def test_theta_bijective_on_generators(x):
    gens = list(generators_up_to(INT, 5))
    images = [theta(x, el(g)) for g in gens]
    assert len({frozenset(i.terms) for i in images}) == len(gens)
    for g, img in zip(gens, images):
        assert theta_inverse(x, img) == el(g)


def test_transport_examples():
    hw = HighestWeight(5, 6, 7, 8, 9)
    assert transport_highest_weight(1, hw) == hw
    assert transport_highest_weight(2, HighestWeight(0, 0, 24, 0, 0)) == HighestWeight(F(3) / 2, 0, 48, 0, 0)
    assert transport_highest_weight(2, HighestWeight(0, 0, 0, 4, 0)) == HighestWeight(0, 0, 0, 2, 0)
    assert transport_highest_weight(SQ2, HighestWeight(0, 0, 0, 4, 0)).c_I == SQ2 * 2
    with pytest.raises(PreconditionError):
        transport_highest_weight(-1, hw)


def test_highest_weight_parse():
    hw = HighestWeight.parse("1/2, √2, 0, -3, 1+√2")
    assert hw.h == F(1) / 2 and hw.c_LI == F(1) + SQ2
    with pytest.raises(ParseError):
        HighestWeight.parse("1,2,3")


def test_algebra_text_round_trip():
    for text in ["4*L[0] + 1/2*C", "-I[3] + CLI", "(1+√2)*L[-√2] - 2*CI"]:
        G = ZSQRT2_REAL
        u = parse_algebra_element(text, G)
        assert parse_algebra_element(str(u), G) == u
    assert str(parse_algebra_element("4*L[0] + 1/2*C")) == "4*L[0] + 1/2*C"
