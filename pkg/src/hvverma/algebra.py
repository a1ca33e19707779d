"""The generalized Heisenberg-Virasoro algebra L[G].

Basis ``L_mu, I_mu`` (``mu`` in ``G``) and the central elements ``C``,
``C_I``, ``C_LI`` with

    [L_mu, L_nu] = (mu - nu) L_{mu+nu} + delta_{mu,-nu} (mu^3 - mu)/12 C
    [L_mu, I_nu] = -nu I_{mu+nu} - delta_{mu,-nu} (mu^2 + mu) C_LI
    [I_mu, I_nu] = mu delta_{mu,-nu} C_I

Also the rescaling isomorphism ``theta_x`` from the integer-indexed algebra
onto ``L[Z x]`` and the induced transport of highest weights.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import ContextError, ParseError, PreconditionError
from .groups import INT, GroupElement, OrderedGroup
from .scalars import ONE, ZERO, FieldScalar, as_scalar

TAGS = ("L", "I", "C", "CI", "CLI")
CENTRAL_TAGS = ("C", "CI", "CLI")
_TAG_RANK = {t: k for k, t in enumerate(TAGS)}


class Generator:
    """A basis element; central tags carry no index."""

    __slots__ = ("tag", "index", "_hash")

    def __init__(self, tag: str, index: GroupElement | None = None):
        if tag not in TAGS:
            raise ValueError(f"unknown generator tag {tag!r}")
        if (tag in CENTRAL_TAGS) != (index is None):
            raise ValueError(f"{tag} {'takes no' if tag in CENTRAL_TAGS else 'needs an'} index")
        self.tag = tag
        self.index = index
        self._hash = hash((tag, index))

    @property
    def is_central(self) -> bool:
        return self.index is None

    def __eq__(self, other):
        if not isinstance(other, Generator):
            return NotImplemented
        return self.tag == other.tag and self.index == other.index

    def __hash__(self):
        return self._hash

    def sort_key(self):
        if self.index is None:
            return (_TAG_RANK[self.tag], 0, None)
        return (_TAG_RANK[self.tag], 1, _OrderKey(self.index))

    def __str__(self):
        if self.index is None:
            return self.tag
        return f"{self.tag}[{self.index}]"

    def __repr__(self):
        return f"Generator({self})"


class _OrderKey:
    __slots__ = ("x",)

    def __init__(self, x: GroupElement):
        self.x = x

    def __lt__(self, other):
        return self.x < other.x

    def __eq__(self, other):
        return self.x == other.x


def L(index: GroupElement) -> Generator:
    return Generator("L", index)


def I(index: GroupElement) -> Generator:  # noqa: E743
    return Generator("I", index)


C = Generator("C")
CI = Generator("CI")
CLI = Generator("CLI")


class AlgebraElement:
    """Finite linear combination of generators with no stored zeros."""

    __slots__ = ("terms", "group")

    def __init__(self, terms: Mapping[Generator, FieldScalar] | None = None, group: OrderedGroup = INT):
        self.group = group
        clean: dict[Generator, FieldScalar] = {}
        for g, c in (terms or {}).items():
            if g.index is not None and g.index.group != group:
                raise ContextError(f"generator {g} is not indexed by {group.describe()}")
            c = as_scalar(c)
            if not c.is_zero():
                clean[g] = c
        self.terms = clean

    @classmethod
    def of(cls, g: Generator, coeff=ONE, group: OrderedGroup | None = None) -> AlgebraElement:
        if group is None:
            group = g.index.group if g.index is not None else INT
        return cls({g: coeff}, group)

    @classmethod
    def zero(cls, group: OrderedGroup = INT) -> AlgebraElement:
        return cls({}, group)

    def _check(self, other: AlgebraElement):
        if other.group != self.group:
            raise ContextError("algebra elements over different groups")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for g, c in other.terms.items():
            out[g] = out.get(g, ZERO) + c
        return AlgebraElement(out, self.group)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return AlgebraElement({g: -c for g, c in self.terms.items()}, self.group)

    def __mul__(self, scalar):
        s = as_scalar(scalar)
        return AlgebraElement({g: c * s for g, c in self.terms.items()}, self.group)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return self.group == other.group and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def items(self) -> list[tuple[Generator, FieldScalar]]:
        """Terms in canonical (tag, index) order."""
        return sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())

    def __str__(self):
        from .textio import format_algebra_element

        return format_algebra_element(self)

    def __repr__(self):
        return f"AlgebraElement({self})"


def _add(out: dict, g: Generator, c: FieldScalar):
    if c.is_zero():
        return
    v = out.get(g)
    v = c if v is None else v + c
    if v.is_zero():
        out.pop(g, None)
    else:
        out[g] = v


def bracket_generators(x: Generator, y: Generator) -> dict[Generator, FieldScalar]:
    """Structure constants: ``[x, y]`` as a sparse coefficient map."""
    out: dict[Generator, FieldScalar] = {}
    if x.is_central or y.is_central:
        return out
    mu, nu = x.index, y.index
    opposite = (mu.value + nu.value).is_zero()
    m = mu.value
    if x.tag == "L" and y.tag == "L":
        _add(out, L(mu + nu), m - nu.value)
        if opposite:
            _add(out, C, (m * m * m - m) / 12)
    elif x.tag == "L" and y.tag == "I":
        _add(out, I(mu + nu), -nu.value)
        if opposite:
            _add(out, CLI, -(m * m + m))
    elif x.tag == "I" and y.tag == "L":
        for g, c in bracket_generators(y, x).items():
            out[g] = -c
    else:
        if opposite:
            _add(out, CI, m)
    return out


def bracket(u: AlgebraElement, v: AlgebraElement) -> AlgebraElement:
    """Bilinear extension of the defining relations."""
    u._check(v)
    out: dict[Generator, FieldScalar] = {}
    for g, a in u.terms.items():
        if g.is_central:
            continue
        for h, b in v.terms.items():
            if h.is_central:
                continue
            ab = a * b
            for k, c in bracket_generators(g, h).items():
                _add(out, k, ab * c)
    return AlgebraElement(out, u.group)


@dataclass(frozen=True)
class HighestWeight:
    h: FieldScalar
    h_I: FieldScalar
    c: FieldScalar
    c_I: FieldScalar
    c_LI: FieldScalar

    def __post_init__(self):
        for name in ("h", "h_I", "c", "c_I", "c_LI"):
            object.__setattr__(self, name, as_scalar(getattr(self, name)))

    @classmethod
    def parse(cls, text: str) -> HighestWeight:
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 5:
            raise ParseError("highest weight needs five comma-separated scalars", text)
        return cls(*(as_scalar(p) for p in parts))

    def as_tuple(self) -> tuple[FieldScalar, ...]:
        return (self.h, self.h_I, self.c, self.c_I, self.c_LI)

    def central_value(self, tag: str) -> FieldScalar:
        return {"C": self.c, "CI": self.c_I, "CLI": self.c_LI}[tag]

    def __str__(self):
        return ",".join(str(x) for x in self.as_tuple())


def _theta_table(x: FieldScalar, tag: str, i_is_zero: bool):
    """``(scale, central_tag, central_coeff)`` for the image of one basis element."""
    xi = x.inverse()
    if tag == "L":
        return xi, ("C" if i_is_zero else None), (x - xi) / 24
    if tag == "I":
        return xi, ("CLI" if i_is_zero else None), ONE - xi
    if tag == "C":
        return x, None, ZERO
    if tag == "CI":
        return xi, None, ZERO
    return ONE, None, ZERO


def _scalar_of(x) -> FieldScalar:
    return x.value if isinstance(x, GroupElement) else as_scalar(x)


def theta(x, u: AlgebraElement, target: OrderedGroup | None = None) -> AlgebraElement:
    """Image of an integer-indexed element under the isomorphism onto ``L[Z x]``.

    ``L_i -> x^-1 L_{ix} + delta_{i,0} (x - x^-1)/24 C``,
    ``I_i -> x^-1 I_{ix} + delta_{i,0} (1 - x^-1) C_LI``,
    ``C -> x C``, ``C_I -> x^-1 C_I``, ``C_LI -> C_LI``.
    """
    xv = _scalar_of(x)
    if xv.is_zero():
        raise PreconditionError("theta needs x != 0")
    if target is None:
        target = x.group if isinstance(x, GroupElement) else OrderedGroup.cyclic(xv)
    out: dict[Generator, FieldScalar] = {}
    for g, coeff in u.terms.items():
        if g.is_central:
            scale, _, _ = _theta_table(xv, g.tag, False)
            _add(out, g, coeff * scale)
            continue
        if not g.index.value.is_integer():
            raise PreconditionError(f"theta is defined on integer indices, got {g}")
        i = int(g.index.value.a)
        scale, ctag, ccoef = _theta_table(xv, g.tag, i == 0)
        _add(out, Generator(g.tag, target.element(xv * i)), coeff * scale)
        if ctag is not None:
            _add(out, Generator(ctag), coeff * ccoef)
    return AlgebraElement(out, target)


def theta_inverse(x, w: AlgebraElement, source: OrderedGroup = INT) -> AlgebraElement:
    """Pull an element of ``L[Z x]`` back to integer indexing.

    Derived from the same table as :func:`theta`: the table is triangular
    (zero modes pick up one central term), so each basis image is inverted
    directly.
    """
    xv = _scalar_of(x)
    if xv.is_zero():
        raise PreconditionError("theta needs x != 0")
    out: dict[Generator, FieldScalar] = {}
    for g, coeff in w.terms.items():
        if g.is_central:
            scale, _, _ = _theta_table(xv, g.tag, False)
            _add(out, g, coeff / scale)
            continue
        q = g.index.value / xv
        if not q.is_integer():
            raise PreconditionError(f"{g} is not indexed by Z*{xv}")
        i = int(q.a)
        scale, ctag, ccoef = _theta_table(xv, g.tag, i == 0)
        # theta(g_i) = scale*g_{ix} + ccoef*Z  =>  g_{ix} = (theta(g_i) - ccoef*Z)/scale
        _add(out, Generator(g.tag, source.element(i)), coeff / scale)
        if ctag is not None:
            zscale, _, _ = _theta_table(xv, ctag, False)
            _add(out, Generator(ctag), -coeff * ccoef / (scale * zscale))
    return AlgebraElement(out, source)


def transport_highest_weight(x, hw: HighestWeight) -> HighestWeight:
    """Highest weight of ``U(L[Z x]) v_h`` viewed as a module over the integer-indexed algebra."""
    if isinstance(x, GroupElement):
        if x.sign() <= 0:
            raise PreconditionError(f"transport needs x > 0, got {x}")
        xv = x.value
    else:
        xv = as_scalar(x)
        if xv.sign() <= 0:
            raise PreconditionError(f"transport needs x > 0, got {xv}")
    xi = xv.inverse()
    return HighestWeight(
        xi * hw.h + (xv - xi) / 24 * hw.c,
        xi * hw.h_I + (ONE - xi) * hw.c_LI,
        xv * hw.c,
        xi * hw.c_I,
        hw.c_LI,
    )


def generators_up_to(group: OrderedGroup, bound: int) -> Iterable[Generator]:
    """``L_i, I_i`` for ``|i| <= bound`` on integer multiples of the first generator, then centrals."""
    g = group.generators[0]
    for i in range(-bound, bound + 1):
        idx = group.element(g * i)
        yield L(idx)
        yield I(idx)
    yield C
    yield CI
    yield CLI
