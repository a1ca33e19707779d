"""Totally ordered additive subgroups of Q or Q(sqrt d), rank 1 or 2.

Two translation-compatible orders are supported:

``real``
    compare through the real embedding ``sqrt(d) > 0`` (dense in rank 2);
``lex``
    compare the coordinate pair ``(b, a)`` of ``a + b*sqrt(d)``
    lexicographically, radical part first (discrete in rank 2).

Lattice points are enumerated by *height*, the largest absolute value of
their integer coordinates over the generators, and within one height in
lexicographic order of the coordinates.  Every search in the engine walks
this stream, so all choices are reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import (
    ContextError,
    DegenerateGroupError,
    PreconditionError,
    SearchExhaustedError,
)
from .scalars import FieldScalar, as_scalar

ORDER_KINDS = ("real", "lex")
DEFAULT_HEIGHT_CAP = 1000


@dataclass(frozen=True)
class Dense:
    def __str__(self):
        return "dense"


@dataclass(frozen=True)
class Discrete:
    minimal_positive: GroupElement

    def __str__(self):
        return f"discrete(a={self.minimal_positive})"


@dataclass(frozen=True)
class Decomposition:
    """Position of an element relative to the cyclic part ``Z*a``."""

    kind: str  # "Za", "H+" or "H-"
    n: int | None = None


@dataclass(frozen=True)
class OrderedGroup:
    radicand: int
    generators: tuple[FieldScalar, ...]
    order: str = "real"
    _solver: tuple = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        gens = tuple(as_scalar(g) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        if self.order not in ORDER_KINDS:
            raise ValueError(f"unknown order kind {self.order!r}; expected one of {ORDER_KINDS}")
        if not 1 <= len(gens) <= 2:
            raise ValueError("only groups of rank 1 or 2 are supported")
        for g in gens:
            if g.d not in (1, self.radicand):
                raise ValueError(f"generator {g} does not lie in Q(√{self.radicand})")
        if len(gens) == 2:
            (a1, b1), (a2, b2) = ((g.a, g.b) for g in gens)
            det = a1 * b2 - a2 * b1
            if det == 0:
                raise ValueError("rank-2 generators must be linearly independent over Q")
            object.__setattr__(self, "_solver", (det, a1, b1, a2, b2))
        else:
            object.__setattr__(self, "_solver", ())

    # -- construction helpers -----------------------------------------
    @classmethod
    def cyclic(cls, x, order: str = "real") -> OrderedGroup:
        """The rank-1 group ``Z*x``."""
        if isinstance(x, GroupElement):
            order = x.group.order
            radicand = x.group.radicand
            x = x.value
        else:
            x = as_scalar(x)
            radicand = x.d
        return cls(radicand, (x,), order)

    @property
    def rank(self) -> int:
        return len(self.generators)

    def coords(self, value) -> tuple[int, ...] | None:
        """Integer coordinates of ``value`` over the generators, or None."""
        v = as_scalar(value)
        if v.d not in (1, self.radicand):
            return None
        if self.rank == 1:
            g = self.generators[0]
            if g.is_zero():
                return (0,) if v.is_zero() else None
            q = v / g
            if q.b != 0 or q.a.denominator != 1:
                return None
            return (int(q.a),)
        det, a1, b1, a2, b2 = self._solver
        m = (v.a * b2 - a2 * v.b) / det
        n = (a1 * v.b - v.a * b1) / det
        if m.denominator != 1 or n.denominator != 1:
            return None
        return (int(m), int(n))

    def contains(self, value) -> bool:
        return self.coords(value) is not None

    def element(self, value) -> GroupElement:
        v = value.value if isinstance(value, GroupElement) else as_scalar(value)
        if self.coords(v) is None:
            raise ContextError(f"{v} is not in the group generated by {self.describe()}")
        return GroupElement(v, self)

    def from_coords(self, coords: Iterable[int]) -> GroupElement:
        total = FieldScalar(0)
        for c, g in zip(coords, self.generators):
            total = total + g * c
        return GroupElement(total, self)

    @property
    def zero(self) -> GroupElement:
        return GroupElement(FieldScalar(0), self)

    def height(self, value) -> int:
        c = self.coords(value.value if isinstance(value, GroupElement) else value)
        if c is None:
            raise ContextError(f"{value} is not in this group")
        return max(abs(k) for k in c)

    def describe(self) -> str:
        gens = ", ".join(str(g) for g in self.generators)
        return f"<{gens}> ({self.order})"

    # -- order ------------------------------------------------------------
    def sign_of(self, v: FieldScalar) -> int:
        if self.order == "real":
            return v.sign()
        if v.b != 0:
            return 1 if v.b > 0 else -1
        return (v.a > 0) - (v.a < 0)

    def compare_values(self, x: FieldScalar, y: FieldScalar) -> int:
        if self.order == "lex":
            if x.b != y.b:
                return 1 if x.b > y.b else -1
            return (x.a > y.a) - (x.a < y.a)
        return (x - y).sign()

    def compare(self, x: GroupElement, y: GroupElement) -> int:
        """-1, 0 or 1 as ``x`` precedes, equals or follows ``y``."""
        if x.group != self or y.group != self:
            raise ContextError("compare() needs two elements of this group")
        return self.compare_values(x.value, y.value)

    # -- dense / discrete -----------------------------------------------
    def classify(self) -> Dense | Discrete:
        if all(g.is_zero() for g in self.generators):
            raise DegenerateGroupError("the trivial group {0} has no positive elements")
        if self.rank == 1:
            g = GroupElement(self.generators[0], self)
            return Discrete(g if g.sign() > 0 else -g)
        if self.order == "real":
            # two Q-independent reals generate a dense subgroup of R
            return Dense()
        # lex: the minimal positive element lives on the rational line b == 0
        (g1, g2) = self.generators
        m, n = g2.b, -g1.b
        scale = math.lcm(m.denominator, n.denominator)
        mi, ni = int(m * scale), int(n * scale)
        k = math.gcd(mi, ni)
        a = self.from_coords((mi // k, ni // k))
        return Discrete(a if a.sign() > 0 else -a)

    def is_dense(self) -> bool:
        return isinstance(self.classify(), Dense)

    def minimal_positive(self) -> GroupElement:
        kind = self.classify()
        if not isinstance(kind, Discrete):
            raise PreconditionError("the order is dense; there is no minimal positive element")
        return kind.minimal_positive

    # -- enumeration ---------------------------------------------------
    def coords_at_height(self, h: int) -> Iterator[tuple[int, ...]]:
        if h == 0:
            yield (0,) * self.rank
            return
        if self.rank == 1:
            yield (-h,)
            yield (h,)
            return
        for m in range(-h, h + 1):
            if abs(m) == h:
                for n in range(-h, h + 1):
                    yield (m, n)
            else:
                yield (m, -h)
                yield (m, h)

    def enumerate(self, max_height: int) -> Iterator[GroupElement]:
        for h in range(max_height + 1):
            for c in self.coords_at_height(h):
                yield self.from_coords(c)

    def positive_stream(self, cap: int = DEFAULT_HEIGHT_CAP) -> Iterator[GroupElement]:
        for h in range(1, cap + 1):
            for c in self.coords_at_height(h):
                x = self.from_coords(c)
                if self.sign_of(x.value) > 0:
                    yield x

    def find_positive_below(
        self,
        bound: GroupElement,
        forbidden: Iterable = (),
        offsets: Iterable = (),
        cap: int = DEFAULT_HEIGHT_CAP,
    ) -> GroupElement:
        """First ``x`` of the height stream with ``0 < x < bound``.

        ``x`` itself must avoid ``forbidden`` and so must ``c - x`` for each
        ``c`` in ``offsets``.
        """
        bound = self.element(bound)
        if bound.sign() <= 0:
            raise PreconditionError(f"bound {bound} is not positive")
        bad = {_value(f) for f in forbidden}
        offs = [_value(c) for c in offsets]
        kind = self.classify()
        if isinstance(kind, Discrete) and self.compare_values(bound.value, kind.minimal_positive.value) <= 0:
            raise SearchExhaustedError(f"no group element lies strictly between 0 and {bound}")
        for x in self.positive_stream(cap):
            if self.compare_values(x.value, bound.value) >= 0:
                continue
            if x.value in bad:
                continue
            if any((c - x.value) in bad for c in offs):
                continue
            return x
        raise SearchExhaustedError(f"no admissible element below {bound} up to height {cap}")

    def decompose(self, x: GroupElement, a: GroupElement) -> Decomposition:
        """Place ``x`` in ``Z*a``, ``H+`` (above every ``n*a``) or ``H-``."""
        kind = self.classify()
        if not isinstance(kind, Discrete) or kind.minimal_positive.value != _value(a):
            raise PreconditionError(f"{a} is not the minimal positive element of {self.describe()}")
        xv, av = _value(x), _value(a)
        q = xv / av
        if q.b == 0 and q.a.denominator == 1:
            return Decomposition("Za", int(q.a))
        # x - n*a would otherwise fall strictly between 0 and a
        return Decomposition("H+" if self.sign_of(xv) > 0 else "H-")


def _value(x) -> FieldScalar:
    return x.value if isinstance(x, GroupElement) else as_scalar(x)


class GroupElement:
    """An element of an :class:`OrderedGroup`; Python ordering uses the group order."""

    __slots__ = ("value", "group")

    def __init__(self, value: FieldScalar, group: OrderedGroup):
        self.value = value
        self.group = group

    def _check(self, other: GroupElement):
        if not isinstance(other, GroupElement):
            raise TypeError(f"expected a GroupElement, got {type(other).__name__}")
        if other.group is not self.group and other.group != self.group:
            raise ContextError("group elements from different groups")

    def __add__(self, other):
        self._check(other)
        return GroupElement(self.value + other.value, self.group)

    def __sub__(self, other):
        self._check(other)
        return GroupElement(self.value - other.value, self.group)

    def __neg__(self):
        return GroupElement(-self.value, self.group)

    def __mul__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        return GroupElement(self.value * n, self.group)

    __rmul__ = __mul__

    def sign(self) -> int:
        return self.group.sign_of(self.value)

    def is_zero(self) -> bool:
        return self.value.is_zero()

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.value == other.value and (self.group is other.group or self.group == other.group)

    def __hash__(self):
        return hash(self.value)

    def _cmp(self, other) -> int:
        self._check(other)
        return self.group.compare_values(self.value, other.value)

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"GroupElement({self.value}, {self.group.describe()})"


def compare(x: GroupElement, y: GroupElement) -> int:
    if x.group != y.group:
        raise ContextError("compare() across different groups")
    return x.group.compare(x, y)


SQRT2 = FieldScalar.sqrt(2)
INT = OrderedGroup(1, (FieldScalar(1),), "real")
ZSQRT2_REAL = OrderedGroup(2, (FieldScalar(1), SQRT2), "real")
ZSQRT2_LEX = OrderedGroup(2, (FieldScalar(1), SQRT2), "lex")

PRESETS = {
    "int": INT,
    "zsqrt2-real": ZSQRT2_REAL,
    "zsqrt2-lex": ZSQRT2_LEX,
}


def preset(name: str, order: str | None = None) -> OrderedGroup:
    """Look up a named group; ``order`` overrides the preset's order kind."""
    if name == "zsqrt2":
        name = "zsqrt2-real"
    if name not in PRESETS:
        raise KeyError(f"unknown group preset {name!r}; choose from {sorted(PRESETS)}")
    g = PRESETS[name]
    if order is not None:
        order = "real" if order in ("natural", "real") else order
        if order != g.order:
            g = OrderedGroup(g.radicand, g.generators, order)
    return g


def group_from_config(cfg: dict) -> OrderedGroup:
    """Build a group from ``{"radicand", "generators", "order"}``.

    Generators are scalar strings or ``[a, b]`` coordinate pairs meaning
    ``a + b*sqrt(d)``.
    """
    d = int(cfg.get("radicand", 1))
    gens = []
    for g in cfg["generators"]:
        if isinstance(g, (list, tuple)):
            a, b = (Fraction(str(t)) for t in g)
            gens.append(FieldScalar(a, b, d) if d != 1 else FieldScalar(a + b))
        else:
            gens.append(as_scalar(str(g)))
    order = cfg.get("order", "real")
    order = "real" if order == "natural" else order
    return OrderedGroup(d, tuple(gens), order)
