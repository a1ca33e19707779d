"""Verma modules over L[G] in PBW normal form.

A basis vector is ``I_{-p_s} ... I_{-p_1} L_{-j_1} ... L_{-j_k} v_h`` with
all entries positive in the group order, the ``I`` part to the left and both
parts sorted.  :class:`Monomial` stores the two multisets as ascending
tuples, which is exactly the left-to-right reading of the word.

The action of a generator on a word is computed by the rewrite
``g X w = X (g w) + [g, X] w`` applied to the leftmost factor ``X``, with
base cases at ``v_h``.  Results are memoised per module.
"""

from __future__ import annotations

import bisect
import functools
from typing import Iterable, Iterator, Mapping

from .algebra import (
    AlgebraElement,
    Generator,
    HighestWeight,
    I,
    L,
    bracket_generators,
    theta,
    transport_highest_weight,
)
from .errors import ContextError, PreconditionError
from .groups import INT, Discrete, GroupElement, OrderedGroup
from .scalars import ONE, ZERO, FieldScalar, as_scalar


class Monomial:
    __slots__ = ("ps", "js", "_hash")

    def __init__(self, ps: tuple[GroupElement, ...] = (), js: tuple[GroupElement, ...] = ()):
        self.ps = ps
        self.js = js
        self._hash = hash((ps, js))

    @classmethod
    def make(cls, ps: Iterable[GroupElement] = (), js: Iterable[GroupElement] = ()) -> Monomial:
        ps, js = tuple(sorted(ps)), tuple(sorted(js))
        for x in ps + js:
            if x.sign() <= 0:
                raise PreconditionError(f"monomial entries must be positive, got {x}")
        return cls(ps, js)

    @property
    def is_vh(self) -> bool:
        return not self.ps and not self.js

    def __len__(self):
        return len(self.ps) + len(self.js)

    def entries(self) -> tuple[GroupElement, ...]:
        return self.ps + self.js

    def degree_offset(self) -> FieldScalar:
        total = ZERO
        for x in self.ps:
            total = total + x.value
        for x in self.js:
            total = total + x.value
        return total

    def with_p(self, p: GroupElement) -> Monomial:
        ps = list(self.ps)
        bisect.insort(ps, p)
        return Monomial(tuple(ps), self.js)

    def __eq__(self, other):
        if not isinstance(other, Monomial):
            return NotImplemented
        return self.ps == other.ps and self.js == other.js

    def __hash__(self):
        return self._hash

    def __str__(self):
        from .textio import format_monomial

        return format_monomial(self)

    def __repr__(self):
        return f"Monomial({self})"


VH = Monomial()


def _acc(out: dict, m: Monomial, c: FieldScalar):
    v = out.get(m)
    v = c if v is None else v + c
    if v.is_zero():
        out.pop(m, None)
    else:
        out[m] = v


def _cmp_tuples(xs, ys) -> int:
    for x, y in zip(xs, ys):
        c = x.group.compare_values(x.value, y.value)
        if c:
            return c
    return (len(xs) > len(ys)) - (len(xs) < len(ys))


def monomial_cmp(m1: Monomial, m2: Monomial) -> int:
    """Canonical order: weight, then ``ps`` read descending, then ``js`` ascending."""
    if m1 == m2:
        return 0
    ents = m1.entries() or m2.entries()
    group = ents[0].group
    c = group.compare_values(m1.degree_offset(), m2.degree_offset())
    if c:
        return c
    c = _cmp_tuples(m1.ps[::-1], m2.ps[::-1])
    if c:
        return c
    return _cmp_tuples(m1.js, m2.js)


monomial_key = functools.cmp_to_key(monomial_cmp)


class ModuleVector:
    """Finite combination of normal-form monomials, no stored zeros."""

    __slots__ = ("terms", "module")

    def __init__(self, terms: Mapping[Monomial, FieldScalar], module: VermaModule):
        self.module = module
        self.terms = {m: as_scalar(c) for m, c in terms.items() if not as_scalar(c).is_zero()}

    @classmethod
    def _trusted(cls, terms: dict, module: VermaModule) -> ModuleVector:
        obj = object.__new__(cls)
        obj.terms = terms
        obj.module = module
        return obj

    def _check(self, other: ModuleVector):
        if other.module != self.module:
            raise ContextError("vectors from different Verma modules")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            _acc(out, m, c)
        return ModuleVector._trusted(out, self.module)

    def __neg__(self):
        return ModuleVector._trusted({m: -c for m, c in self.terms.items()}, self.module)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        s = as_scalar(scalar)
        if s.is_zero():
            return ModuleVector._trusted({}, self.module)
        return ModuleVector._trusted({m: c * s for m, c in self.terms.items()}, self.module)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, ModuleVector):
            return NotImplemented
        return self.terms == other.terms and (not self.terms or self.module == other.module)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def coefficient(self, m: Monomial) -> FieldScalar:
        return self.terms.get(m, ZERO)

    def items(self) -> list[tuple[Monomial, FieldScalar]]:
        return sorted(self.terms.items(), key=lambda kv: monomial_key(kv[0]))

    def monomials(self) -> list[Monomial]:
        return [m for m, _ in self.items()]

    def is_multiple_of_vh(self) -> bool:
        return all(m.is_vh for m in self.terms)

    def weights(self) -> set[FieldScalar]:
        return {self.module.weight(m) for m in self.terms}

    def is_weight_vector(self) -> bool:
        return len(self.weights()) <= 1

    def __str__(self):
        from .textio import format_vector

        return format_vector(self)

    def __repr__(self):
        return f"ModuleVector({self})"


class VermaModule:
    """``M(h, h_I, c, c_I, c_LI)`` over ``L[G]`` with the group's order."""

    def __init__(self, group: OrderedGroup, hw: HighestWeight):
        self.group = group
        self.hw = hw
        self._cache: dict[tuple[Generator, Monomial], dict[Monomial, FieldScalar]] = {}

    def __eq__(self, other):
        if not isinstance(other, VermaModule):
            return NotImplemented
        return self is other or (self.group == other.group and self.hw == other.hw)

    def __hash__(self):
        return hash((self.group, self.hw))

    def __repr__(self):
        return f"VermaModule({self.group.describe()}, hw=({self.hw}))"

    # -- vectors --------------------------------------------------------
    @property
    def vh(self) -> ModuleVector:
        return ModuleVector._trusted({VH: ONE}, self)

    def zero(self) -> ModuleVector:
        return ModuleVector._trusted({}, self)

    def vector(self, terms: Mapping[Monomial, object]) -> ModuleVector:
        return ModuleVector(terms, self)

    def monomial(self, ps: Iterable = (), js: Iterable = ()) -> Monomial:
        """Build a normal-form monomial from positive entries (scalars or elements)."""
        return Monomial.make((self.group.element(p) for p in ps), (self.group.element(j) for j in js))

    def basis_vector(self, ps: Iterable = (), js: Iterable = (), coeff=ONE) -> ModuleVector:
        return ModuleVector({self.monomial(ps, js): coeff}, self)

    def weight(self, m: Monomial) -> FieldScalar:
        """``L_0`` eigenvalue of ``m v_h``: ``h`` plus every entry."""
        return self.hw.h + m.degree_offset()

    def weight_components(self, v: ModuleVector) -> dict[FieldScalar, ModuleVector]:
        parts: dict[FieldScalar, dict] = {}
        for m, c in v.terms.items():
            parts.setdefault(self.weight(m), {})[m] = c
        return {w: ModuleVector._trusted(t, self) for w, t in parts.items()}

    # -- action ---------------------------------------------------------
    def _check_generator(self, g: Generator):
        if g.index is not None and g.index.group != self.group:
            raise ContextError(f"{g} is not indexed by {self.group.describe()}")

    def _act_mono(self, g: Generator, m: Monomial) -> dict[Monomial, FieldScalar]:
        key = (g, m)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        out = self._compute(g, m)
        self._cache[key] = out
        return out

    def _compute(self, g: Generator, m: Monomial) -> dict[Monomial, FieldScalar]:
        hw = self.hw
        if g.is_central:
            c = hw.central_value(g.tag)
            return {} if c.is_zero() else {m: c}
        idx = g.index
        s = idx.sign()
        if m.is_vh:
            if s > 0:
                return {}
            if s == 0:
                c = hw.h if g.tag == "L" else hw.h_I
                return {} if c.is_zero() else {VH: c}
            return {Monomial((-idx,), ()) if g.tag == "I" else Monomial((), (-idx,)): ONE}
        if s < 0:
            if g.tag == "I":
                # negative I modes commute with every other negative mode
                return {m.with_p(-idx): ONE}
            if not m.ps and idx.group.compare_values((-idx).value, m.js[0].value) <= 0:
                return {Monomial((), (-idx,) + m.js): ONE}
        # g X w = X (g w) + [g, X] w with X the leftmost factor
        if m.ps:
            x = I(-m.ps[0])
            rest = Monomial(m.ps[1:], m.js)
        else:
            x = L(-m.js[0])
            rest = Monomial((), m.js[1:])
        out: dict[Monomial, FieldScalar] = {}
        for m1, c1 in self._act_mono(g, rest).items():
            for m2, c2 in self._act_mono(x, m1).items():
                _acc(out, m2, c1 * c2)
        for h, ch in bracket_generators(g, x).items():
            for m2, c2 in self._act_mono(h, rest).items():
                _acc(out, m2, ch * c2)
        return out

    def act(self, g: Generator | AlgebraElement, v: ModuleVector) -> ModuleVector:
        """Apply a generator (or a linear combination of them) to ``v``."""
        if v.module != self:
            raise ContextError("vector does not belong to this module")
        if isinstance(g, AlgebraElement):
            if g.group != self.group and not g.is_zero():
                raise ContextError("algebra element over a different group")
            out: dict = {}
            for gen, a in g.terms.items():
                for m, c in self.act(gen, v).terms.items():
                    _acc(out, m, a * c)
            return ModuleVector._trusted(out, self)
        self._check_generator(g)
        out = {}
        for m, c in v.terms.items():
            for m2, c2 in self._act_mono(g, m).items():
                _acc(out, m2, c * c2)
        return ModuleVector._trusted(out, self)

    def act_word(self, word: Iterable[Generator], v: ModuleVector) -> ModuleVector:
        """Apply ``g_1 g_2 ... g_n`` to ``v`` (rightmost first)."""
        for g in reversed(list(word)):
            v = self.act(g, v)
        return v

    def act_power(self, g: Generator, n: int, v: ModuleVector) -> ModuleVector:
        for _ in range(n):
            v = self.act(g, v)
        return v

    # -- graded pieces over Z*a ---------------------------------------------
    def default_step(self) -> GroupElement:
        kind = self.group.classify()
        if not isinstance(kind, Discrete):
            raise PreconditionError("level bases need a discrete order (or an explicit step a)")
        return kind.minimal_positive

    def basis_at_level(self, n: int, a: GroupElement | None = None) -> list[Monomial]:
        """Every monomial with entries in ``Z_+ a`` summing to ``n a``."""
        if n <= 0:
            raise PreconditionError(f"level must be positive, got {n}")
        if a is None:
            a = self.default_step()
        else:
            a = self.group.element(a)
            if a.sign() <= 0:
                raise PreconditionError(f"step {a} is not positive")
        out = []
        for k in range(n, -1, -1):
            for ip in integer_partitions(k):
                for lp in integer_partitions(n - k):
                    out.append(Monomial(tuple(a * t for t in sorted(ip)), tuple(a * t for t in sorted(lp))))
        return out

    def restrict_to_subalgebra(self, x) -> SubalgebraView:
        return SubalgebraView(self, self.group.element(x))


def integer_partitions(n: int) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` as non-increasing tuples, largest first part first."""
    if n == 0:
        yield ()
        return

    def rec(rem: int, cap: int):
        if rem == 0:
            yield ()
            return
        for first in range(min(rem, cap), 0, -1):
            for tail in rec(rem - first, first):
                yield (first,) + tail

    yield from rec(n, n)


class SubalgebraView:
    """``U(L[Z x]) v_h`` inside a Verma module, seen through ``theta_x``.

    Integer-indexed algebra elements act through their images, so this view
    is a module over the twisted Heisenberg-Virasoro algebra whose highest
    weight is :attr:`transported`.
    """

    def __init__(self, module: VermaModule, x: GroupElement):
        if x.sign() <= 0:
            raise PreconditionError(f"restriction needs x > 0, got {x}")
        self.module = module
        self.x = x
        self.transported = transport_highest_weight(x, module.hw)

    def image(self, u: AlgebraElement) -> AlgebraElement:
        return theta(self.x, u, target=self.module.group)

    def act(self, u: AlgebraElement | Generator, v: ModuleVector) -> ModuleVector:
        if isinstance(u, Generator):
            u = AlgebraElement.of(u, group=INT)
        return self.module.act(self.image(u), v)

    def contains(self, v: ModuleVector) -> bool:
        """Whether every entry of every monomial is an integer multiple of ``x``."""
        for m in v.terms:
            for e in m.entries():
                if not (e.value / self.x.value).is_integer():
                    return False
        return True

    def standard_module(self) -> VermaModule:
        return VermaModule(INT, self.transported)

    def from_standard(self, v: ModuleVector) -> ModuleVector:
        """Carry a vector of the integer-indexed Verma module into this view.

        ``X v_h -> theta(X) v_h``; negative modes have no central part, so
        each factor just rescales by ``x^-1``.
        """
        xi = self.x.value.inverse()
        out: dict = {}
        for m, c in v.terms.items():
            ps = tuple(self.x * int(p.value.a) for p in m.ps)
            js = tuple(self.x * int(j.value.a) for j in m.js)
            _acc(out, Monomial(ps, js), c * xi ** len(m))
        return ModuleVector._trusted(out, self.module)

    def verify_transport(self) -> dict[str, tuple[FieldScalar, FieldScalar, bool]]:
        """Check that the images of ``L_0, I_0, C, C_I, C_LI`` act on ``v_h`` by the transported scalars.

        Returns ``{name: (expected, observed, ok)}``.
        """
        zero = INT.element(0)
        expected = self.transported
        checks = {
            "L0": (Generator("L", zero), expected.h),
            "I0": (Generator("I", zero), expected.h_I),
            "C": (Generator("C"), expected.c),
            "CI": (Generator("CI"), expected.c_I),
            "CLI": (Generator("CLI"), expected.c_LI),
        }
        vh = self.module.vh
        report = {}
        for name, (gen, want) in checks.items():
            res = self.act(gen, vh)
            got = res.coefficient(VH)
            ok = res.is_multiple_of_vh() and got == want
            report[name] = (want, got, ok)
        return report
