"""Constructive irreducibility reductions.

Every routine here drives a weight vector with raising operators and
records each application in a :class:`ReductionTrace`.  Steps that the
underlying argument guarantees (a nonzero result, a strict drop of some
filtration degree) are checked on the exact result; a failed check raises
:class:`ProofViolationError` with the partial trace attached.

Dense orders
    :func:`strip_L_part` removes every ``L`` factor with ``I_x`` for small
    ``x``; :func:`reduce_dense_case1` (``c_I != 0``) and
    :func:`reduce_dense_case2` (``c_I == 0 != c_LI``) then bring the
    ``I``-only vector down to a nonzero multiple of ``v_h``.

Discrete orders
    :func:`reduce_discrete` maps a weight vector into the submodule
    ``U(L[Z a]) v_h`` generated over the cyclic part.
"""

from __future__ import annotations

import functools
import hashlib
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .algebra import Generator, I, L
from .errors import PreconditionError, ProofViolationError, StripExhaustedError
from .groups import DEFAULT_HEIGHT_CAP, Dense, GroupElement
from .scalars import ONE, FieldScalar
from .verma import VH, Monomial, ModuleVector, VermaModule, _cmp_tuples


def digest(v: ModuleVector) -> str:
    from .textio import format_vector

    return hashlib.sha256(format_vector(v).encode()).hexdigest()[:16]


@dataclass(frozen=True)
class TraceStep:
    generator: Generator
    digest: str
    phase: str


@dataclass
class ReductionTrace:
    initial: ModuleVector
    steps: list[TraceStep] = field(default_factory=list)
    outcome: ModuleVector | None = None

    def __post_init__(self):
        if self.outcome is None:
            self.outcome = self.initial

    @property
    def module(self) -> VermaModule:
        return self.initial.module

    def apply(self, g: Generator, v: ModuleVector, phase: str) -> ModuleVector:
        out = self.module.act(g, v)
        self.steps.append(TraceStep(g, digest(out), phase))
        self.outcome = out
        return out

    def extend(self, other: ReductionTrace):
        self.steps.extend(other.steps)
        self.outcome = other.outcome

    def replay(self) -> ModuleVector:
        """Re-run every step from :attr:`initial`, checking each digest."""
        v = self.initial
        for k, step in enumerate(self.steps):
            v = self.module.act(step.generator, v)
            if digest(v) != step.digest:
                raise ProofViolationError(f"replay diverged at step {k} ({step.generator})", self)
        return v

    def to_json(self) -> list[dict]:
        return [
            {
                "op": s.generator.tag,
                "index": None if s.generator.index is None else str(s.generator.index),
                "digest": s.digest,
                "phase": s.phase,
            }
            for s in self.steps
        ]

    def __len__(self):
        return len(self.steps)


@dataclass
class DenseReduction:
    """``b v_h`` reached from a weight vector; ``closed_form`` is the predicted ``b`` when known."""

    b: FieldScalar
    trace: ReductionTrace
    closed_form: FieldScalar | None = None


# -- helpers ---------------------------------------------------------------


def _multiset_cmp(p: Sequence[GroupElement], q: Sequence[GroupElement]) -> int:
    # largest entries first; a missing entry counts as 0
    return _cmp_tuples(tuple(reversed(p)), tuple(reversed(q)))


multiset_key = functools.cmp_to_key(_multiset_cmp)


def max_monomial(P: Iterable[Sequence[GroupElement]]) -> tuple[GroupElement, ...]:
    """Largest multiset: compare largest entries first, a proper prefix loses.

    Multisets are passed and returned as ascending tuples.
    """
    items = [tuple(sorted(p)) for p in P]
    if not items:
        raise PreconditionError("max_monomial needs a nonempty family")
    return max(items, key=multiset_key)


def min_monomial(P: Iterable[Sequence[GroupElement]]) -> tuple[GroupElement, ...]:
    items = [tuple(sorted(p)) for p in P]
    if not items:
        raise PreconditionError("min_monomial needs a nonempty family")
    return min(items, key=multiset_key)


def _max_elem(xs: Iterable[GroupElement]) -> GroupElement | None:
    xs = list(xs)
    return max(xs) if xs else None


def _require_weight_vector(u: ModuleVector, allow_vh: bool = False):
    if u.is_zero():
        raise PreconditionError("the zero vector cannot be reduced")
    if not u.is_weight_vector():
        raise PreconditionError("input is not a weight vector; split it with weight_components()")
    if not allow_vh and u.is_multiple_of_vh():
        raise PreconditionError("input is already a multiple of v_h")


def _max_L(u: ModuleVector) -> int:
    return max(len(m.js) for m in u.terms)


def _vh_coefficient(u: ModuleVector, trace: ReductionTrace, what: str) -> FieldScalar:
    if not u.is_multiple_of_vh() or u.is_zero():
        raise ProofViolationError(f"{what}: expected a nonzero multiple of v_h, got {u}", trace)
    return u.coefficient(VH)


def _multiplicity_factor(entries: Sequence[GroupElement]) -> int:
    out = 1
    counts: dict[GroupElement, int] = {}
    for e in entries:
        counts[e] = counts.get(e, 0) + 1
    for k in counts.values():
        for t in range(2, k + 1):
            out *= t
    return out


# -- dense orders --------------------------------------------------------------


def strip_L_part(
    module: VermaModule,
    u0: ModuleVector,
    trace: ReductionTrace | None = None,
    cap: int = DEFAULT_HEIGHT_CAP,
) -> tuple[ModuleVector, ReductionTrace]:
    """Apply ``I_x`` repeatedly until no ``L`` factor is left.

    Each round picks the first positive ``x`` below every leading ``L``
    index with ``x`` and every ``j - x`` outside the current ``I`` entries;
    the number of ``L`` factors then drops by exactly one.
    """
    if not isinstance(module.group.classify(), Dense):
        raise PreconditionError("strip_L_part needs a dense order")
    _require_weight_vector(u0)
    trace = trace if trace is not None else ReductionTrace(u0)
    u = u0
    r = _max_L(u)
    while r > 0:
        firsts = [m.js[0] for m in u.terms if m.js]
        bound = min(firsts)
        forbidden = {p for m in u.terms for p in m.ps}
        offsets = {j for m in u.terms for j in m.js}
        x = module.group.find_positive_below(bound, forbidden, offsets, cap)
        u = trace.apply(I(x), u, "strip-L")
        if u.is_zero():
            raise ProofViolationError(f"I[{x}] annihilated the vector while stripping L factors", trace)
        new_r = _max_L(u)
        if new_r != r - 1:
            raise ProofViolationError(f"L-degree went from {r} to {new_r} under I[{x}]", trace)
        r = new_r
    return u, trace


def _check_I_only(u: ModuleVector):
    _require_weight_vector(u, allow_vh=True)
    if any(m.js for m in u.terms):
        raise PreconditionError("expected a vector with no L factors (run strip_L_part first)")


def reduce_dense_case1(
    module: VermaModule, u: ModuleVector, trace: ReductionTrace | None = None
) -> DenseReduction:
    """``c_I != 0``: ``I_q`` for the largest ``I`` multiset ``q`` lands on ``b v_h``."""
    hw = module.hw
    if hw.c_I.is_zero():
        raise PreconditionError("case 1 needs c_I != 0")
    _check_I_only(u)
    trace = trace if trace is not None else ReductionTrace(u)
    if u.is_multiple_of_vh():
        return DenseReduction(u.coefficient(VH), trace, u.coefficient(VH))
    q = max_monomial(m.ps for m in u.terms)
    a_q = u.coefficient(Monomial(q, ()))
    expected = a_q * hw.c_I ** len(q) * _multiplicity_factor(q)
    for x in q:
        expected = expected * x.value
    v = u
    for x in reversed(q):
        v = trace.apply(I(x), v, "case1")
    b = _vh_coefficient(v, trace, "case 1")
    return DenseReduction(b, trace, expected)


def _ladder_scalar(hw, z: FieldScalar) -> FieldScalar:
    return z * (hw.h_I - (z + ONE) * hw.c_LI)


def reduce_dense_case2(
    module: VermaModule,
    u: ModuleVector,
    trace: ReductionTrace | None = None,
    cap: int = DEFAULT_HEIGHT_CAP,
) -> DenseReduction:
    """``c_I == 0 != c_LI``: lower ``I`` entries with ``L`` operators.

    ``L_z`` with ``z`` the largest entry removes that entry at the cost of
    the factor ``z (h_I - (z + 1) c_LI)``.  An entry equal to
    ``h_I/c_LI - 1`` would kill the vector, so it is first shifted down to
    a harmless ``x'`` by ``L_{z - x'}``.  A vector with several monomials
    is first hit by ``L_{q_1 - y}`` for the largest entry ``q_1`` and a
    small admissible ``y``.
    """
    hw = module.hw
    group = module.group
    if not hw.c_I.is_zero() or hw.c_LI.is_zero():
        raise PreconditionError("case 2 needs c_I == 0 and c_LI != 0")
    _check_I_only(u)
    trace = trace if trace is not None else ReductionTrace(u)
    if u.is_multiple_of_vh():
        return DenseReduction(u.coefficient(VH), trace, u.coefficient(VH))

    bad_value = hw.h_I / hw.c_LI - ONE
    bad = {bad_value} if group.contains(bad_value) else set()

    def entries(v: ModuleVector) -> set[GroupElement]:
        return {p for m in v.terms for p in m.ps}

    def shift_target(v: ModuleVector, top: GroupElement) -> GroupElement:
        # first x' with every other entry strictly below top - x'
        below = _max_elem(e for e in entries(v) if e < top)
        bound = top if below is None else top - below
        return group.find_positive_below(bound, entries(v) | {group.element(b) for b in bad}, (), cap)

    v = u
    if len(v) > 1:
        q1 = max_monomial(m.ps for m in v.terms)[-1]
        y = shift_target(v, q1)
        v = trace.apply(L(q1 - y), v, "case2-y")
        if v.is_zero():
            raise ProofViolationError(f"L[{q1 - y}] annihilated the vector", trace)

    closed_form = None
    if len(v) == 1:
        (m0, c0), = v.terms.items()
        if not any(p.value in bad for p in m0.ps):
            closed_form = c0 * _multiplicity_factor(m0.ps)
            for p in m0.ps:
                closed_form = closed_form * _ladder_scalar(hw, p.value)

    while not v.is_multiple_of_vh():
        q = max_monomial(m.ps for m in v.terms)
        z = q[-1]
        if z.value in bad:
            xp = shift_target(v, z)
            v = trace.apply(L(z - xp), v, "case2-detour")
            if v.is_zero():
                raise ProofViolationError(f"detour L[{z - xp}] annihilated the vector", trace)
            continue
        target = Monomial(q[:-1], ())
        v = trace.apply(L(z), v, "case2-ladder")
        if v.coefficient(target).is_zero():
            raise ProofViolationError(f"leading monomial lost under L[{z}]", trace)
    b = _vh_coefficient(v, trace, "case 2")
    return DenseReduction(b, trace, closed_form)


def reduce_dense(module: VermaModule, u0: ModuleVector, cap: int = DEFAULT_HEIGHT_CAP) -> DenseReduction:
    """Full dense-order reduction of a weight vector to ``b v_h``."""
    hw = module.hw
    if hw.c_I.is_zero() and hw.c_LI.is_zero():
        raise PreconditionError("(c_I, c_LI) = (0, 0): the I-span is a proper submodule, no reduction exists")
    _require_weight_vector(u0)
    trace = ReductionTrace(u0)
    u = u0
    if _max_L(u) > 0:
        u, trace = strip_L_part(module, u, trace, cap)
    if not hw.c_I.is_zero():
        return reduce_dense_case1(module, u, trace)
    return reduce_dense_case2(module, u, trace, cap)


# -- discrete orders -------------------------------------------------------------


@dataclass
class DiscreteReduction:
    vector: ModuleVector
    trace: ReductionTrace
    epsilon: GroupElement | None = None
    steps_I: int = 0


def reduce_discrete(
    module: VermaModule,
    u0: ModuleVector,
    cap: int = DEFAULT_HEIGHT_CAP,
) -> DiscreteReduction:
    """Carry a weight vector into ``U(L[Z a]) v_h`` for the minimal positive ``a``.

    Entries outside ``Z a`` (the ``H+`` part) are removed in two stages:

    1. ``L`` factors with ``H+`` index are traded for ``I`` factors by
       ``I_eps^{n0}`` with ``eps = j0 - m a`` just below the smallest such
       index ``j0`` and ``n0`` their largest number in one monomial.
    2. ``I`` factors with ``H+`` index go with the Heisenberg pairing
       ``I_q`` when ``c_I != 0``; otherwise each is turned into ``I_{-a}``
       by ``L_{q_s - a}`` along the smallest ``H+`` multiset.
    """
    a = module.default_step()
    hw = module.hw
    _require_weight_vector(u0)
    trace = ReductionTrace(u0)

    def in_Za(e: GroupElement) -> bool:
        return (e.value / a.value).is_integer()

    def h_js(m: Monomial) -> list[GroupElement]:
        return [j for j in m.js if not in_Za(j)]

    def h_ps(m: Monomial) -> tuple[GroupElement, ...]:
        return tuple(p for p in m.ps if not in_Za(p))

    u = u0
    result = DiscreteReduction(u, trace)
    n0 = max(len(h_js(m)) for m in u.terms)
    if n0 > 0:
        j0 = min(min(h_js(m)) for m in u.terms if h_js(m))
        i_entries = {p.value for m in u.terms for p in m.ps}
        hl_entries = {j.value for m in u.terms for j in h_js(m)}
        eps = None
        for mult in range(1, cap + 1):
            cand = j0 - a * mult
            if not hw.c_I.is_zero():
                # I_eps must not pair with an old I factor, nor with a new one I_{-(J - eps)}
                if cand.value in i_entries or (cand.value * 2) in hl_entries:
                    continue
            if any((J - cand.value) in i_entries for J in hl_entries):
                continue
            eps = cand
            break
        if eps is None:
            raise StripExhaustedError(f"no admissible eps = {j0} - m*{a} with m <= {cap}", trace)
        result.epsilon = eps
        level = n0
        for _ in range(n0):
            u = trace.apply(I(eps), u, "eps")
            if u.is_zero():
                raise ProofViolationError(f"I[{eps}] annihilated the vector", trace)
            new_level = max(len(h_js(m)) for m in u.terms)
            if new_level != level - 1:
                raise ProofViolationError(f"H-indexed L count went {level} -> {new_level} under I[{eps}]", trace)
            level = new_level
        result.steps_I = n0

    def h_weight_free(v: ModuleVector) -> bool:
        return all(in_Za(e) for m in v.terms for e in m.entries())

    if not h_weight_free(u):
        if not hw.c_I.is_zero():
            q = max_monomial(h_ps(m) for m in u.terms)
            for x in reversed(q):
                u = trace.apply(I(x), u, "heisenberg")
            if u.is_zero():
                raise ProofViolationError(f"I_q for q = {[str(x) for x in q]} annihilated the vector", trace)
        else:
            t = min(len(h_ps(m)) for m in u.terms)
            while t > 0:
                layer = [h_ps(m) for m in u.terms if len(h_ps(m)) == t]
                q = min_monomial(layer)
                mu = q[0] - a
                u = trace.apply(L(mu), u, "L-recursion")
                if u.is_zero():
                    raise ProofViolationError(f"L[{mu}] annihilated the vector", trace)
                new_t = min(len(h_ps(m)) for m in u.terms)
                if new_t != t - 1:
                    raise ProofViolationError(f"smallest H-indexed I count went {t} -> {new_t} under L[{mu}]", trace)
                t = new_t
    if u.is_zero() or not h_weight_free(u):
        raise ProofViolationError("reduction did not land in the cyclic submodule", trace)
    result.vector = u
    return result


def trace_from_word(module: VermaModule, v: ModuleVector, word: Sequence[Generator], phase: str = "word") -> ReductionTrace:
    """Apply a word (rightmost first) and record it as a trace."""
    tr = ReductionTrace(v)
    for g in reversed(list(word)):
        v = tr.apply(g, v, phase)
    return tr


__all__ = [
    "DenseReduction",
    "DiscreteReduction",
    "ReductionTrace",
    "TraceStep",
    "max_monomial",
    "min_monomial",
    "reduce_dense",
    "reduce_dense_case1",
    "reduce_dense_case2",
    "reduce_discrete",
    "strip_L_part",
    "trace_from_word",
]
