"""Irreducibility verdicts for Verma modules over ``L[G]``.

Dense orders are settled outright: the module is irreducible exactly when
``(c_I, c_LI) != (0, 0)``, and sampled vectors can be pushed back to
``v_h`` with the constructive reductions as evidence.  Discrete orders
reduce to the cyclic subalgebra ``L[Z a]``, where a bounded singular
vector search either finds a witness or reports ``UnknownUpToLevel``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import I, L, transport_highest_weight
from .engine import reduce_dense
from .errors import PreconditionError, ProofViolationError
from .groups import Discrete
from .sampling import sample_vectors
from .scalars import format_scalar
from .singular import first_singular, is_singular, singular_search
from .textio import vector_to_json
from .verma import ModuleVector, VermaModule

DEFAULT_LEVEL = 6


@dataclass
class Irreducible:
    reason: str
    samples: list = field(default_factory=list)  # (vector, DenseReduction)

    name = "Irreducible"

    def to_json(self) -> dict:
        return {
            "verdict": self.name,
            "reason": self.reason,
            "samples": [
                {"vector": str(v), "b": format_scalar(r.b), "trace": r.trace.to_json()} for v, r in self.samples
            ],
        }


@dataclass
class Reducible:
    witness: ModuleVector
    level: int | None
    kind: str = "singular-vector"
    note: str = ""

    name = "Reducible"

    def to_json(self) -> dict:
        out = {
            "verdict": self.name,
            "kind": self.kind,
            "witness": str(self.witness),
            "witness_terms": vector_to_json(self.witness),
            "level": self.level,
        }
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class UnknownUpToLevel:
    N: int

    name = "UnknownUpToLevel"

    def to_json(self) -> dict:
        return {"verdict": self.name, "level": self.N}


@dataclass
class ClaimedReducibleNoWitness:
    note: str
    evidence: dict = field(default_factory=dict)

    name = "ClaimedReducibleNoWitness"

    def to_json(self) -> dict:
        return {"verdict": self.name, "note": self.note, "evidence": self.evidence}


Verdict = Irreducible | Reducible | UnknownUpToLevel | ClaimedReducibleNoWitness


def i_span_closure_check(module: VermaModule, w: ModuleVector, depth: int) -> bool:
    """Raising operators up to ``depth`` steps keep ``w`` inside the ``I``-span minus ``v_h``.

    Only operators whose index does not exceed the current weight offset
    are tried; the others kill every monomial for weight reasons.
    """
    group = module.group
    frontier = [w]
    seen = set()
    for _ in range(depth):
        nxt = []
        for v in frontier:
            for m in v.terms:
                if m.js or m.is_vh:
                    return False
            offset = max(m.degree_offset() for m in v.terms)
            for x in group.positive_stream(cap=2):
                if group.compare_values(x.value, offset) > 0:
                    continue
                for g in (L(x), I(x)):
                    out = module.act(g, v)
                    if out.is_zero():
                        continue
                    if out.is_multiple_of_vh() or any(m.js or m.is_vh for m in out.terms):
                        return False
                    if out not in seen:
                        seen.add(out)
                        nxt.append(out)
        frontier = nxt
        if not frontier:
            break
    return True


def _decide_dense(module: VermaModule, N: int, samples: int, seed: int):
    hw = module.hw
    if not (hw.c_I.is_zero() and hw.c_LI.is_zero()):
        out = Irreducible("dense order with (c_I, c_LI) != (0, 0)")
        for v in sample_vectors(module, samples, seed):
            for part in module.weight_components(v).values():
                if part.is_multiple_of_vh():
                    continue
                out.samples.append((part, reduce_dense(module, part)))
        return out
    x = next(module.group.positive_stream())
    if hw.h_I.is_zero():
        w = module.basis_vector([x])
        if not i_span_closure_check(module, w, N):
            raise ProofViolationError("I-span closure check failed on the truncation", None)
        return Reducible(
            w,
            None,
            kind="submodule-generator",
            note="all I-monomials span a proper graded submodule",
        )
    # I_0 v_h = h_I v_h lies in the I-span, so that span is not proper here
    probe = module.act(L(x), module.basis_vector([x]))
    return ClaimedReducibleNoWitness(
        "(c_I, c_LI) = (0, 0) with h_I != 0: the I-span reaches v_h, no proper submodule is constructed",
        {
            "probe": f"L[{x}] I[{-x}] v",
            "image": str(probe),
            "expected": format_scalar(x.value * hw.h_I),
        },
    )


def _decide_discrete(module: VermaModule, a, N: int):
    view = module.restrict_to_subalgebra(a)
    hw_t = transport_highest_weight(a, module.hw)
    found = first_singular(singular_search(hw_t, 1, N))
    if found is None:
        return UnknownUpToLevel(N)
    level, w_std = found
    w = view.from_standard(w_std)
    if not is_singular(w, a):
        raise ProofViolationError(f"transported witness {w} is not singular", None)
    return Reducible(w, level)


def decide(module: VermaModule, N: int = DEFAULT_LEVEL, samples: int = 0, seed: int = 0) -> Verdict:
    if N < 1:
        raise PreconditionError(f"level bound must be at least 1, got {N}")
    kind = module.group.classify()
    if isinstance(kind, Discrete):
        return _decide_discrete(module, kind.minimal_positive, N)
    return _decide_dense(module, N, samples, seed)


__all__ = [
    "ClaimedReducibleNoWitness",
    "Irreducible",
    "Reducible",
    "UnknownUpToLevel",
    "Verdict",
    "decide",
    "i_span_closure_check",
]
