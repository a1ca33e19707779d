"""Level-by-level search for singular vectors over ``L[Z a]``."""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import HighestWeight, I, L
from .errors import PreconditionError
from .groups import INT, GroupElement, OrderedGroup
from .linalg import exact_kernel
from .scalars import ONE, ZERO
from .verma import Monomial, ModuleVector, VermaModule, monomial_key


def raising_set(a: GroupElement):
    """``L_a, L_2a, I_a``: these generate the positive part of ``L[Z a]``."""
    return (L(a), L(a * 2), I(a))


def is_singular(v: ModuleVector, a: GroupElement | None = None) -> bool:
    """Nonzero, not a multiple of ``v_h`` and killed by ``L_a, L_2a, I_a``."""
    module = v.module
    if v.is_zero() or v.is_multiple_of_vh():
        return False
    if not v.is_weight_vector():
        raise PreconditionError("is_singular expects a weight vector")
    if a is None:
        a = module.default_step()
    a = module.group.element(a)
    for m in v.terms:
        for e in m.entries():
            if not (e.value / a.value).is_integer():
                raise PreconditionError(f"entry {e} is not a multiple of {a}")
    return all(module.act(g, v).is_zero() for g in raising_set(a))


@dataclass
class LevelKernel:
    level: int
    basis: list[Monomial]
    kernel: list[ModuleVector] = field(default_factory=list)

    @property
    def dimension(self) -> int:
        return len(self.basis)


def level_matrix(module: VermaModule, n: int, a: GroupElement) -> tuple[list[Monomial], list[list], list]:
    """Stacked matrix of the raising set on level ``n``: columns follow ``basis_at_level``."""
    basis = module.basis_at_level(n, a)
    images = [[module.act(g, module.basis_vector(m.ps, m.js)) for m in basis] for g in raising_set(a)]
    rows = []
    labels = []
    for g, cols in zip(raising_set(a), images):
        targets = sorted({t for v in cols for t in v.terms}, key=monomial_key)
        for t in targets:
            rows.append([v.coefficient(t) for v in cols])
            labels.append((g, t))
    return basis, rows, labels


def singular_search(
    hw: HighestWeight,
    a=1,
    N: int = 6,
    group: OrderedGroup = INT,
) -> list[LevelKernel]:
    """Exact kernels of the raising set on levels ``1..N``."""
    if N < 1:
        raise PreconditionError(f"level bound must be at least 1, got {N}")
    module = VermaModule(group, hw)
    a = group.element(a)
    out = []
    for n in range(1, N + 1):
        basis, rows, _ = level_matrix(module, n, a)
        kernel = []
        if rows:
            vecs = exact_kernel(rows, len(basis))
        else:
            vecs = [[ONE if k == i else ZERO for k in range(len(basis))] for i in range(len(basis))]
        for vec in vecs:
            kernel.append(module.vector({m: c for m, c in zip(basis, vec) if not c.is_zero()}))
        out.append(LevelKernel(n, basis, kernel))
    return out


def first_singular(kernels: list[LevelKernel]) -> tuple[int, ModuleVector] | None:
    for lk in kernels:
        if lk.kernel:
            return lk.level, lk.kernel[0]
    return None
