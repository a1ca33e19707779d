"""Seeded random weight vectors for demos and property checks."""

from __future__ import annotations

import random
from fractions import Fraction

from .groups import GroupElement, OrderedGroup
from .scalars import FieldScalar
from .verma import Monomial, ModuleVector, VermaModule

MAX_FACTORS = 4
MAX_HEIGHT = 3


def positive_elements(group: OrderedGroup, max_height: int = MAX_HEIGHT) -> list[GroupElement]:
    return [x for x in group.enumerate(max_height) if x.sign() > 0]


def random_coefficient(rng: random.Random) -> FieldScalar:
    num = rng.choice([n for n in range(-9, 10) if n])
    return FieldScalar(Fraction(num, rng.randint(1, 4)))


def _variant(rng: random.Random, entries: list[tuple[str, GroupElement]], pool: set, max_factors: int):
    """Same total weight: reassign a tag, merge two entries or split one."""
    entries = list(entries)
    move = rng.choice(("retag", "merge", "split"))
    if move == "merge" and len(entries) >= 2:
        i, j = rng.sample(range(len(entries)), 2)
        s = entries[i][1] + entries[j][1]
        if s in pool:
            rest = [e for k, e in enumerate(entries) if k not in (i, j)]
            return rest + [(rng.choice("IL"), s)]
    if move == "split" and len(entries) < max_factors:
        i = rng.randrange(len(entries))
        x = entries[i][1]
        parts = [y for y in sorted(pool) if y < x and (x - y) in pool]
        if parts:
            y = rng.choice(parts)
            rest = entries[:i] + entries[i + 1:]
            return rest + [(rng.choice("IL"), y), (rng.choice("IL"), x - y)]
    i = rng.randrange(len(entries))
    tag = "L" if entries[i][0] == "I" else "I"
    entries[i] = (tag, entries[i][1])
    return entries


def _monomial(entries) -> Monomial:
    return Monomial.make([x for t, x in entries if t == "I"], [x for t, x in entries if t == "L"])


def random_weight_vector(
    module: VermaModule,
    rng: random.Random,
    max_factors: int = MAX_FACTORS,
    max_height: int = MAX_HEIGHT,
    max_terms: int = 4,
) -> ModuleVector:
    """A nonzero weight vector with ``v_h`` excluded.

    Every monomial has at most ``max_factors`` factors with indices of
    height at most ``max_height``.
    """
    pool_list = positive_elements(module.group, max_height)
    pool = set(pool_list)
    k = rng.randint(1, max_factors)
    base = [(rng.choice("IL"), rng.choice(pool_list)) for _ in range(k)]
    family = {_monomial(base)}
    current = base
    for _ in range(rng.randint(0, max_terms - 1)):
        current = _variant(rng, current, pool, max_factors)
        family.add(_monomial(current))
    terms = {m: random_coefficient(rng) for m in sorted(family, key=str)}
    return ModuleVector(terms, module)


def sample_vectors(module: VermaModule, count: int, seed: int = 0, **kw) -> list[ModuleVector]:
    rng = random.Random(seed)
    return [random_weight_vector(module, rng, **kw) for _ in range(count)]
