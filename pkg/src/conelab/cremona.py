"""Cremona moves on blowups of the plane: the reflection in H - Ei - Ej - El
composed with permutations of the exceptional classes.

Both generators preserve the intersection form and the canonical class, so
square and K-pairing are orbit invariants.  A class x0 H - x1 E1 - ... is
ordered when x1 >= ... >= xk and reduced when additionally
x0 >= x1 + x2 + x3 and every xi >= 0.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .lattice import (
    DivisorClass,
    LatticeError,
    canonical_class,
    divisor,
    pair,
)

DEFAULT_BUDGET = 10_000


def _budget(default: int) -> int:
    value = os.environ.get("CONELAB_MAX_STEPS")
    return int(value) if value else default


def _require_cremona_surface(x: DivisorClass) -> None:
    if not x.surface.is_rational or x.surface.k < 3:
        raise LatticeError("Cremona reflections need a rational surface with k >= 3")
    if not x.is_integral():
        raise LatticeError("Cremona moves act on integral classes")


def reflect(x: DivisorClass, triple: tuple[int, int, int]) -> DivisorClass:
    """Reflection x -> x + (x.alpha) alpha for alpha = H - Ei - Ej - El."""
    _require_cremona_surface(x)
    i, j, l = triple
    if len({i, j, l}) != 3 or not all(1 <= t <= x.surface.k for t in (i, j, l)):
        raise LatticeError(f"bad reflection triple {triple}")
    coeffs = [0] * x.surface.rank
    coeffs[0] = 1
    for t in triple:
        coeffs[t] = -1
    alpha = divisor(x.surface, coeffs)
    return x + pair(x, alpha) * alpha


def order(x: DivisorClass) -> DivisorClass:
    """Permute the Ei so the subtracted coefficients are non-increasing."""
    if not x.surface.is_rational:
        raise LatticeError("ordering applies to rational surfaces")
    b = sorted(x.b_vector(), reverse=True)
    return divisor(x.surface, [x.coeffs[0]] + [-v for v in b])


def is_ordered(x: DivisorClass) -> bool:
    b = x.b_vector()
    return all(b[i] >= b[i + 1] for i in range(len(b) - 1))


def is_reduced(x: DivisorClass) -> bool:
    """x0 >= x1 + x2 + x3 and all xi >= 0, for an ordered class."""
    if not is_ordered(x):
        raise LatticeError(f"{x} is not ordered")
    b = x.b_vector()
    head = sum(b[:3])
    return x.coeffs[0] >= head and all(v >= 0 for v in b)


@dataclass(frozen=True)
class ReductionOutcome:
    kind: str  # "reduced" | "cycle" | "budget_exceeded"
    result: DivisorClass | None
    trace: tuple[DivisorClass, ...]
    steps: int

    @property
    def reduced(self) -> DivisorClass:
        assert self.kind == "reduced" and self.result is not None
        return self.result


def cremona_reduce(x: DivisorClass, max_steps: int = 1_000) -> ReductionOutcome:
    """Alternately order and reflect on the top three coefficients.

    Ends in the first reduced class, in a cycle certificate (a repeated
    ordered class), or with the budget spent.  Classes of square-1 spheres
    reduce; -1 sphere classes always cycle.
    """
    _require_cremona_surface(x)
    max_steps = _budget(max_steps)
    current = order(x)
    seen: list[DivisorClass] = []
    for step in range(max_steps):
        if is_reduced(current):
            return ReductionOutcome("reduced", current, tuple(seen + [current]), step)
        if current in seen:
            idx = seen.index(current)
            return ReductionOutcome("cycle", None, tuple(seen[idx:] + [current]), step)
        seen.append(current)
        current = order(reflect(current, (1, 2, 3)))
    return ReductionOutcome("budget_exceeded", current, tuple(seen[-5:]), max_steps)


@dataclass(frozen=True)
class EquivalenceOutcome:
    kind: str  # "equivalent" | "distinct_by_invariant" | "unknown"
    which: str = ""
    path: tuple[DivisorClass, ...] = ()


def _neighbors(x: DivisorClass) -> Iterable[DivisorClass]:
    k = x.surface.k
    for triple in combinations(range(1, k + 1), 3):
        yield order(reflect(x, triple))


def cremona_equivalent(
    x: DivisorClass, y: DivisorClass, budget: int = DEFAULT_BUDGET
) -> EquivalenceOutcome:
    """Decide equivalence under reflections and permutations.

    Square and K-pairing mismatches reject immediately; otherwise a
    bidirectional search over ordered classes runs within the budget.  A
    fully explored orbit without a meeting is a distinctness certificate."""
    if x.surface != y.surface:
        raise LatticeError("classes on different surfaces")
    if not x.surface.is_rational or not x.is_integral() or not y.is_integral():
        raise LatticeError("equivalence applies to integral classes on rational surfaces")
    if pair(x, x) != pair(y, y):
        return EquivalenceOutcome("distinct_by_invariant", "square")
    kc = canonical_class(x.surface)
    if pair(kc, x) != pair(kc, y):
        return EquivalenceOutcome("distinct_by_invariant", "k_pairing")
    budget = _budget(budget)
    sx, sy = order(x), order(y)
    if sx == sy:
        return EquivalenceOutcome("equivalent", path=(x, sx, y))
    if x.surface.k < 3:
        return EquivalenceOutcome("distinct_by_invariant", "orbit_exhausted")

    parents: dict[int, dict[DivisorClass, DivisorClass | None]] = {
        0: {sx: None},
        1: {sy: None},
    }
    frontiers = {0: deque([sx]), 1: deque([sy])}
    visited = 2

    def path_through(meet: DivisorClass) -> tuple[DivisorClass, ...]:
        left: list[DivisorClass] = []
        node: DivisorClass | None = meet
        while node is not None:
            left.append(node)
            node = parents[0][node]
        left.reverse()
        node = parents[1][meet]
        while node is not None:
            left.append(node)
            node = parents[1][node]
        return tuple(left)

    while frontiers[0] and frontiers[1]:
        side = 0 if len(parents[0]) <= len(parents[1]) else 1
        if not frontiers[side]:
            side = 1 - side
        for _ in range(len(frontiers[side])):
            node = frontiers[side].popleft()
            for nxt in _neighbors(node):
                if nxt in parents[side]:
                    continue
                parents[side][nxt] = node
                frontiers[side].append(nxt)
                visited += 1
                if nxt in parents[1 - side]:
                    return EquivalenceOutcome("equivalent", path=path_through(nxt))
                if visited > budget:
                    return EquivalenceOutcome("unknown", "budget")
        if not frontiers[0] and not frontiers[1]:
            break
    return EquivalenceOutcome("distinct_by_invariant", "orbit_exhausted")
