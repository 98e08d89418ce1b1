"""Bounded exhaustive enumeration of sphere classes on blowups of the plane.

Everything here runs over the subtracted coefficients (b1, ..., bk) of a
class aH - sum bi Ei.  A class of genus g and square -s satisfies

    sum bi   = 3a + s + 2g - 2,      sum bi^2 = a^2 + s,

so enumeration reduces to constrained sum/sum-of-squares searches with
Cauchy-Schwarz pruning.  Families collect permutation orbits of the Ei.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterable, Sequence

from .lattice import (
    DivisorClass,
    LatticeError,
    SurfaceModel,
    adjunction_genus,
    canonical_class,
    divisor,
    pair,
    sorted_classes,
)


def _sum_square_solutions(
    count: int,
    total_sum: int | None,
    total_square: int,
    lo: int,
    hi: int,
) -> list[tuple[int, ...]]:
    """Non-increasing integer tuples with the given sum of squares, and the
    given sum when total_sum is not None."""
    out: list[tuple[int, ...]] = []

    def feasible(m: int, s, sq: int, v: int) -> bool:
        if sq < 0:
            return False
        if m == 0:
            return sq == 0 and (s is None or s == 0)
        if s is not None:
            # (x1+...+xm)^2 <= m (x1^2+...+xm^2)
            if s * s > m * sq:
                return False
            if s > m * v or s < m * lo:
                return False
        return True

    def rec(m: int, prev: int, s, sq: int, acc: list[int]):
        if m == 0:
            if sq == 0 and (s is None or s == 0):
                out.append(tuple(acc))
            return
        top = min(prev, hi, isqrt(sq) if sq >= 0 else lo - 1)
        for v in range(top, lo - 1, -1):
            ns = None if s is None else s - v
            nsq = sq - v * v
            if not feasible(m - 1, ns, nsq, v):
                continue
            acc.append(v)
            rec(m - 1, v, ns, nsq, acc)
            acc.pop()

    if count == 0:
        if total_square == 0 and (total_sum is None or total_sum == 0):
            return [()]
        return []
    rec(count, hi, total_sum, total_square, [])
    return out


def distinct_arrangements(values: Sequence[int]) -> Iterable[tuple[int, ...]]:
    """All distinct orderings of a multiset (no repeats)."""
    counts = Counter(values)
    n = len(values)

    def rec(acc: list[int]):
        if len(acc) == n:
            yield tuple(acc)
            return
        for v in sorted(counts):
            if counts[v]:
                counts[v] -= 1
                acc.append(v)
                yield from rec(acc)
                acc.pop()
                counts[v] += 1

    yield from rec([])


def _class_from_b(surface: SurfaceModel, a: int, b: Sequence[int]) -> DivisorClass:
    return divisor(surface, [a] + [-x for x in b])


@dataclass(frozen=True)
class ClassFamily:
    """A permutation orbit of classes, keyed by the coefficient multiset."""

    representative: DivisorClass
    orbit_note: str

    @property
    def surface(self) -> SurfaceModel:
        return self.representative.surface

    def key(self):
        c = self.representative.coeffs
        return (c[0], tuple(sorted(c[1:], reverse=True)))

    def instances(self) -> frozenset[DivisorClass]:
        surface = self.surface
        a = self.representative.coeffs[0]
        stored = [int(x) for x in self.representative.coeffs[1:]]
        return frozenset(
            divisor(surface, (a,) + arr) for arr in distinct_arrangements(stored)
        )

    def __str__(self) -> str:
        return f"{self.representative} ({self.orbit_note})"


def _note_from_b(b: Sequence[int]) -> str:
    nonzero = [x for x in b if x != 0]
    if not nonzero:
        return "no exceptional part"
    counts = Counter(nonzero)
    bits = [f"{v} on {counts[v]} E's" for v in sorted(counts, key=lambda v: (-v))]
    return ", ".join(bits)


def _family_positive(surface: SurfaceModel, a: int, b_desc: Sequence[int]) -> ClassFamily:
    b_full = list(b_desc) + [0] * (surface.k - len(b_desc))
    return ClassFamily(_class_from_b(surface, a, b_full), _note_from_b(b_full))


def _family_anchor(surface: SurfaceModel, n: int, m: int) -> ClassFamily:
    """-nH + (n+1)E_i - (m further E's), anchored at E1 for display."""
    stored = [n + 1] + [-1] * m + [0] * (surface.k - 1 - m)
    rep = divisor(surface, [-n] + stored)
    note = f"{n + 1} on one E, 1 subtracted on {m} E's" if m else f"{n + 1} on one E"
    return ClassFamily(rep, note)


def _require_small_rational(surface: SurfaceModel, cap: int = 8) -> None:
    if not surface.is_rational:
        raise LatticeError("enumeration applies to blowups of the plane")
    if surface.k > cap:
        raise LatticeError(f"k = {surface.k} rejected: the class set is infinite")


def exceptional_classes(surface: SurfaceModel, margin: int = 0) -> frozenset[DivisorClass]:
    """All integral classes with square -1 and genus 0 (k <= 8).

    margin widens every certified search bound; the output must not change,
    which the bound-robustness tests assert.
    """
    _require_small_rational(surface)
    k = surface.k
    found: set[DivisorClass] = set()
    for a in range(-margin, 7 + margin):
        bound = abs(a) + 1 + margin
        for b in _sum_square_solutions(k, 3 * a - 1, a * a + 1, -bound, bound):
            for arr in distinct_arrangements(b):
                found.add(_class_from_b(surface, a, arr))
    for e in found:
        assert pair(e, divisor(surface, [1] + [0] * k)) >= 0
    return frozenset(found)


def negative_sphere_classes(
    surface: SurfaceModel,
    n_bound: int = 2,
    square: int | None = None,
    a_value: int | None = None,
    a_max_filter: int | None = None,
    margin: int = 0,
) -> list[ClassFamily]:
    """Families of genus-0 classes with negative square.

    The part with positive H-degree is a finite list (degrees 1 through 6);
    the part with non-positive H-degree is the one-parameter anchored family
    -nH + (n+1)E_i - sum of further E's, materialized for n <= n_bound.
    Optional filters restrict to an exact square or H-degree.
    """
    _require_small_rational(surface)
    k = surface.k
    families: dict[tuple, ClassFamily] = {}

    def admit(fam: ClassFamily):
        c = fam.representative
        assert adjunction_genus(c) == 0 and c.square() < 0
        if square is not None and c.square() != square:
            return
        if a_value is not None and c.coeffs[0] != a_value:
            return
        if a_max_filter is not None and c.coeffs[0] > a_max_filter:
            return
        families.setdefault(fam.key(), fam)

    for a in range(1, 7 + margin):
        lo = -margin
        hi = a + 1 + margin
        s = 1
        while a * a + s <= k * hi * hi:
            for b in _sum_square_solutions(k, 3 * a - 2 + s, a * a + s, lo, hi):
                admit(_family_positive(surface, a, b))
            s += 1
    for n in range(0, n_bound + 1):
        for m in range(0, k):
            admit(_family_anchor(surface, n, m))
    return sorted(families.values(), key=lambda f: f.key())


def zero_square_sphere_classes(surface: SurfaceModel, margin: int = 0) -> list[ClassFamily]:
    """Families of genus-0 classes with square zero (k <= 8)."""
    _require_small_rational(surface)
    k = surface.k
    families: dict[tuple, ClassFamily] = {}
    for a in range(1, 12 + margin):
        lo = -margin
        hi = a + 1 + margin
        for b in _sum_square_solutions(k, 3 * a - 2, a * a, lo, hi):
            fam = _family_positive(surface, a, b)
            assert adjunction_genus(fam.representative) == 0
            assert fam.representative.square() == 0
            families.setdefault(fam.key(), fam)
    return sorted(families.values(), key=lambda f: f.key())


def family_instances(families: Iterable[ClassFamily]) -> frozenset[DivisorClass]:
    out: set[DivisorClass] = set()
    for fam in families:
        out |= fam.instances()
    return frozenset(out)


def nine_squares_representations(total: int, residue_sum_zero: bool = True) -> list[tuple[int, ...]]:
    """Multisets of 9 integers, congruent to each other mod 3, whose squares
    sum to the given total; entries sum to zero when flagged.

    Multisets are returned as non-increasing tuples, lexicographically
    sorted; "essentially different" representations are exactly these."""
    if total < 0:
        raise ValueError("total must be non-negative")
    bound = isqrt(total)
    target_sum = 0 if residue_sum_zero else None
    sols = _sum_square_solutions(9, target_sum, total, -bound, bound)
    out = []
    for s in sols:
        r = s[0] % 3
        if all(x % 3 == r for x in s):
            out.append(s)
    return sorted(out, reverse=True)


# ---------------------------------------------------------------------------
# audits: genus bounds and the non-existence sweeps
# ---------------------------------------------------------------------------


def _positive_genus_tuples(k: int, a: int, bound: int) -> Iterable[tuple[int, ...]]:
    """Non-increasing b with sum bi(bi-1) <= a(a-3), i.e. genus >= 1."""
    budget = a * (a - 3)
    if budget < 0:
        return

    def rec(m: int, prev: int, left: int, acc: list[int]):
        if m == 0:
            yield tuple(acc)
            return
        for v in range(min(prev, bound), -bound - 1, -1):
            cost = v * (v - 1)
            if cost > left:
                if v > 1:
                    continue
                break
            acc.append(v)
            yield from rec(m - 1, v, left - cost, acc)
            acc.pop()

    yield from rec(k, bound, budget, [])


def _nonneg_square_high_k_tuples(k: int, a: int, bound: int) -> Iterable[tuple[int, ...]]:
    """Non-increasing b with sum bi^2 <= a^2 and sum bi >= 3a."""

    def rec(m: int, prev: int, sq_left: int, sum_needed: int, acc: list[int]):
        if m == 0:
            if sum_needed <= 0:
                yield tuple(acc)
            return
        top = min(prev, bound, isqrt(sq_left))
        for v in range(top, -bound - 1, -1):
            nsq = sq_left - v * v
            if nsq < 0:
                continue
            need = sum_needed - v
            # remaining sum is at most min((m-1) v, sqrt((m-1) nsq))
            if need > 0:
                cap = min((m - 1) * v, isqrt((m - 1) * nsq)) if m > 1 else 0
                if m == 1 or need > cap:
                    continue
            acc.append(v)
            yield from rec(m - 1, v, nsq, need, acc)
            acc.pop()

    yield from rec(k, bound, a * a, 3 * a, [])


@dataclass(frozen=True)
class SweepReport:
    """Exhaustive checks over integral classes with positive H-degree.

    negative_square_positive_genus  -- classes with square < 0 and genus >= 1
                                       (must be empty for k <= 9);
    zero_square_positive_genus      -- square = 0 and genus >= 1 (empty for
                                       k <= 8; multiples of -K for k = 9);
    nonneg_square_nonneg_k_pairing  -- square >= 0 and K.C >= 0 (empty for
                                       k < 9; multiples of -K for k = 9).
    """

    surface: SurfaceModel
    bound: int
    negative_square_positive_genus: tuple[DivisorClass, ...]
    zero_square_positive_genus: tuple[DivisorClass, ...]
    nonneg_square_nonneg_k_pairing: tuple[DivisorClass, ...]

    @property
    def ok(self) -> bool:
        k = self.surface.k
        if self.negative_square_positive_genus:
            return False
        anti = -1 * canonical_class(self.surface)
        for group, allow_k9 in (
            (self.zero_square_positive_genus, True),
            (self.nonneg_square_nonneg_k_pairing, True),
        ):
            for c in group:
                if k < 9 or not allow_k9:
                    return False
                m = Fraction(c.coeffs[0], 3)
                if c != m * anti:
                    return False
        return True


def sphere_class_sweeps(surface: SurfaceModel, bound: int = 8) -> SweepReport:
    """Certify the "all negative curves are spheres" arithmetic on k <= 9.

    H-degrees from 1 to bound, subtracted coefficients up to bound in
    absolute value.  Classes with non-positive H-degree are settled by the
    closed-form classification and are out of scope here.
    """
    if not surface.is_rational or surface.k > 9:
        raise LatticeError("sweeps cover blowups of the plane with k <= 9")
    k = surface.k
    neg, zero, dim0 = [], [], []
    for a in range(1, bound + 1):
        for b in _positive_genus_tuples(k, a, bound):
            c = _class_from_b(surface, a, b)
            sq = c.square()
            if sq < 0:
                neg.append(c)
            elif sq == 0:
                zero.append(c)
        for b in _nonneg_square_high_k_tuples(k, a, bound):
            c = _class_from_b(surface, a, b)
            if c.square() >= 0 and pair(canonical_class(surface), c) >= 0:
                dim0.append(c)
    return SweepReport(
        surface,
        bound,
        tuple(sorted_classes(neg)),
        tuple(sorted_classes(zero)),
        tuple(sorted_classes(dim0)),
    )


@dataclass(frozen=True)
class GenusBoundReport:
    """Checks on low-degree genus behaviour for k < 9.

    For positive H-degree classes within the bounds: degree <= 2 forces
    genus <= 0; genus-1 classes have square >= 9 - k, with equality exactly
    for 3H - E1 - ... - Ek; and no class has square >= 0 and K.C >= 0.
    """

    surface: SurfaceModel
    bound: int
    low_degree_violations: tuple[DivisorClass, ...]
    genus_one_violations: tuple[DivisorClass, ...]
    equality_classes: tuple[DivisorClass, ...]
    nonneg_k_pairing_classes: tuple[DivisorClass, ...]

    @property
    def ok(self) -> bool:
        expected_equality = (
            divisor(self.surface, [3] + [-1] * self.surface.k),
        )
        return (
            not self.low_degree_violations
            and not self.genus_one_violations
            and not self.nonneg_k_pairing_classes
            and self.equality_classes == expected_equality
        )


def genus_bound_audit(surface: SurfaceModel, bound: int = 8) -> GenusBoundReport:
    if not surface.is_rational or surface.k >= 9:
        raise LatticeError("the genus bound audit needs a rational surface, k < 9")
    k = surface.k
    low, g1_bad, g1_eq = [], [], []
    for a in range(1, bound + 1):
        for b in _positive_genus_tuples(k, a, bound):
            c = _class_from_b(surface, a, b)
            g = adjunction_genus(c)
            if a <= 2 and c.square() >= 0 and g >= 1:
                low.append(c)
            if g == 1:
                if c.square() < 9 - k:
                    g1_bad.append(c)
                elif c.square() == 9 - k:
                    g1_eq.append(c)
    sweep = sphere_class_sweeps(surface, bound)
    return GenusBoundReport(
        surface,
        bound,
        tuple(sorted_classes(low)),
        tuple(sorted_classes(g1_bad)),
        tuple(sorted_classes(g1_eq)),
        sweep.nonneg_square_nonneg_k_pairing,
    )
