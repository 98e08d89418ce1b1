"""Formal inflation calculus on the positive dual of a curve cone.

A formal inflation moves a class A to A + eps*C; along a negative class the
admissible step is 0 < eps <= (A.C)/(-C.C), with the maximal step landing on
the hyperplane of C.  Alternating maximal steps along two negative classes
converge geometrically, and a Gram-Schmidt pass over a negative-definite
span turns the whole limit process into one exact orthogonal projection.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .cones import cone_from_rays, positive_dual
from .lattice import DivisorClass, pair


class InflationError(ValueError):
    pass


class LightConeViolation(InflationError):
    """An orthogonalized combination acquired non-negative square."""

    def __init__(self, vector: DivisorClass, message: str):
        self.vector = vector
        super().__init__(message)


class RoundBoundaryError(InflationError):
    def __init__(self, evidence: Sequence[DivisorClass]):
        self.evidence = tuple(evidence)
        super().__init__(
            "positive dual has round boundary; negative-square directions "
            + ", ".join(str(v) for v in evidence)
        )


@dataclass(frozen=True)
class InflationTrace:
    start: DivisorClass
    steps: tuple[tuple[DivisorClass, Fraction], ...]
    result: DivisorClass
    limit_formula_used: bool = False

    def verify(self) -> bool:
        """Exact replay: result = start + sum of the recorded steps.

        Traces that end on a light-cone ray record the limit instead of a
        finite sum and are flagged; replay does not apply to those."""
        if self.limit_formula_used:
            return True
        acc = self.start
        for curve, eps in self.steps:
            acc = acc + eps * curve
        return acc == self.result


def formal_inflate(a: DivisorClass, c: DivisorClass, eps) -> DivisorClass:
    """One inflation step a + eps*c with the admissibility window enforced."""
    eps = Fraction(eps)
    ac = pair(a, c)
    if ac < 0:
        raise InflationError(f"pairing {ac} negative; cannot inflate along {c}")
    if eps <= 0:
        raise InflationError("step must be positive")
    c2 = pair(c, c)
    if c2 < 0 and eps > ac / -c2:
        raise InflationError(f"step {eps} exceeds the admissible bound {ac / -c2}")
    return a + eps * c

def max_inflate(a: DivisorClass, c: DivisorClass) -> tuple[DivisorClass, Fraction]:
    """The maximal step along a negative class; the result pairs to 0 with c."""
    c2 = pair(c, c)
    if c2 >= 0:
        raise InflationError("maximal inflation needs a class of negative square")
    ac = pair(a, c)
    if ac < 0:
        raise InflationError(f"pairing {ac} negative; cannot inflate along {c}")
    eps = ac / -c2
    result = a + eps * c
    assert pair(result, c) == 0
    return result, eps


@dataclass(frozen=True)
class AlternateInflation:
    trace: InflationTrace
    limit: DivisorClass
    ratio: Fraction  # (C1.C2)^2 / (C1^2 C2^2)
    first_coefficient: Fraction
    divergent: bool  # ratio = 1: the limit ray sits on the light cone
    odd_coefficients: tuple[Fraction, ...] = ()
    even_coefficients: tuple[Fraction, ...] = ()


def alternate_inflate(
    a: DivisorClass, c1: DivisorClass, c2: DivisorClass, iterations: int = 0
) -> AlternateInflation:
    """Alternating maximal inflations along c2, c1, c2, ... from a class on
    the hyperplane of c1.

    Odd-step coefficients follow the geometric law l_(2k+1) = l_1 * x^k with
    x = (c1.c2)^2/(c1^2 c2^2); for x < 1 the exact limit is
    a + l_1/(1-x) * (c2 - (c1.c2)/c1^2 * c1), orthogonal to both classes.
    For x = 1 the coefficient sum diverges and only the limit ray exists.
    """
    if pair(a, c1) != 0:
        raise InflationError("start class must lie on the hyperplane of the first curve")
    s1, s2 = pair(c1, c1), pair(c2, c2)
    if s1 >= 0 or s2 >= 0:
        raise InflationError("alternating inflation needs two negative classes")
    c12 = pair(c1, c2)
    x = (c12 * c12) / (s1 * s2)
    if x > 1:
        raise InflationError(
            f"(c1.c2)^2 = {c12 * c12} exceeds c1^2 c2^2 = {s1 * s2}; "
            "no common positive-square dual class exists for this pair"
        )
    l1 = pair(a, c2) / -s2
    steps = []
    odd, even = [], []
    current = a
    for k in range(iterations):
        curve = c2 if k % 2 == 0 else c1
        current, eps = max_inflate(current, curve)
        (odd if k % 2 == 0 else even).append(eps)
        if eps != 0:
            steps.append((curve, eps))
    trace = InflationTrace(a, tuple(steps), current)
    direction = c2 - (c12 / s1) * c1
    if x == 1:
        return AlternateInflation(
            trace, direction.primitive(), x, l1, True, tuple(odd), tuple(even)
        )
    limit = a + (l1 / (1 - x)) * direction
    assert pair(limit, c1) == 0 and pair(limit, c2) == 0
    return AlternateInflation(trace, limit, x, l1, False, tuple(odd), tuple(even))


def gram_schmidt_negative(curves: Sequence[DivisorClass]) -> list[DivisorClass]:
    """Pairing-orthogonalize classes spanning a negative-definite subspace.

    Inputs must have negative squares and pairwise non-negative pairings;
    each output is a non-negative rational combination of the inputs.  A
    zero or positive square appearing along the way means the input facets
    meet the light cone and is raised as LightConeViolation; linearly
    dependent input is rejected.
    """
    out: list[DivisorClass] = []
    for c in curves:
        if pair(c, c) >= 0:
            raise InflationError(f"{c} has non-negative square")
        v = c
        for u in out:
            v = v - (pair(u, c) / pair(u, u)) * u
        if v.is_zero():
            raise InflationError("linearly dependent input classes")
        sq = pair(v, v)
        if sq >= 0:
            raise LightConeViolation(
                v,
                f"orthogonalized class {v} has square {sq}; "
                "the configured facets meet the light cone",
            )
        out.append(v)
    return out


@dataclass(frozen=True)
class VertexAchievement:
    ray: DivisorClass
    trace: InflationTrace
    lightcone_limit: bool


def achieve_vertex(a: DivisorClass, curves: Sequence[DivisorClass]) -> VertexAchievement:
    """Reach the ray where the curves' facets meet by maximal inflations.

    With all orthogonalized squares negative this is the exact orthogonal
    projection of the start class onto the common pairing kernel, reached in
    one maximal step per orthogonalized class.  When an orthogonalized class
    goes null, the facets meet the light cone in exactly that ray; it is
    returned with the divergent-limit flag instead of a finite trace.
    """
    if not curves:
        raise InflationError("no curves supplied")
    ortho: list[DivisorClass] = []
    null_direction: DivisorClass | None = None
    for c in curves:
        if pair(c, c) >= 0:
            raise InflationError(f"{c} has non-negative square")
        v = c
        for u in ortho:
            v = v - (pair(u, c) / pair(u, u)) * u
        if v.is_zero():
            continue  # facet already implied by the previous ones
        sq = pair(v, v)
        if sq > 0:
            raise LightConeViolation(v, f"orthogonalized class {v} has positive square")
        if sq == 0:
            if null_direction is not None and not _same_ray(null_direction, v):
                raise InflationError("facet intersection is not a single ray")
            null_direction = v
            continue
        ortho.append(v)
    if null_direction is not None:
        for c in curves:
            if pair(c, null_direction) != 0:
                raise InflationError("facet intersection is not a single ray")
        ray = null_direction.primitive()
        if pair(a, ray) < 0:
            ray = -1 * ray
        trace = InflationTrace(a, (), ray, limit_formula_used=True)
        return VertexAchievement(ray, trace, True)
    n = a.surface.rank
    if linalg.rank([c.coeffs for c in ortho]) != n - 1:
        raise InflationError("facet intersection is not a single ray")
    steps = []
    current = a
    for u in ortho:
        eps = pair(current, u) / -pair(u, u)
        if eps < 0:
            raise InflationError(f"start class pairs negatively with {u}")
        if eps > 0:
            current = current + eps * u
            steps.append((u, eps))
    for u in ortho:
        assert pair(current, u) == 0
    if current.is_zero():
        raise InflationError("projection collapsed to zero; start class is degenerate")
    ray = current.primitive()
    trace = InflationTrace(a, tuple(steps), current)
    return VertexAchievement(ray, trace, False)


def _same_ray(v: DivisorClass, w: DivisorClass) -> bool:
    return v.primitive() == w.primitive() or v.primitive() == (-1 * w).primitive()


def achieve_all_rays(
    curves: Sequence[DivisorClass],
    start: DivisorClass,
    extra_square_zero: Sequence[DivisorClass] = (),
) -> dict[DivisorClass, VertexAchievement]:
    """Achieve every extremal ray of the positive dual of the curve cone.

    Requires the dual to be polytopic (no round boundary); the start class
    must pair non-negatively with every generator.  Each dual ray is reached
    through maximal inflations along the negative curves tight on it."""
    gens = list(curves) + list(extra_square_zero)
    dual = positive_dual(cone_from_rays(gens))
    if not dual.polytopic:
        raise RoundBoundaryError(
            dual.round_boundary_rays or dual.linear_dual.lineality()
        )
    for g in gens:
        if pair(start, g) < 0:
            raise InflationError(f"start class pairs negatively with {g}")
    achieved: dict[DivisorClass, VertexAchievement] = {}
    for ray in dual.linear_dual.rays():
        tight = [c for c in curves if pair(c, c) < 0 and pair(c, ray) == 0]
        result = achieve_vertex(start, tight)
        if result.ray != ray:
            raise InflationError(f"achieved {result.ray} instead of dual ray {ray}")
        achieved[ray] = result
    return achieved
