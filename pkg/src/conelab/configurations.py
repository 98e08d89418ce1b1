"""Negative-curve configurations: validity, combinatorial blow-down, the
catalog of three-point blowups of the plane, and ruled-surface data.

A configuration is the combinatorial shadow of the negative curves of a
tamed almost complex structure: the surface, the classes of the negative
curves, and their pairwise pairings.  Validity asks three things: the
classes come from the certified classification and meet non-negatively;
some rational class of positive square pairs positively with everything in
sight; and every -1 sphere class decomposes non-negatively into configured
curves and certified classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from . import exactlp
from .cones import cone_from_rays, positive_dual
from .enumeration import (
    exceptional_classes,
    family_instances,
    zero_square_sphere_classes,
)
from .lattice import (
    DivisorClass,
    SurfaceModel,
    T,
    U,
    adjunction_genus,
    canonical_class,
    divisor,
    E,
    H,
    pair,
    rational_surface,
    sorted_classes,
)


class ConfigurationError(ValueError):
    pass


class NegativeConfiguration:
    """A surface with a finite set of negative classes and optional
    square-zero curve-cone generators (the ruled fiber, for instance)."""

    def __init__(
        self,
        surface: SurfaceModel,
        curves: Sequence[DivisorClass],
        extra_square_zero: Sequence[DivisorClass] = (),
    ):
        self.surface = surface
        self.curves = tuple(sorted_classes(curves))
        self.extra_square_zero = tuple(sorted_classes(extra_square_zero))
        seen = set()
        for c in self.curves:
            if c.surface != surface:
                raise ConfigurationError("curve on the wrong surface")
            if not c.is_integral():
                raise ConfigurationError(f"curve {c} is not integral")
            if c.square() >= 0:
                raise ConfigurationError(f"curve {c} has non-negative square")
            if adjunction_genus(c) < 0:
                raise ConfigurationError(f"curve {c} has negative genus")
            if c in seen:
                raise ConfigurationError(f"duplicate curve {c}")
            seen.add(c)
        for c in self.extra_square_zero:
            if c.surface != surface or c.square() != 0:
                raise ConfigurationError(f"{c} is not a square-zero class here")
        for i, a in enumerate(self.curves):
            for b in self.curves[i + 1 :]:
                if pair(a, b) < 0:
                    raise ConfigurationError(
                        f"distinct curves {a} and {b} pair negatively"
                    )

    @cached_property
    def intersection_matrix(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(tuple(pair(a, b) for b in self.curves) for a in self.curves)

    def generators(self) -> list[DivisorClass]:
        return list(self.curves) + list(self.extra_square_zero)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, NegativeConfiguration)
            and self.surface == other.surface
            and self.curves == other.curves
            and self.extra_square_zero == other.extra_square_zero
        )

    def __hash__(self):
        return hash((self.surface, self.curves, self.extra_square_zero))

    def __repr__(self) -> str:
        body = ", ".join(str(c) for c in self.curves)
        return f"NegativeConfiguration({self.surface}: {body})"

    def to_json(self) -> dict:
        d = {
            "surface": self.surface.to_json(),
            "curves": [str(c) for c in self.curves],
        }
        if self.extra_square_zero:
            d["extra_square_zero"] = [str(c) for c in self.extra_square_zero]
        return d

    @staticmethod
    def from_json(d: dict) -> "NegativeConfiguration":
        from .lattice import parse_class

        surface = SurfaceModel.from_json(d["surface"])
        curves = [parse_class(s, surface) for s in d["curves"]]
        extra = [parse_class(s, surface) for s in d.get("extra_square_zero", [])]
        return NegativeConfiguration(surface, curves, extra)


# ---------------------------------------------------------------------------
# classification membership and certified SW classes
# ---------------------------------------------------------------------------


def is_classified_negative_class(c: DivisorClass) -> bool:
    """Membership in the certified classification of negative sphere classes.

    Positive H-degree: genus 0, negative square, all subtracted coefficients
    non-negative (the six-family list).  Non-positive H-degree: the anchored
    shape -nH + (n+1)Ei - further E's.  Minimal ruled: U - nT.
    """
    surface = c.surface
    if not c.is_integral() or c.square() >= 0:
        return False
    if surface.is_ruled:
        if surface.k != 0:
            return False
        u, t = c.coeffs[0], c.coeffs[1]
        return u == 1 and t < 0
    if surface.k > 8 or adjunction_genus(c) != 0:
        return False
    a = c.coeffs[0]
    b = c.b_vector()
    if a >= 1:
        return all(v >= 0 for v in b)
    n = -a
    anchors = [v for v in b if v == -(n + 1)]
    rest_ok = all(v in (0, 1) for v in b if v != -(n + 1))
    return len(anchors) == 1 and rest_ok


def certified_sw_classes(surface: SurfaceModel) -> list[DivisorClass]:
    """Classes carrying a wall-crossing nonvanishing certificate, used as
    known curve-cone members by the validity checks."""
    if surface.is_rational:
        if surface.k > 8:
            raise ConfigurationError("certified sets are finite only for k <= 8")
        out = {H(surface)}
        out |= exceptional_classes(surface)
        out |= family_instances(zero_square_sphere_classes(surface))
        return sorted_classes(out)
    if surface.k != 0:
        raise ConfigurationError("certified ruled sets cover minimal surfaces")
    h = surface.h
    a = (h - 1 + 1) // 2 if surface.kind == "trivial_ruled" else (h - 2 + 1) // 2
    section = U(surface) + a * T(surface)
    return sorted_classes({T(surface), section})


# ---------------------------------------------------------------------------
# the three validity properties
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PropertyResult:
    passed: bool
    details: str


@dataclass(frozen=True)
class ValidationReport:
    p1: PropertyResult
    p2: PropertyResult
    p3: PropertyResult
    witness: DivisorClass | None
    decompositions: tuple[tuple[DivisorClass, tuple[Fraction, ...]], ...]

    @property
    def passed(self) -> bool:
        return self.p1.passed and self.p2.passed and self.p3.passed


def validate_configuration(cfg: NegativeConfiguration) -> ValidationReport:
    surface = cfg.surface
    # P1: classification membership plus non-negative mutual pairings
    bad = [c for c in cfg.curves if not is_classified_negative_class(c)]
    p1 = PropertyResult(
        not bad,
        "all curves classified" if not bad else "unclassified: " + ", ".join(map(str, bad)),
    )

    certified = certified_sw_classes(surface)

    # P2: an explicit rational class of positive square pairing positively
    # with the curves and with every certified class
    dual = positive_dual(cone_from_rays(cfg.generators()))
    witness: DivisorClass | None = None
    if not dual.linear_dual.rays():
        p2 = PropertyResult(False, "dual cone has no extremal rays")
    else:
        w = cfg.generators()[0]
        acc = None
        for r in dual.linear_dual.rays():
            acc = r if acc is None else acc + r
        witness = acc
        failures = [c for c in cfg.generators() + certified if pair(witness, c) <= 0]
        if witness.square() <= 0:
            p2 = PropertyResult(False, f"witness {witness} has square {witness.square()}")
        elif failures:
            p2 = PropertyResult(
                False, "witness not positive on: " + ", ".join(map(str, failures))
            )
        else:
            p2 = PropertyResult(True, f"witness {witness}")

    # P3: every -1 sphere class is a non-negative combination of the curves
    # and the other certified classes
    decomps = []
    failed = []
    if surface.is_rational:
        targets = sorted_classes(exceptional_classes(surface))
    else:
        targets = []
    for target in targets:
        gens = cfg.generators() + [c for c in certified if c != target]
        coeffs = exactlp.nonnegative_combination(
            [g.coeffs for g in gens], target.coeffs
        )
        if coeffs is None:
            failed.append(target)
        else:
            used = tuple(Fraction(x) for x in coeffs[: len(cfg.generators())])
            decomps.append((target, used))
    p3 = PropertyResult(
        not failed,
        "all -1 classes decompose"
        if not failed
        else "no decomposition for: " + ", ".join(map(str, failed)),
    )
    return ValidationReport(p1, p2, p3, witness, tuple(decomps))


# ---------------------------------------------------------------------------
# combinatorial blow-down
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BlowDownStep:
    before: DivisorClass
    after_same_lattice: DivisorClass
    genus_before: Fraction
    genus_after: Fraction
    pairing: Fraction
    kept: bool


@dataclass(frozen=True)
class BlowDownResult:
    configuration: NegativeConfiguration
    steps: tuple[BlowDownStep, ...]

    @property
    def dropped(self) -> tuple[DivisorClass, ...]:
        return tuple(s.before for s in self.steps if not s.kept)


def blow_down(cfg: NegativeConfiguration, at: DivisorClass) -> BlowDownResult:
    """Remove a -1 basis class E from the configuration, replacing every
    other curve C by C + (C.E) E and deleting the E coordinate.

    The replaced classes are orthogonal to E, so the deletion is exact;
    classes of non-negative square leave the configuration and are reported.
    New-lattice genus never drops: it is preserved exactly when C.E is 0 or
    1 and grows otherwise.
    """
    surface = cfg.surface
    if not surface.is_rational:
        raise ConfigurationError("blow-down implemented for rational surfaces")
    if at not in cfg.curves:
        raise ConfigurationError(f"{at} is not a curve of the configuration")
    if at.square() != -1 or adjunction_genus(at) != 0:
        raise ConfigurationError(f"{at} is not a -1 sphere class")
    index = next(
        (i for i in range(1, surface.k + 1) if at == E(surface, i)),
        None,
    )
    if index is None:
        raise ConfigurationError(
            f"{at} is not a basis class; apply a Cremona change of basis first"
        )
    small = rational_surface(surface.k - 1)
    kc, kc_small = canonical_class(surface), canonical_class(small)
    drop = index  # coefficient position of E_index is index (H sits at 0)
    steps = []
    kept_classes = []
    for c in cfg.curves:
        if c == at:
            continue
        m = pair(c, at)
        transformed = c + m * at
        assert pair(transformed, at) == 0
        g_before = adjunction_genus(c)
        reduced = divisor(
            small, [x for i, x in enumerate(transformed.coeffs) if i != drop]
        )
        g_after = adjunction_genus(reduced)
        assert reduced.square() == c.square() + m * m
        assert pair(kc_small, reduced) == pair(kc, c) - m
        assert g_after >= g_before
        assert (g_after == g_before) == (m in (0, 1))
        kept = reduced.square() < 0
        steps.append(BlowDownStep(c, transformed, g_before, g_after, m, kept))
        if kept:
            kept_classes.append(reduced)
    return BlowDownResult(NegativeConfiguration(small, kept_classes), tuple(steps))


# ---------------------------------------------------------------------------
# catalogs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CatalogEntry:
    case: int
    variant: int
    n: int
    configuration: NegativeConfiguration

    def label(self) -> str:
        return f"case {self.case}{'ab'[self.variant - 1]} n={self.n}"


def _negative_section(surface: SurfaceModel, n: int) -> DivisorClass:
    """(n+1)E1 - nH, the negative curve inherited from an odd Hirzebruch
    surface; for n = 0 this is just E1."""
    return (n + 1) * E(surface, 1) - n * H(surface)


def catalog_cp2_1(n_values: Sequence[int] = (0, 1, 2)) -> list[CatalogEntry]:
    """One blowup of the plane: the single negative curve (n+1)E1 - nH."""
    surface = rational_surface(1)
    return [
        CatalogEntry(1, 1, n, NegativeConfiguration(surface, [_negative_section(surface, n)]))
        for n in n_values
    ]


def catalog_cp2_2(n_values: Sequence[int] = (0, 1, 2)) -> list[CatalogEntry]:
    """Two blowups: blow up a point on the negative curve (variant 1) or a
    generic point (variant 2)."""
    surface = rational_surface(2)
    e2 = E(surface, 2)
    line = H(surface) - E(surface, 1) - E(surface, 2)
    out = []
    for n in n_values:
        a = _negative_section(surface, n)
        out.append(
            CatalogEntry(1, 1, n, NegativeConfiguration(surface, [e2, line, a - e2]))
        )
        out.append(
            CatalogEntry(1, 2, n, NegativeConfiguration(surface, [e2, line, a]))
        )
    return out


def catalog_cp2_3(n_values: Sequence[int] = (0, 1, 2)) -> list[CatalogEntry]:
    """Three blowups of the plane: all complex negative-curve configurations,
    indexed by the position of the third blown-up point relative to the
    negative curves of the two-point configuration."""
    surface = rational_surface(3)
    h = H(surface)
    e1, e2, e3 = (E(surface, i) for i in (1, 2, 3))
    l12, l13, l23 = h - e1 - e2, h - e1 - e3, h - e2 - e3
    l123 = h - e1 - e2 - e3
    entries = []
    for n in n_values:
        a = _negative_section(surface, n)
        cases: list[tuple[int, int, list[DivisorClass]]] = [
            (1, 1, [e3, e2, l12, l13, a - e2]),
            (1, 2, [e3, e2, l12, l13] + ([l23] if n == 0 else []) + [a]),
            (2, 1, [e3, e2 - e3, l12, a - e2]),
            # for n = 0 the line through the second point in the direction of
            # the third stays irreducible, exactly as in case 1
            (2, 2, [e3, e2 - e3, l12] + ([l23] if n == 0 else []) + [a]),
            (3, 1, [e3, e2, l123, a - e2]),
            (3, 2, [e3, e2, l123, a]),
            (4, 1, [e3, e2, l12, l13, a - e2 - e3]),
            (4, 2, [e3, e2, l12, l13, a - e3]),
            (5, 1, [e3, e2, l123, a - e3]),
            (6, 1, [e3, e2 - e3, l12, a - e2 - e3]),
            (7, 1, [e3, e2 - e3, l123, a - e2]),
            (7, 2, [e3, e2 - e3, l123, a]),
        ]
        for case, variant, curves in cases:
            entries.append(
                CatalogEntry(case, variant, n, NegativeConfiguration(surface, curves))
            )
    return entries


# ---------------------------------------------------------------------------
# -1 curve bookkeeping and constructions
# ---------------------------------------------------------------------------


def count_minus_one(cfg: NegativeConfiguration) -> tuple[int, list[DivisorClass]]:
    found = [
        c for c in cfg.curves if c.square() == -1 and adjunction_genus(c) == 0
    ]
    return len(found), found


def disjoint_minus_one_configuration(k: int, l: int) -> NegativeConfiguration:
    """A configuration on k blowups with exactly l mutually disjoint -1
    sphere classes: a line through l points, then a chain of infinitely
    near points on the last one."""
    if k < 3 or not 1 <= l <= k:
        raise ConfigurationError("need k >= 3 and 1 <= l <= k")
    surface = rational_surface(k)
    curves = [H(surface) - sum((E(surface, i) for i in range(2, k + 1)), E(surface, 1))]
    curves += [E(surface, i) for i in range(1, l)]
    curves += [E(surface, i) - E(surface, i + 1) for i in range(l, k)]
    curves += [E(surface, k)]
    return NegativeConfiguration(surface, curves)


def ruled_negative_classes(surface: SurfaceModel, bound: int) -> list[DivisorClass]:
    """All candidate negative classes aU + bT on a minimal ruled surface
    within the bound: negative square, non-negative fiber degree, and genus
    at least that of a degree-a cover of the base.  The survivors are
    exactly U - nT for n >= 1."""
    if not surface.is_ruled or surface.k != 0:
        raise ConfigurationError("minimal ruled surfaces only")
    h = surface.h
    out = []
    for a in range(0, bound + 1):
        for b in range(-bound, bound + 1):
            c = a * U(surface) + b * T(surface)
            if c.square() >= 0:
                continue
            if 2 * adjunction_genus(c) - 2 < a * (2 * h - 2):
                continue
            out.append(c)
    return sorted_classes(out)
