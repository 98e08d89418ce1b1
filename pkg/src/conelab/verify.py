"""The reproduction suite: one check per acceptance criterion.

Each check recomputes its expected data independently (hand-expanded family
patterns, direct pairing arithmetic, iterated inflation against closed
forms) and compares exactly.  The CLI command ``verify-paper`` runs these
and prints one line per check; the test suite asserts them individually.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable

from . import cones, cremona, enumeration, inflation, swcert
from .configurations import (
    blow_down,
    catalog_cp2_2,
    catalog_cp2_3,
    count_minus_one,
    disjoint_minus_one_configuration,
    ruled_negative_classes,
    validate_configuration,
)
from .lattice import (
    DivisorClass,
    E,
    H,
    T,
    U,
    canonical_class,
    divisor,
    nontrivial_ruled,
    pair,
    parse_class,
    rational_surface,
    sorted_classes,
    trivial_ruled,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    reference: str
    passed: bool
    details: str


def _result(name: str, reference: str, passed: bool, details: str) -> CheckResult:
    return CheckResult(name, reference, passed, details)


def _family_set(families) -> set[tuple]:
    return {f.key() for f in families}


def _expected_family_keys(surface, patterns: Iterable[tuple[int, list[int]]]) -> set[tuple]:
    out = set()
    for a, b in patterns:
        coeffs = sorted([Fraction(-x) for x in b] + [Fraction(0)] * (surface.k - len(b)), reverse=True)
        out.add((Fraction(a), tuple(coeffs)))
    return out


# --------------------------------------------------------------------- 1


def check_exceptional_small_k() -> CheckResult:
    s2 = rational_surface(2)
    got2 = enumeration.exceptional_classes(s2)
    want2 = {E(s2, 1), E(s2, 2), H(s2) - E(s2, 1) - E(s2, 2)}
    s3 = rational_surface(3)
    got3 = enumeration.exceptional_classes(s3)
    # independent oracle: plain triple loops over the certified window
    brute3 = set()
    for a in range(0, 4):
        for b1 in range(-4, 5):
            for b2 in range(-4, 5):
                for b3 in range(-4, 5):
                    c = divisor(s3, [a, -b1, -b2, -b3])
                    if c.square() == -1 and pair(canonical_class(s3), c) == -1:
                        brute3.add(c)
    ok = got2 == want2 and len(got3) == 6 and got3 == brute3
    return _result(
        "exceptional-classes-small-k",
        "the set of -1 sphere classes on two and three blowups",
        ok,
        f"k=2 -> {sorted(str(c) for c in got2)}; k=3 -> {len(got3)} classes"
        f" (brute force agrees: {got3 == brute3})",
    )


# --------------------------------------------------------------------- 2


def _expected_negative_patterns_k8() -> list[tuple[int, list[int]]]:
    pats: list[tuple[int, list[int]]] = []
    pats += [(1, [1] * r) for r in range(2, 9)]
    pats += [(2, [1] * r) for r in range(5, 9)]
    pats += [(3, [2] + [1] * r) for r in (6, 7)]
    pats.append((4, [2, 2, 2] + [1] * 5))
    pats.append((5, [2] * 6 + [1] * 2))
    pats.append((6, [3] + [2] * 7))
    return pats


def check_negative_spheres_k8() -> CheckResult:
    s8 = rational_surface(8)
    got = [
        f
        for f in enumeration.negative_sphere_classes(s8, n_bound=0)
        if f.representative.coeffs[0] >= 1
    ]
    want = _expected_family_keys(s8, _expected_negative_patterns_k8())
    robust = [
        f
        for f in enumeration.negative_sphere_classes(s8, n_bound=0, margin=2)
        if f.representative.coeffs[0] >= 1
    ]
    ok = _family_set(got) == want and _family_set(robust) == want
    return _result(
        "negative-spheres-k8",
        "the six families of positive-degree negative sphere classes on eight blowups",
        ok,
        f"{len(got)} families (expected {len(want)}); widened bounds add "
        f"{len(_family_set(robust) - want)} families",
    )


# --------------------------------------------------------------------- 3


def _expected_zero_square_patterns() -> list[tuple[int, list[int]]]:
    return [
        (1, [1]),
        (2, [1] * 4),
        (3, [2, 1, 1, 1, 1, 1]),
        (4, [2, 2, 2, 1, 1, 1, 1]),
        (5, [2] * 6 + [1]),
        (6, [3, 3, 2, 2, 2, 2, 1, 1]),
        (7, [3, 3, 3, 3, 2, 2, 2, 1]),
        (5, [3, 2, 2, 2, 1, 1, 1, 1]),
        (8, [3] * 7 + [1]),
        (4, [3] + [1] * 7),
        (8, [4, 3, 3, 3, 3, 2, 2, 2]),
        (7, [4, 3, 2, 2, 2, 2, 2, 2]),
        (9, [4, 4, 3, 3, 3, 3, 3, 2]),
        (11, [4] * 7 + [3]),
        (10, [4, 4, 4, 4, 3, 3, 3, 3]),
    ]


def check_zero_squares_k8() -> CheckResult:
    s8 = rational_surface(8)
    got = enumeration.zero_square_sphere_classes(s8)
    want = _expected_family_keys(s8, _expected_zero_square_patterns())
    robust = enumeration.zero_square_sphere_classes(s8, margin=2)
    ok = (
        _family_set(got) == want
        and len(got) == 15
        and _family_set(robust) == want
    )
    return _result(
        "zero-squares-k8",
        "the fifteen families of square-zero sphere classes on eight blowups",
        ok,
        f"{len(got)} families; bound-robust: {_family_set(robust) == want}",
    )


# --------------------------------------------------------------------- 4


_DISPLAYED_SIGN_LINES: dict[int, list[list[int]]] = {
    18: [[3, -3] + [0] * 7, [2, 2, 2] + [-1] * 6],
    36: [
        [3, 3, -3, -3] + [0] * 5,
        [4, 1, 1, 1, 1, -2, -2, -2, -2],
        [5, 2] + [-1] * 7,
        [6] + [0] * 8,
    ],
    54: [
        [3, 3, 3, -3, -3, -3, 0, 0, 0],
        [5, 2, 2, -1, -1, -1, -1, -1, -4],
        [4, 4, 1, 1, -2, -2, -2, -2, -2],
        [6, -3, -3] + [0] * 6,
    ],
    72: [
        [3, 3, 3, 3, -3, -3, -3, -3, 0],
        [8] + [-1] * 8,
        [7, 1, 1, 1, -2, -2, -2, -2, -2],
        [6, 3, -3, -3, -3] + [0] * 4,
        [6, -6] + [0] * 7,
        [5, 2, 2, 2, -1, -1, -1, -4, -4],
        [4, 4, 4] + [-2] * 6,
    ],
}


def _expand_sign_line(line: list[int]) -> set[tuple[int, ...]]:
    plus = tuple(sorted(line, reverse=True))
    minus = tuple(sorted([-x for x in line], reverse=True))
    return {plus, minus}


def check_nine_squares() -> CheckResult:
    details = []
    ok = True
    got18 = enumeration.nine_squares_representations(18)
    ok &= len(got18) == 3
    details.append(f"18 -> {len(got18)} (stated: three)")
    counts = {}
    for total in (36, 54, 72):
        got = set(enumeration.nine_squares_representations(total))
        counts[total] = len(got)
        displayed: set[tuple[int, ...]] = set()
        for line in _DISPLAYED_SIGN_LINES[total]:
            displayed |= _expand_sign_line(line)
        admissible = {
            d
            for d in displayed
            if sum(d) == 0 and len({x % 3 for x in d}) == 1
        }
        missing = admissible - got
        ok &= not missing
        extra = got - admissible
        flag = "matches the stated seven" if len(got) == 7 else f"DIFFERS from the stated seven"
        details.append(
            f"{total} -> {len(got)} multisets ({flag}; displayed lines covered, "
            f"{len(extra)} beyond the display)"
        )
    ok &= enumeration.nine_squares_representations(0) == [(0,) * 9]
    return _result(
        "nine-squares-representations",
        "sum-of-nine-squares representations, single residue class mod 3, zero sum",
        ok,
        "; ".join(details),
    )


# --------------------------------------------------------------------- 5


def check_two_blowup_duals() -> CheckResult:
    s2 = rational_surface(2)
    h, e1, e2 = H(s2), E(s2, 1), E(s2, 2)
    ok = True
    rows = []
    for s in (1, 2, 3):
        alpha1 = (1 - s) * h + s * e1
        alpha2 = alpha1 - e2
        want1 = {s * h - (s - 1) * e1, h - e1, s * h - (s - 1) * e1 - e2}
        want2 = {s * h - (s - 1) * e1, h - e1, (s + 1) * h - s * e1 - e2}
        for alpha, want in ((alpha1, want1), (alpha2, want2)):
            dual = cones.dual_cone(cones.cone_from_rays([alpha, e2, h - e1 - e2]))
            good = set(dual.rays()) == want and not dual.lineality()
            ok &= good
            rows.append(f"s={s}: {'ok' if good else 'MISMATCH'}")
    return _result(
        "two-blowup-curve-cone-duals",
        "dual generators of the two curve-cone families on two blowups",
        ok,
        "; ".join(rows),
    )


# --------------------------------------------------------------------- 6


def check_k_symplectic_corners() -> CheckResult:
    expected = {
        1: {"H", "H-E1"},
        2: {"H", "H-E1", "H-E2"},
        3: {"H", "H-E1", "H-E2", "H-E3", "2H-E1-E2-E3"},
    }
    ok = True
    rows = []
    for k in (1, 2, 3):
        ks = cones.k_symplectic_cone(rational_surface(k))
        got = {str(c.ray) for c in ks.corners}
        good = ks.corners_ok and got == expected[k]
        ok &= good
        rows.append(f"k={k}: {len(ks.corners)} corners, squares/genus ok={ks.corners_ok}")
    return _result(
        "k-symplectic-corners",
        "corners of the K-symplectic cone are square 0 or 1 sphere classes",
        ok,
        "; ".join(rows),
    )


# --------------------------------------------------------------------- 7


def check_vertex_example() -> CheckResult:
    s3 = rational_surface(3)
    h = H(s3)
    curves = [E(s3, 3), E(s3, 1) - E(s3, 2), h - E(s3, 1) - E(s3, 2)]
    target_ray = (2 * h - E(s3, 1) - E(s3, 2)).primitive()
    r1 = inflation.achieve_vertex(h, curves)
    r2 = inflation.achieve_vertex(h - E(s3, 1), curves)
    half = Fraction(1, 2) * (2 * h - E(s3, 1) - E(s3, 2))
    ok = (
        r1.ray == target_ray
        and r1.trace.result == 2 * h - E(s3, 1) - E(s3, 2)
        and r2.ray == target_ray
        and r2.trace.result == half
        and r1.trace.verify()
        and r2.trace.verify()
    )
    return _result(
        "vertex-achievement-example",
        "three orthogonal negative curves achieve the ray of 2H-E1-E2",
        ok,
        f"from H: {r1.trace.result}; from H-E1: {r2.trace.result}",
    )


# --------------------------------------------------------------------- 8


def _negative_class_pool(surface) -> list[DivisorClass]:
    fams = enumeration.negative_sphere_classes(surface, n_bound=2)
    return sorted_classes(enumeration.family_instances(fams))


def check_alternating_inflation() -> CheckResult:
    rng = random.Random(73)
    s3 = rational_surface(3)
    pool = _negative_class_pool(s3)
    tested = 0
    divergent_seen = 0
    tries = 0
    while tested < 40 and tries < 4000:
        tries += 1
        c1, c2 = rng.sample(pool, 2)
        if pair(c1, c2) < 0:
            continue
        x = (pair(c1, c2) ** 2) / (c1.square() * c2.square())
        if x > 1:
            continue
        dual = cones.dual_cone(cones.cone_from_rays([c1, c2]))
        omega = None
        for r in dual.rays():
            omega = r if omega is None else omega + r
        for v in dual.lineality():
            if pair(v, v) > 0:
                omega = omega + v if omega is not None else v
        if omega is None or pair(omega, c1) < 0 or pair(omega, c2) < 0:
            continue
        a, _ = inflation.max_inflate(omega, c1) if c1.square() < 0 else (omega, 0)
        alt = inflation.alternate_inflate(a, c1, c2, iterations=20)
        # orthogonality of the limit, exact
        if pair(alt.limit, c1) != 0 or pair(alt.limit, c2) != 0:
            return _result("alternating-inflation-law", "", False, f"limit not orthogonal for {c1}, {c2}")
        l1 = pair(a, c2) / -c2.square()
        want_odd = tuple(l1 * alt.ratio**k for k in range(10))
        even_rate = pair(c1, c2) / -c1.square()
        want_even = tuple(l1 * even_rate * alt.ratio ** (k - 1) for k in range(1, 11))
        if alt.odd_coefficients != want_odd or alt.even_coefficients != want_even:
            return _result("alternating-inflation-law", "", False, f"coefficient law fails for {c1}, {c2}")
        if alt.divergent:
            divergent_seen += 1
        else:
            direction = c2 - (pair(c1, c2) / c1.square()) * c1
            tail = (alt.ratio**10 * l1 / (1 - alt.ratio)) * direction
            if alt.trace.result + tail != alt.limit:
                return _result("alternating-inflation-law", "", False, f"tail identity fails for {c1}, {c2}")
            # the summed limit coefficient is the single maximal step along
            # the orthogonalized class
            if direction.square() < 0:
                if l1 / (1 - alt.ratio) != pair(a, direction) / -direction.square():
                    return _result(
                        "alternating-inflation-law", "", False, f"orthogonalized coefficient fails for {c1}, {c2}"
                    )
        tested += 1
    # an explicit light-cone pair: the facets of E1 and H-E1-E2 meet in the
    # null ray H-E2, and the alternating coefficients do not decay
    s2 = rational_surface(2)
    a2 = 2 * H(s2) - E(s2, 2)
    alt = inflation.alternate_inflate(a2, E(s2, 1), H(s2) - E(s2, 1) - E(s2, 2), 8)
    divergent_ok = (
        alt.divergent
        and alt.ratio == 1
        and alt.limit == H(s2) - E(s2, 2)
        and pair(alt.limit, E(s2, 1)) == 0
        and set(alt.odd_coefficients) == {alt.first_coefficient}
    )
    ok = tested == 40 and divergent_ok
    return _result(
        "alternating-inflation-law",
        "alternating maximal inflations: geometric coefficients and exact limit",
        ok,
        f"{tested} random pairs verified exactly ({divergent_seen} on the light cone); "
        f"explicit light-cone pair reaches the null ray: {divergent_ok}",
    )


# --------------------------------------------------------------------- 9


def _interior_start(dual: cones.PositiveDual) -> DivisorClass:
    acc = None
    for r in dual.linear_dual.rays():
        acc = r if acc is None else acc + r
    assert acc is not None
    return acc


def check_achieve_all_rays() -> CheckResult:
    entries = list(catalog_cp2_3((0, 1, 2))) + list(catalog_cp2_2((0, 1, 2)))
    achieved = 0
    for entry in entries:
        cfg = entry.configuration
        dual = cones.positive_dual(cones.cone_from_rays(cfg.generators()))
        if not dual.polytopic:
            return _result("achieve-all-rays", "", False, f"{entry.label()}: dual not polytopic")
        start = _interior_start(dual)
        results = inflation.achieve_all_rays(cfg.curves, start)
        if set(results) != set(dual.linear_dual.rays()):
            return _result("achieve-all-rays", "", False, f"{entry.label()}: rays missed")
        achieved += len(results)
    s2 = rational_surface(2)
    try:
        inflation.achieve_all_rays([E(s2, 1)], H(s2))
        fired = False
    except inflation.RoundBoundaryError:
        fired = True
    return _result(
        "achieve-all-rays-catalog",
        "every dual extremal ray of a catalog configuration is reachable by inflation",
        fired,
        f"{achieved} rays achieved over {len(entries)} configurations; "
        f"round-boundary control fired: {fired}",
    )


# --------------------------------------------------------------------- 10


_CASE_TO_TWO_BLOWUP_VARIANT = {
    (1, 1): 1, (1, 2): 2,
    (2, 1): 1, (2, 2): 2,
    (3, 1): 1, (3, 2): 2,
    (4, 1): 1, (4, 2): 2,
    (5, 1): 2,
    (6, 1): 1,
    (7, 1): 1, (7, 2): 2,
}


def check_blowdown_golden() -> CheckResult:
    s3 = rational_surface(3)
    targets = {(e.variant, e.n): e.configuration for e in catalog_cp2_2((0, 1, 2))}
    mismatches = []
    monotone = True
    for entry in catalog_cp2_3((0, 1, 2)):
        result = blow_down(entry.configuration, E(s3, 3))
        want = targets[(_CASE_TO_TWO_BLOWUP_VARIANT[(entry.case, entry.variant)], entry.n)]
        if result.configuration != want:
            mismatches.append(entry.label())
        for step in result.steps:
            if step.genus_after < step.genus_before:
                monotone = False
            if (step.genus_after == step.genus_before) != (step.pairing in (0, 1)):
                monotone = False
    ok = not mismatches and monotone
    return _result(
        "blowdown-golden-mapping",
        "blowing down E3 maps each three-blowup configuration onto its two-blowup source",
        ok,
        "all cases land on their targets; genus never drops"
        if ok
        else f"mismatches: {mismatches}, monotone: {monotone}",
    )


# --------------------------------------------------------------------- 11


def check_cone_theorem_audit() -> CheckResult:
    reports = []
    for entry in list(catalog_cp2_3((0, 1, 2))) + list(catalog_cp2_2((0, 1, 2))):
        cfg = entry.configuration
        rep = cones.cone_theorem_audit(cfg.generators(), cfg.surface)
        reports.append(rep.passed)
    s1 = rational_surface(1)
    seeded = cones.cone_theorem_audit([parse_class("3H-E1", s1)], s1)
    ok = all(reports) and not seeded.passed
    return _result(
        "cone-theorem-audit",
        "K-negative extremal rays are -1 classes, fibers, or the line; seeded violation caught",
        ok,
        f"{len(reports)} catalog cones pass; seeded 3H-E1 caught: {not seeded.passed}",
    )


# --------------------------------------------------------------------- 12


def check_minus_one_counts() -> CheckResult:
    ok = True
    rows = []
    for entry in catalog_cp2_2((0, 1, 2)):
        rep = validate_configuration(entry.configuration)
        n, _ = count_minus_one(entry.configuration)
        good = rep.passed and n >= 2
        ok &= good
        rows.append(f"{entry.label()}: {n}")
    for k in range(3, 7):
        for l in range(1, k + 1):
            cfg = disjoint_minus_one_configuration(k, l)
            n, classes = count_minus_one(cfg)
            disjoint = all(
                pair(a, b) == 0 for a, b in combinations(classes, 2)
            )
            valid = validate_configuration(cfg).passed
            ok &= n == l and disjoint and valid
    return _result(
        "minus-one-counts",
        "two -1 curves on every two-blowup configuration; l disjoint ones by construction",
        ok,
        "two-blowup counts " + ", ".join(rows) + "; disjoint families validated for k <= 6",
    )


# --------------------------------------------------------------------- 13


def check_nef_threshold() -> CheckResult:
    s0, s1, s2 = rational_surface(0), rational_surface(1), rational_surface(2)
    ex1 = cones.nef_threshold(H(s0), [H(s0)])
    ex2 = cones.nef_threshold(parse_class("2H-E1", s1), [E(s1, 1), parse_class("H-E1", s1)])
    ex3 = cones.nef_threshold(
        parse_class("3H-E1-E2", s2), [E(s2, 1), E(s2, 2), parse_class("H-E1-E2", s2)]
    )
    ok = (ex1, ex2, ex3) == (Fraction(1, 3), Fraction(1), Fraction(1))
    rng = random.Random(191)
    curve_sets = {
        0: [[H(s0)]],
        1: [[E(s1, 1), parse_class("H-E1", s1)]],
        2: [
            [
                c
                for c in entry.configuration.curves
                if pair(canonical_class(s2), c) < 0
            ]
            for entry in catalog_cp2_2((0, 1, 2))
        ],
    }
    checked = 0
    for k, surface in ((0, s0), (1, s1), (2, s2)):
        corners = [c.ray for c in cones.k_symplectic_cone(surface).corners]
        for _ in range(34):
            omega = None
            for c in corners:
                m = rng.randint(1, 20)
                omega = m * c if omega is None else omega + m * c
            for curves in curve_sets[k]:
                t0 = cones.nef_threshold(omega, curves)
                if t0.denominator > 3:
                    return _result("nef-threshold", "", False, f"denominator {t0.denominator}")
                checked += 1
    return _result(
        "nef-threshold",
        "nef thresholds are rational with denominator at most three",
        ok,
        f"examples 1/3, 1, 1 exact; {checked} random integral classes bounded",
    )


# --------------------------------------------------------------------- 14


def check_cremona() -> CheckResult:
    s3 = rational_surface(3)
    red = cremona.cremona_reduce(parse_class("2H-E1-E2-E3", s3))
    ok = red.kind == "reduced" and red.result == H(s3)
    cycles_ok = True
    for k in (3, 4, 5):
        sk = rational_surface(k)
        for e in enumeration.exceptional_classes(sk):
            if cremona.cremona_reduce(e).kind != "cycle":
                cycles_ok = False
    rng = random.Random(5)
    preserved = True
    for _ in range(10_000):
        k = rng.randint(3, 8)
        sk = rational_surface(k)
        x = divisor(sk, [rng.randint(-9, 9) for _ in range(k + 1)])
        triple = tuple(rng.sample(range(1, k + 1), 3))
        y = cremona.reflect(x, triple)
        kc = canonical_class(sk)
        if (
            y.square() != x.square()
            or pair(kc, y) != pair(kc, x)
            or cremona.reflect(y, triple) != x
        ):
            preserved = False
            break
    ok = ok and cycles_ok and preserved
    return _result(
        "cremona-reduction",
        "reduction reaches H; -1 classes cycle; reflections preserve the form and K",
        ok,
        f"2H-E1-E2-E3 -> {red.result}; cycles for all -1 classes k<=5: {cycles_ok}; "
        f"10^4 random reflections preserve invariants: {preserved}",
    )


# --------------------------------------------------------------------- 15


def _ruled_samples() -> list[tuple]:
    rng = random.Random(2024)
    samples = []
    st2, st3 = trivial_ruled(2), trivial_ruled(3)
    for surface in (st2, st3):
        h = surface.h
        for _ in range(20):
            a = rng.randint(1, 5)
            b = rng.randint(a * (h - 1) + 1, a * (h - 1) + 8)
            samples.append((surface, a * U(surface) + b * T(surface)))
    st1 = trivial_ruled(1)
    for _ in range(20):
        a = rng.randint(1, 4)
        b = rng.randint(1, 6)
        samples.append((st1, a * U(st1) + b * T(st1)))
    sb = trivial_ruled(1, k=1)
    for _ in range(20):
        b = rng.randint(2, 8)
        samples.append((sb, U(sb) + b * T(sb) - 2 * E(sb, 1)))
    sn2, sn1 = nontrivial_ruled(2), nontrivial_ruled(1)
    for _ in range(20):
        a = rng.randint(1, 5)
        b = rng.randint(a, a + 8)  # K.C = a(2h-3) - 2b < 0
        samples.append((sn2, a * U(sn2) + b * T(sn2)))
    for _ in range(20):
        a = rng.randint(1, 4)
        b = rng.randint(0, 5)
        samples.append((sn1, a * U(sn1) + b * T(sn1)))
    return samples


def check_sw_certificates() -> CheckResult:
    audit = swcert.anti_canonical_eight_point_audit()
    decomposed = 0
    for surface, cls in _ruled_samples():
        if pair(canonical_class(surface), cls) >= 0:
            continue
        out = swcert.non_extremal_witness(surface, cls)
        if not isinstance(out, swcert.Decomposition) or not out.revalidate():
            return _result("sw-certificates", "", False, f"decomposition failed for {cls} on {surface}")
        decomposed += 1
    ok = audit.passed and decomposed >= 95
    return _result(
        "sw-certificates",
        "anti-canonical class on eight blowups splits rationally but never integrally; "
        "ruled K-negative classes decompose with certificates",
        ok,
        f"eight-blowup audit: {audit.passed}; {decomposed} ruled decompositions revalidated",
    )


# --------------------------------------------------------------------- 16


def check_ruled_negative_classes() -> CheckResult:
    ok = True
    rows = []
    for make in (trivial_ruled, nontrivial_ruled):
        for h in (1, 2, 3):
            surface = make(h)
            got = ruled_negative_classes(surface, 8)
            want = sorted_classes(
                U(surface) - n * T(surface) for n in range(1, 9)
            )
            good = got == want
            ok &= good
            rows.append(f"{surface}: {'ok' if good else 'MISMATCH'}")
    st = trivial_ruled(2)
    ok &= all(
        pair(U(st) - k * T(st), U(st) - m * T(st)) < 0
        for k in range(1, 5)
        for m in range(1, 5)
        if k != m
    )
    return _result(
        "ruled-negative-classes",
        "negative classes on minimal ruled surfaces are the sections U - nT",
        ok,
        "; ".join(rows),
    )


# --------------------------------------------------------------------- 17


def check_sweeps() -> CheckResult:
    ok = True
    rows = []
    for k in range(0, 10):
        sk = rational_surface(k)
        sweep = enumeration.sphere_class_sweeps(sk, bound=8)
        good = sweep.ok
        if k <= 8:
            good &= not sweep.zero_square_positive_genus
        else:
            got = {c for c in sweep.zero_square_positive_genus}
            want = {
                divisor(sk, [3 * m] + [-m] * 9) for m in range(1, 3)
            }
            good &= want <= got
        ok &= good
        if k < 9:
            ok &= enumeration.genus_bound_audit(sk, bound=8).ok
    rows.append("k=0..9 at bound 8")
    return _result(
        "classification-sweeps",
        "no positive-genus classes of negative square up to nine blowups; "
        "square zero only along the anti-canonical ray at nine",
        ok,
        "; ".join(rows),
    )


ALL_CHECKS: list[Callable[[], CheckResult]] = [
    check_exceptional_small_k,
    check_negative_spheres_k8,
    check_zero_squares_k8,
    check_nine_squares,
    check_two_blowup_duals,
    check_k_symplectic_corners,
    check_vertex_example,
    check_alternating_inflation,
    check_achieve_all_rays,
    check_blowdown_golden,
    check_cone_theorem_audit,
    check_minus_one_counts,
    check_nef_threshold,
    check_cremona,
    check_sw_certificates,
    check_ruled_negative_classes,
    check_sweeps,
]

SUITES: dict[str, list[Callable[[], CheckResult]]] = {
    "enumeration": [
        check_exceptional_small_k,
        check_negative_spheres_k8,
        check_zero_squares_k8,
        check_nine_squares,
        check_sweeps,
    ],
    "cp2+2": [check_two_blowup_duals, check_minus_one_counts],
    "cones": [
        check_two_blowup_duals,
        check_k_symplectic_corners,
        check_cone_theorem_audit,
        check_nef_threshold,
    ],
    "inflation": [
        check_vertex_example,
        check_alternating_inflation,
        check_achieve_all_rays,
    ],
    "configurations": [check_blowdown_golden, check_minus_one_counts],
    "cremona": [check_cremona],
    "swcert": [check_sw_certificates],
    "ruled": [check_ruled_negative_classes],
}


@dataclass(frozen=True)
class VerifyReport:
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> int:
        return sum(1 for c in self.checks if c.passed)

    @property
    def failed(self) -> int:
        return sum(1 for c in self.checks if not c.passed)

    def to_json(self) -> dict:
        return {
            "checks": [
                {
                    "name": c.name,
                    "reference": c.reference,
                    "status": "pass" if c.passed else "fail",
                    "details": c.details,
                }
                for c in self.checks
            ],
            "summary": {"passed": self.passed, "failed": self.failed},
        }


def run_checks(suite: str | None = None) -> VerifyReport:
    checks = SUITES[suite] if suite else ALL_CHECKS
    seen = []
    results = []
    for fn in checks:
        if fn in seen:
            continue
        seen.append(fn)
        results.append(fn())
    return VerifyReport(tuple(results))
