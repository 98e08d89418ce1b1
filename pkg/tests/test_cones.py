"""Cone construction, duality, membership, corners, audits, thresholds."""

import random
from fractions import Fraction
from itertools import combinations

import pytest

from conelab.cones import (
    ConeError,
    NonPointedError,
    cone_from_facets,
    cone_from_rays,
    cone_theorem_audit,
    dual_cone,
    extremal_rays,
    k_symplectic_cone,
    membership,
    nef_threshold,
    positive_dual,
)
from conelab.configurations import catalog_cp2_3
from conelab.enumeration import (
    exceptional_classes,
    family_instances,
    negative_sphere_classes,
)
from conelab.lattice import (
    E,
    H,
    divisor,
    pair,
    parse_class,
    rational_surface,
    sorted_classes,
)

S2 = rational_surface(2)
S3 = rational_surface(3)


def classes(surface, *texts):
    return [parse_class(t, surface) for t in texts]


class TestConstruction:
    def test_scaling_duplicates_removed(self):
        c = cone_from_rays([E(S2, 1), 2 * E(S2, 1)])
        assert c.rays() == (E(S2, 1),)

    def test_three_ray_cone(self):
        c = cone_from_rays(classes(S2, "H-E1-E2", "E1", "E2"))
        assert len(c.rays()) == 3

    def test_facets_on_the_plane(self):
        s0 = rational_surface(0)
        c = cone_from_facets([H(s0)])
        assert c.rays() == (H(s0),)

    def test_empty_and_mixed_inputs_rejected(self):
        with pytest.raises(ConeError):
            cone_from_rays([])
        with pytest.raises(ConeError):
            cone_from_rays([H(S2), H(S3)])


class TestDualCone:
    def test_exceptional_cone_dual(self):
        d = dual_cone(cone_from_rays(classes(S2, "E1", "E2", "H-E1-E2")))
        assert set(d.rays()) == set(classes(S2, "H", "H-E1", "H-E2"))

    def test_first_family_section_two(self):
        d = dual_cone(cone_from_rays(classes(S2, "-H+2E1", "E2", "H-E1-E2")))
        assert set(d.rays()) == set(classes(S2, "2H-E1", "H-E1", "2H-E1-E2"))

    def test_full_space_has_zero_dual(self):
        d = dual_cone(cone_from_rays(classes(S2, "H", "-H", "E1", "-E1", "E2", "-E2")))
        assert d.rays() == () and d.lineality() == ()

    def test_dual_rays_satisfy_the_defining_inequalities(self):
        gens = classes(S3, "E3", "E2-E3", "H-E1-E2-E3", "-2H+3E1-E2")
        d = dual_cone(cone_from_rays(gens))
        for r in d.rays():
            assert all(pair(r, g) >= 0 for g in gens)
            # extremality: the tight generators span a hyperplane
            tight = [g.coeffs for g in gens if pair(r, g) == 0]
            from conelab import linalg

            assert linalg.rank(tight) == S3.rank - 1

    def test_double_dual_round_trip(self):
        rng = random.Random(17)
        pool = sorted_classes(exceptional_classes(rational_surface(4)))
        for _ in range(25):
            gens = rng.sample(pool, 5)
            c = cone_from_rays(gens)
            if not c.lineality() and len(c.rays()) >= 1:
                dd = dual_cone(dual_cone(c))
                try:
                    assert set(dd.rays()) == set(extremal_rays(c))
                except NonPointedError:
                    pass


class TestExtremalRays:
    def test_already_extremal(self):
        c = cone_from_rays(classes(S2, "H", "H-E1", "H-E2"))
        assert set(extremal_rays(c)) == set(classes(S2, "H", "H-E1", "H-E2"))

    def test_interior_generator_dropped(self):
        c = cone_from_rays([E(S2, 1), E(S2, 2), E(S2, 1) + E(S2, 2)])
        assert set(extremal_rays(c)) == {E(S2, 1), E(S2, 2)}

    def test_non_pointed_reports_lineality(self):
        c = cone_from_rays([E(S2, 1), -1 * E(S2, 1), E(S2, 2)])
        with pytest.raises(NonPointedError) as err:
            extremal_rays(c)
        assert err.value.lineality


class TestMembership:
    def test_interior(self):
        c = cone_from_rays(classes(S2, "H", "H-E1", "H-E2"))
        assert membership(c, parse_class("3H-E1-E2", S2)).kind == "interior"

    def test_boundary_with_tight_facet(self):
        # (2H-E1-E2).(H-E1-E2) = 0, so the sum of the two slant rays is a
        # boundary point, tight exactly against the dual ray H-E1-E2
        c = cone_from_rays(classes(S2, "H", "H-E1", "H-E2"))
        got = membership(c, parse_class("2H-E1-E2", S2))
        assert got.kind == "boundary"
        assert got.tight == (parse_class("H-E1-E2", S2),)

    def test_outside_with_violated_facet(self):
        c = cone_from_rays(classes(S2, "H", "H-E1", "H-E2"))
        got = membership(c, E(S2, 1))
        assert got.kind == "outside"
        assert pair(E(S2, 1), got.violated) < 0

    def test_zero_is_boundary(self):
        c = cone_from_rays(classes(S2, "H", "H-E1", "H-E2"))
        assert membership(c, divisor(S2, [0, 0, 0])).kind == "boundary"


class TestKSymplecticCone:
    @pytest.mark.parametrize(
        "k,corners",
        [
            (0, {"H"}),
            (1, {"H", "H-E1"}),
            (2, {"H", "H-E1", "H-E2"}),
            (3, {"H", "H-E1", "H-E2", "H-E3", "2H-E1-E2-E3"}),
        ],
    )
    def test_corner_sets(self, k, corners):
        ks = k_symplectic_cone(rational_surface(k))
        assert {str(c.ray) for c in ks.corners} == corners

    @pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
    def test_corners_are_spheres_of_square_zero_or_one(self, k):
        ks = k_symplectic_cone(rational_surface(k))
        assert ks.corners_ok
        for c in ks.corners:
            assert c.square in (0, 1) and c.genus == 0

    def test_k3_corner_types(self):
        ks = k_symplectic_cone(rational_surface(3))
        squares = sorted(c.square for c in ks.corners)
        assert squares == [0, 0, 0, 1, 1]

    def test_large_k_rejected(self):
        with pytest.raises(ConeError):
            k_symplectic_cone(rational_surface(9))

    def test_curve_cone_generators_pair_positively_with_some_corner(self):
        corners = [c.ray for c in k_symplectic_cone(S3).corners]
        for entry in catalog_cp2_3((0, 1, 2)):
            for curve in entry.configuration.curves:
                assert any(pair(curve, r) > 0 for r in corners)

    def test_catalog_extremal_rays_lie_in_the_classification(self):
        allowed = family_instances(negative_sphere_classes(S3, n_bound=3))
        for entry in catalog_cp2_3((0, 1, 2)):
            cone = cone_from_rays(entry.configuration.curves)
            assert set(extremal_rays(cone)) <= allowed


class TestPositiveDual:
    def test_exceptional_configuration_polytopic(self):
        pd = positive_dual(cone_from_rays(classes(S2, "E1", "E2", "H-E1-E2")))
        assert pd.polytopic
        assert sorted(r.square() for r in pd.linear_dual.rays()) == [0, 0, 1]

    def test_section_two_family(self):
        pd = positive_dual(cone_from_rays(classes(S2, "-H+2E1", "E2", "H-E1-E2")))
        assert pd.polytopic
        got = {str(r): r.square() for r in pd.linear_dual.rays()}
        assert got == {"2H-E1": 3, "H-E1": 0, "2H-E1-E2": 2}

    def test_sparse_cone_has_round_boundary(self):
        pd = positive_dual(cone_from_rays([E(S2, 1)]))
        assert not pd.polytopic
        assert any(v.square() < 0 for v in pd.round_boundary_rays)

    def test_meeting_facets_obey_the_light_cone_inequality(self):
        for entry in catalog_cp2_3((0, 1, 2)):
            cfg = entry.configuration
            pd = positive_dual(cone_from_rays(cfg.generators()))
            for ray in pd.linear_dual.rays():
                tight = [c for c in cfg.curves if pair(c, ray) == 0]
                for c1, c2 in combinations(tight, 2):
                    lhs = pair(c1, c2) ** 2
                    rhs = c1.square() * c2.square()
                    assert lhs <= rhs
                    if lhs == rhs:
                        meet = c1 - (pair(c1, c2) / c2.square()) * c2
                        assert meet.primitive() in (ray, -1 * ray)

    def test_equality_case_meeting_ray(self):
        # the facets of E1 and H-E1-E2 meet exactly in the null ray H-E2
        c1, c2 = E(S2, 1), parse_class("H-E1-E2", S2)
        assert pair(c1, c2) ** 2 == c1.square() * c2.square()
        meet = c1 - (pair(c1, c2) / c2.square()) * c2
        assert meet.primitive() == parse_class("H-E2", S2)


class TestConeTheoremAudit:
    def test_exceptional_generators_pass(self):
        rep = cone_theorem_audit(classes(S2, "E1", "E2", "H-E1-E2"), S2)
        assert rep.passed
        assert all(e.taxonomy == "minus_one" for e in rep.entries)

    def test_line_on_the_plane_passes(self):
        s0 = rational_surface(0)
        rep = cone_theorem_audit([H(s0)], s0)
        assert rep.passed
        assert rep.entries[0].taxonomy == "line"

    def test_fiber_on_one_blowup_passes(self):
        s1 = rational_surface(1)
        rep = cone_theorem_audit(classes(s1, "E1", "H-E1"), s1)
        assert rep.passed
        assert {e.taxonomy for e in rep.entries} == {"minus_one", "fiber"}

    def test_low_pairing_violation_caught(self):
        s1 = rational_surface(1)
        rep = cone_theorem_audit([parse_class("3H-E1", s1)], s1)
        assert not rep.passed
        assert rep.entries[0].k_pairing == -8

    def test_k_positive_rays_are_ignored(self):
        rep = cone_theorem_audit(classes(S3, "E3", "-2H+3E1-E2"), S3)
        # -2H+3E1-E2 pairs positively with K and is skipped
        assert rep.passed
        assert len(rep.entries) == 1


class TestNefThreshold:
    def test_plane(self):
        s0 = rational_surface(0)
        assert nef_threshold(H(s0), [H(s0)]) == Fraction(1, 3)

    def test_one_blowup(self):
        s1 = rational_surface(1)
        got = nef_threshold(parse_class("2H-E1", s1), classes(s1, "E1", "H-E1"))
        assert got == 1  # max(1/1, 1/2)

    def test_two_blowups(self):
        got = nef_threshold(parse_class("3H-E1-E2", S2), classes(S2, "E1", "E2", "H-E1-E2"))
        assert got == 1

    def test_errors(self):
        with pytest.raises(ConeError):
            nef_threshold(H(S2), [])
        with pytest.raises(ConeError):
            # the only curve pairs non-negatively with K
            nef_threshold(parse_class("H-E1", S2), [parse_class("-H+2E1", S2)])
        with pytest.raises(ConeError):
            nef_threshold(H(S2), [parse_class("-H+2E1", S2)])  # omega pairing <= 0

    def test_denominator_bound_on_random_integral_classes(self):
        rng = random.Random(12)
        corners = [c.ray for c in k_symplectic_cone(S2).corners]
        curves = classes(S2, "E1", "E2", "H-E1-E2")
        for _ in range(50):
            omega = sum((rng.randint(1, 15) * c for c in corners[1:]), rng.randint(1, 15) * corners[0])
            t0 = nef_threshold(omega, curves)
            assert t0.denominator <= 3
