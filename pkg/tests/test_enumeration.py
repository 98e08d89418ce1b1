"""Enumeration of sphere classes against naive brute-force oracles."""

import itertools
import random

import pytest

from conelab.enumeration import (
    exceptional_classes,
    family_instances,
    genus_bound_audit,
    negative_sphere_classes,
    nine_squares_representations,
    sphere_class_sweeps,
    zero_square_sphere_classes,
)
from conelab.lattice import (
    E,
    H,
    LatticeError,
    adjunction_genus,
    canonical_class,
    divisor,
    pair,
    parse_class,
    rational_surface,
)


def brute_exceptional(k, a_hi=7, b_hi=8):
    """Naive full product search for square -1, genus 0 classes."""
    s = rational_surface(k)
    kc = canonical_class(s)
    out = set()
    for a in range(-2, a_hi):
        for bs in itertools.product(range(-b_hi, b_hi + 1), repeat=k):
            c = divisor(s, [a] + [-b for b in bs])
            if c.square() == -1 and pair(kc, c) == -1:
                out.add(c)
    return out


class TestExceptionalClasses:
    def test_one_blowup(self):
        s = rational_surface(1)
        assert exceptional_classes(s) == {E(s, 1)}

    def test_two_blowups(self):
        s = rational_surface(2)
        assert exceptional_classes(s) == {
            E(s, 1),
            E(s, 2),
            H(s) - E(s, 1) - E(s, 2),
        }

    @pytest.mark.parametrize("k,count", [(1, 1), (2, 3), (3, 6), (4, 10)])
    def test_matches_brute_force(self, k, count):
        got = exceptional_classes(rational_surface(k))
        assert len(got) == count
        assert got == brute_exceptional(k)

    @pytest.mark.parametrize("k,count", [(5, 16), (6, 27), (7, 56), (8, 240)])
    def test_known_counts(self, k, count):
        assert len(exceptional_classes(rational_surface(k))) == count

    def test_large_k_rejected(self):
        with pytest.raises(LatticeError):
            exceptional_classes(rational_surface(9))

    def test_every_member_satisfies_the_defining_equations(self):
        s = rational_surface(6)
        for e in exceptional_classes(s):
            assert e.square() == -1 and adjunction_genus(e) == 0
            assert pair(e, H(s)) >= 0

    def test_permutation_closure(self):
        s = rational_surface(5)
        got = exceptional_classes(s)
        rng = random.Random(11)
        perm = list(range(1, 6))
        rng.shuffle(perm)
        for e in got:
            coeffs = [e.coeffs[0]] + [e.coeffs[p] for p in perm]
            assert divisor(s, coeffs) in got


class TestNegativeSphereClasses:
    def test_k7_square_minus_one_degree_three(self):
        s = rational_surface(7)
        fams = negative_sphere_classes(s, square=-1, a_value=3)
        got = family_instances(fams)
        want = set()
        for m in range(1, 8):
            rest = [i for i in range(1, 8) if i != m]
            for singles in itertools.combinations(rest, 6):
                coeffs = [3] + [0] * 7
                coeffs[m] = -2
                for i in singles:
                    coeffs[i] = -1
                want.add(divisor(s, coeffs))
        assert got == want
        assert len(got) == 7

    def test_k2_nonpositive_degree_families(self):
        s = rational_surface(2)
        fams = [
            f
            for f in negative_sphere_classes(s, n_bound=2)
            if f.representative.coeffs[0] <= 0
        ]
        got = family_instances(fams)
        want = set()
        for b in (1, 2, 3):  # (1-b)H + bE1 and (1-b)H + bE1 - E2, plus swaps
            for i, j in ((1, 2), (2, 1)):
                base = [1 - b, 0, 0]
                base[i] = b
                want.add(divisor(s, base))
                with_c = list(base)
                with_c[j] = -1
                want.add(divisor(s, with_c))
        assert got == want

    def test_k8_degree_six(self):
        s = rational_surface(8)
        fams = negative_sphere_classes(s, square=-1, a_value=6)
        got = family_instances(fams)
        want = set()
        for m in range(1, 9):
            coeffs = [6] + [-2] * 8
            coeffs[m] = -3
            want.add(divisor(s, coeffs))
        assert got == want

    def test_all_outputs_satisfy_the_filters(self):
        s = rational_surface(6)
        for fam in negative_sphere_classes(s, n_bound=3):
            rep = fam.representative
            assert rep.square() < 0
            assert adjunction_genus(rep) == 0
            for inst in fam.instances():
                assert inst.square() == rep.square()
                assert adjunction_genus(inst) == 0


class TestZeroSquareClasses:
    def test_fifteen_families_at_eight(self):
        assert len(zero_square_sphere_classes(rational_surface(8))) == 15

    def test_contains_the_full_packing_class(self):
        s = rational_surface(8)
        got = family_instances(zero_square_sphere_classes(s))
        assert parse_class("10H-4E1-4E2-4E3-4E4-3E5-3E6-3E7-3E8", s) in got

    @pytest.mark.parametrize("k", [1, 2, 5])
    def test_fiber_class_always_present(self, k):
        s = rational_surface(k)
        got = family_instances(zero_square_sphere_classes(s))
        assert parse_class("H-E1", s) in got

    def test_brute_force_small_k(self):
        # independent loops: genus 0, square 0, up to three blowups
        k = 3
        s = rational_surface(k)
        kc = canonical_class(s)
        want = set()
        for a in range(1, 13):
            for bs in itertools.product(range(0, 13), repeat=k):
                c = divisor(s, [a] + [-b for b in bs])
                if c.square() == 0 and pair(kc, c) == -2:
                    want.add(c)
        assert family_instances(zero_square_sphere_classes(s)) == want


class TestNineSquares:
    def test_eighteen_has_exactly_three(self):
        got = nine_squares_representations(18)
        assert got == [
            (3, 0, 0, 0, 0, 0, 0, 0, -3),
            (2, 2, 2, -1, -1, -1, -1, -1, -1),
            (1, 1, 1, 1, 1, 1, -2, -2, -2),
        ]

    def test_zero(self):
        assert nine_squares_representations(0) == [(0,) * 9]

    @pytest.mark.parametrize("total,count", [(18, 3), (36, 5), (54, 7), (72, 14)])
    def test_counts_against_multiset_oracle(self, total, count):
        # independent oracle: combinations with repetition over the value range
        bound = int(total**0.5)
        want = set()
        for combo in itertools.combinations_with_replacement(range(-bound, bound + 1), 9):
            if sum(x * x for x in combo) != total or sum(combo) != 0:
                continue
            if len({x % 3 for x in combo}) != 1:
                continue
            want.add(tuple(sorted(combo, reverse=True)))
        got = set(nine_squares_representations(total))
        assert got == want
        assert len(got) == count

    def test_seventy_two_has_two_beyond_the_display(self):
        got = set(nine_squares_representations(72))
        assert (5, 5, -1, -1, -1, -1, -1, -1, -4) in got
        assert (4, 1, 1, 1, 1, 1, 1, -5, -5) in got

    def test_without_zero_sum(self):
        got = set(nine_squares_representations(18, residue_sum_zero=False))
        assert (3, 3, 0, 0, 0, 0, 0, 0, 0) in got
        assert len(got) == 5


class TestSweeps:
    @pytest.mark.parametrize("k", [0, 2, 5, 8])
    def test_no_positive_genus_nonpositive_square_below_nine(self, k):
        sweep = sphere_class_sweeps(rational_surface(k), bound=6)
        assert sweep.ok
        assert not sweep.negative_square_positive_genus
        assert not sweep.zero_square_positive_genus
        assert not sweep.nonneg_square_nonneg_k_pairing

    def test_nine_blowups_only_anti_canonical_multiples(self):
        s = rational_surface(9)
        sweep = sphere_class_sweeps(s, bound=7)
        assert sweep.ok
        assert not sweep.negative_square_positive_genus
        anti = -1 * canonical_class(s)
        assert divisor(s, [3] + [-1] * 9) in sweep.zero_square_positive_genus
        for c in sweep.zero_square_positive_genus:
            m = c.coeffs[0] / 3
            assert c == m * anti

    def test_genus_bound_audit_six(self):
        s = rational_surface(6)
        audit = genus_bound_audit(s, bound=8)
        assert audit.ok
        assert audit.equality_classes == (parse_class("3H-E1-E2-E3-E4-E5-E6", s),)
        assert audit.equality_classes[0].square() == 3  # 9 - k

    def test_genus_one_minimum_square_at_eight(self):
        s = rational_surface(8)
        audit = genus_bound_audit(s, bound=8)
        assert audit.ok
        assert audit.equality_classes[0].square() == 1

    def test_no_nonnegative_k_pairing_class_small_k(self):
        audit = genus_bound_audit(rational_surface(3), bound=6)
        assert audit.nonneg_k_pairing_classes == ()

    def test_genus_one_brute_force_small_k(self):
        # independent loops: every genus-1 class with positive degree on
        # three blowups has square at least 6, only 3H-E1-E2-E3 attains it
        s = rational_surface(3)
        kc = canonical_class(s)
        smallest, attained = None, []
        for a in range(1, 7):
            for bs in itertools.product(range(-6, 7), repeat=3):
                c = divisor(s, [a] + [-b for b in bs])
                if adjunction_genus(c) == 1:
                    if smallest is None or c.square() < smallest:
                        smallest = c.square()
                    if c.square() == 6:
                        attained.append(c)
        assert smallest == 6
        assert attained == [parse_class("3H-E1-E2-E3", s)]
