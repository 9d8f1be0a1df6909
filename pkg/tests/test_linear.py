"""Tests for linear -- formal sums, R[C], Δ and brackets."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from constructions.families import one_object_from_monoid
from constructions.tables import truncated_free_monoid
from core.errors import BoundaryError, CompositionError
from core.reports import PRINTED
from cubes.shells import SquareShell
from linear.category import (
    Delta,
    add1,
    add2,
    bracket,
    leibniz_defect,
    linear_square,
    linearize,
    linearize_square,
)
from linear.formal import FormalSum
from linear.identities import (
    EXPANDED,
    check_bracket_bilinearity,
    check_Delta_cube,
    cube_of_three_terms,
    random_linear_cube,
    scan_bracket_bilinearity,
    scan_Delta_additive,
    scan_Delta_comp,
    scan_leibniz,
    scan_leibniz_defect,
    scan_Delta_cube,
    scan_cube_of_three_terms,
    scan_star_defect,
)
from utils.rendering import render_sum

# Every morphism of the truncated free monoid is an endomorphism of its one
# object, so any two sums are parallel.
ALGEBRA = linearize(one_object_from_monoid(truncated_free_monoid()))

scalars = st.fractions(min_value=-3, max_value=3, max_denominator=4)
sums = st.dictionaries(
    st.integers(0, ALGEBRA.base.base.morphism_count - 1), st.integers(-3, 3), max_size=4
).map(lambda terms: FormalSum.of(0, 0, terms))


class TestFormalSum:
    def test_canonical_terms(self):
        f = FormalSum.of(0, 0, [(3, 1), (1, 2), (3, -1)])
        assert f.terms == ((1, Fraction(2)),)

    def test_arithmetic(self):
        f = FormalSum.of(0, 0, {1: 1, 2: 3})
        g = FormalSum.of(0, 0, {2: -3})
        assert (f + g) == FormalSum.of(0, 0, {1: 1})
        assert (f - f).is_zero
        assert (2 * f).coefficient(2) == 6
        assert f.scale(Fraction(1, 3)).coefficient(1) == Fraction(1, 3)
        assert not f.scale(Fraction(1, 3)).is_integral

    def test_non_parallel_sum(self):
        with pytest.raises(CompositionError):
            FormalSum.zero(0, 1) + FormalSum.zero(1, 0)


class TestLinearCategory:
    def test_bilinear_composition(self, free2_algebra):
        A = free2_algebra
        f = FormalSum.of(0, 0, {1: 1, 2: 1})  # s + t
        ff = A.compose(f, f)
        labels = {A.base.base.morphism_label(a): r for a, r in ff.terms}
        assert labels == {"ss": 1, "st": 1, "ts": 1, "tt": 1}

    def test_bracket_of_generators(self, free2_algebra):
        A = free2_algebra
        s, t = 1, 2
        label = A.base.base.morphism_label
        assert render_sum(bracket(A, s, t), label) == "−1·st + 1·ts"
        assert bracket(A, s, s).is_zero

    def test_bracket_is_antisymmetric_in_one_object_algebra(self, free2_algebra):
        A = free2_algebra
        assert bracket(A, 1, 2) == -bracket(A, 2, 1)

    def test_Delta_of_square(self, free2_algebra):
        A = free2_algebra
        f = linear_square(A, 1, 2, 2, 1)
        assert Delta(A, f) == A.basis(5) - A.basis(4)

    def test_additions(self, free2_algebra):
        A = free2_algebra
        alpha = linear_square(A, 1, 1, 2, 1)
        beta = linear_square(A, 1, 2, 1, 1)
        total = add1(alpha, beta)
        assert Delta(A, total) == Delta(A, alpha) + Delta(A, beta)
        with pytest.raises(BoundaryError):
            add2(alpha, beta)

    def test_linearize_square(self, free2_algebra):
        f = linearize_square(free2_algebra, SquareShell(1, 2, 3, 4))
        assert f.left == free2_algebra.basis(1)


class TestDeltaIdentities:
    @pytest.mark.parametrize("direction", [1, 2])
    def test_Delta_comp(self, codiscrete_c2, direction):
        res = scan_Delta_comp(linearize(codiscrete_c2), direction)
        assert res.exhaustive
        assert res.holds(PRINTED if direction == 1 else EXPANDED)

    def test_Delta_comp2_on_monoid_algebra(self, free2_algebra, small_scans):
        assert scan_Delta_comp(free2_algebra, 2).holds(EXPANDED)

    @pytest.mark.parametrize("direction", [1, 2])
    def test_Delta_additive(self, left_negation_bundle, direction):
        assert scan_Delta_additive(linearize(left_negation_bundle), direction).holds(PRINTED)

    def test_cube_equation(self, left_negation_bundle):
        A = linearize(left_negation_bundle)
        assert scan_Delta_cube(A, count=30).holds(PRINTED)

    def test_cube_equation_on_one_cube(self, free2_algebra):
        cube = random_linear_cube(free2_algebra, random.Random(11))
        assert cube is not None
        assert check_Delta_cube(free2_algebra, cube).holds(PRINTED)

    def test_cube_of_three_terms(self, free2_algebra):
        res = cube_of_three_terms(free2_algebra, 1, 2, 4)
        assert res.holding() == ["first-term", "second-term", "third-term"]

    def test_cube_of_three_scan(self, codiscrete_c2):
        res = scan_cube_of_three_terms(linearize(codiscrete_c2))
        assert res.exhaustive
        assert len(res.holding()) == 3


class TestBrackets:
    def test_star_defect(self, left_negation_bundle):
        assert scan_star_defect(linearize(left_negation_bundle)).holds(PRINTED)

    def test_bilinearity(self, free2_algebra):
        res = scan_bracket_bilinearity(free2_algebra, count=50)
        assert res.holding() == ["left", "right"]

    def test_defect_equation(self, free2_algebra):
        assert scan_leibniz_defect(free2_algebra).holds(PRINTED)

    def test_defect_vanishes_in_one_object_algebra(self, free2_algebra):
        assert leibniz_defect(free2_algebra, 1, 2, 1).rhs.is_zero

    def test_leibniz_in_one_object_algebra(self, free2_algebra):
        assert scan_leibniz(free2_algebra).holds(PRINTED)

    def test_leibniz_fails_for_one_sided_retraction(self):
        from constructions.families import build_family

        W, _ = build_family("bundle", monoid="idempotent", group="s3", action="left-retract")
        A = linearize(W)
        assert scan_leibniz_defect(A).holds(PRINTED)
        assert not scan_leibniz(A).holds(PRINTED)


class TestLinearProperties:
    @given(scalars, sums, sums, sums)
    @settings(max_examples=60, deadline=None)
    def test_bracket_is_bilinear(self, r, a, a2, b):
        res = check_bracket_bilinearity(ALGEBRA, r, a, a2, b)
        assert res.holding() == ["left", "right"]

    @given(sums, sums, sums, sums, sums, sums)
    @settings(max_examples=60, deadline=None)
    def test_Delta_is_additive_for_add1(self, left, right, b1, t1, b2, t2):
        alpha = linear_square(ALGEBRA, left, b1, t1, right)
        beta = linear_square(ALGEBRA, left, b2, t2, right)
        assert Delta(ALGEBRA, add1(alpha, beta)) == Delta(ALGEBRA, alpha) + Delta(ALGEBRA, beta)

    @given(sums, sums, sums, sums, sums, sums)
    @settings(max_examples=60, deadline=None)
    def test_Delta_is_additive_for_add2(self, bottom, top, l1, r1, l2, r2):
        alpha = linear_square(ALGEBRA, l1, bottom, top, r1)
        gamma = linear_square(ALGEBRA, l2, bottom, top, r2)
        assert Delta(ALGEBRA, add2(alpha, gamma)) == Delta(ALGEBRA, alpha) + Delta(ALGEBRA, gamma)

    @given(scalars, sums, sums)
    @settings(max_examples=60, deadline=None)
    def test_scaling_distributes(self, r, f, g):
        assert (f + g).scale(r) == f.scale(r) + g.scale(r)
