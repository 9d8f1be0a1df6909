"""Tests for cubes -- shells, faces, the δ defect and its identities."""

import random

import pytest

from core.errors import BoundaryError, CompositionError
from core.reports import PRINTED, REVERSED, OrderingConvention
from cubes.defects import (
    commutes,
    conjugate,
    cube_delta_sides,
    delta,
    scan_commuting_squares,
    scan_cube_delta,
    scan_delta_comp,
    verify_delta_comp,
)
from cubes.shells import (
    EDGE_KEYS,
    MINUS,
    PLUS,
    SquareShell,
    comp1,
    comp2,
    count_square_pairs,
    count_squares,
    face,
    iter_cubes,
    iter_square_pairs,
    iter_squares,
    make_cube,
    make_square,
    random_cube,
    square_corners,
    square_edge,
)
from symbolic.oracle import FREE, labelled_cube, labelled_square
from symbolic.words import parse_word


class TestSquares:
    def test_make_square_checks_corners(self, codiscrete_c2):
        C = codiscrete_c2.base
        # left 0->1, bottom 1->1, top 0->0, right 0->1
        f = make_square(C, 1, 3, 0, 1)
        assert square_corners(C, f) == (0, 1)

    def test_bad_corner(self, codiscrete_c2):
        with pytest.raises(BoundaryError, match="corner"):
            make_square(codiscrete_c2.base, 1, 0, 0, 1)

    def test_boundary_operators(self):
        f = labelled_square("l", "b", "t", "r")
        assert square_edge(f, 1, MINUS) == f.top
        assert square_edge(f, 1, PLUS) == f.bottom
        assert square_edge(f, 2, MINUS) == f.left
        assert square_edge(f, 2, PLUS) == f.right

    def test_comp1_needs_shared_edge(self):
        alpha = labelled_square("l1", "m", "t1", "r1")
        with pytest.raises(CompositionError):
            comp1(FREE, alpha, labelled_square("l2", "b2", "other", "r2"))

    def test_comp2_needs_shared_edge(self):
        alpha = labelled_square("l1", "b1", "t1", "m")
        with pytest.raises(CompositionError):
            comp2(FREE, alpha, labelled_square("other", "b2", "t2", "r2"))

    def test_comp1_edges(self):
        alpha = labelled_square("l1", "m", "t1", "r1")
        beta = labelled_square("l2", "b2", "m", "r2")
        f = comp1(FREE, alpha, beta)
        assert f.top == alpha.top and f.bottom == beta.bottom
        assert f.left == parse_word("l1 l2")
        assert f.right == parse_word("r1 r2")

    def test_square_count_matches_enumeration(self, codiscrete_c2):
        C = codiscrete_c2.base
        assert count_squares(C) == len(list(iter_squares(C))) == 16

    @pytest.mark.parametrize("direction", [1, 2])
    def test_pair_count_matches_enumeration(self, left_negation_bundle, direction):
        C = left_negation_bundle.base
        assert count_square_pairs(C, direction) == len(list(iter_square_pairs(C, direction)))


class TestCubes:
    def test_faces_of_labelled_cube(self):
        cube = labelled_cube()
        assert face(cube, 3, MINUS) == labelled_square("a3", "b4", "b3", "a4")
        assert face(cube, 1, PLUS) == labelled_square("b4", "c1", "c4", "b1")

    def test_face_edges_match(self, codiscrete_c2):
        C = codiscrete_c2.base
        cube = random_cube(C, random.Random(7))
        assert cube is not None
        for (i, s) in [(i, s) for i in (1, 2, 3) for s in (MINUS, PLUS)]:
            f = face(cube, i, s)
            make_square(C, *f.edges())

    def test_make_cube_rejects_disagreeing_vertex(self, codiscrete_c2):
        edges = {key: 0 for key in EDGE_KEYS}
        edges[(1, (MINUS, MINUS))] = 1
        with pytest.raises(BoundaryError, match="vertex"):
            make_cube(codiscrete_c2.base, edges)

    def test_cube_enumeration(self, codiscrete_c2):
        # One cube per assignment of objects to the eight vertices.
        assert len(list(iter_cubes(codiscrete_c2.base))) == 2 ** 8


class TestDelta:
    def test_delta_word(self):
        f = labelled_square("l", "b", "t", "r")
        assert delta(FREE, f) == parse_word("r^-1 t^-1 l b")

    def test_conjugation(self):
        assert conjugate(FREE, parse_word("a"), parse_word("b")) == parse_word("b^-1 a b")

    def test_commuting_square_has_trivial_delta(self, group_s3):
        G = group_s3.base
        for f in iter_squares(G):
            if commutes(G, f):
                assert delta(G, f) == G.identity(0)
                break

    def test_commuting_scan(self, codiscrete_c2):
        res = scan_commuting_squares(codiscrete_c2.base)
        assert res.holds(PRINTED)
        assert res.exhaustive

    @pytest.mark.parametrize("direction", [1, 2])
    def test_delta_comp_reversed_on_free_squares(self, direction):
        if direction == 1:
            alpha, beta = labelled_square("l1", "m", "t1", "r1"), labelled_square("l2", "b2", "m", "r2")
        else:
            alpha, beta = labelled_square("l1", "b1", "t1", "m"), labelled_square("m", "b2", "t2", "r2")
        res = verify_delta_comp(FREE, alpha, beta, direction)
        assert res.holds(REVERSED)
        assert not res.holds(PRINTED)

    @pytest.mark.parametrize("direction", [1, 2])
    def test_delta_comp_scan_on_abelian_group(self, group_c3, direction):
        res = scan_delta_comp(group_c3.base, direction)
        assert res.exhaustive
        assert res.convention() == OrderingConvention.INDISTINGUISHABLE

    @pytest.mark.parametrize("direction", [1, 2])
    def test_delta_comp_scan_on_s3(self, group_s3, small_scans, direction):
        res = scan_delta_comp(group_s3.base, direction)
        assert not res.exhaustive
        assert res.convention() == OrderingConvention.REVERSED

    def test_cube_identity_on_s3(self, group_s3, small_scans):
        res = scan_cube_delta(group_s3.base)
        assert res.holds(REVERSED)

    def test_cube_sides_agree_on_random_cubes(self, left_negation_bundle):
        G = left_negation_bundle.base
        rng = random.Random(3)
        for _ in range(50):
            cube = random_cube(G, rng)
            lhs, rhs = cube_delta_sides(G, cube)
            assert lhs == rhs

    def test_squareshell_field_order(self):
        f = SquareShell("l", "b", "t", "r")
        assert f.edges() == ("l", "b", "t", "r")
