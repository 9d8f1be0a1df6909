"""Tests for commutator -- commutators, their rules and the commutator laws."""

import itertools

import pytest

from core.reports import PRINTED, REVERSED, OrderingConvention, Verdict
from commutator.commutators import (
    check_commutativity,
    check_self_and_antisymmetry,
    check_self_commutator_formula,
    commutator,
    commutator_table,
)
from commutator.laws import (
    DERIVED_REVERSED,
    certify_biderivation_symbolically,
    certify_classical_law_symbolically,
    certify_cube_rule_symbolically,
    check_biderivation,
    check_classical_law,
    group_commutator,
    group_commutator_law_check,
    scan_cube_faces,
    scan_cube_rule,
)


PERMS_S3 = list(itertools.permutations(range(3)))


def _then(p, q):
    """First p, then q."""
    return tuple(q[p[i]] for i in range(len(p)))


def _invert(p):
    inverse = [0] * len(p)
    for i, image in enumerate(p):
        inverse[image] = i
    return tuple(inverse)


def _cycles(p):
    seen, cycles = set(), []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cycle, i = [], start
        while i not in seen:
            seen.add(i)
            cycle.append(str(i + 1))
            i = p[i]
        cycles.append("(" + "".join(cycle) + ")")
    return "".join(cycles) or "()"


class TestCommutators:
    def test_matches_permutation_commutators(self, group_s3):
        C = group_s3.base
        labels = list(C.morphism_labels)
        pairs = 0
        for p in PERMS_S3:
            for q in PERMS_S3:
                expected = _then(_then(_then(_invert(p), _invert(q)), p), q)
                got = commutator(group_s3, labels.index(_cycles(p)), labels.index(_cycles(q)))
                assert got == labels.index(_cycles(expected))
                pairs += 1
        assert pairs == 36

    def test_group_commutator_in_one_object_group(self, group_s3):
        C = group_s3.base
        for a, b, ab in commutator_table(group_s3):
            assert ab == group_commutator(C, a, b)

    def test_abelian_group_has_trivial_commutators(self, group_c3):
        assert {ab for _, _, ab in commutator_table(group_c3)} == {0}

    def test_self_commutator_formula(self, codiscrete_s3, left_negation_bundle):
        assert check_self_commutator_formula(codiscrete_s3).ok
        assert check_self_commutator_formula(left_negation_bundle).ok

    def test_commutator_lives_at_yv(self, codiscrete_s3):
        W = codiscrete_s3
        C = W.base
        a, b = C.morphism_by_label("()->(12)"), C.morphism_by_label("()->(23)")
        ab = commutator(W, a, b)
        yv = W.mul(C.target(a), C.target(b))
        assert C.endpoints[ab] == (yv, yv)

    def test_antisymmetry_fails_on_noncommutative_objects(self, codiscrete_s3):
        report = check_self_and_antisymmetry(codiscrete_s3)
        assert "antisymmetry" in report.laws()
        assert "self-commutator" not in report.laws()
        assert any("object mismatch" in v.detail for v in report.violations)


class TestCommutativityBiconditional:
    @pytest.mark.parametrize("name", ["codiscrete_c2", "group_s3", "codiscrete_s3"])
    def test_holds(self, request, name):
        assert check_commutativity(request.getfixturevalue(name)).holds

    def test_one_sided_action_breaks_it(self, left_negation_bundle):
        result = check_commutativity(left_negation_bundle)
        assert result.rules_hold
        assert not result.commutative
        assert result.commutative_witness[0] == "action"
        assert not result.holds


class TestBiderivation:
    def test_symbolic_left(self):
        left, _ = certify_biderivation_symbolically()
        assert left.holding() == [DERIVED_REVERSED]
        assert left.verdict() == Verdict.HOLDS_CORRECTED

    def test_symbolic_right(self):
        _, right = certify_biderivation_symbolically()
        assert set(right.candidates) == {PRINTED, REVERSED}
        assert right.holding() == [PRINTED]
        assert right.verdict() == Verdict.HOLDS
        assert right.convention() == OrderingConvention.REVERSED

    def test_commuting_commutators_cannot_tell_orderings_apart(self, group_s3):
        left, right = check_biderivation(group_s3)
        assert left.exhaustive
        assert left.convention() == OrderingConvention.INDISTINGUISHABLE
        assert right.convention() == OrderingConvention.INDISTINGUISHABLE

    def test_on_s4(self, group_s4):
        left, right = check_biderivation(group_s4)
        assert left.exhaustive
        assert left.holding() == [DERIVED_REVERSED]
        assert left.convention() == OrderingConvention.REVERSED
        assert right.holding() == [PRINTED]
        assert right.convention() == OrderingConvention.REVERSED

    def test_on_bundle(self, left_negation_bundle):
        left, right = check_biderivation(left_negation_bundle)
        assert left.exhaustive
        assert left.holds(DERIVED_REVERSED) and right.holds(PRINTED)


class TestCubeRule:
    def test_faces_and_rule_symbolically(self):
        rule, faces = certify_cube_rule_symbolically()
        assert faces.holds(PRINTED)
        assert rule.holding() == [REVERSED]

    def test_faces_on_codiscrete(self, codiscrete_c2):
        assert scan_cube_faces(codiscrete_c2).holds(PRINTED)

    def test_rule_on_s3_is_indistinguishable(self, group_s3):
        res = scan_cube_rule(group_s3)
        assert res.exhaustive
        assert res.convention() == OrderingConvention.INDISTINGUISHABLE

    def test_rule_on_s4(self, group_s4):
        res = scan_cube_rule(group_s4)
        assert res.exhaustive
        assert res.convention() == OrderingConvention.REVERSED

    def test_rule_sampled(self, group_s4, small_scans):
        res = scan_cube_rule(group_s4)
        assert not res.exhaustive
        assert res.holds(REVERSED)


class TestClassicalLaw:
    def test_symbolic(self):
        res = certify_classical_law_symbolically()
        assert res.holds(REVERSED)
        assert not res.holds(PRINTED)
        assert res.holds("cubical")

    def test_on_s3(self, group_s3):
        res = group_commutator_law_check(group_s3.base)
        assert res.exhaustive
        assert res.holds(REVERSED)
        assert res.holds("cubical")
        assert res.convention() == OrderingConvention.INDISTINGUISHABLE

    def test_on_s4(self, group_s4):
        res = group_commutator_law_check(group_s4.base)
        assert res.exhaustive
        assert res.holds("cubical")
        assert res.convention() == OrderingConvention.REVERSED

    def test_single_triple(self, group_s3):
        C = group_s3.base
        a, b, c = (C.morphism_by_label(n) for n in ("(12)", "(23)", "(13)"))
        assert check_classical_law(C, a, b, c).holds(REVERSED)

    def test_needs_one_object(self, codiscrete_c2):
        with pytest.raises(ValueError):
            group_commutator_law_check(codiscrete_c2.base)
