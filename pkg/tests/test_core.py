"""Tests for core -- finite categories, validation and scan planning."""

import dataclasses
import random

import pytest

import config
from core.category import FiniteCategory, FiniteGroupoid, is_groupoid
from core.errors import CompositionError, StructureError
from core.reports import (
    PRINTED,
    REVERSED,
    IdentityResolution,
    OrderingConvention,
    Verdict,
    resolve_convention,
)
from core.scan import plan_scan, plan_tuples
from core.validation import validate, validate_category, validate_groupoid
from whisker.validation import validate_whiskering


def _one_object(table, inverses=None):
    common = dict(
        objects=1,
        endpoints=tuple((0, 0) for _ in table),
        identities=(0,),
        table=tuple(tuple(row) for row in table),
    )
    if inverses is None:
        return FiniteCategory(**common)
    return FiniteGroupoid(**common, inverses=tuple(inverses))


class TestFiniteCategory:
    def test_compose_follows_table(self, codiscrete_c2):
        C = codiscrete_c2.base
        # 1->e then e->1
        assert C.compose(1, 2) == 0

    def test_compose_rejects_mismatched_endpoints(self, codiscrete_c2):
        with pytest.raises(CompositionError):
            codiscrete_c2.base.compose(1, 1)

    def test_hom_and_out_of(self, codiscrete_c2):
        C = codiscrete_c2.base
        assert C.hom(0, 1) == (1,)
        assert C.out_of(1) == (2, 3)

    def test_morphism_by_label(self, codiscrete_c2):
        C = codiscrete_c2.base
        assert C.morphism_label(1) == "1->e"
        assert C.morphism_by_label("1->e") == 1
        assert C.morphism_by_label("3") == 3

    @pytest.mark.parametrize("name", ["nope", "9"])
    def test_unknown_label(self, codiscrete_c2, name):
        with pytest.raises(StructureError):
            codiscrete_c2.base.morphism_by_label(name)

    def test_is_groupoid(self, codiscrete_c2, free2):
        assert is_groupoid(codiscrete_c2.base)
        assert not is_groupoid(free2.base)


class TestValidation:
    def test_valid_category(self, free2):
        report = validate_category(free2.base)
        assert report.ok
        assert report.checked > 0

    def test_valid_groupoid(self, group_s3):
        assert validate_groupoid(group_s3.base).ok

    def test_missing_entry_is_closure_violation(self):
        C = _one_object([[0, 1], [1, None]])
        report = validate(C)
        assert "closure" in report.laws()
        assert (1, 1) in report.witnesses("closure")

    def test_associativity_violation(self):
        C = _one_object([[0, 1, 2], [1, 2, 1], [2, 2, 2]])
        report = validate(C)
        assert (1, 1, 1) in report.witnesses("associativity")

    def test_wrong_inverse(self, group_c3):
        G = dataclasses.replace(group_c3.base, inverses=(0, 1, 2))
        report = validate(G)
        assert "right-inverse" in report.laws()

    def test_size_cap(self, monkeypatch, group_c3):
        monkeypatch.setattr(config, "MAX_MORPHISMS", 2)
        report = validate(group_c3.base)
        assert report.laws() == {"size"}


class TestResolution:
    def _resolution(self, printed_ok, reversed_ok):
        res = IdentityResolution.start("demo", {PRINTED: "p", REVERSED: "r"})
        res.observe(PRINTED, printed_ok, (1,))
        res.observe(REVERSED, reversed_ok, (2,))
        return res

    def test_verdicts(self):
        assert self._resolution(True, True).verdict() == Verdict.HOLDS
        assert self._resolution(False, True).verdict() == Verdict.HOLDS_REVERSED
        assert self._resolution(False, False).verdict() == Verdict.COUNTEREXAMPLE

    def test_first_counterexample_kept(self):
        res = IdentityResolution.start("demo", {PRINTED: "p"}, ordering=None)
        res.observe(PRINTED, False, (1,), "first")
        res.observe(PRINTED, False, (2,), "second")
        assert res.candidates[PRINTED].counterexample == (1,)
        assert res.candidates[PRINTED].detail == "first"

    def test_compare_records_ill_typed(self):
        res = IdentityResolution.start("demo", {PRINTED: "p"}, ordering=None)

        def sides():
            raise CompositionError("no")

        assert res.compare(PRINTED, sides, (0,)) is False
        assert res.candidates[PRINTED].detail.startswith("ill-typed")

    def test_convention(self):
        assert resolve_convention([self._resolution(False, True), self._resolution(True, True)]) \
            == OrderingConvention.REVERSED
        assert resolve_convention([self._resolution(False, True), self._resolution(True, False)]) \
            == OrderingConvention.NONE
        assert resolve_convention([]) == OrderingConvention.INDISTINGUISHABLE


class TestScanPlan:
    def test_exhaustive_when_small(self):
        plan = plan_tuples("pairs", 3, 2, limit=9)
        assert plan.exhaustive
        assert len(list(plan)) == 9

    def test_samples_when_large(self):
        plan = plan_tuples("triples", 10, 3, limit=50)
        items = list(plan)
        assert not plan.exhaustive
        assert len(items) == config.SAMPLE_SIZE

    def test_lazy_enumeration_is_cut_off(self):
        plan = plan_scan("lazy", lambda: iter(range(10 ** 9)), lambda rng: rng.randrange(5),
                         limit=10, sample_size=7)
        assert not plan.exhaustive
        assert len(list(plan)) == 7

    def test_sampling_is_seeded(self):
        first = list(plan_tuples("t", 10, 3, limit=5))
        second = list(plan_tuples("t", 10, 3, limit=5))
        assert first == second

    def test_default_triple_limit(self):
        # 24 morphisms (S₄) are scanned in full; 36 (codiscrete S₃) are sampled.
        assert plan_tuples("s4", 24, 3, limit=config.TRIPLE_SCAN_LIMIT).exhaustive
        assert not plan_tuples("codiscrete s3", 36, 3, limit=config.TRIPLE_SCAN_LIMIT).exhaustive


def _mutate(W, rng):
    """Change one cell of the composition or whiskering tables to a different morphism."""
    C = W.base
    m = C.morphism_count
    kind = rng.choice(["compose", "left", "right"])
    if kind == "compose":
        cells = [(a, b) for a in range(m) for b in range(m) if C.table[a][b] is not None]
        rows = [list(row) for row in C.table]
    elif kind == "left":
        cells = [(x, a) for x in range(C.objects) for a in range(m)]
        rows = [list(row) for row in W.whiskering.left]
    else:
        cells = [(a, y) for a in range(m) for y in range(C.objects)]
        rows = [list(row) for row in W.whiskering.right]
    i, j = rng.choice(cells)
    rows[i][j] = rng.choice([b for b in range(m) if b != rows[i][j]])
    table = tuple(map(tuple, rows))
    if kind == "compose":
        return dataclasses.replace(W, base=dataclasses.replace(C, table=table)), (kind, i, j)
    return dataclasses.replace(W, whiskering=dataclasses.replace(W.whiskering, **{kind: table})), (kind, i, j)


class TestMutations:
    @pytest.mark.parametrize("name", ["codiscrete_s3", "group_s3", "retract_bundle"])
    def test_every_single_cell_change_is_rejected(self, request, name):
        W = request.getfixturevalue(name)
        assert validate_whiskering(W).ok
        rng = random.Random(7)
        for _ in range(100):
            mutated, cell = _mutate(W, rng)
            report = validate_whiskering(mutated)
            assert not report.ok, cell
            assert report.violations[0].witness
