"""Tests for constructions -- tables, actions and the example families."""

import pytest

from core.errors import ConstructionError, StructureError
from constructions.actions import (
    ACTIONS,
    check_actions,
    endomorphism_action,
    inversion,
    power_map,
    sign_retraction,
    trivial_action,
)
from constructions.families import (
    FAMILIES,
    build_family,
    bundle_of_groups,
    codiscrete_whiskered,
    direct_product,
    one_object_from_monoid,
)
from constructions.tables import (
    GROUPS,
    MONOIDS,
    cyclic_group,
    idempotent_monoid,
    klein_group,
    product_table,
    symmetric_group,
    truncated_free_monoid,
    validate_group,
    validate_monoid,
)
from linear.category import LinearCategory
from whisker.validation import validate_whiskering


class TestTables:
    @pytest.mark.parametrize("name", sorted(GROUPS))
    def test_groups_are_groups(self, name):
        assert validate_group(GROUPS[name]()).ok

    @pytest.mark.parametrize("name", sorted(MONOIDS))
    def test_monoids_are_monoids(self, name):
        assert validate_monoid(MONOIDS[name]()).ok

    def test_s3(self):
        G = symmetric_group(3)
        assert G.size == 6
        assert not G.is_commutative
        assert G.label(0) == "()"

    def test_left_to_right_product(self):
        G = symmetric_group(3)
        p, q = G.labels.index("(12)"), G.labels.index("(23)")
        # first swap 1,2 then swap 2,3: 1 -> 3 -> 2 -> 1
        assert G.label(G.mul(p, q)) == "(132)"

    def test_truncated_free_monoid(self):
        M = truncated_free_monoid()
        assert M.labels == ("1", "s", "t", "ss", "st", "ts", "tt", "0")
        s, t = 1, 2
        assert M.label(M.mul(s, t)) == "st"
        assert M.label(M.mul(M.mul(s, t), s)) == "0"

    def test_product_table(self):
        P = product_table(cyclic_group(2), klein_group())
        assert P.size == 8
        assert validate_group(P).ok
        assert P.is_commutative

    def test_cyclic_labels(self):
        assert cyclic_group(4).labels == ("1", "g", "g^2", "g^3")


class TestActions:
    def test_trivial_action(self):
        M, G = idempotent_monoid(), symmetric_group(3)
        assert check_actions(M, G, trivial_action(M, G)).ok

    def test_inversion_and_power(self):
        G = cyclic_group(4)
        assert inversion(G) == (0, 3, 2, 1)
        assert power_map(G, 2) == (0, 2, 0, 2)

    def test_sign_retraction_on_s3(self):
        G = symmetric_group(3)
        phi = sign_retraction(G)
        assert all(phi[phi[g]] == phi[g] for g in range(G.size))
        assert all(phi[G.mul(g, h)] == G.mul(phi[g], phi[h]) for g in range(6) for h in range(6))
        assert len(set(phi)) == 2

    def test_sign_retraction_needs_index_two(self):
        with pytest.raises(ConstructionError):
            sign_retraction(cyclic_group(3))

    def test_presets_need_two_elements(self):
        with pytest.raises(ConstructionError):
            endomorphism_action(cyclic_group(3), cyclic_group(3), inversion(cyclic_group(3)))


class TestFamilies:
    def test_codiscrete(self):
        W = codiscrete_whiskered(symmetric_group(3))
        assert W.base.objects == 6
        assert W.base.morphism_count == 36
        assert W.is_groupoid

    def test_bundle_refuses_nonabelian_negation(self):
        M, G = cyclic_group(2, "e"), symmetric_group(3)
        with pytest.raises(ConstructionError) as exc:
            bundle_of_groups(M, G, ACTIONS["negation"](M, G))
        assert exc.value.law == "left-endomorphism"

    def test_bundle_refuses_non_idempotent_action(self):
        # e² = e but doubling on C₄ is not idempotent.
        M, G = idempotent_monoid(), cyclic_group(4)
        with pytest.raises(ConstructionError) as exc:
            bundle_of_groups(M, G, endomorphism_action(M, G, power_map(G, 2)))
        assert exc.value.law == "left-action-associativity"

    @pytest.mark.parametrize("action", ["trivial", "retract", "left-retract"])
    def test_bundle_over_s3(self, action):
        M, G = idempotent_monoid(), symmetric_group(3)
        W = bundle_of_groups(M, G, ACTIONS[action](M, G))
        assert W.base.morphism_count == 12
        assert validate_whiskering(W).ok

    @pytest.mark.parametrize("action", ["retract", "left-retract"])
    def test_retraction_needs_an_idempotent(self, action):
        # e² = 1 in C₂, but the sign retraction is not an involution.
        M, G = cyclic_group(2, "e"), symmetric_group(3)
        with pytest.raises(ConstructionError) as exc:
            bundle_of_groups(M, G, ACTIONS[action](M, G))
        assert exc.value.law == "left-action-associativity"

    def test_bundle_labels(self, left_negation_bundle):
        C = left_negation_bundle.base
        assert C.morphism_label(4) == "g@e"
        assert left_negation_bundle.lw(1, C.morphism_by_label("g@1")) == C.morphism_by_label("g^2@e")

    def test_one_object_from_monoid(self):
        W = one_object_from_monoid(truncated_free_monoid())
        assert not W.is_groupoid
        assert one_object_from_monoid(cyclic_group(2)).is_groupoid

    def test_direct_product(self, codiscrete_c2, group_c3):
        W = direct_product(codiscrete_c2, group_c3)
        assert W.base.objects == 2
        assert W.base.morphism_count == 12
        assert W.is_groupoid

    @pytest.mark.parametrize("family", FAMILIES)
    def test_build_family(self, family):
        structure, kind = build_family(family, monoid="c2", group="c3")
        if family == "monoid-algebra":
            assert isinstance(structure, LinearCategory)
            assert kind == "linear"
        else:
            assert kind == "whiskered-groupoid"

    @pytest.mark.parametrize("options", [
        {"family": "nope"},
        {"family": "codiscrete", "monoid": "nope"},
        {"family": "bundle", "group": "nope"},
        {"family": "bundle", "action": "nope"},
    ])
    def test_unknown_names(self, options):
        with pytest.raises(StructureError):
            build_family(**options)
