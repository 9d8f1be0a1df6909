"""Shared fixtures: small whiskered structures and tight scan limits."""

import pytest

import config
from constructions.actions import ACTIONS
from constructions.families import bundle_of_groups, codiscrete_whiskered, one_object_from_monoid
from constructions.tables import cyclic_group, idempotent_monoid, symmetric_group, truncated_free_monoid
from linear.category import linearize


@pytest.fixture
def codiscrete_c2():
    return codiscrete_whiskered(cyclic_group(2, "e"))


@pytest.fixture
def codiscrete_s3():
    return codiscrete_whiskered(symmetric_group(3))


@pytest.fixture
def group_s3():
    """S₃ as a one-object whiskered groupoid."""
    return one_object_from_monoid(symmetric_group(3))


@pytest.fixture(scope="module")
def group_s4():
    """S₄ as a one-object whiskered groupoid; its commutators do not commute."""
    return one_object_from_monoid(symmetric_group(4))


@pytest.fixture
def group_c3():
    return one_object_from_monoid(cyclic_group(3))


@pytest.fixture
def free2():
    """One object, endomorphisms the truncated free monoid on s, t."""
    return one_object_from_monoid(truncated_free_monoid())


@pytest.fixture
def free2_algebra(free2):
    return linearize(free2)


@pytest.fixture
def left_negation_bundle():
    """Objects {1, e}, a copy of C₃ at each, e acting by inversion on the left only."""
    M, G = cyclic_group(2, "e"), cyclic_group(3)
    return bundle_of_groups(M, G, ACTIONS["left-negation"](M, G))


@pytest.fixture
def small_scans(monkeypatch):
    """Force sampling everywhere and keep samples small."""
    monkeypatch.setattr(config, "SQUARE_SCAN_LIMIT", 100)
    monkeypatch.setattr(config, "CUBE_SCAN_LIMIT", 100)
    monkeypatch.setattr(config, "TRIPLE_SCAN_LIMIT", 100)
    monkeypatch.setattr(config, "SAMPLE_SIZE", 200)
    monkeypatch.setattr(config, "LINEAR_CUBE_COUNT", 20)


@pytest.fixture
def retract_bundle():
    """Objects {1, e} with e² = e, a copy of S₃ at each, e acting through the sign retraction."""
    M, G = idempotent_monoid(), symmetric_group(3)
    return bundle_of_groups(M, G, ACTIONS["retract"](M, G))
