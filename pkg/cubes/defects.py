"""The δ defect of squares and the product identities it satisfies.

``δf = right⁻¹ · top⁻¹ · left · bottom`` is an endomorphism at the corner ``tf``;
it is the identity exactly when the square commutes.  Conjugation is
``a^b = b⁻¹ab``.

Every function here only needs ``source``, ``target``, ``compose``, ``inverse``
and ``identity`` of its groupoid argument, so the same formulas run on finite
groupoids and on the free-group oracle in ``symbolic.oracle``.
"""

from __future__ import annotations

import logging
from typing import Any, Protocol

import config
from core.category import FiniteGroupoid
from core.reports import PRINTED, REVERSED, IdentityResolution
from core.scan import plan_scan
from cubes.shells import (
    MINUS,
    PLUS,
    CubeShell,
    SquareShell,
    comp1,
    comp2,
    count_square_pairs,
    count_squares,
    edge_of_face,
    face,
    iter_cubes,
    iter_square_pairs,
    iter_squares,
    random_cube,
    random_square,
    random_square_pair,
)

logger = logging.getLogger(__name__)


class Groupoid(Protocol):
    def source(self, a: Any) -> Any: ...
    def target(self, a: Any) -> Any: ...
    def compose(self, a: Any, b: Any) -> Any: ...
    def inverse(self, a: Any) -> Any: ...
    def identity(self, x: Any) -> Any: ...


def product(G: Groupoid, *factors: Any) -> Any:
    """Left-to-right composite of one or more morphisms."""
    result = factors[0]
    for a in factors[1:]:
        result = G.compose(result, a)
    return result


def conjugate(G: Groupoid, a: Any, b: Any) -> Any:
    """``a^b = b⁻¹ a b``."""
    return product(G, G.inverse(b), a, b)


def delta(G: Groupoid, f: SquareShell) -> Any:
    return product(G, G.inverse(f.right), G.inverse(f.top), f.left, f.bottom)


def commutes(G: Groupoid, f: SquareShell) -> bool:
    return G.compose(f.left, f.bottom) == G.compose(f.top, f.right)


# ── δ under composition of squares ────────────────────────────────────────

DELTA_COMP_FORMULAS = {
    1: {
        PRINTED: "δ(α∘₁β) = (δβ)(δα)^{∂⁺₂β}",
        REVERSED: "δ(α∘₁β) = (δα)^{∂⁺₂β}(δβ)",
    },
    2: {
        PRINTED: "δ(α∘₂γ) = (δα)^{∂⁺₁γ}(δγ)",
        REVERSED: "δ(α∘₂γ) = (δγ)(δα)^{∂⁺₁γ}",
    },
}


def delta_comp_candidates(G: Groupoid, alpha: SquareShell, beta: SquareShell, direction: int) -> dict[str, Any]:
    """Right-hand sides of both candidate orderings for ``δ(α∘β)``."""
    da, db = delta(G, alpha), delta(G, beta)
    if direction == 1:
        moved = conjugate(G, da, beta.right)
        return {PRINTED: G.compose(db, moved), REVERSED: G.compose(moved, db)}
    moved = conjugate(G, da, beta.bottom)
    return {PRINTED: G.compose(moved, db), REVERSED: G.compose(db, moved)}


def _resolution_name(direction: int) -> str:
    return f"delta-comp{direction}"


def verify_delta_comp(G: Groupoid, alpha: SquareShell, beta: SquareShell, direction: int) -> IdentityResolution:
    """Check both orderings of the δ-composition identity on one composable pair."""
    resolution = IdentityResolution.start(_resolution_name(direction), DELTA_COMP_FORMULAS[direction])
    resolution.checked = 1
    composite = comp1(G, alpha, beta) if direction == 1 else comp2(G, alpha, beta)
    lhs = delta(G, composite)
    witness = (alpha.edges(), beta.edges())
    candidates = delta_comp_candidates(G, alpha, beta, direction)
    for name, rhs in candidates.items():
        resolution.compare(name, lambda rhs=rhs: (lhs, rhs), witness)
    return resolution


def scan_delta_comp(G: FiniteGroupoid, direction: int) -> IdentityResolution:
    """Resolve the δ-composition ordering over every composable pair of ``G``."""
    resolution = IdentityResolution.start(_resolution_name(direction), DELTA_COMP_FORMULAS[direction])
    plan = plan_scan(
        f"δ∘{direction} pairs",
        lambda: iter_square_pairs(G, direction),
        lambda rng: random_square_pair(G, direction, rng),
        limit=config.SQUARE_SCAN_LIMIT,
        total=count_square_pairs(G, direction),
    )
    resolution.exhaustive = plan.exhaustive
    for alpha, beta in plan:
        resolution.absorb(verify_delta_comp(G, alpha, beta, direction))
    logger.info("δ∘%d resolved to %s over %d pair(s)", direction, resolution.convention().value, resolution.checked)
    return resolution


def scan_commuting_squares(G: FiniteGroupoid) -> IdentityResolution:
    """``δf = 1_{tf}`` for every commuting square."""
    resolution = IdentityResolution.start(
        "delta-commuting", {PRINTED: "left·bottom = top·right ⟹ δf = 1_{tf}"}, ordering=None
    )
    plan = plan_scan(
        "squares",
        lambda: iter_squares(G),
        lambda rng: random_square(G, rng),
        limit=config.SQUARE_SCAN_LIMIT,
        total=count_squares(G),
    )
    resolution.exhaustive = plan.exhaustive
    for f in plan:
        if not commutes(G, f):
            continue
        resolution.checked += 1
        tf = G.target(f.bottom)
        resolution.compare(PRINTED, lambda f=f, tf=tf: (delta(G, f), G.identity(tf)), (f.edges(),))
    return resolution


# ── The 3-cube identity ───────────────────────────────────────────────────

CUBE_DELTA_FORMULAS = {
    PRINTED: "(δ∂⁻₃f)^{u₃}(δ∂⁺₂f)(δ∂⁻₁f)^{u₁} = (δ∂⁺₁f)(δ∂⁻₂f)^{u₂}(δ∂⁺₃f)",
    REVERSED: "(δ∂⁻₁f)^{u₁}(δ∂⁺₂f)(δ∂⁻₃f)^{u₃} = (δ∂⁺₃f)(δ∂⁻₂f)^{u₂}(δ∂⁺₁f)",
}


def cube_units(f: CubeShell) -> tuple[Any, Any, Any]:
    """``(u₁, u₂, u₃) = (∂⁺₂∂⁺₃f, ∂⁺₁∂⁺₃f, ∂⁺₁∂⁺₂f)``."""
    return (
        edge_of_face(f, 2, PLUS, 3, PLUS),
        edge_of_face(f, 1, PLUS, 3, PLUS),
        edge_of_face(f, 1, PLUS, 2, PLUS),
    )


def face_deltas(G: Groupoid, f: CubeShell) -> dict[tuple[int, str], Any]:
    return {(i, s): delta(G, face(f, i, s)) for i in (1, 2, 3) for s in (MINUS, PLUS)}


def cube_delta_sides(G: Groupoid, f: CubeShell, ordering: str = REVERSED) -> tuple[Any, Any]:
    """Both sides of the 3-cube δ identity in the given factor ordering."""
    d = face_deltas(G, f)
    u1, u2, u3 = cube_units(f)
    first = conjugate(G, d[(1, MINUS)], u1)
    third = conjugate(G, d[(3, MINUS)], u3)
    middle = conjugate(G, d[(2, MINUS)], u2)
    if ordering == PRINTED:
        return (
            product(G, third, d[(2, PLUS)], first),
            product(G, d[(1, PLUS)], middle, d[(3, PLUS)]),
        )
    return (
        product(G, first, d[(2, PLUS)], third),
        product(G, d[(3, PLUS)], middle, d[(1, PLUS)]),
    )


def verify_cube_delta(G: Groupoid, f: CubeShell) -> IdentityResolution:
    resolution = IdentityResolution.start("cube-delta", CUBE_DELTA_FORMULAS)
    resolution.checked = 1
    for name in (PRINTED, REVERSED):
        resolution.compare(name, lambda name=name: cube_delta_sides(G, f, name), (f.edges,))
    return resolution


def scan_cube_delta(G: FiniteGroupoid) -> IdentityResolution:
    resolution = IdentityResolution.start("cube-delta", CUBE_DELTA_FORMULAS)
    plan = plan_scan(
        "cubes",
        lambda: iter_cubes(G),
        lambda rng: random_cube(G, rng),
        limit=config.CUBE_SCAN_LIMIT,
    )
    resolution.exhaustive = plan.exhaustive
    for f in plan:
        resolution.absorb(verify_cube_delta(G, f))
    logger.info("cube δ identity resolved to %s over %d cube(s)", resolution.convention().value, resolution.checked)
    return resolution
