"""The commutator laws: biderivation, cube faces, the whiskered 3-cube rule
and the classical group law.

Each law is evaluated by a generic function that only uses the groupoid and
whiskering interface, so the same code runs on finite instances and on the
free models in ``symbolic``.
"""

from __future__ import annotations

import logging
from typing import Any

import config
from core.category import FiniteGroupoid
from core.reports import PRINTED, REVERSED, IdentityResolution
from core.scan import plan_scan, plan_tuples
from commutator.commutators import commutator
from cubes.defects import conjugate, cube_delta_sides, delta, product
from cubes.shells import EDGE_KEYS, MINUS, PLUS, CubeShell, face
from symbolic.oracle import FREE
from symbolic.whiskered import FREE_WHISKERED
from symbolic.words import letter
from whisker.whiskering import WhiskeredCategory, cube_of_three

logger = logging.getLogger(__name__)

DERIVED_PRINTED = "derived-printed"
DERIVED_REVERSED = "derived-reversed"
DERIVED = (DERIVED_PRINTED, DERIVED_REVERSED)


# ── Biderivation ──────────────────────────────────────────────────────────

BIDERIVATION_LEFT = {
    PRINTED: "[ac,b] = [a,c]^{c.v}[c,b]",
    REVERSED: "[ac,b] = [c,b][a,c]^{c.v}",
    DERIVED_PRINTED: "[ac,b] = [c,b][a,b]^{c.v}",
    DERIVED_REVERSED: "[ac,b] = [a,b]^{c.v}[c,b]",
}

BIDERIVATION_RIGHT = {
    PRINTED: "[a,bd] = [a,d][a,b]^{y.d}  (the derived form in reversed order)",
    REVERSED: "[a,bd] = [a,b]^{y.d}[a,d]  (the derived form in printed order)",
}

# The printed right law is already in reversed order, so its ordering pair is swapped.
BIDERIVATION_RIGHT_ORDERING = (REVERSED, PRINTED)


def _start_biderivation(side: str) -> IdentityResolution:
    if side == "left":
        return IdentityResolution.start("biderivation-left", BIDERIVATION_LEFT, ordering=DERIVED)
    return IdentityResolution.start("biderivation-right", BIDERIVATION_RIGHT, ordering=BIDERIVATION_RIGHT_ORDERING)


def biderivation_left(W, a: Any, c: Any, b: Any) -> IdentityResolution:
    """``[ac, b]`` for ``a: x → y``, ``c: y → z``, ``b: u → v`` against all four candidates."""
    resolution = _start_biderivation("left")
    resolution.checked = 1
    v = W.target(b)
    cv = W.rw(c, v)
    lhs = commutator(W, W.compose(a, c), b)
    witness = (a, c, b)
    cands = {
        PRINTED: lambda: product(W, conjugate(W, commutator(W, a, c), cv), commutator(W, c, b)),
        REVERSED: lambda: product(W, commutator(W, c, b), conjugate(W, commutator(W, a, c), cv)),
        DERIVED_PRINTED: lambda: product(W, commutator(W, c, b), conjugate(W, commutator(W, a, b), cv)),
        DERIVED_REVERSED: lambda: product(W, conjugate(W, commutator(W, a, b), cv), commutator(W, c, b)),
    }
    for name, rhs in cands.items():
        resolution.compare(name, lambda rhs=rhs: (lhs, rhs()), witness)
    return resolution


def biderivation_right(W, a: Any, b: Any, d: Any) -> IdentityResolution:
    """``[a, bd]`` for ``a: x → y``, ``b: u → v``, ``d: v → w`` against both orderings."""
    resolution = _start_biderivation("right")
    resolution.checked = 1
    yd = W.lw(W.target(a), d)
    lhs = commutator(W, a, W.compose(b, d))
    witness = (a, b, d)
    moved = lambda: conjugate(W, commutator(W, a, b), yd)  # noqa: E731
    cands = {
        PRINTED: lambda: product(W, commutator(W, a, d), moved()),
        REVERSED: lambda: product(W, moved(), commutator(W, a, d)),
    }
    for name, rhs in cands.items():
        resolution.compare(name, lambda rhs=rhs: (lhs, rhs()), witness)
    return resolution


def _composable_with_any(W: WhiskeredCategory, label: str):
    C = W.base
    m = C.morphism_count
    return plan_scan(
        label,
        lambda: ((p, q, r) for p in range(m) for q in C.out_of(C.target(p)) for r in range(m)),
        lambda rng: (lambda p: (p, rng.choice(C.out_of(C.target(p))), rng.randrange(m)))(rng.randrange(m)),
        limit=config.TRIPLE_SCAN_LIMIT,
        total=sum(len(C.out_of(C.target(p))) for p in range(m)) * m,
    )


def check_biderivation(W: WhiskeredCategory) -> tuple[IdentityResolution, IdentityResolution]:
    """Resolve both biderivation laws over every composable input."""
    left, right = _start_biderivation("left"), _start_biderivation("right")
    plan = _composable_with_any(W, "biderivation triples")
    left.exhaustive = right.exhaustive = plan.exhaustive
    for p, q, r in plan:
        # p, q composable; r arbitrary.
        left.absorb(biderivation_left(W, p, q, r))
        right.absorb(biderivation_right(W, r, p, q))
    logger.info("biderivation laws resolved to %s / %s", left.convention().value, right.convention().value)
    return left, right


def certify_biderivation_symbolically() -> tuple[IdentityResolution, IdentityResolution]:
    F = FREE_WHISKERED
    a, c = F.generator("a", "x", "y"), F.generator("c", "y", "z")
    b, d = F.generator("b", "u", "v"), F.generator("d", "v", "w")
    left, right = biderivation_left(F, a, c, b), biderivation_right(F, a, b, d)
    left.identity += "-symbolic"
    right.identity += "-symbolic"
    return left, right


# ── Cube faces ────────────────────────────────────────────────────────────

FACE_FORMULA = {
    PRINTED: "δ∂⁻₁ = x.[b,c], δ∂⁺₁ = y.[b,c], δ∂⁻₂ = [a,u.c], δ∂⁺₂ = [a,v.c], δ∂⁻₃ = [a,b].z, δ∂⁺₃ = [a,b].w"
}


def face_commutators(W, a: Any, b: Any, c: Any) -> dict[tuple[int, str], Any]:
    x, y = W.source(a), W.target(a)
    u, v = W.source(b), W.target(b)
    z, w = W.source(c), W.target(c)
    bc, ab = commutator(W, b, c), commutator(W, a, b)
    return {
        (1, MINUS): W.lw(x, bc),
        (1, PLUS): W.lw(y, bc),
        (2, MINUS): commutator(W, a, W.lw(u, c)),
        (2, PLUS): commutator(W, a, W.lw(v, c)),
        (3, MINUS): W.rw(ab, z),
        (3, PLUS): W.rw(ab, w),
    }


def check_cube_faces(W, a: Any, b: Any, c: Any) -> IdentityResolution:
    """``δ`` of each face of ``a*b*c`` against its whiskered commutator."""
    resolution = IdentityResolution.start("cube-faces", FACE_FORMULA, ordering=None)
    resolution.checked = 1
    cube = cube_of_three(W, a, b, c)
    expected = face_commutators(W, a, b, c)
    for (i, s), value in expected.items():
        if not resolution.compare(PRINTED, lambda i=i, s=s, value=value: (delta(W, face(cube, i, s)), value),
                                  (a, b, c, f"∂{s}{i}")):
            break
    return resolution


def scan_cube_faces(W: WhiskeredCategory) -> IdentityResolution:
    resolution = IdentityResolution.start("cube-faces", FACE_FORMULA, ordering=None)
    plan = plan_tuples("face triples", W.base.morphism_count, 3, limit=config.TRIPLE_SCAN_LIMIT)
    resolution.exhaustive = plan.exhaustive
    for a, b, c in plan:
        resolution.absorb(check_cube_faces(W, a, b, c))
    return resolution


# ── The whiskered 3-cube rule ─────────────────────────────────────────────

CUBE_RULE_FORMULAS = {
    PRINTED: "([a,b].z)^{yv.c}([a,v.c])(x.[b,c])^{a.vw} = (y.[b,c])([a,u.c])^{y.b.w}([a,b].w)",
    REVERSED: "(x.[b,c])^{a.vw}([a,v.c])([a,b].z)^{yv.c} = ([a,b].w)([a,u.c])^{y.b.w}(y.[b,c])",
}


def cube_rule_sides(W, a: Any, b: Any, c: Any, ordering: str = REVERSED) -> tuple[Any, Any]:
    x, y = W.source(a), W.target(a)
    u, v = W.source(b), W.target(b)
    z, w = W.source(c), W.target(c)
    f = face_commutators(W, a, b, c)
    first = conjugate(W, f[(1, MINUS)], W.rw(a, W.mul(v, w)))
    third = conjugate(W, f[(3, MINUS)], W.lw(W.mul(y, v), c))
    middle = conjugate(W, f[(2, MINUS)], W.rw(W.lw(y, b), w))
    if ordering == PRINTED:
        return product(W, third, f[(2, PLUS)], first), product(W, f[(1, PLUS)], middle, f[(3, PLUS)])
    return product(W, first, f[(2, PLUS)], third), product(W, f[(3, PLUS)], middle, f[(1, PLUS)])


def check_cube_rule(W, a: Any, b: Any, c: Any) -> IdentityResolution:
    resolution = IdentityResolution.start("cube-commutator-rule", CUBE_RULE_FORMULAS)
    resolution.checked = 1
    for name in (PRINTED, REVERSED):
        resolution.compare(name, lambda name=name: cube_rule_sides(W, a, b, c, name), (a, b, c))
    return resolution


def scan_cube_rule(W: WhiskeredCategory) -> IdentityResolution:
    resolution = IdentityResolution.start("cube-commutator-rule", CUBE_RULE_FORMULAS)
    plan = plan_tuples("cube-rule triples", W.base.morphism_count, 3, limit=config.TRIPLE_SCAN_LIMIT)
    resolution.exhaustive = plan.exhaustive
    for a, b, c in plan:
        resolution.absorb(check_cube_rule(W, a, b, c))
    logger.info("cube commutator rule resolved to %s", resolution.convention().value)
    return resolution


def certify_cube_rule_symbolically() -> tuple[IdentityResolution, IdentityResolution]:
    """The cube rule and the six face equations on free generators ``a: x→y, b: u→v, c: z→w``."""
    F = FREE_WHISKERED
    a, b, c = F.generator("a", "x", "y"), F.generator("b", "u", "v"), F.generator("c", "z", "w")
    rule, faces = check_cube_rule(F, a, b, c), check_cube_faces(F, a, b, c)
    rule.identity += "-symbolic"
    faces.identity += "-symbolic"
    return rule, faces


# ── The classical commutator law ──────────────────────────────────────────

CLASSICAL_FORMULAS = {
    PRINTED: "[a,b]^c[a,c][b,c]^a = [b,c][a,c]^b[a,b]",
    REVERSED: "[b,c]^a[a,c][a,b]^c = [a,b][a,c]^b[b,c]",
    "cubical": "both sides equal the 3-cube δ identity on the cube with edges a, b, c",
}


def group_commutator(G, p: Any, q: Any) -> Any:
    """``p⁻¹q⁻¹pq``"""
    return product(G, G.inverse(p), G.inverse(q), p, q)


def classical_law_sides(G, a: Any, b: Any, c: Any, ordering: str = REVERSED) -> tuple[Any, Any]:
    ab, ac, bc = group_commutator(G, a, b), group_commutator(G, a, c), group_commutator(G, b, c)
    if ordering == PRINTED:
        return (
            product(G, conjugate(G, ab, c), ac, conjugate(G, bc, a)),
            product(G, bc, conjugate(G, ac, b), ab),
        )
    return (
        product(G, conjugate(G, bc, a), ac, conjugate(G, ab, c)),
        product(G, ab, conjugate(G, ac, b), bc),
    )


def constant_cube(G, a: Any, b: Any, c: Any) -> CubeShell:
    """Every direction-1 edge ``a``, direction-2 edge ``b``, direction-3 edge ``c``."""
    by_direction = {1: a, 2: b, 3: c}
    return CubeShell(tuple(by_direction[d] for d, _ in EDGE_KEYS), tuple(0 for _ in range(8)))


def check_classical_law(G, a: Any, b: Any, c: Any) -> IdentityResolution:
    resolution = IdentityResolution.start("classical-commutator-law", CLASSICAL_FORMULAS)
    resolution.checked = 1
    witness = (a, b, c)
    for name in (PRINTED, REVERSED):
        resolution.compare(name, lambda name=name: classical_law_sides(G, a, b, c, name), witness)
    resolution.compare(
        "cubical",
        lambda: (classical_law_sides(G, a, b, c, REVERSED), cube_delta_sides(G, constant_cube(G, a, b, c), REVERSED)),
        witness,
    )
    return resolution


def group_commutator_law_check(G: FiniteGroupoid) -> IdentityResolution:
    """The classical law and its cubical reading over every triple of a one-object groupoid."""
    resolution = IdentityResolution.start("classical-commutator-law", CLASSICAL_FORMULAS)
    if G.objects != 1:
        raise ValueError("the classical commutator law needs a one-object groupoid")
    plan = plan_tuples("group triples", G.morphism_count, 3, limit=config.TRIPLE_SCAN_LIMIT)
    resolution.exhaustive = plan.exhaustive
    for a, b, c in plan:
        resolution.absorb(check_classical_law(G, a, b, c))
    return resolution


def certify_classical_law_symbolically() -> IdentityResolution:
    resolution = check_classical_law(FREE, letter("a"), letter("b"), letter("c"))
    resolution.identity += "-symbolic"
    return resolution
