"""Scans of the additive identities: Δ under composition and addition, the
3-cube Δ equation, the bracket's defect equation and the plain Leibniz law."""

from __future__ import annotations

import logging
import random
from collections import defaultdict
from typing import Optional

import config
from core.reports import PRINTED, IdentityResolution
from core.scan import plan_scan, plan_tuples
from cubes.shells import (
    EDGE_KEYS,
    MINUS,
    PLUS,
    CubeShell,
    SquareShell,
    comp1,
    comp2,
    count_square_pairs,
    edge_of_face,
    face,
    iter_square_pairs,
    iter_squares,
    make_cube,
    make_square,
    random_cube,
    random_square,
    random_square_pair,
)
from linear.category import (
    Delta,
    LinearCategory,
    add1,
    add2,
    bracket,
    leibniz_defect,
    leibniz_defect_square,
    leibniz_identity,
    linearize_cube,
    linearize_square,
)
from linear.formal import FormalSum
from whisker.whiskering import cube_of_three, l_mult, r_mult

logger = logging.getLogger(__name__)

EXPANDED = "expanded"

DELTA_COMP_FORMULAS = {
    1: {PRINTED: "Δ(α∘₁β) = (Δα)(∂⁺₂β) + (∂⁻₂α)(Δβ)"},
    2: {
        PRINTED: "Δ(α∘₂γ) = (Δα)(∂⁺₂γ) + (∂⁻₁γ)(Δγ)",
        EXPANDED: "Δ(α∘₂γ) = (Δα)(∂⁺₁γ) + (∂⁻₁α)(Δγ)",
    },
}


# ── Δ under composition ───────────────────────────────────────────────────

def check_Delta_comp(A: LinearCategory, alpha: SquareShell[FormalSum], beta: SquareShell[FormalSum],
                     direction: int) -> IdentityResolution:
    resolution = IdentityResolution.start(f"Delta-comp{direction}", DELTA_COMP_FORMULAS[direction], ordering=None)
    resolution.checked = 1
    witness = (alpha.edges(), beta.edges())
    da, db = Delta(A, alpha), Delta(A, beta)
    if direction == 1:
        lhs = Delta(A, comp1(A, alpha, beta))
        resolution.compare(PRINTED, lambda: (lhs, A.compose(da, beta.right) + A.compose(alpha.left, db)), witness)
    else:
        lhs = Delta(A, comp2(A, alpha, beta))
        resolution.compare(PRINTED, lambda: (lhs, A.compose(da, beta.right) + A.compose(beta.top, db)), witness)
        resolution.compare(EXPANDED, lambda: (lhs, A.compose(da, beta.bottom) + A.compose(alpha.top, db)), witness)
    return resolution


def scan_Delta_comp(A: LinearCategory, direction: int) -> IdentityResolution:
    C = A.base.base
    resolution = IdentityResolution.start(f"Delta-comp{direction}", DELTA_COMP_FORMULAS[direction], ordering=None)
    plan = plan_scan(
        f"Δ∘{direction} pairs",
        lambda: iter_square_pairs(C, direction),
        lambda rng: random_square_pair(C, direction, rng),
        limit=config.SQUARE_SCAN_LIMIT,
        total=count_square_pairs(C, direction),
    )
    resolution.exhaustive = plan.exhaustive
    for alpha, beta in plan:
        resolution.absorb(check_Delta_comp(A, linearize_square(A, alpha), linearize_square(A, beta), direction))
    return resolution


# ── Δ under addition ──────────────────────────────────────────────────────

def _additive_groups(A: LinearCategory, direction: int) -> dict[tuple, list[SquareShell]]:
    groups: dict[tuple, list[SquareShell]] = defaultdict(list)
    for f in iter_squares(A.base.base):
        key = (f.left, f.right) if direction == 1 else (f.top, f.bottom)
        groups[key].append(f)
    return groups


def check_Delta_additive(A: LinearCategory, alpha: SquareShell[FormalSum], beta: SquareShell[FormalSum],
                         direction: int) -> IdentityResolution:
    resolution = IdentityResolution.start(
        f"Delta-add{direction}", {PRINTED: f"Δ(α +{direction} β) = Δα + Δβ"}, ordering=None
    )
    resolution.checked = 1
    total = add1(alpha, beta) if direction == 1 else add2(alpha, beta)
    resolution.compare(
        PRINTED, lambda: (Delta(A, total), Delta(A, alpha) + Delta(A, beta)), (alpha.edges(), beta.edges())
    )
    return resolution


def scan_Delta_additive(A: LinearCategory, direction: int) -> IdentityResolution:
    """Every pair of basis squares for which ``+₁`` (or ``+₂``) is defined."""
    resolution = IdentityResolution.start(
        f"Delta-add{direction}", {PRINTED: f"Δ(α +{direction} β) = Δα + Δβ"}, ordering=None
    )
    groups = _additive_groups(A, direction)
    members = [f for fs in groups.values() for f in fs]

    def sample(rng: random.Random):
        alpha = rng.choice(members)
        key = (alpha.left, alpha.right) if direction == 1 else (alpha.top, alpha.bottom)
        return alpha, rng.choice(groups[key])

    plan = plan_scan(
        f"+{direction} pairs",
        lambda: ((f, g) for fs in groups.values() for f in fs for g in fs),
        sample,
        limit=config.SQUARE_SCAN_LIMIT,
        total=sum(len(fs) ** 2 for fs in groups.values()),
    )
    resolution.exhaustive = plan.exhaustive
    for alpha, beta in plan:
        resolution.absorb(check_Delta_additive(A, linearize_square(A, alpha), linearize_square(A, beta), direction))
    return resolution


# ── The 3-cube Δ equation ─────────────────────────────────────────────────

def Delta_cube_terms(A: LinearCategory, f: CubeShell[FormalSum]) -> tuple[FormalSum, FormalSum, FormalSum]:
    """``Δquad(a₃, Δ∂⁺₁f, Δ∂⁻₁f, a₁)``, ``Δquad(b₃, Δ∂⁺₂f, Δ∂⁻₂f, b₁)``, ``Δquad(c₃, Δ∂⁺₃f, Δ∂⁻₃f, c₁)``."""
    corners = {
        1: (edge_of_face(f, 2, MINUS, 3, MINUS), edge_of_face(f, 2, PLUS, 3, PLUS)),
        2: (edge_of_face(f, 1, MINUS, 3, MINUS), edge_of_face(f, 1, PLUS, 3, PLUS)),
        3: (edge_of_face(f, 1, MINUS, 2, MINUS), edge_of_face(f, 1, PLUS, 2, PLUS)),
    }
    terms = []
    for i in (1, 2, 3):
        first, last = corners[i]
        quad = make_square(A, first, Delta(A, face(f, i, PLUS)), Delta(A, face(f, i, MINUS)), last)
        terms.append(Delta(A, quad))
    return tuple(terms)


def check_Delta_cube(A: LinearCategory, f: CubeShell[FormalSum]) -> IdentityResolution:
    resolution = IdentityResolution.start(
        "Delta-cube",
        {PRINTED: "Δquad(a₃,Δ∂⁺₁f,Δ∂⁻₁f,a₁) = Δquad(b₃,Δ∂⁺₂f,Δ∂⁻₂f,b₁) − Δquad(c₃,Δ∂⁺₃f,Δ∂⁻₃f,c₁)"},
        ordering=None,
    )
    resolution.checked = 1
    t1, t2, t3 = Delta_cube_terms(A, f)
    resolution.compare(PRINTED, lambda: (t1, t2 - t3), (tuple(_render_key(e) for e in f.edges),))
    return resolution


def _render_key(e: FormalSum) -> tuple:
    return tuple((a, str(r)) for a, r in e.terms)


def random_linear_cube(A: LinearCategory, rng: random.Random, bound: Optional[int] = None) -> Optional[CubeShell[FormalSum]]:
    """A random base cube with every edge replaced by an integer combination of its parallel morphisms."""
    bound = config.LINEAR_COEFFICIENT_BOUND if bound is None else bound
    C = A.base.base
    skeleton = random_cube(C, rng)
    if skeleton is None:
        return None
    edges = {}
    for key, e in zip(EDGE_KEYS, skeleton.edges):
        x, y = C.source(e), C.target(e)
        edges[key] = FormalSum.of(x, y, ((a, rng.randint(-bound, bound)) for a in C.hom(x, y)))
    return make_cube(A, edges)


def scan_Delta_cube(A: LinearCategory, count: Optional[int] = None, seed: Optional[int] = None) -> IdentityResolution:
    count = config.LINEAR_CUBE_COUNT if count is None else count
    rng = random.Random(config.RANDOM_SEED if seed is None else seed)
    resolution = IdentityResolution.start(
        "Delta-cube",
        {PRINTED: "Δquad(a₃,Δ∂⁺₁f,Δ∂⁻₁f,a₁) = Δquad(b₃,Δ∂⁺₂f,Δ∂⁻₂f,b₁) − Δquad(c₃,Δ∂⁺₃f,Δ∂⁻₃f,c₁)"},
        ordering=None,
    )
    resolution.exhaustive = False
    drawn = 0
    attempts = 0
    while drawn < count and attempts < 20 * count:
        attempts += 1
        cube = random_linear_cube(A, rng)
        if cube is None:
            continue
        drawn += 1
        resolution.absorb(check_Delta_cube(A, cube))
    logger.info("Δ cube equation checked on %d random cube(s)", drawn)
    return resolution


SPECIALISATION_FORMULAS = {
    "first-term": "Δquad(a₃,Δ∂⁺₁f,Δ∂⁻₁f,a₁) = [a,[b,c]]",
    "second-term": "Δquad(b₃,Δ∂⁺₂f,Δ∂⁻₂f,b₁) = −Δquad([a,u.c], y.b.w, x.b.z, [a,v.c])",
    "third-term": "Δquad(c₃,Δ∂⁺₃f,Δ∂⁻₃f,c₁) = −[[a,b],c]",
}


def cube_of_three_terms(A: LinearCategory, a, b, c) -> IdentityResolution:
    """The three terms of the cube equation on ``a*b*c`` as brackets."""
    resolution = IdentityResolution.start("Delta-cube-brackets", SPECIALISATION_FORMULAS, ordering=None)
    resolution.checked = 1
    cube = linearize_cube(A, cube_of_three(A.base, a, b, c))
    t1, t2, t3 = Delta_cube_terms(A, cube)
    witness = (a, b, c)
    resolution.compare("first-term", lambda: (t1, bracket(A, a, bracket(A, b, c))), witness)
    resolution.compare("second-term", lambda: (t2, -Delta(A, leibniz_defect_square(A, a, b, c))), witness)
    resolution.compare("third-term", lambda: (t3, -bracket(A, bracket(A, a, b), c)), witness)
    return resolution


def _triples(A: LinearCategory, label: str):
    return plan_tuples(label, A.base.base.morphism_count, 3, limit=config.TRIPLE_SCAN_LIMIT)


def scan_cube_of_three_terms(A: LinearCategory) -> IdentityResolution:
    resolution = IdentityResolution.start("Delta-cube-brackets", SPECIALISATION_FORMULAS, ordering=None)
    plan = _triples(A, "cube-of-three triples")
    resolution.exhaustive = plan.exhaustive
    for a, b, c in plan:
        resolution.absorb(cube_of_three_terms(A, a, b, c))
    return resolution


# ── Bracket laws ──────────────────────────────────────────────────────────

LEIBNIZ_DEFECT_FORMULA = {PRINTED: "[[a,b],c] − [a,[b,c]] = Δquad([a,u.c], y.b.w, x.b.z, [a,v.c])"}
LEIBNIZ_FORMULA = {PRINTED: "[[a,b],c] = [a,[b,c]] + [[a,c],b]"}


def scan_leibniz_defect(A: LinearCategory) -> IdentityResolution:
    resolution = IdentityResolution.start("leibniz-defect", LEIBNIZ_DEFECT_FORMULA, ordering=None)
    plan = _triples(A, "bracket triples")
    resolution.exhaustive = plan.exhaustive
    nonzero = 0
    for a, b, c in plan:
        resolution.checked += 1
        defect = leibniz_defect(A, a, b, c)
        nonzero += not defect.rhs.is_zero
        resolution.compare(PRINTED, lambda defect=defect: (defect.lhs, defect.rhs), (a, b, c))
    logger.info("bracket defect nonzero on %d of %d triple(s)", nonzero, resolution.checked)
    return resolution


def scan_leibniz(A: LinearCategory) -> IdentityResolution:
    """The plain Leibniz identity; its failure is a property of the structure, not an error."""
    resolution = IdentityResolution.start("leibniz", LEIBNIZ_FORMULA, ordering=None)
    plan = _triples(A, "Leibniz triples")
    resolution.exhaustive = plan.exhaustive
    for a, b, c in plan:
        resolution.checked += 1
        resolution.compare(PRINTED, lambda a=a, b=b, c=c: leibniz_identity(A, a, b, c), (a, b, c))
    return resolution


def scan_star_defect(A: LinearCategory) -> IdentityResolution:
    """``Δ(a*b) = r(a,b) − l(a,b)`` in ``R[C]`` for every pair."""
    resolution = IdentityResolution.start("Delta-star", {PRINTED: "Δ(a*b) = r(a,b) − l(a,b)"}, ordering=None)
    W = A.base
    m = W.base.morphism_count
    for a in range(m):
        for b in range(m):
            resolution.checked += 1
            resolution.compare(
                PRINTED,
                lambda a=a, b=b: (bracket(A, a, b), A.basis(r_mult(W, a, b)) - A.basis(l_mult(W, a, b))),
                (a, b),
            )
    return resolution


def check_bracket_bilinearity(A: LinearCategory, r, a: FormalSum, a2: FormalSum, b: FormalSum) -> IdentityResolution:
    """``[ra + a′, b] = r[a,b] + [a′,b]`` and ``[b, ra + a′] = r[b,a] + [b,a′]`` for parallel ``a, a′``."""
    resolution = IdentityResolution.start(
        "bracket-bilinear",
        {"left": "[ra + a′, b] = r[a,b] + [a′,b]", "right": "[b, ra + a′] = r[b,a] + [b,a′]"},
        ordering=None,
    )
    resolution.checked = 1
    combined = a.scale(r) + a2
    witness = (str(r), _render_key(a), _render_key(a2), _render_key(b))
    resolution.compare(
        "left", lambda: (bracket(A, combined, b), bracket(A, a, b).scale(r) + bracket(A, a2, b)), witness
    )
    resolution.compare(
        "right", lambda: (bracket(A, b, combined), bracket(A, b, a).scale(r) + bracket(A, b, a2)), witness
    )
    return resolution


def random_sum(A: LinearCategory, rng: random.Random, x: int, y: int, bound: Optional[int] = None) -> FormalSum:
    bound = config.LINEAR_COEFFICIENT_BOUND if bound is None else bound
    return FormalSum.of(x, y, ((a, rng.randint(-bound, bound)) for a in A.base.base.hom(x, y)))


def scan_bracket_bilinearity(A: LinearCategory, count: Optional[int] = None) -> IdentityResolution:
    count = config.SAMPLE_SIZE if count is None else count
    rng = random.Random(config.RANDOM_SEED)
    C = A.base.base
    resolution = IdentityResolution.start(
        "bracket-bilinear",
        {"left": "[ra + a′, b] = r[a,b] + [a′,b]", "right": "[b, ra + a′] = r[b,a] + [b,a′]"},
        ordering=None,
    )
    resolution.exhaustive = False
    bound = config.LINEAR_COEFFICIENT_BOUND
    for _ in range(count):
        x, y = C.endpoints[rng.randrange(C.morphism_count)]
        u, v = C.endpoints[rng.randrange(C.morphism_count)]
        r = rng.randint(-bound, bound)
        resolution.absorb(check_bracket_bilinearity(
            A, r, random_sum(A, rng, x, y), random_sum(A, rng, x, y), random_sum(A, rng, u, v)
        ))
    return resolution
