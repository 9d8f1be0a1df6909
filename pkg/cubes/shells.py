"""Square and 3-cube shells, their compositions, faces and enumeration.

A shell assigns morphisms to the edges of I² or I³ with matching corners; it
is NOT required to commute.  Square conventions::

        sf ──top──▶ ·
        │           │
      left        right        direction 1 runs down, direction 2 across
        ▼           ▼
        · ─bottom─▶ tf

so ``top = ∂⁻₁``, ``bottom = ∂⁺₁``, ``left = ∂⁻₂``, ``right = ∂⁺₂``.  The
dataclass field order is the quadruple order ``(left, bottom, top, right)``.

Cube edges are keyed by ``(direction, (s, t))`` where ``s, t`` are the signs
of the two other coordinates in increasing direction order.  A face fixes one
coordinate; its remaining directions, in increasing order, become the square's
directions 1 and 2.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Any, Generic, Iterator, Mapping, Optional, Protocol, TypeVar

from core.category import FiniteCategory, MorId, ObjId
from core.errors import BoundaryError, CompositionError

E = TypeVar("E")

MINUS = "-"
PLUS = "+"
SIGNS = (MINUS, PLUS)
DIRECTIONS = (1, 2, 3)

EdgeKey = tuple[int, tuple[str, str]]
EDGE_KEYS: tuple[EdgeKey, ...] = tuple(
    (d, (s, t)) for d in DIRECTIONS for s in SIGNS for t in SIGNS
)
VERTEX_KEYS: tuple[tuple[str, str, str], ...] = tuple(itertools.product(SIGNS, repeat=3))


class Composing(Protocol):
    def source(self, a: Any) -> Any: ...
    def target(self, a: Any) -> Any: ...
    def compose(self, a: Any, b: Any) -> Any: ...


# ── Squares ───────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class SquareShell(Generic[E]):
    left: E
    bottom: E
    top: E
    right: E

    def edges(self) -> tuple[E, E, E, E]:
        return (self.left, self.bottom, self.top, self.right)


def make_square(C: Composing, left: E, bottom: E, top: E, right: E) -> SquareShell[E]:
    """Build ``quadruple(left, bottom, top, right)`` after checking its four corners."""
    if C.source(top) != C.source(left):
        raise BoundaryError(f"corner sf: source(top)={C.source(top)} but source(left)={C.source(left)}")
    if C.target(bottom) != C.target(right):
        raise BoundaryError(f"corner tf: target(bottom)={C.target(bottom)} but target(right)={C.target(right)}")
    if C.target(top) != C.source(right):
        raise BoundaryError(f"top-right corner: target(top)={C.target(top)} but source(right)={C.source(right)}")
    if C.target(left) != C.source(bottom):
        raise BoundaryError(f"bottom-left corner: target(left)={C.target(left)} but source(bottom)={C.source(bottom)}")
    return SquareShell(left, bottom, top, right)


def degenerate_square(C: FiniteCategory, x: ObjId) -> SquareShell[MorId]:
    i = C.identity(x)
    return SquareShell(i, i, i, i)


def square_corners(C: Composing, f: SquareShell) -> tuple[Any, Any]:
    """``(sf, tf)``."""
    return C.source(f.top), C.target(f.bottom)


def comp1(C: Composing, alpha: SquareShell[E], beta: SquareShell[E]) -> SquareShell[E]:
    """Stack ``beta`` below ``alpha`` (requires ``bottom(alpha) = top(beta)``)."""
    if alpha.bottom != beta.top:
        raise CompositionError(f"comp1 needs bottom(α) = top(β), got {alpha.bottom!r} and {beta.top!r}")
    return SquareShell(
        left=C.compose(alpha.left, beta.left),
        bottom=beta.bottom,
        top=alpha.top,
        right=C.compose(alpha.right, beta.right),
    )


def comp2(C: Composing, alpha: SquareShell[E], gamma: SquareShell[E]) -> SquareShell[E]:
    """Place ``gamma`` right of ``alpha`` (requires ``right(alpha) = left(gamma)``)."""
    if alpha.right != gamma.left:
        raise CompositionError(f"comp2 needs right(α) = left(γ), got {alpha.right!r} and {gamma.left!r}")
    return SquareShell(
        left=alpha.left,
        bottom=C.compose(alpha.bottom, gamma.bottom),
        top=C.compose(alpha.top, gamma.top),
        right=gamma.right,
    )


def square_edge(f: SquareShell[E], i: int, sign: str) -> E:
    """``∂^sign_i f``."""
    if i == 1:
        return f.top if sign == MINUS else f.bottom
    if i == 2:
        return f.left if sign == MINUS else f.right
    raise ValueError(f"a square has directions 1 and 2, not {i}")


# ── Cubes ─────────────────────────────────────────────────────────────────

def _others(i: int) -> tuple[int, int]:
    j, k = (d for d in DIRECTIONS if d != i)
    return j, k


def edge_key(i: int, coords: Mapping[int, str]) -> EdgeKey:
    """Key of the direction-``i`` edge at the given values of the other coordinates."""
    j, k = _others(i)
    return (i, (coords[j], coords[k]))


@dataclass(frozen=True)
class CubeShell(Generic[E]):
    """Twelve edges in ``EDGE_KEYS`` order and eight vertices in ``VERTEX_KEYS`` order."""
    edges: tuple[E, ...]
    vertices: tuple[Any, ...]

    def edge(self, i: int, signs: tuple[str, str]) -> E:
        return self.edges[EDGE_KEYS.index((i, signs))]

    def edge_at(self, i: int, coords: Mapping[int, str]) -> E:
        return self.edge(*edge_key(i, coords))

    def vertex(self, signs: tuple[str, str, str]) -> Any:
        return self.vertices[VERTEX_KEYS.index(signs)]

    def edge_map(self) -> dict[EdgeKey, E]:
        return dict(zip(EDGE_KEYS, self.edges))


def make_cube(C: Composing, edges: Mapping[EdgeKey, E]) -> CubeShell[E]:
    """Build a cube shell, checking that the three edges at every vertex agree on it."""
    missing = [key for key in EDGE_KEYS if key not in edges]
    if missing:
        raise BoundaryError(f"cube is missing edges {missing}")
    vertices = []
    for p in VERTEX_KEYS:
        coords = dict(zip(DIRECTIONS, p))
        seen = set()
        for d in DIRECTIONS:
            e = edges[edge_key(d, coords)]
            seen.add(C.source(e) if coords[d] == MINUS else C.target(e))
        if len(seen) != 1:
            raise BoundaryError(f"vertex {''.join(p)}: incident edges disagree ({sorted(map(str, seen))})")
        vertices.append(seen.pop())
    return CubeShell(tuple(edges[key] for key in EDGE_KEYS), tuple(vertices))


def face(f: CubeShell[E], i: int, sign: str) -> SquareShell[E]:
    """``∂^sign_i f``: fix coordinate ``i``; the others become directions 1, 2."""
    j, k = _others(i)
    return SquareShell(
        left=f.edge_at(j, {i: sign, k: MINUS}),
        bottom=f.edge_at(k, {i: sign, j: PLUS}),
        top=f.edge_at(k, {i: sign, j: MINUS}),
        right=f.edge_at(j, {i: sign, k: PLUS}),
    )


def edge_of_face(f: CubeShell[E], p: int, alpha: str, i: int, sign: str) -> E:
    """``∂^alpha_p ∂^sign_i f``."""
    return square_edge(face(f, i, sign), p, alpha)


def faces(f: CubeShell[E]) -> dict[tuple[int, str], SquareShell[E]]:
    return {(i, s): face(f, i, s) for i in DIRECTIONS for s in SIGNS}


def degenerate_cube(C: FiniteCategory, x: ObjId) -> CubeShell[MorId]:
    i = C.identity(x)
    return CubeShell(tuple(i for _ in EDGE_KEYS), tuple(x for _ in VERTEX_KEYS))


# ── Enumeration ───────────────────────────────────────────────────────────

def squares_with_top(C: FiniteCategory, top: MorId) -> Iterator[SquareShell[MorId]]:
    for left in C.out_of(C.source(top)):
        for right in C.out_of(C.target(top)):
            for bottom in C.hom(C.target(left), C.target(right)):
                yield SquareShell(left, bottom, top, right)


def squares_with_left(C: FiniteCategory, left: MorId) -> Iterator[SquareShell[MorId]]:
    for top in C.out_of(C.source(left)):
        for right in C.out_of(C.target(top)):
            for bottom in C.hom(C.target(left), C.target(right)):
                yield SquareShell(left, bottom, top, right)


def iter_squares(C: FiniteCategory) -> Iterator[SquareShell[MorId]]:
    for top in range(C.morphism_count):
        yield from squares_with_top(C, top)


def count_squares_with_top(C: FiniteCategory, top: MorId) -> int:
    return sum(
        len(C.hom(C.target(left), C.target(right)))
        for left in C.out_of(C.source(top))
        for right in C.out_of(C.target(top))
    )


def count_squares_with_left(C: FiniteCategory, left: MorId) -> int:
    return sum(
        len(C.hom(C.target(left), C.target(right)))
        for top in C.out_of(C.source(left))
        for right in C.out_of(C.target(top))
    )


def count_squares(C: FiniteCategory) -> int:
    return sum(count_squares_with_top(C, t) for t in range(C.morphism_count))


def iter_square_pairs(C: FiniteCategory, direction: int) -> Iterator[tuple[SquareShell, SquareShell]]:
    """All pairs composable by ``comp1`` (direction 1) or ``comp2`` (direction 2)."""
    for alpha in iter_squares(C):
        if direction == 1:
            partners = squares_with_top(C, alpha.bottom)
        else:
            partners = squares_with_left(C, alpha.right)
        for other in partners:
            yield alpha, other


def count_square_pairs(C: FiniteCategory, direction: int) -> int:
    counter = count_squares_with_top if direction == 1 else count_squares_with_left
    cache: dict[MorId, int] = {}
    total = 0
    for alpha in iter_squares(C):
        shared = alpha.bottom if direction == 1 else alpha.right
        if shared not in cache:
            cache[shared] = counter(C, shared)
        total += cache[shared]
    return total


def random_square(C: FiniteCategory, rng: random.Random, top: Optional[MorId] = None,
                  left: Optional[MorId] = None) -> Optional[SquareShell[MorId]]:
    """A random shell, optionally with a prescribed top or left edge; ``None`` on a dead end."""
    if top is None and left is None:
        top = rng.randrange(C.morphism_count)
    if top is None:
        top = rng.choice(C.out_of(C.source(left)))
    if left is None:
        left = rng.choice(C.out_of(C.source(top)))
    right = rng.choice(C.out_of(C.target(top)))
    bottoms = C.hom(C.target(left), C.target(right))
    if not bottoms:
        return None
    return SquareShell(left, rng.choice(bottoms), top, right)


def random_square_pair(C: FiniteCategory, direction: int, rng: random.Random):
    alpha = random_square(C, rng)
    if alpha is None:
        return None
    if direction == 1:
        other = random_square(C, rng, top=alpha.bottom)
    else:
        other = random_square(C, rng, left=alpha.right)
    return None if other is None else (alpha, other)


def _cube_from_parts(base: SquareShell, rising: dict, upper: dict) -> dict[EdgeKey, MorId]:
    # base = ∂⁻₃ (directions 1, 2); rising = direction-3 edges keyed (p1, p2);
    # upper = edges of ∂⁺₃ keyed by name.
    return {
        (1, (MINUS, MINUS)): base.left,
        (1, (PLUS, MINUS)): base.right,
        (2, (MINUS, MINUS)): base.top,
        (2, (PLUS, MINUS)): base.bottom,
        (1, (MINUS, PLUS)): upper["left"],
        (1, (PLUS, PLUS)): upper["right"],
        (2, (MINUS, PLUS)): upper["top"],
        (2, (PLUS, PLUS)): upper["bottom"],
        **{(3, key): edge for key, edge in rising.items()},
    }


def _base_vertices(C: FiniteCategory, base: SquareShell) -> dict[tuple[str, str], ObjId]:
    return {
        (MINUS, MINUS): C.source(base.top),
        (MINUS, PLUS): C.target(base.top),
        (PLUS, MINUS): C.target(base.left),
        (PLUS, PLUS): C.target(base.bottom),
    }


def iter_cubes(C: FiniteCategory) -> Iterator[CubeShell[MorId]]:
    """Every cube shell, built from its ∂⁻₃ face, rising edges and ∂⁺₃ face."""
    corners = list(itertools.product(SIGNS, repeat=2))
    for base in iter_squares(C):
        low = _base_vertices(C, base)
        for rising_edges in itertools.product(*(C.out_of(low[c]) for c in corners)):
            rising = dict(zip(corners, rising_edges))
            high = {c: C.target(e) for c, e in rising.items()}
            for top, bottom, left, right in itertools.product(
                C.hom(high[(MINUS, MINUS)], high[(MINUS, PLUS)]),
                C.hom(high[(PLUS, MINUS)], high[(PLUS, PLUS)]),
                C.hom(high[(MINUS, MINUS)], high[(PLUS, MINUS)]),
                C.hom(high[(MINUS, PLUS)], high[(PLUS, PLUS)]),
            ):
                upper = {"top": top, "bottom": bottom, "left": left, "right": right}
                yield make_cube(C, _cube_from_parts(base, rising, upper))


def random_cube(C: FiniteCategory, rng: random.Random) -> Optional[CubeShell[MorId]]:
    base = random_square(C, rng)
    if base is None:
        return None
    low = _base_vertices(C, base)
    rising = {c: rng.choice(C.out_of(v)) for c, v in low.items()}
    high = {c: C.target(e) for c, e in rising.items()}
    options = {
        "top": C.hom(high[(MINUS, MINUS)], high[(MINUS, PLUS)]),
        "bottom": C.hom(high[(PLUS, MINUS)], high[(PLUS, PLUS)]),
        "left": C.hom(high[(MINUS, MINUS)], high[(PLUS, MINUS)]),
        "right": C.hom(high[(MINUS, PLUS)], high[(PLUS, PLUS)]),
    }
    if not all(options.values()):
        return None
    upper = {name: rng.choice(choices) for name, choices in options.items()}
    return make_cube(C, _cube_from_parts(base, rising, upper))
