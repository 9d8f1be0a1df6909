"""Whiskerings: a monoid on objects with left and right actions on morphisms.

``x.a`` is ``left[x][a]`` and ``a.y`` is ``right[a][y]``; for ``a: u → v``
the whiskers are ``x.a: xu → xv`` and ``a.y: uy → vy``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from core.category import FiniteCategory, FiniteGroupoid, MorId, ObjId
from cubes.shells import EDGE_KEYS, MINUS, PLUS, CubeShell, SquareShell, make_cube, make_square


@dataclass(frozen=True)
class Whiskering:
    monoid: tuple[tuple[ObjId, ...], ...]
    unit: ObjId
    left: tuple[tuple[MorId, ...], ...]
    right: tuple[tuple[MorId, ...], ...]


@dataclass(frozen=True)
class WhiskeredCategory:
    base: FiniteCategory
    whiskering: Whiskering

    @property
    def is_groupoid(self) -> bool:
        return isinstance(self.base, FiniteGroupoid)

    @property
    def unit(self) -> ObjId:
        return self.whiskering.unit

    def mul(self, x: ObjId, y: ObjId) -> ObjId:
        return self.whiskering.monoid[x][y]

    def lw(self, x: ObjId, a: MorId) -> MorId:
        """``x.a``"""
        return self.whiskering.left[x][a]

    def rw(self, a: MorId, y: ObjId) -> MorId:
        """``a.y``"""
        return self.whiskering.right[a][y]

    def whisker(self, x: ObjId, a: MorId, y: ObjId) -> MorId:
        """``x.a.y``"""
        return self.rw(self.lw(x, a), y)

    # Groupoid interface, delegated to the base.

    def source(self, a: MorId) -> ObjId:
        return self.base.source(a)

    def target(self, a: MorId) -> ObjId:
        return self.base.target(a)

    def compose(self, a: MorId, b: MorId) -> MorId:
        return self.base.compose(a, b)

    def identity(self, x: ObjId) -> MorId:
        return self.base.identity(x)

    def inverse(self, a: MorId) -> MorId:
        return self.base.inverse(a)


def star(W: WhiskeredCategory, a: MorId, b: MorId) -> SquareShell[MorId]:
    """``a*b = quadruple(a.u, y.b, x.b, a.v)`` for ``a: x → y``, ``b: u → v``."""
    x, y = W.source(a), W.target(a)
    u, v = W.source(b), W.target(b)
    return make_square(W, W.rw(a, u), W.lw(y, b), W.lw(x, b), W.rw(a, v))


def l_mult(W: WhiskeredCategory, a: MorId, b: MorId) -> MorId:
    """``l(a, b) = (a.u)(y.b)``"""
    return W.compose(W.rw(a, W.source(b)), W.lw(W.target(a), b))


def r_mult(W: WhiskeredCategory, a: MorId, b: MorId) -> MorId:
    """``r(a, b) = (x.b)(a.v)``"""
    return W.compose(W.lw(W.source(a), b), W.rw(a, W.target(b)))


def cube_of_three(W: WhiskeredCategory, a: MorId, b: MorId, c: MorId) -> CubeShell[MorId]:
    """The 3-cube ``a*b*c``: each edge whiskers one of ``a, b, c`` by corner objects of the others."""
    ends = [{MINUS: W.source(m), PLUS: W.target(m)} for m in (a, b, c)]
    edges: dict[Any, MorId] = {}
    for direction, (s, t) in EDGE_KEYS:
        if direction == 1:
            edges[(1, (s, t))] = W.rw(a, W.mul(ends[1][s], ends[2][t]))
        elif direction == 2:
            edges[(2, (s, t))] = W.rw(W.lw(ends[0][s], b), ends[2][t])
        else:
            edges[(3, (s, t))] = W.lw(W.mul(ends[0][s], ends[1][t]), c)
    return make_cube(W, edges)
