"""R[C]: the linearization of a whiskered category over the rationals.

Hom-sets become free modules on the base hom-sets; composition and both
whisker actions are extended bilinearly.  ``LinearCategory`` exposes
``source``, ``target`` and ``compose`` on formal sums, so the shell helpers in
``cubes.shells`` work on linear squares unchanged.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from core.category import MorId, ObjId
from core.errors import BoundaryError, CompositionError
from cubes.shells import CubeShell, SquareShell, make_cube, make_square
from linear.formal import FormalSum
from whisker.whiskering import WhiskeredCategory

logger = logging.getLogger(__name__)

Linear = Union[FormalSum, MorId]


@dataclass(frozen=True)
class LinearCategory:
    base: WhiskeredCategory

    # ── basis ─────────────────────────────────────────────────────────────

    def basis(self, a: MorId) -> FormalSum:
        C = self.base.base
        return FormalSum(C.source(a), C.target(a), ((a, Fraction(1)),))

    def lift(self, f: Linear) -> FormalSum:
        return f if isinstance(f, FormalSum) else self.basis(f)

    def identity(self, x: ObjId) -> FormalSum:
        return self.basis(self.base.identity(x))

    def zero(self, x: ObjId, y: ObjId) -> FormalSum:
        return FormalSum.zero(x, y)

    def source(self, f: FormalSum) -> ObjId:
        return f.source

    def target(self, f: FormalSum) -> ObjId:
        return f.target

    # ── bilinear structure ────────────────────────────────────────────────

    def compose(self, f: Linear, g: Linear) -> FormalSum:
        f, g = self.lift(f), self.lift(g)
        if f.target != g.source:
            raise CompositionError(
                f"cannot compose sum {f.source}->{f.target} with sum {g.source}->{g.target}"
            )
        C = self.base.base
        return FormalSum.of(
            f.source, g.target,
            ((C.compose(a, b), r * s) for a, r in f.terms for b, s in g.terms),
        )

    def lw(self, x: ObjId, f: Linear) -> FormalSum:
        """``x.f``"""
        f = self.lift(f)
        W = self.base
        return FormalSum.of(W.mul(x, f.source), W.mul(x, f.target), ((W.lw(x, a), r) for a, r in f.terms))

    def rw(self, f: Linear, y: ObjId) -> FormalSum:
        """``f.y``"""
        f = self.lift(f)
        W = self.base
        return FormalSum.of(W.mul(f.source, y), W.mul(f.target, y), ((W.rw(a, y), r) for a, r in f.terms))


def linearize(W: WhiskeredCategory) -> LinearCategory:
    return LinearCategory(W)


# ── Linear squares ────────────────────────────────────────────────────────

def linear_square(A: LinearCategory, left: Linear, bottom: Linear, top: Linear, right: Linear) -> SquareShell[FormalSum]:
    return make_square(A, A.lift(left), A.lift(bottom), A.lift(top), A.lift(right))


def linearize_square(A: LinearCategory, f: SquareShell[MorId]) -> SquareShell[FormalSum]:
    return SquareShell(*(A.basis(e) for e in f.edges()))


def linearize_cube(A: LinearCategory, f: CubeShell[MorId]) -> CubeShell[FormalSum]:
    return CubeShell(tuple(A.basis(e) for e in f.edges), f.vertices)


def Delta(A: LinearCategory, f: SquareShell[FormalSum]) -> FormalSum:
    """``Δf = −left·bottom + top·right``, a sum ``sf → tf``."""
    return A.compose(f.top, f.right) - A.compose(f.left, f.bottom)


def add1(alpha: SquareShell[FormalSum], beta: SquareShell[FormalSum]) -> SquareShell[FormalSum]:
    """``α +₁ β``: shared left and right edges, tops and bottoms added."""
    if alpha.left != beta.left or alpha.right != beta.right:
        raise BoundaryError("+₁ needs equal left and right edges")
    return SquareShell(alpha.left, alpha.bottom + beta.bottom, alpha.top + beta.top, alpha.right)


def add2(alpha: SquareShell[FormalSum], gamma: SquareShell[FormalSum]) -> SquareShell[FormalSum]:
    """``α +₂ γ``: shared top and bottom edges, lefts and rights added."""
    if alpha.top != gamma.top or alpha.bottom != gamma.bottom:
        raise BoundaryError("+₂ needs equal top and bottom edges")
    return SquareShell(alpha.left + gamma.left, alpha.bottom, alpha.top, alpha.right + gamma.right)


# ── Star, bracket and the Leibniz defect ──────────────────────────────────

def linear_star(A: LinearCategory, a: Linear, b: Linear) -> SquareShell[FormalSum]:
    """``a*b = quadruple(a.u, y.b, x.b, a.v)`` with whiskers extended bilinearly."""
    a, b = A.lift(a), A.lift(b)
    return make_square(A, A.rw(a, b.source), A.lw(a.target, b), A.lw(a.source, b), A.rw(a, b.target))


def bracket(A: LinearCategory, a: Linear, b: Linear) -> FormalSum:
    """``[a, b] = Δ(a*b) = −(a.u)(y.b) + (x.b)(a.v)``"""
    return Delta(A, linear_star(A, a, b))


def leibniz_defect_square(A: LinearCategory, a: Linear, b: Linear, c: Linear) -> SquareShell[FormalSum]:
    """``quadruple([a, u.c], y.b.w, x.b.z, [a, v.c])``"""
    a, b, c = A.lift(a), A.lift(b), A.lift(c)
    x, y = a.source, a.target
    u, v = b.source, b.target
    z, w = c.source, c.target
    return make_square(
        A,
        bracket(A, a, A.lw(u, c)),
        A.rw(A.lw(y, b), w),
        A.rw(A.lw(x, b), z),
        bracket(A, a, A.lw(v, c)),
    )


@dataclass(frozen=True)
class LeibnizDefect:
    lhs: FormalSum
    rhs: FormalSum

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def leibniz_defect(A: LinearCategory, a: Linear, b: Linear, c: Linear) -> LeibnizDefect:
    """``[[a,b],c] − [a,[b,c]]`` against ``Δ quadruple([a,u.c], y.b.w, x.b.z, [a,v.c])``."""
    lhs = bracket(A, bracket(A, a, b), c) - bracket(A, a, bracket(A, b, c))
    return LeibnizDefect(lhs, Delta(A, leibniz_defect_square(A, a, b, c)))


def leibniz_identity(A: LinearCategory, a: Linear, b: Linear, c: Linear) -> tuple[FormalSum, FormalSum]:
    """Both sides of the plain Leibniz identity ``[[a,b],c] = [a,[b,c]] + [[a,c],b]``.

    Raises ``CompositionError`` when the right-hand summands are not parallel.
    """
    lhs = bracket(A, bracket(A, a, b), c)
    return lhs, bracket(A, a, bracket(A, b, c)) + bracket(A, bracket(A, a, c), b)


def linear_cube(A: LinearCategory, edges) -> CubeShell[FormalSum]:
    return make_cube(A, edges)
