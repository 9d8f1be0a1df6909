"""The free group presented as a one-object groupoid.

Feeding labelled shells through the same ``cubes.defects`` formulas used on
finite groupoids turns every identity check into word reduction.  Endpoint
typing is dropped: all letters live in one free group, and the finite-instance
scans supply the typed confirmation.
"""

from __future__ import annotations

import logging
from typing import Mapping, Optional, Union

from core.reports import IdentityResolution
from cubes.defects import cube_delta_sides, delta, verify_cube_delta, verify_delta_comp
from cubes.shells import EDGE_KEYS, MINUS, PLUS, CubeShell, EdgeKey, SquareShell
from symbolic.words import IDENTITY, GroupWord, letter, parse_word, reduce

logger = logging.getLogger(__name__)


class FreeGroup:
    """Groupoid interface over reduced ``GroupWord`` values; the only object is ``0``."""

    def source(self, w: GroupWord) -> int:
        return 0

    def target(self, w: GroupWord) -> int:
        return 0

    def identity(self, x: int = 0) -> GroupWord:
        return IDENTITY

    def compose(self, u: GroupWord, v: GroupWord) -> GroupWord:
        return reduce(GroupWord(u.letters + v.letters))

    def inverse(self, w: GroupWord) -> GroupWord:
        return w.inverse()


FREE = FreeGroup()

# Edge labels a₁..a₄, b₁..b₄, c₁..c₄: the letter is the direction, the index
# is read off the signs of the other two coordinates.
_INDEX = {(MINUS, MINUS): 3, (PLUS, MINUS): 4, (MINUS, PLUS): 2, (PLUS, PLUS): 1}
_DIRECTION_LETTER = {1: "a", 2: "b", 3: "c"}

DEFAULT_CUBE_LABELS: dict[EdgeKey, str] = {
    (d, signs): f"{_DIRECTION_LETTER[d]}{_INDEX[signs]}" for d, signs in EDGE_KEYS
}

CUBE_DELTA_WORD = parse_word("a1^-1 b2^-1 c3^-1 a3 b4 c1")


def labelled_square(left: str, bottom: str, top: str, right: str) -> SquareShell[GroupWord]:
    return SquareShell(letter(left), letter(bottom), letter(top), letter(right))


def labelled_cube(labels: Optional[Mapping[EdgeKey, str]] = None) -> CubeShell[GroupWord]:
    labels = labels or DEFAULT_CUBE_LABELS
    return CubeShell(tuple(letter(labels[key]) for key in EDGE_KEYS), tuple(0 for _ in range(8)))


def evaluate_delta_symbolically(f: Union[SquareShell[GroupWord], CubeShell[GroupWord]]) -> GroupWord:
    """δ of a labelled square, or the common value of the 3-cube identity's sides.

    For a cube whose two sides disagree, the left-hand side is returned and a
    warning is logged.
    """
    if isinstance(f, SquareShell):
        return delta(FREE, f)
    lhs, rhs = cube_delta_sides(FREE, f)
    if lhs != rhs:
        logger.warning("cube sides differ symbolically: %s vs %s", lhs, rhs)
    return lhs


def certify_delta_comp(direction: int) -> IdentityResolution:
    """Both orderings of the δ-composition identity on a generic labelled pair."""
    if direction == 1:
        alpha = labelled_square("l1", "m", "t1", "r1")
        beta = labelled_square("l2", "b2", "m", "r2")
    else:
        alpha = labelled_square("l1", "b1", "t1", "m")
        beta = labelled_square("m", "b2", "t2", "r2")
    resolution = verify_delta_comp(FREE, alpha, beta, direction)
    resolution.identity = f"{resolution.identity}-symbolic"
    return resolution


def certify_cube_delta() -> tuple[IdentityResolution, GroupWord]:
    """Both orderings of the 3-cube identity on the generic cube, with the reduced word."""
    cube = labelled_cube()
    resolution = verify_cube_delta(FREE, cube)
    resolution.identity = "cube-delta-symbolic"
    return resolution, evaluate_delta_symbolically(cube)
