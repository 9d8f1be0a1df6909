"""Actions of a monoid on a group by endomorphisms, and the named presets.

``left[x][g]`` is ``λ(x, g)`` and ``right[g][y]`` is ``ρ(g, y)``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Optional

from core.errors import ConstructionError
from core.reports import ValidationReport
from constructions.tables import GroupTable, MonoidTable

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ActionTables:
    left: tuple[tuple[int, ...], ...]
    right: tuple[tuple[int, ...], ...]


def check_actions(M: MonoidTable, G: GroupTable, actions: ActionTables) -> ValidationReport:
    """Unit, associativity, endomorphism and compatibility laws for ``λ`` and ``ρ``."""
    report = ValidationReport()
    lam, rho = actions.left, actions.right
    if len(lam) != M.size or any(len(row) != G.size for row in lam):
        report.add("shape", ("left",), f"left action must be {M.size} x {G.size}")
    if len(rho) != G.size or any(len(row) != M.size for row in rho):
        report.add("shape", ("right",), f"right action must be {G.size} x {M.size}")
    if not report.ok:
        return report

    for g in range(G.size):
        if lam[M.unit][g] != g:
            report.add("left-unit-action", (g,))
        if rho[g][M.unit] != g:
            report.add("right-unit-action", (g,))
    for x in range(M.size):
        for y in range(M.size):
            xy = M.mul(x, y)
            for g in range(G.size):
                report.checked += 1
                if lam[xy][g] != lam[x][lam[y][g]]:
                    report.add("left-action-associativity", (x, y, g))
                if rho[g][xy] != rho[rho[g][x]][y]:
                    report.add("right-action-associativity", (g, x, y))
                if lam[x][rho[g][y]] != rho[lam[x][g]][y]:
                    report.add("bimodule", (x, g, y))
        for g in range(G.size):
            for h in range(G.size):
                gh = G.mul(g, h)
                if lam[x][gh] != G.mul(lam[x][g], lam[x][h]):
                    report.add("left-endomorphism", (x, g, h))
                if rho[gh][x] != G.mul(rho[g][x], rho[h][x]):
                    report.add("right-endomorphism", (g, h, x))
    return report


def trivial_action(M: MonoidTable, G: GroupTable) -> ActionTables:
    return ActionTables(
        tuple(tuple(range(G.size)) for _ in range(M.size)),
        tuple(tuple(g for _ in range(M.size)) for g in range(G.size)),
    )


def _nonunit(M: MonoidTable) -> int:
    if M.size != 2:
        raise ConstructionError("two-element-monoid", (M.size,), f"action presets need a two-element monoid, got {M.size}")
    return 1 - M.unit


def endomorphism_action(
    M: MonoidTable,
    G: GroupTable,
    phi: tuple[int, ...],
    *,
    left: bool = True,
    right: bool = True,
) -> ActionTables:
    """Let the non-unit element of a two-element monoid act through ``phi`` on the chosen sides.

    The tables are not checked here; ``bundle_of_groups`` refuses them if a law fails.
    """
    m = _nonunit(M)
    lam = [list(range(G.size)) for _ in range(M.size)]
    rho = [[g for _ in range(M.size)] for g in range(G.size)]
    for g in range(G.size):
        if left:
            lam[m][g] = phi[g]
        if right:
            rho[g][m] = phi[g]
    return ActionTables(tuple(map(tuple, lam)), tuple(map(tuple, rho)))


def inversion(G: GroupTable) -> tuple[int, ...]:
    """``g ↦ g⁻¹``; an endomorphism exactly when ``G`` is abelian."""
    return tuple(G.inverse(g) for g in range(G.size))


def power_map(G: GroupTable, k: int) -> tuple[int, ...]:
    return tuple(G.power(g, k) for g in range(G.size))


def sign_retraction(G: GroupTable) -> tuple[int, ...]:
    """Idempotent endomorphism killing the subgroup generated by squares.

    Requires that subgroup to have index two and an involution outside it
    (S₃ qualifies: even permutations go to 1, odd ones to the first
    transposition in element order).
    """
    subgroup = {G.mul(g, g) for g in range(G.size)} | {G.unit}
    while True:
        grown = {G.mul(g, h) for g in subgroup for h in subgroup} - subgroup
        if not grown:
            break
        subgroup |= grown
    if 2 * len(subgroup) != G.size:
        raise ConstructionError("sign-retraction", (len(subgroup), G.size), "square subgroup does not have index two")
    involution: Optional[int] = next(
        (g for g in range(G.size) if g not in subgroup and G.mul(g, g) == G.unit), None
    )
    if involution is None:
        raise ConstructionError("sign-retraction", (), "no involution outside the square subgroup")
    return tuple(G.unit if g in subgroup else involution for g in range(G.size))


ACTIONS: dict[str, Callable[[MonoidTable, GroupTable], ActionTables]] = {
    "trivial": trivial_action,
    "negation": lambda M, G: endomorphism_action(M, G, inversion(G)),
    "left-negation": lambda M, G: endomorphism_action(M, G, inversion(G), right=False),
    "retract": lambda M, G: endomorphism_action(M, G, sign_retraction(G)),
    "left-retract": lambda M, G: endomorphism_action(M, G, sign_retraction(G), right=False),
}
