"""Multiplication tables of small monoids and groups.

Elements are ``0..size-1`` with ``0`` the unit in every builder here; products
are read left to right, ``table[x][y] = xy``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from core.errors import ConstructionError
from core.reports import ValidationReport


@dataclass(frozen=True)
class MonoidTable:
    size: int
    table: tuple[tuple[int, ...], ...]
    unit: int = 0
    labels: tuple[str, ...] = ()

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels else str(x)

    @property
    def is_commutative(self) -> bool:
        return all(self.table[x][y] == self.table[y][x] for x in range(self.size) for y in range(x))


@dataclass(frozen=True)
class GroupTable(MonoidTable):
    inverses: tuple[int, ...] = ()

    def inverse(self, g: int) -> int:
        return self.inverses[g]

    def power(self, g: int, k: int) -> int:
        result = self.unit
        for _ in range(k):
            result = self.mul(result, g)
        return result


def validate_monoid(M: MonoidTable) -> ValidationReport:
    report = ValidationReport()
    n = M.size
    if len(M.table) != n or any(len(row) != n for row in M.table):
        report.add("shape", ("table",), f"table must be {n} x {n}")
        return report
    if not 0 <= M.unit < n:
        report.add("shape", ("unit", M.unit))
        return report
    for x in range(n):
        if M.mul(M.unit, x) != x or M.mul(x, M.unit) != x:
            report.add("monoid-unit", (x,))
        for y in range(n):
            for z in range(n):
                report.checked += 1
                if M.mul(M.mul(x, y), z) != M.mul(x, M.mul(y, z)):
                    report.add("monoid-associativity", (x, y, z))
    return report


def validate_group(G: GroupTable) -> ValidationReport:
    report = validate_monoid(G)
    if len(G.inverses) != G.size:
        report.add("shape", ("inverses",), f"expected {G.size} inverses")
        return report
    for g in range(G.size):
        h = G.inverse(g)
        if G.mul(g, h) != G.unit or G.mul(h, g) != G.unit:
            report.add("group-inverse", (g, h))
    return report


def require_valid(report: ValidationReport, what: str) -> None:
    if not report.ok:
        first = report.violations[0]
        raise ConstructionError(first.law, first.witness, f"{what}: law {first.law!r} fails at {first.witness}")


def _group(table: list[list[int]], labels: list[str]) -> GroupTable:
    n = len(table)
    inverses = tuple(next(h for h in range(n) if table[g][h] == 0) for g in range(n))
    return GroupTable(n, tuple(tuple(row) for row in table), 0, tuple(labels), inverses)


# ── Groups ────────────────────────────────────────────────────────────────

def trivial_group() -> GroupTable:
    return _group([[0]], ["1"])


def cyclic_group(n: int, generator: str = "g") -> GroupTable:
    labels = ["1", generator] + [f"{generator}^{k}" for k in range(2, n)]
    return _group([[(i + j) % n for j in range(n)] for i in range(n)], labels[:n])


def klein_group() -> GroupTable:
    return _group([[i ^ j for j in range(4)] for i in range(4)], ["1", "a", "b", "ab"])


def _cycle_label(p: tuple[int, ...]) -> str:
    seen: set[int] = set()
    cycles = []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cycle, i = [], start
        while i not in seen:
            seen.add(i)
            cycle.append(str(i + 1))
            i = p[i]
        cycles.append("(" + "".join(cycle) + ")")
    return "".join(cycles) or "()"


def symmetric_group(n: int = 3) -> GroupTable:
    """Permutations of ``0..n-1`` in cycle notation, composed left to right: ``(pq)(i) = q(p(i))``."""
    perms = list(itertools.permutations(range(n)))
    index = {p: k for k, p in enumerate(perms)}
    table = [[index[tuple(q[p[i]] for i in range(n))] for q in perms] for p in perms]
    return _group(table, [_cycle_label(p) for p in perms])


# ── Monoids that are not groups ───────────────────────────────────────────

def trivial_monoid() -> MonoidTable:
    return MonoidTable(1, ((0,),), 0, ("1",))


def idempotent_monoid() -> MonoidTable:
    """``{1, e}`` with ``e² = e``."""
    return MonoidTable(2, ((0, 1), (1, 1)), 0, ("1", "e"))


def truncated_free_monoid(generators: tuple[str, ...] = ("s", "t"), length: int = 2) -> MonoidTable:
    """Words of length at most ``length`` plus an absorbing zero catching longer products."""
    words = [""]
    for k in range(1, length + 1):
        words += ["".join(w) for w in itertools.product(generators, repeat=k)]
    index = {w: i for i, w in enumerate(words)}
    zero = len(words)

    def mul(i: int, j: int) -> int:
        if zero in (i, j):
            return zero
        return index.get(words[i] + words[j], zero)

    size = zero + 1
    table = tuple(tuple(mul(i, j) for j in range(size)) for i in range(size))
    return MonoidTable(size, table, 0, tuple(["1"] + words[1:] + ["0"]))


def product_table(M: MonoidTable, N: MonoidTable) -> MonoidTable:
    """``M × N`` with pair ``(m, n)`` at index ``m * N.size + n``."""
    size = M.size * N.size
    pairs = [(m, n) for m in range(M.size) for n in range(N.size)]
    table = tuple(
        tuple(M.mul(m1, m2) * N.size + N.mul(n1, n2) for (m2, n2) in pairs)
        for (m1, n1) in pairs
    )
    labels = tuple(f"({M.label(m)},{N.label(n)})" for m, n in pairs)
    unit = M.unit * N.size + N.unit
    if isinstance(M, GroupTable) and isinstance(N, GroupTable):
        inverses = tuple(M.inverse(m) * N.size + N.inverse(n) for m, n in pairs)
        return GroupTable(size, table, unit, labels, inverses)
    return MonoidTable(size, table, unit, labels)


GROUPS = {
    "trivial": trivial_group,
    "c2": lambda: cyclic_group(2),
    "c3": lambda: cyclic_group(3),
    "c4": lambda: cyclic_group(4),
    "klein": klein_group,
    "s3": symmetric_group,
    "s4": lambda: symmetric_group(4),
}

MONOIDS = {
    "trivial": trivial_monoid,
    "c2": lambda: cyclic_group(2, "e"),
    "c3": lambda: cyclic_group(3),
    "idempotent": idempotent_monoid,
    "s3": symmetric_group,
    "free2": truncated_free_monoid,
}
