"""Report types produced by validators and identity checkers.

Checkers never raise when a law fails.  A failed law is report content: a
``Violation`` in a ``ValidationReport``, or a failed ``CandidateVerdict`` in an
``IdentityResolution``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Iterable, Optional

from core.errors import CompositionError


# ── Validation ────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class Violation:
    """One failed law together with the tuple that witnesses it."""
    law: str
    witness: tuple[Any, ...]
    detail: str = ""


@dataclass
class ValidationReport:
    """Every violated law found by an exhaustive (or sampled) scan."""
    violations: list[Violation] = field(default_factory=list)
    checked: int = 0
    exhaustive: bool = True

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, law: str, witness: tuple[Any, ...], detail: str = "") -> None:
        self.violations.append(Violation(law, tuple(witness), detail))

    def extend(self, other: "ValidationReport") -> None:
        self.violations.extend(other.violations)
        self.checked += other.checked
        self.exhaustive = self.exhaustive and other.exhaustive

    def laws(self) -> set[str]:
        return {v.law for v in self.violations}

    def witnesses(self, law: str) -> list[tuple[Any, ...]]:
        return [v.witness for v in self.violations if v.law == law]


# ── Identity resolution ───────────────────────────────────────────────────

class OrderingConvention(str, Enum):
    """Which factor order of a printed product identity holds."""
    PRINTED = "printed"
    REVERSED = "reversed"
    INDISTINGUISHABLE = "indistinguishable"
    NONE = "none"


class Verdict(str, Enum):
    HOLDS = "holds"
    HOLDS_REVERSED = "holds-with-reversed-ordering"
    HOLDS_CORRECTED = "holds-with-corrected-form"
    COUNTEREXAMPLE = "counterexample"


PRINTED = "printed"
REVERSED = "reversed"


@dataclass
class CandidateVerdict:
    """Outcome of one candidate formula for an identity."""
    name: str
    formula: str
    holds: bool = True
    counterexample: Optional[tuple[Any, ...]] = None
    detail: str = ""


@dataclass
class IdentityResolution:
    """Which candidate forms of an identity hold on every checked item.

    ``ordering`` names the pair of candidates (printed order, reversed order)
    that differ only in the order of their factors; it feeds the global
    convention of a report.
    """
    identity: str
    candidates: dict[str, CandidateVerdict]
    checked: int = 0
    exhaustive: bool = True
    ordering: Optional[tuple[str, str]] = None

    @classmethod
    def start(
        cls,
        identity: str,
        formulas: dict[str, str],
        ordering: Optional[tuple[str, str]] = (PRINTED, REVERSED),
    ) -> "IdentityResolution":
        return cls(
            identity=identity,
            candidates={name: CandidateVerdict(name, formula) for name, formula in formulas.items()},
            ordering=ordering,
        )

    def observe(self, name: str, ok: bool, witness: tuple[Any, ...], detail: str = "") -> None:
        verdict = self.candidates[name]
        if not ok and verdict.holds:
            verdict.holds = False
            verdict.counterexample = tuple(witness)
            verdict.detail = detail

    def compare(self, name: str, sides: Callable[[], tuple[Any, Any]], witness: tuple[Any, ...]) -> bool:
        """Evaluate ``sides()`` and record whether its two values agree.

        A candidate whose composites are undefined fails with an ``ill-typed``
        detail instead of raising.
        """
        try:
            lhs, rhs = sides()
        except CompositionError as exc:
            self.observe(name, False, witness, f"ill-typed: {exc}")
            return False
        ok = lhs == rhs
        self.observe(name, ok, witness, "" if ok else f"lhs={lhs!r} rhs={rhs!r}")
        return ok

    def absorb(self, other: "IdentityResolution") -> None:
        """Fold a per-item resolution into this structure-wide one."""
        for name, verdict in other.candidates.items():
            if not verdict.holds:
                self.observe(name, False, verdict.counterexample or (), verdict.detail)
        self.checked += other.checked

    def holds(self, name: str) -> bool:
        return self.candidates[name].holds

    def holding(self) -> list[str]:
        return [name for name, v in self.candidates.items() if v.holds]

    def verdict(self) -> Verdict:
        if PRINTED in self.candidates and self.holds(PRINTED):
            return Verdict.HOLDS
        if REVERSED in self.candidates and self.holds(REVERSED):
            return Verdict.HOLDS_REVERSED
        if self.holding():
            return Verdict.HOLDS_CORRECTED
        return Verdict.COUNTEREXAMPLE

    def convention(self) -> OrderingConvention:
        if self.ordering is None:
            return OrderingConvention.INDISTINGUISHABLE
        printed, reversed_ = (self.holds(name) for name in self.ordering)
        if printed and reversed_:
            return OrderingConvention.INDISTINGUISHABLE
        if printed:
            return OrderingConvention.PRINTED
        if reversed_:
            return OrderingConvention.REVERSED
        return OrderingConvention.NONE


def resolve_convention(resolutions: Iterable[IdentityResolution]) -> OrderingConvention:
    """The single ordering that held in every ordering-sensitive resolution."""
    seen = {r.convention() for r in resolutions if r.ordering is not None}
    seen.discard(OrderingConvention.INDISTINGUISHABLE)
    if not seen:
        return OrderingConvention.INDISTINGUISHABLE
    if len(seen) == 1:
        return seen.pop()
    return OrderingConvention.NONE
