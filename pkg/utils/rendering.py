"""Human-readable renderings of morphisms, formal sums and report witnesses."""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Callable

from linear.formal import FormalSum

MINUS_SIGN = "−"


def _coefficient(r: Fraction) -> str:
    text = str(abs(r))
    return f"{MINUS_SIGN}{text}" if r < 0 else text


def render_sum(f: FormalSum, label: Callable[[int], str] = str) -> str:
    """``−1·st + 1·ts``; terms in morphism index order, ``0`` for the empty sum."""
    if f.is_zero:
        return "0"
    return " + ".join(f"{_coefficient(r)}·{label(a)}" for a, r in f.terms)


def render_witness(witness: Any) -> str:
    """Flatten a witness tuple into a stable one-line string."""
    if isinstance(witness, tuple):
        return "(" + ", ".join(render_witness(part) for part in witness) + ")"
    if isinstance(witness, FormalSum):
        return render_sum(witness)
    return str(witness)
