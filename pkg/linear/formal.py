"""Exact-rational formal sums of parallel morphisms."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

from core.category import MorId, ObjId
from core.errors import CompositionError

Scalar = Union[int, Fraction]


def _canonical(terms: Iterable[tuple[MorId, Scalar]]) -> tuple[tuple[MorId, Fraction], ...]:
    acc: dict[MorId, Fraction] = {}
    for a, r in terms:
        acc[a] = acc.get(a, Fraction(0)) + Fraction(r)
    return tuple((a, acc[a]) for a in sorted(acc) if acc[a] != 0)


@dataclass(frozen=True)
class FormalSum:
    """``Σ rᵢ aᵢ`` over morphisms ``aᵢ: source → target``; terms sorted, zeros dropped."""
    source: ObjId
    target: ObjId
    terms: tuple[tuple[MorId, Fraction], ...] = ()

    @classmethod
    def of(cls, source: ObjId, target: ObjId, terms: Union[Mapping[MorId, Scalar], Iterable[tuple[MorId, Scalar]]]) -> "FormalSum":
        items = terms.items() if isinstance(terms, Mapping) else terms
        return cls(source, target, _canonical(items))

    @classmethod
    def zero(cls, source: ObjId, target: ObjId) -> "FormalSum":
        return cls(source, target, ())

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, a: MorId) -> Fraction:
        return dict(self.terms).get(a, Fraction(0))

    def support(self) -> tuple[MorId, ...]:
        return tuple(a for a, _ in self.terms)

    def _check_parallel(self, other: "FormalSum") -> None:
        if (self.source, self.target) != (other.source, other.target):
            raise CompositionError(
                f"cannot add sums {self.source}->{self.target} and {other.source}->{other.target}"
            )

    def __add__(self, other: "FormalSum") -> "FormalSum":
        self._check_parallel(other)
        return FormalSum(self.source, self.target, _canonical(self.terms + other.terms))

    def __neg__(self) -> "FormalSum":
        return FormalSum(self.source, self.target, tuple((a, -r) for a, r in self.terms))

    def __sub__(self, other: "FormalSum") -> "FormalSum":
        return self + (-other)

    def scale(self, r: Scalar) -> "FormalSum":
        return FormalSum(self.source, self.target, _canonical((a, r * c) for a, c in self.terms))

    def __rmul__(self, r: Scalar) -> "FormalSum":
        return self.scale(r)

    @property
    def is_integral(self) -> bool:
        return all(r.denominator == 1 for _, r in self.terms)
