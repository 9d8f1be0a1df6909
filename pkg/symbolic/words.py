"""Words in a free group on string labels, and free reduction."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

Letter = tuple[str, int]

_TOKEN = re.compile(r"^(?P<label>[^\s^⁻¹]+)(?:\^(?P<exp>[+-]?1)|(?P<sup>⁻¹))?$")


@dataclass(frozen=True)
class GroupWord:
    """A (not necessarily reduced) word ``g₁^{e₁} … gₙ^{eₙ}`` with ``eᵢ = ±1``."""
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        for label, exponent in self.letters:
            if exponent not in (1, -1):
                raise ValueError(f"exponent of {label!r} must be +1 or -1, got {exponent}")

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        return reduce(GroupWord(self.letters + other.letters))

    def inverse(self) -> "GroupWord":
        return GroupWord(tuple((label, -e) for label, e in reversed(self.letters)))

    def is_reduced(self) -> bool:
        return all(
            not (a == b and e == -f)
            for (a, e), (b, f) in zip(self.letters, self.letters[1:])
        )

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(label if e == 1 else f"{label}⁻¹" for label, e in self.letters)


IDENTITY = GroupWord()


def letter(label: str, exponent: int = 1) -> GroupWord:
    return GroupWord(((label, exponent),))


def word(*parts: GroupWord) -> GroupWord:
    """Reduced concatenation."""
    return reduce(GroupWord(tuple(l for part in parts for l in part.letters)))


def reduce(w: GroupWord) -> GroupWord:
    """Freely reduce ``w`` by cancelling adjacent inverse letters."""
    stack: list[Letter] = []
    for label, exponent in w.letters:
        if stack and stack[-1] == (label, -exponent):
            stack.pop()
        else:
            stack.append((label, exponent))
    return GroupWord(tuple(stack))


def equal_in_free_group(u: GroupWord, v: GroupWord) -> bool:
    return reduce(u) == reduce(v)


def parse_word(text: str) -> GroupWord:
    """Parse whitespace-separated letters such as ``"a1^-1 b2⁻¹ c1"``; ``"1"`` is the empty word."""
    tokens = text.split()
    if tokens == ["1"]:
        return IDENTITY
    letters: list[Letter] = []
    for token in tokens:
        match = _TOKEN.match(token)
        if match is None:
            raise ValueError(f"cannot parse letter {token!r}")
        inverted = match.group("sup") or match.group("exp") == "-1"
        letters.append((match.group("label"), -1 if inverted else 1))
    return GroupWord(tuple(letters))


def from_letters(letters: Iterable[Letter]) -> GroupWord:
    return GroupWord(tuple(letters))
