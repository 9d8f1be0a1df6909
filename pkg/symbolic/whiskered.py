"""A free whiskered groupoid on named generators, for symbolic certification.

Objects are strings (the free monoid on object names, unit ``""``).  A morphism
is a reduced word whose letters are whiskered generators ``l.g.r``, together
with its endpoints.  Whiskering acts letter by letter, so every whiskering
law holds on the nose and the generic commutator formulas in
``commutator.laws`` can be evaluated on it unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass

from symbolic.words import GroupWord, reduce


@dataclass(frozen=True)
class SymbolicMorphism:
    word: GroupWord
    source: str
    target: str

    def __str__(self) -> str:
        return str(self.word)


def _split(label: str) -> tuple[str, str, str]:
    left, generator, right = label.split(".")
    return left, generator, right


def _join(left: str, generator: str, right: str) -> str:
    return f"{left}.{generator}.{right}"


class FreeWhiskered:
    unit = ""

    def generator(self, name: str, source: str, target: str) -> SymbolicMorphism:
        return SymbolicMorphism(GroupWord(((_join("", name, ""), 1),)), source, target)

    def mul(self, x: str, y: str) -> str:
        return x + y

    def source(self, a: SymbolicMorphism) -> str:
        return a.source

    def target(self, a: SymbolicMorphism) -> str:
        return a.target

    def identity(self, x: str) -> SymbolicMorphism:
        return SymbolicMorphism(GroupWord(), x, x)

    def compose(self, a: SymbolicMorphism, b: SymbolicMorphism) -> SymbolicMorphism:
        return SymbolicMorphism(reduce(GroupWord(a.word.letters + b.word.letters)), a.source, b.target)

    def inverse(self, a: SymbolicMorphism) -> SymbolicMorphism:
        return SymbolicMorphism(a.word.inverse(), a.target, a.source)

    def lw(self, x: str, a: SymbolicMorphism) -> SymbolicMorphism:
        letters = []
        for label, e in a.word.letters:
            left, generator, right = _split(label)
            letters.append((_join(x + left, generator, right), e))
        return SymbolicMorphism(GroupWord(tuple(letters)), x + a.source, x + a.target)

    def rw(self, a: SymbolicMorphism, y: str) -> SymbolicMorphism:
        letters = []
        for label, e in a.word.letters:
            left, generator, right = _split(label)
            letters.append((_join(left, generator, right + y), e))
        return SymbolicMorphism(GroupWord(tuple(letters)), a.source + y, a.target + y)


FREE_WHISKERED = FreeWhiskered()
