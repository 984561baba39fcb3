"""Breadth-first enumeration of group elements as freely reduced words."""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence

from ..errors import EmptyGeneratorSet
from .moebius import MoebiusElement

logger = logging.getLogger(__name__)

_TOKEN = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)(?:\^(-?\d+))?$")


def default_labels(count: int) -> List[str]:
    if count <= 26:
        return [chr(ord("a") + i) for i in range(count)]
    return [f"g{i + 1}" for i in range(count)]


@dataclass(frozen=True)
class Word:
    """Signed 1-based generator indices: +k is generator k, -k its inverse."""

    letters: tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.letters)

    def __post_init__(self):
        for x, y in zip(self.letters, self.letters[1:]):
            if x == -y:
                raise ValueError(f"word {self.letters} is not freely reduced")

    def inverse(self) -> "Word":
        return Word(tuple(-x for x in reversed(self.letters)))

    def extend(self, letter: int) -> Optional["Word"]:
        if self.letters and self.letters[-1] == -letter:
            return None
        return Word(self.letters + (letter,))

    def __mul__(self, other: "Word") -> "Word":
        letters = list(self.letters)
        for letter in other.letters:
            if letters and letters[-1] == -letter:
                letters.pop()
            else:
                letters.append(letter)
        return Word(tuple(letters))

    def __pow__(self, n: int) -> "Word":
        base = self if n >= 0 else self.inverse()
        result = Word()
        for _ in range(abs(n)):
            result = result * base
        return result

    def evaluate(self, gens: Sequence[MoebiusElement]) -> MoebiusElement:
        if not gens:
            raise EmptyGeneratorSet("no generators")
        result = MoebiusElement.identity(gens[0].ring)
        for letter in self.letters:
            g = gens[abs(letter) - 1]
            result = result * (g if letter > 0 else g.inverse())
        return result

    def format(self, labels: Optional[Sequence[str]] = None) -> str:
        """Run-length form such as ``T^4 S``; the empty word prints as ``1``."""
        if not self.letters:
            return "1"
        labels = labels or default_labels(max(abs(x) for x in self.letters))
        parts = []
        run_letter, run = self.letters[0], 0
        for letter in self.letters + (0,):
            if letter == run_letter:
                run += 1
                continue
            label = labels[abs(run_letter) - 1]
            power = run if run_letter > 0 else -run
            parts.append(label if power == 1 else f"{label}^{power}")
            run_letter, run = letter, 1
        return " ".join(parts)

    @classmethod
    def parse(cls, text: str, labels: Sequence[str]) -> "Word":
        letters: list[int] = []
        for token in text.split():
            if token == "1":
                continue
            match = _TOKEN.match(token)
            if not match or match.group(1) not in labels:
                raise ValueError(f"cannot parse word token {token!r}")
            index = list(labels).index(match.group(1)) + 1
            power = int(match.group(2) or 1)
            letter = index if power > 0 else -index
            for _ in range(abs(power)):
                if letters and letters[-1] == -letter:
                    letters.pop()
                else:
                    letters.append(letter)
        return cls(tuple(letters))

    def __str__(self) -> str:
        return self.format()


def enumerate_words(
    gens: Sequence[MoebiusElement], max_len: int, cap: int = 20000
) -> Iterator[tuple[Word, MoebiusElement]]:
    """Distinct nontrivial elements, breadth-first by word length.

    Only emitted words are extended, so every emitted word has its prefixes
    emitted before it.  Duplicates (up to sign) and the identity are skipped.
    """
    if not gens:
        raise EmptyGeneratorSet("a group needs at least one generator")
    ring = gens[0].ring
    letters = [s * (i + 1) for i in range(len(gens)) for s in (1, -1)]
    steps = {i + 1: g for i, g in enumerate(gens)}
    steps.update({-(i + 1): g.inverse() for i, g in enumerate(gens)})

    seen = {MoebiusElement.identity(ring).key()}
    frontier: list[tuple[Word, MoebiusElement]] = [(Word(), MoebiusElement.identity(ring))]
    emitted = 0
    for length in range(1, max_len + 1):
        next_frontier = []
        for word, element in frontier:
            for letter in letters:
                extended = word.extend(letter)
                if extended is None:
                    continue
                product = element * steps[letter]
                key = product.key()
                if key in seen:
                    continue
                seen.add(key)
                next_frontier.append((extended, product))
                yield extended, product
                emitted += 1
                if emitted >= cap:
                    logger.info("enumeration stopped at cap %d (length %d)", cap, length)
                    return
        logger.debug("length %d: %d new elements", length, len(next_frontier))
        if not next_frontier:
            return
        frontier = next_frontier


def count_elements(gens: Sequence[MoebiusElement], max_len: int, cap: int = 20000) -> int:
    return sum(1 for _ in enumerate_words(gens, max_len, cap))
