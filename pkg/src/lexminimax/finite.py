"""Smallest maximal word with prescribed letter counts.

The integer step ``K̂_n`` subtracts ``n`` copies of the last count from the
first and rotates::

    K̂_n(a) = (a_2, ..., a_{k-1}, a_1 - n a_k, (n+1) a_k - a_1),  n = floor(a_1/a_k)

Repeating it until only the last count is non-zero and then unwinding the
recorded ``Λ_n`` from the word ``k^c`` yields the minimax word.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .simplex import RationalPoint, primitive_counts
from .substitutions import tower_word
from .words import Word, check_alphabet, is_maximal_by_rotations

DEFAULT_WORD_CAP = 5_000_000
BRUTE_FORCE_CAP = 14


class CapExceeded(ValueError):
    """The requested computation is larger than the configured cap."""


def check_counts(counts: Sequence[int]) -> tuple[int, ...]:
    counts = tuple(int(c) for c in counts)
    check_alphabet(len(counts))
    if any(c < 0 for c in counts):
        raise ValueError("counts must be non-negative")
    if counts[-1] <= 0:
        raise ValueError("the last count must be positive")
    return counts


def khat_branch(counts: Sequence[int]) -> int:
    counts = check_counts(counts)
    return counts[0] // counts[-1]


def khat_step(counts: Sequence[int]) -> tuple[int, ...]:
    counts = check_counts(counts)
    a1, ak = counts[0], counts[-1]
    n = a1 // ak
    return counts[1:-1] + (a1 - n * ak, (n + 1) * ak - a1)


def khat_step_inverse(n: int, counts: Sequence[int]) -> tuple[int, ...]:
    """Abelianization of ``Λ_n``: counts of ``Λ_n(W)`` from counts of ``W``."""
    counts = check_counts(counts)
    k = len(counts)
    return ((n + 1) * counts[k - 2] + n * counts[k - 1],) + counts[: k - 2] + (counts[k - 2] + counts[k - 1],)


@dataclass(frozen=True)
class MinimaxTower:
    """The minimax word kept as ``Λ_{n_0} ∘ ... ∘ Λ_{n_{r-1}}(k^c)``."""

    k: int
    counts: tuple[int, ...]
    branches: tuple[int, ...]
    base_power: int

    @property
    def length(self) -> int:
        return sum(self.counts)

    @property
    def chain(self) -> list[tuple[int, ...]]:
        """Intermediate count vectors, ending at ``(0, ..., 0, c)``."""
        out = [self.counts]
        for _ in self.branches:
            out.append(khat_step(out[-1]))
        return out

    def period(self, cap: int = DEFAULT_WORD_CAP) -> Word:
        """``Λ_{n_0} ∘ ... ∘ Λ_{n_{r-1}}(k)``: the minimax word of the primitive counts."""
        unit = self.length // self.base_power
        if unit > cap:
            raise CapExceeded(f"period length {unit} exceeds cap {cap}")
        return Word(tower_word(self.branches, self.k), self.k)

    def prefix(self, R: int) -> Word:
        """First ``R`` letters (at most the full word) without building the rest."""
        R = min(R, self.length)
        letters = tower_word(self.branches, self.k, start=[self.k] * min(self.base_power, R), limit=R)
        return Word(letters, self.k)

    def word(self, cap: int = DEFAULT_WORD_CAP) -> Word:
        if self.length > cap:
            raise CapExceeded(f"word length {self.length} exceeds cap {cap}")
        return self.prefix(self.length)


def minimax_tower(counts: Sequence[int]) -> MinimaxTower:
    """Run the division-remainder algorithm, iteratively."""
    counts = check_counts(counts)
    v = counts
    branches: list[int] = []
    while any(v[:-1]):
        branches.append(v[0] // v[-1])
        v = khat_step(v)
    return MinimaxTower(len(counts), counts, tuple(branches), v[-1])


def minimax_word(counts: Sequence[int], cap: int = DEFAULT_WORD_CAP) -> Word:
    """The smallest maximal word with exactly ``counts[i-1]`` letters ``i``."""
    return minimax_tower(counts).word(cap)


def _arrangements(counts: list[int], k: int, n: int) -> Iterator[tuple[int, ...]]:
    """Distinct arrangements in increasing lexicographic order, pruning any
    prefix that already has a suffix beating its start."""
    prefix: list[int] = []

    def ok(prefix: list[int]) -> bool:
        m = len(prefix)
        for i in range(1, m):
            # compare the suffix starting at i with the prefix of equal length
            for j in range(m - i):
                a, b = prefix[i + j], prefix[j]
                if a != b:
                    if a > b:
                        return False
                    break
        return True

    def rec() -> Iterator[tuple[int, ...]]:
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for letter in range(1, k + 1):
            if counts[letter - 1] == 0:
                continue
            counts[letter - 1] -= 1
            prefix.append(letter)
            if ok(prefix):
                yield from rec()
            prefix.pop()
            counts[letter - 1] += 1

    yield from rec()


def brute_force_minimax(counts: Sequence[int], cap: int = BRUTE_FORCE_CAP) -> Word:
    """Enumerate arrangements, keep the maximal ones, return the least.

    Independent of the substitution machinery; only meant for small totals.
    """
    counts = check_counts(counts)
    n = sum(counts)
    if n > cap:
        raise CapExceeded(f"brute force limited to {cap} letters, got {n}")
    k = len(counts)
    best = None
    for arrangement in _arrangements(list(counts), k, n):
        if is_maximal_by_rotations(arrangement):
            if best is None or arrangement < best:
                best = arrangement
    if best is None:  # pragma: no cover - every count vector has a maximal rotation
        raise AssertionError("no maximal arrangement found")
    return Word(best, k)


def brute_force_by_rotations(counts: Sequence[int], cap: int = BRUTE_FORCE_CAP) -> Word:
    """Second oracle: the least among the maximal rotations of every arrangement."""
    counts = check_counts(counts)
    n = sum(counts)
    if n > cap:
        raise CapExceeded(f"brute force limited to {cap} letters, got {n}")
    k = len(counts)
    best = None
    for arrangement in _all_arrangements(list(counts), k, n):
        top = max(arrangement[i:] + arrangement[:i] for i in range(n))
        if best is None or top < best:
            best = top
    return Word(best, k)


def _all_arrangements(counts: list[int], k: int, n: int) -> Iterator[tuple[int, ...]]:
    prefix: list[int] = []

    def rec() -> Iterator[tuple[int, ...]]:
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for letter in range(1, k + 1):
            if counts[letter - 1]:
                counts[letter - 1] -= 1
                prefix.append(letter)
                yield from rec()
                prefix.pop()
                counts[letter - 1] += 1

    yield from rec()


def maximal_words(counts: Sequence[int]) -> list[Word]:
    """All maximal words with the given counts (small inputs only)."""
    counts = check_counts(counts)
    k, n = len(counts), sum(counts)
    return [Word(a, k) for a in _arrangements(list(counts), k, n) if is_maximal_by_rotations(a)]


def min_periodic(alpha: RationalPoint | Sequence[Fraction]) -> Word:
    """Period of the least periodic maximal sequence with proportions ``α``."""
    a = alpha if isinstance(alpha, RationalPoint) else RationalPoint(tuple(alpha))
    return minimax_word(primitive_counts(a.entries))
