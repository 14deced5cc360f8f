"""Finite words over the alphabet {1, ..., k} and the orders used on them.

Two comparisons coexist:

* :func:`word_compare` orders *finite words*: lexicographic, except that a
  proper initial subword is *greater* than any of its extensions.  This makes
  the set of finite words totally ordered and is what :class:`Word`'s rich
  comparison operators use.
* Equal-length and sequence-prefix comparisons are plain lexicographic;
  these appear in maximality tests and in :func:`sup_orbit_prefix`.

Letters are stored as ints so alphabets with k > 9 behave like any other.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence


class AlphabetMismatch(ValueError):
    """Two words (or a word and a substitution) live over different alphabets."""


def check_alphabet(k: int) -> int:
    if not isinstance(k, int) or k < 2:
        raise ValueError(f"alphabet size must be an integer >= 2, got {k!r}")
    return k


@functools.total_ordering
@dataclass(frozen=True)
class Word:
    """A non-empty finite word with letters in ``1..k``."""

    letters: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        check_alphabet(self.k)
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        if not letters:
            raise ValueError("words are non-empty")
        for a in letters:
            if not 1 <= a <= self.k:
                raise ValueError(f"letter {a} outside alphabet 1..{self.k}")

    @classmethod
    def parse(cls, text: str, k: int) -> "Word":
        """Accepts ``"422234141"`` (k <= 9) or ``"10,1,1,3"``."""
        text = text.strip()
        if "," in text:
            letters = tuple(int(t) for t in text.split(","))
        else:
            if not text.isdigit():
                raise ValueError(f"cannot parse word {text!r}")
            if k > 9:
                raise ValueError("words over more than 9 letters must be comma separated")
            letters = tuple(int(c) for c in text)
        return cls(letters, k)

    @classmethod
    def constant(cls, letter: int, length: int, k: int) -> "Word":
        return cls((letter,) * length, k)

    def __str__(self) -> str:
        if self.k <= 9:
            return "".join(map(str, self.letters))
        return ",".join(map(str, self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return Word(self.letters[index], self.k)
        return self.letters[index]

    def __add__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        _same_alphabet(self, other)
        return Word(self.letters + other.letters, self.k)

    def __mul__(self, power: int) -> "Word":
        if power < 1:
            raise ValueError("word powers must be >= 1")
        return Word(self.letters * power, self.k)

    def __lt__(self, other: "Word") -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return word_compare(self, other) < 0

    @cached_property
    def counts(self) -> tuple[int, ...]:
        """``counts[i-1]`` is the number of occurrences of letter ``i``."""
        c = [0] * self.k
        for a in self.letters:
            c[a - 1] += 1
        return tuple(c)

    def rotations(self) -> Iterable["Word"]:
        n = len(self.letters)
        for i in range(n):
            yield Word(self.letters[i:] + self.letters[:i], self.k)


def _same_alphabet(v: Word, w: Word) -> None:
    if v.k != w.k:
        raise AlphabetMismatch(f"alphabets differ: k={v.k} vs k={w.k}")


def word_compare(v: Word, w: Word) -> int:
    """Return -1, 0 or 1 as ``v`` is less than, equal to, or greater than ``w``.

    Lexicographic, except that a proper initial subword is the greater word:
    ``31 > 311``.
    """
    _same_alphabet(v, w)
    a, b = v.letters, w.letters
    for x, y in zip(a, b):
        if x != y:
            return -1 if x < y else 1
    if len(a) == len(b):
        return 0
    return 1 if len(a) < len(b) else -1


def is_maximal_by_rotations(letters: Sequence[int]) -> bool:
    """Quadratic reference check: the word is >= every cyclic rotation."""
    t = tuple(letters)
    return all(t >= t[i:] + t[:i] for i in range(1, len(t)))


def _prenecklace_period(letters: Sequence[int]) -> int:
    """Linear scan for words whose suffixes never exceed the prefix.

    Returns the period ``p`` of the longest such prefix structure, or 0 as
    soon as some suffix is found to beat the prefix of the same length.
    """
    p = 1
    for i in range(1, len(letters)):
        a, b = letters[i], letters[i - p]
        if a > b:
            return 0
        if a < b:
            p = i + 1
    return p


def is_maximal_word(w: Word, method: str = "linear") -> bool:
    """True iff ``w`` is at least as large as each of its cyclic rotations.

    ``method="rotations"`` runs the quadratic all-rotations comparison;
    the default runs a single linear scan (Duval-style necklace test with the
    letter order reversed).
    """
    if method == "rotations":
        return is_maximal_by_rotations(w.letters)
    if method != "linear":
        raise ValueError(f"unknown method {method!r}")
    p = _prenecklace_period(w.letters)
    return p > 0 and len(w.letters) % p == 0


def is_maximal_prefix_consistent(w: Word | Sequence[int]) -> bool:
    """No suffix of the prefix ``w`` is greater than ``w``'s start of equal length.

    A False result certifies that no infinite extension of ``w`` is maximal.
    """
    letters = w.letters if isinstance(w, Word) else tuple(w)
    return _prenecklace_period(letters) > 0


def rho(w: Word) -> tuple[Fraction, ...]:
    """Exact letter proportions; may lie on the boundary of the simplex."""
    n = len(w)
    return tuple(Fraction(c, n) for c in w.counts)


def sup_orbit_prefix(w: Word | Sequence[int], R: int, k: int | None = None) -> Word:
    """Largest length-``R`` window of ``w`` starting at some suffix.

    ``w`` is read as the initial segment of an infinite word; only suffixes
    with at least ``R`` letters left are examined.
    """
    if isinstance(w, Word):
        letters, k = w.letters, w.k
    else:
        letters = tuple(w)
        if k is None:
            raise ValueError("alphabet size needed for raw letter sequences")
    if R < 1:
        raise ValueError("R must be >= 1")
    if R > len(letters):
        raise ValueError(f"window R={R} exceeds the available {len(letters)} letters")
    best = max(letters[i:i + R] for i in range(len(letters) - R + 1))
    return Word(best, k)


def reverse_alphabet(w: Word) -> Word:
    """Relabel ``i -> k+1-i``; maps maximal words onto powers of Lyndon words."""
    return Word(tuple(w.k + 1 - a for a in w.letters), w.k)


def run_length_blocks(w: Word) -> str:
    """Compact notation: split before each occurrence of the top letter ``k``
    and collapse repeated blocks, e.g. ``31 311^10 312^3``."""
    blocks: list[tuple[int, ...]] = []
    current: list[int] = []
    for a in w.letters:
        if a == w.k and current:
            blocks.append(tuple(current))
            current = []
        current.append(a)
    blocks.append(tuple(current))

    sep = "" if w.k <= 9 else ","
    parts = []
    i = 0
    while i < len(blocks):
        j = i
        while j + 1 < len(blocks) and blocks[j + 1] == blocks[i]:
            j += 1
        text = sep.join(map(str, blocks[i]))
        if sep and len(blocks[i]) > 1:
            text = f"({text})"
        count = j - i + 1
        parts.append(text if count == 1 else f"{text}^{count}")
        i = j + 1
    return " ".join(parts)
