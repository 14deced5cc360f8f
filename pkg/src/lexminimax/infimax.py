"""Prefixes of infimax sequences and finite checks of their properties.

The infimax sequence for proportions ``α`` is the limit of the nested words
``Λ_{n_0} ∘ ... ∘ Λ_{n_r}(k)`` driven by the itinerary ``n`` of ``α``.  Only
finite prefixes are ever produced; each records the depth and itinerary
entries that determined it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from .finite import min_periodic
from .itinerary import Itinerary, ItineraryExhausted
from .simplex import RationalPoint, itinerary as point_itinerary
from .substitutions import (
    depth_for_length,
    tower_lengths,
    tower_matrix,
    tower_word,
)
from .words import Word, is_maximal_prefix_consistent, sup_orbit_prefix


@dataclass(frozen=True)
class InfimaxPrefix:
    word: Word
    depth: int
    itinerary_used: tuple[int, ...]
    exact_total_length: int
    periodic: bool = False

    def __str__(self) -> str:
        return str(self.word)


def _resolve(source: RationalPoint | Itinerary | Sequence, k: int | None) -> tuple[Itinerary, int]:
    if isinstance(source, Itinerary):
        if k is None:
            raise ValueError("alphabet size k is required with an itinerary source")
        return source, k
    point = source if isinstance(source, RationalPoint) else RationalPoint(tuple(source))
    if k is not None and k != point.k:
        raise ValueError(f"point has {point.k} entries but k={k}")
    return point_itinerary(point), point.k


def infimax_prefix(source: RationalPoint | Itinerary | Sequence, R: int, k: int | None = None) -> InfimaxPrefix:
    """First ``R`` letters of the infimax sequence of a point or itinerary.

    For a terminated itinerary the sequence is the repetition of the tower
    word.  For a bare prefix whose entries end in a run of ``Z`` zeros the
    known part fixes ``Λ_head(k^(1 + Z // (k-1)))``; asking for more raises
    :class:`ItineraryExhausted`.
    """
    if R < 1:
        raise ValueError("R must be >= 1")
    itin, k = _resolve(source, k)

    if itin.is_terminated:
        head = itin.head[: itin.terminator]
        length = tower_lengths(tower_matrix(head, k))[k - 1]
        letters = tower_word(head, k, start=[k] * R, limit=R)
        return InfimaxPrefix(Word(letters, k), len(head) - 1, head, length, periodic=True)

    if itin.kind == "prefix":
        known = itin.head
        body = len(known)
        while body > 0 and known[body - 1] == 0:
            body -= 1
        zeros = len(known) - body
        head = known[:body]
        start = [k] * (1 + zeros // (k - 1))
        m = tower_matrix(head, k)
        available = len(start) * tower_lengths(m)[k - 1]
        if available < R:
            raise ItineraryExhausted(
                f"the {len(known)} known itinerary entries fix only {available} letters; {R} requested")
        letters = tower_word(head, k, start=start, limit=R)
        return InfimaxPrefix(Word(letters, k), len(known) - 1, known, available)

    r, m = depth_for_length(itin, R, k)
    ns = itin.take(r + 1)
    letters = tower_word(ns, k, limit=R)
    return InfimaxPrefix(Word(letters, k), r, ns, tower_lengths(m)[k - 1])


@dataclass(frozen=True)
class LowerBoundVerdict:
    holds: bool
    infimax: Word
    sup: Word
    first_difference: int | None

    @property
    def equal(self) -> bool:
        return self.first_difference is None


def check_lower_bound(alpha: RationalPoint | Sequence, w: Word, R: int | None = None) -> LowerBoundVerdict:
    """Compare the infimax prefix with the best length-``R`` window of ``w``.

    ``w`` should be an initial piece of a sequence whose letter proportions
    tend to ``α``; ``R`` defaults to the period of the minimal periodic
    maximal sequence.  The infimax prefix must never exceed the window.
    """
    point = alpha if isinstance(alpha, RationalPoint) else RationalPoint(tuple(alpha))
    if R is None:
        R = len(min_periodic(point))
    if R > len(w):
        raise ValueError(f"window R={R} is longer than the supplied {len(w)} letters")
    lower = infimax_prefix(point, R).word
    upper = sup_orbit_prefix(w, R)
    diff = next((i for i, (a, b) in enumerate(zip(lower.letters, upper.letters)) if a != b), None)
    holds = diff is None or lower.letters[diff] < upper.letters[diff]
    return LowerBoundVerdict(holds, lower, upper, diff)


def default_powers(lengths: Sequence[int]) -> list[int]:
    """Least ``p_r >= 1`` with ``sum_{s<=r} p_s L_s > 2^r L_{r+1}``."""
    powers: list[int] = []
    total = 0
    for r in range(len(lengths)):
        nxt = lengths[r + 1] if r + 1 < len(lengths) else lengths[r]
        need = 2 ** r * nxt - total
        p = max(1, need // lengths[r] + 1)
        powers.append(p)
        total += p * lengths[r]
    return powers


@dataclass(frozen=True)
class ClosureWitness:
    """A maximal sequence prefix with proportions drifting towards ``α``
    that starts with a long piece of the infimax sequence."""

    word: Word
    agreement_length: int
    depth: int
    head_length: int
    block_lengths: tuple[int, ...] = ()
    powers: tuple[int, ...] = ()
    periodic: bool = False
    maximal_prefix: bool = field(default=False)


def closure_witness(
    source: RationalPoint | Itinerary | Sequence,
    R: int,
    k: int | None = None,
    blocks: int = 4,
    powers: Sequence[int] | Callable[[Sequence[int]], Sequence[int]] | None = None,
    max_length: int = 2_000_000,
) -> ClosureWitness:
    """Build ``U W_0^{p_0} W_1^{p_1} ...`` agreeing with the infimax sequence
    on ``|Λ_{n,R}(k)|`` letters.

    ``U = Λ_{n_0..n_R}(Λ_{n_{R+1}-1}(k))`` with ``R`` pushed forward until
    ``n_{R+1} > 0``; ``W_r`` is the tower word of the truncation
    ``n_0 ... n_{R+1+r}`` followed by zeros.  Rational points and itineraries
    whose tail after ``R`` is all zeros get the periodic minimax instead.
    """
    itin, k = _resolve(source, k)
    target = tower_lengths(tower_matrix(itin.take(R + 1) if itin.available(R + 1) else itin.head, k))[k - 1]

    depth = R
    periodic = False
    while True:
        if itin.is_terminated and depth + 1 >= itin.terminator:
            periodic = True
            break
        if not itin.available(depth + 2):
            raise ItineraryExhausted("no positive entry after the requested depth among known entries")
        if itin[depth + 1] > 0:
            break
        depth += 1

    if periodic:
        head = itin.head[: itin.terminator]
        period = Word(tower_word(head, k), k)
        reps = max(2, -(-target // len(period)))
        word = period * reps
        return ClosureWitness(word, len(word), depth, 0, (len(period),), (reps,), periodic=True,
                              maximal_prefix=is_maximal_prefix_consistent(word))

    ns = itin.take(depth + 2)
    u_branches = ns[:-1] + (ns[-1] - 1,)
    u = tower_word(u_branches, k, limit=max_length)
    block_words = []
    lengths = []
    for r in range(blocks):
        if not itin.available(depth + 2 + r):
            break
        branches = itin.take(depth + 2 + r)
        lengths.append(tower_lengths(tower_matrix(branches, k))[k - 1])
        block_words.append(tower_word(branches, k, limit=max_length))
    if powers is None:
        ps = default_powers(lengths)
    elif callable(powers):
        ps = list(powers(lengths))
    else:
        ps = list(powers)[: len(lengths)]

    letters = list(u)
    for b, p in zip(block_words, ps):
        for _ in range(p):
            if len(letters) >= max_length:
                break
            letters.extend(b)
    del letters[max_length:]

    word = Word(tuple(letters), k)
    try:
        reference = infimax_prefix(itin, len(word), k).word
    except ItineraryExhausted:
        reference = Word(tower_word(ns[:-1], k, limit=len(word)), k)
    agree = 0
    for a, b in zip(word.letters, reference.letters):
        if a != b:
            break
        agree += 1
    head_length = tower_lengths(tower_matrix(u_branches, k))[k - 1]
    return ClosureWitness(word, agree, depth, head_length, tuple(lengths), tuple(ps[: len(lengths)]),
                          maximal_prefix=is_maximal_prefix_consistent(word))


def almost_period_witness(source: RationalPoint | Itinerary | Sequence, target: Word | Sequence[int],
                          k: int | None = None) -> int:
    """A window length ``N`` such that every length-``N`` factor of the
    infimax sequence contains ``target`` (which must be one of its prefixes).

    ``N = 2 max_i |Λ_{n,r+k-1}(i)|`` for the least ``r`` with ``target`` a
    prefix of ``Λ_{n,r}(k)``; for a periodic sequence with period ``L`` it is
    ``2 L ceil(|target|/L)``.
    """
    itin, k = _resolve(source, k)
    letters = tuple(target.letters if isinstance(target, Word) else target)
    if not letters:
        raise ValueError("target must be non-empty")
    check = infimax_prefix(itin, len(letters), k).word
    if check.letters != letters:
        raise ValueError("target is not a prefix of the infimax sequence")

    if itin.is_terminated:
        head = itin.head[: itin.terminator]
        period = tower_lengths(tower_matrix(head, k))[k - 1]
        return 2 * period * (-(-len(letters) // period))

    r, _ = depth_for_length(itin, len(letters), k)
    r = max(r, 0)
    m = tower_matrix(itin.take(r + k), k)
    return 2 * max(tower_lengths(m))


def windows_contain(word: Word | Sequence[int], target: Sequence[int], N: int) -> bool:
    """Every length-``N`` window of ``word`` contains ``target`` as a factor."""
    letters = tuple(word.letters if isinstance(word, Word) else word)
    t = tuple(target.letters if isinstance(target, Word) else target)
    m = len(t)
    occ = [i for i in range(len(letters) - m + 1) if letters[i:i + m] == t]
    if len(letters) < N:
        return False
    j = 0
    for start in range(len(letters) - N + 1):
        while j < len(occ) and occ[j] < start:
            j += 1
        if j == len(occ) or occ[j] + m > start + N:
            return False
    return True
