"""The simplex of letter proportions and the continued-fraction map on it.

Points are exact :class:`~fractions.Fraction` vectors; nothing here touches
floating point.  The branch of ``K`` used at ``α`` is ``n = floor(α_1/α_k)``
and::

    K_n(α) = (α_2, ..., α_{k-1}, α_1 - n α_k, (n+1) α_k - α_1) / (1 - α_1)

Its inverse ``K_n^{-1}`` is the projective action of the matrix ``A(n)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .itinerary import Itinerary
from .words import check_alphabet


class DegeneratePoint(ValueError):
    """The point is not in the simplex (or lies on the removed face α_k = 0)."""


@dataclass(frozen=True)
class RationalPoint:
    """A probability vector with exact rational entries and positive last entry."""

    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        entries = tuple(Fraction(x) for x in self.entries)
        object.__setattr__(self, "entries", entries)
        check_alphabet(len(entries))
        if any(x < 0 for x in entries):
            raise DegeneratePoint("entries must be non-negative")
        if sum(entries) != 1:
            raise DegeneratePoint(f"entries must sum to 1, got {sum(entries)}")
        if entries[-1] == 0:
            raise DegeneratePoint(
                "last entry is zero: the point lies on the removed face; "
                "delete that letter and work over a smaller alphabet instead")

    @classmethod
    def from_counts(cls, counts: Sequence[int]) -> "RationalPoint":
        total = sum(counts)
        if total <= 0:
            raise DegeneratePoint("count vector must have a positive sum")
        return cls(tuple(Fraction(c, total) for c in counts))

    @classmethod
    def parse(cls, text: str) -> "RationalPoint":
        """``"24/41,3/41,14/41"``; integer count vectors like ``"24,3,14"`` are normalized."""
        parts = [Fraction(t.strip()) for t in text.split(",")]
        if all(p.denominator == 1 for p in parts) and sum(parts) != 1:
            return cls.from_counts([int(p) for p in parts])
        return cls(tuple(parts))

    @classmethod
    def vertex(cls, k: int) -> "RationalPoint":
        """``(0, ..., 0, 1)``, the fixed point of ``K``."""
        return cls((Fraction(0),) * (k - 1) + (Fraction(1),))

    @property
    def k(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return format_vector(self.entries)

    def integer_vector(self) -> tuple[int, ...]:
        """The smallest positive integer multiple."""
        return primitive_counts(self.entries)


def format_vector(v: Iterable) -> str:
    return ",".join(str(x) for x in v)


def primitive_counts(entries: Sequence[Fraction]) -> tuple[int, ...]:
    lcm = 1
    for x in entries:
        lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
    ints = [int(x * lcm) for x in entries]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    return tuple(v // g for v in ints)


def normalize(v: Sequence) -> tuple[Fraction, ...]:
    total = sum(v)
    return tuple(Fraction(x) / total for x in v)


def _as_point(alpha) -> RationalPoint:
    return alpha if isinstance(alpha, RationalPoint) else RationalPoint(tuple(alpha))


def branch_index(alpha: RationalPoint | Sequence) -> int:
    """``J(α) = floor(α_1 / α_k)``."""
    a = _as_point(alpha)
    return a[0] // a[-1]


def step(alpha: RationalPoint | Sequence) -> RationalPoint:
    """One application of ``K``."""
    a = _as_point(alpha)
    n = a[0] // a[-1]
    scale = 1 - a[0]
    if scale == 0:
        raise DegeneratePoint("α_1 = 1 leaves no mass for the remaining letters")
    out = list(a[1:-1]) + [a[0] - n * a[-1], (n + 1) * a[-1] - a[0]]
    return RationalPoint(tuple(x / scale for x in out))


def step_inverse_closure(n: int, alpha: Sequence) -> tuple[Fraction, ...]:
    """``K_n^{-1}`` extended to the closed simplex (vertices allowed)."""
    if n < 0:
        raise ValueError("branch index n must be >= 0")
    a = tuple(Fraction(x) for x in alpha)
    k = len(a)
    check_alphabet(k)
    d = (n + 1) * a[k - 2] + n * a[k - 1] + 1
    out = ((n + 1) * a[k - 2] + n * a[k - 1],) + a[: k - 2] + (a[k - 2] + a[k - 1],)
    return tuple(x / d for x in out)


def step_inverse(n: int, alpha: RationalPoint | Sequence) -> RationalPoint:
    """``K_n^{-1}``; the result lies in the branch ``Δ_n``."""
    return RationalPoint(step_inverse_closure(n, _as_point(alpha).entries))


def point_from_finite_itinerary(prefix: Sequence[int], k: int) -> RationalPoint:
    """The unique point whose itinerary is ``prefix`` followed by zeros."""
    check_alphabet(k)
    v: tuple[Fraction, ...] = RationalPoint.vertex(k).entries
    for n in reversed(tuple(prefix)):
        v = step_inverse_closure(n, v)
    return RationalPoint(v)


def itinerary(alpha: RationalPoint | Sequence, max_steps: int = 100_000) -> Itinerary:
    """Branch indices along the ``K``-orbit of a rational point.

    Rational points always reach ``(0, ..., 0, 1)``; the result is then a
    terminated itinerary.  If ``max_steps`` runs out first a bare prefix is
    returned.  The orbit is followed in integer projective coordinates, which
    is the same map as :func:`step` without the per-step normalization.
    """
    a = _as_point(alpha)
    branches, reached = integer_itinerary(primitive_counts(a.entries), max_steps)
    return Itinerary.terminated(branches) if reached else Itinerary.prefix(branches)


def integer_itinerary(counts: Sequence[int], max_steps: int = 100_000) -> tuple[tuple[int, ...], bool]:
    """Run ``K̂`` on an integer vector until only the last entry is non-zero.

    Returns the branch sequence and whether that terminal shape was reached.
    """
    v = list(counts)
    if v[-1] <= 0:
        raise DegeneratePoint("last count must be positive")
    branches: list[int] = []
    for _ in range(max_steps):
        if not any(v[:-1]):
            return tuple(branches), True
        first, last = v[0], v[-1]
        n = first // last
        branches.append(n)
        v = v[1:-1] + [first - n * last, (n + 1) * last - first]
    return tuple(branches), not any(v[:-1])


def orbit(alpha: RationalPoint | Sequence, max_steps: int = 100_000) -> list[RationalPoint]:
    """The points ``α, K(α), K²(α), ...`` up to and including ``(0,...,0,1)``."""
    a = _as_point(alpha)
    end = RationalPoint.vertex(a.k)
    out = [a]
    while out[-1] != end and len(out) <= max_steps:
        out.append(step(out[-1]))
    return out


@dataclass(frozen=True)
class ZeroComponentReport:
    """Per-letter comparison of zero entries against vanishing itinerary classes."""

    k: int
    alpha_zero: tuple[bool, ...]
    classes_vanish: tuple[bool, ...]
    decided: bool

    @property
    def consistent(self) -> bool:
        return self.alpha_zero == self.classes_vanish

    def rows(self):
        for i, (z, c) in enumerate(zip(self.alpha_zero, self.classes_vanish), start=1):
            yield i, z, c


def zero_component_profile(alpha: RationalPoint | Sequence, itin: Itinerary | None = None) -> ZeroComponentReport:
    """For each letter ``i < k``: is ``α_i = 0``, and do all ``n_r`` with
    ``r ≡ i-1 (mod k-1)`` vanish?

    With a terminated itinerary the second question is decided exactly;
    with a bare prefix only the observed entries are consulted.
    """
    a = _as_point(alpha)
    k = a.k
    if itin is None:
        itin = itinerary(a)
    observed = itin.head if not itin.is_terminated else itin.head[: itin.terminator]
    vanish = []
    for i in range(1, k):
        vanish.append(all(n == 0 for r, n in enumerate(observed) if r % (k - 1) == i - 1))
    return ZeroComponentReport(
        k=k,
        alpha_zero=tuple(x == 0 for x in a.entries[:-1]),
        classes_vanish=tuple(vanish),
        decided=itin.is_terminated,
    )


def reduce_dimension(alpha: RationalPoint | Sequence, i: int) -> RationalPoint:
    """Delete the zero entry ``α_i`` (1-based, ``i < k``)."""
    a = _as_point(alpha)
    if not 1 <= i <= a.k - 1:
        raise ValueError(f"can only delete letters 1..{a.k - 1}")
    if a.k == 2:
        raise ValueError("cannot reduce below two letters")
    if a[i - 1] != 0:
        raise ValueError(f"entry {i} is {a[i - 1]}, not zero")
    return RationalPoint(a.entries[: i - 1] + a.entries[i:])


def reduce_entries(entries: Sequence[int], i: int, k: int, offset: int = 0) -> tuple[int, ...]:
    """Drop positions ``r ≡ i-1 (mod k-1)``; ``offset`` is the index of ``entries[0]``."""
    out = []
    for r, n in enumerate(entries, start=offset):
        if r % (k - 1) == i - 1:
            if n != 0:
                raise ValueError(f"entry {r} is {n}, expected 0 at a deleted position")
            continue
        out.append(n)
    return tuple(out)


def reduce_itinerary(itin: Itinerary, i: int, k: int) -> Itinerary:
    """The itinerary of the reduced point: zeros at ``r ≡ i-1 (mod k-1)`` removed."""
    if itin.kind == "prefix":
        return Itinerary.prefix(reduce_entries(itin.head, i, k))
    if itin.kind == "terminated":
        return Itinerary.terminated(reduce_entries(itin.head, i, k))
    if itin.kind != "periodic":
        raise ValueError(f"cannot reduce a {itin.kind} itinerary")
    m = k - 1
    start = -(-len(itin.head) // m) * m
    block = len(itin.period) * m // math.gcd(len(itin.period), m)
    head = reduce_entries(itin.take(start), i, k)
    period = reduce_entries(tuple(itin[r] for r in range(start, start + block)), i, k, offset=start)
    return Itinerary.periodic(period, head)
