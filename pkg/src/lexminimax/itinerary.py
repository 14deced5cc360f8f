"""Itineraries: sequences of branch indices ``n_0 n_1 n_2 ...``.

Four shapes are supported, matching the inputs the theory speaks about:

* terminated -- a finite head followed by zeros forever (rational points);
* periodic -- an optional head followed by a repeating block;
* growth -- the minimal super-exponential sequence
  ``n_r = 2**(r+2) * prod(n_i + 2 for i < r)``, generated on demand;
* prefix -- finitely many known entries and nothing known afterwards.

Itineraries compare reverse-lexicographically (``0 > 1 > 2 > ...``) through
:func:`itinerary_compare`.
"""

from __future__ import annotations

import re
from typing import Callable, Sequence


class ItineraryExhausted(IndexError):
    """An entry beyond the known part of a finite prefix was requested."""


class Itinerary:
    """An infinite (or partially known) sequence of non-negative integers."""

    def __init__(
        self,
        head: Sequence[int] = (),
        period: Sequence[int] | None = None,
        rule: Callable[[list[int]], int] | None = None,
        *,
        kind: str = "prefix",
        quadratic_bound: int | None = None,
        depth_hint: int | None = None,
        label: str | None = None,
    ):
        head = tuple(int(n) for n in head)
        if any(n < 0 for n in head):
            raise ValueError("itinerary entries must be non-negative")
        if period is not None:
            period = tuple(int(n) for n in period)
            if not period or any(n < 0 for n in period):
                raise ValueError("a period must be a non-empty block of non-negative entries")
        self.head = head
        self.period = period
        self.rule = rule
        self.kind = kind
        self.quadratic_bound = quadratic_bound
        self.depth_hint = depth_hint
        self.label = label
        self._cache: list[int] = list(head)

    # -- constructors ---------------------------------------------------
    @classmethod
    def terminated(cls, head: Sequence[int]) -> "Itinerary":
        """``head`` followed by zeros forever."""
        return cls(head, (0,), kind="terminated")

    @classmethod
    def periodic(cls, period: Sequence[int], head: Sequence[int] = ()) -> "Itinerary":
        period = tuple(period)
        if not period:
            raise ValueError("a period must be a non-empty block")
        if all(n == 0 for n in period):
            return cls.terminated(head)
        return cls(head, period, kind="periodic")

    @classmethod
    def prefix(cls, entries: Sequence[int]) -> "Itinerary":
        """Only ``entries`` are known; the tail is unspecified."""
        return cls(entries, kind="prefix")

    @classmethod
    def growth(cls, n0: int = 1, depth_hint: int | None = None) -> "Itinerary":
        """Minimal sequence meeting ``n_r >= 2**(r+2) * prod_{i<r}(n_i+2)``."""
        if n0 < 1:
            raise ValueError("the growth generator needs n0 >= 1")

        def rule(prev: list[int]) -> int:
            r = len(prev)
            prod = 1
            for n in prev:
                prod *= n + 2
            return 2 ** (r + 2) * prod

        return cls((n0,), rule=rule, kind="growth", depth_hint=depth_hint)

    # -- access -----------------------------------------------------------
    @property
    def is_infinite(self) -> bool:
        return self.kind != "prefix"

    @property
    def is_terminated(self) -> bool:
        return self.kind == "terminated"

    @property
    def terminator(self) -> int | None:
        """Index from which every entry is zero, when known."""
        if not self.is_terminated:
            return None
        r = len(self.head)
        while r > 0 and self.head[r - 1] == 0:
            r -= 1
        return r

    @property
    def known_length(self) -> int | None:
        return len(self.head) if self.kind == "prefix" else None

    def __getitem__(self, r: int) -> int:
        if r < 0:
            raise IndexError("itinerary indices start at 0")
        if r < len(self.head):
            return self.head[r]
        if self.period is not None:
            return self.period[(r - len(self.head)) % len(self.period)]
        if self.rule is not None:
            while len(self._cache) <= r:
                self._cache.append(self.rule(self._cache))
            return self._cache[r]
        raise ItineraryExhausted(f"entry {r} requested but only {len(self.head)} entries are known")

    def take(self, m: int) -> tuple[int, ...]:
        return tuple(self[r] for r in range(m))

    def available(self, m: int) -> bool:
        return self.is_infinite or m <= len(self.head)

    def shifted(self, s: int) -> "Itinerary":
        """The itinerary ``n_s n_{s+1} ...``."""
        if self.kind == "prefix":
            return Itinerary.prefix(self.head[s:])
        if self.period is not None:
            if s <= len(self.head):
                return Itinerary(self.head[s:], self.period, kind=self.kind)
            off = (s - len(self.head)) % len(self.period)
            return Itinerary((), self.period[off:] + self.period[:off], kind=self.kind)
        return Itinerary.prefix(self.take(s + 64)[s:])

    def __repr__(self) -> str:
        return f"Itinerary({self.spec()!r})"

    def __str__(self) -> str:
        return self.render()

    def spec(self) -> str:
        """Inverse of :func:`parse_itinerary` where possible."""
        csv = lambda xs: ",".join(map(str, xs))  # noqa: E731
        if self.kind == "terminated":
            return f"list:{csv(self.head)}"
        if self.kind == "periodic":
            if self.head:
                return f"periodic:{csv(self.head)}|{csv(self.period)}"
            return f"periodic:{csv(self.period)}"
        if self.kind == "growth":
            spec = f"growth:min63b,n0={self.head[0]}"
            if self.depth_hint is not None:
                spec += f",r={self.depth_hint}"
            return spec
        return f"prefix:{csv(self.head)}"

    def render(self, shown: int = 12) -> str:
        """Human-readable form, e.g. ``1 0 10 3 | 0̄`` or ``(1)̄``."""
        join = lambda xs: " ".join(map(str, xs))  # noqa: E731
        if self.kind == "terminated":
            head = self.head[: self.terminator]
            return f"{join(head)} | 0̄".strip()
        if self.kind == "periodic":
            block = f"({join(self.period)})̄"
            return f"{join(self.head)} | {block}" if self.head else block
        if self.kind == "growth":
            return join(self.take(min(shown, 6))) + " ..."
        return join(self.head) + " ?"


_SPEC = re.compile(r"^\s*(list|periodic|prefix|growth)\s*:\s*(.*?)\s*$")


def _ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(t) for t in text.split(","))


def parse_itinerary(spec: str) -> Itinerary:
    """Parse ``list:1,0,10,3``, ``periodic:2,3``, ``periodic:5|1``,
    ``prefix:1,1,2`` or ``growth:min63b,n0=1,r=5``."""
    m = _SPEC.match(spec)
    if not m:
        raise ValueError(f"unrecognised itinerary spec {spec!r}")
    kind, body = m.groups()
    try:
        if kind == "list":
            return Itinerary.terminated(_ints(body))
        if kind == "prefix":
            return Itinerary.prefix(_ints(body))
        if kind == "periodic":
            if "|" in body:
                head, period = body.split("|", 1)
                return Itinerary.periodic(_ints(period), _ints(head))
            return Itinerary.periodic(_ints(body))
        fields = [f.strip() for f in body.split(",") if f.strip()]
        if not fields or fields[0] != "min63b":
            raise ValueError("growth specs must start with 'min63b'")
        opts = dict(f.split("=", 1) for f in fields[1:])
        unknown = set(opts) - {"n0", "r"}
        if unknown:
            raise ValueError(f"unknown growth options {sorted(unknown)}")
        r = int(opts["r"]) if "r" in opts else None
        return Itinerary.growth(int(opts.get("n0", 1)), depth_hint=r)
    except ValueError as exc:
        raise ValueError(f"bad itinerary spec {spec!r}: {exc}") from None


def itinerary_compare(m: Sequence[int], n: Sequence[int]) -> int:
    """Reverse-lexicographic comparison of two equal-length prefixes.

    Returns -1 if ``m < n`` (first differing entry of ``m`` is *larger*).
    """
    for a, b in zip(m, n):
        if a != b:
            return -1 if a > b else 1
    return 0
