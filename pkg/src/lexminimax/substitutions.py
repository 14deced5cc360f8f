"""The substitutions ``Λ_n``, their compositions and abelianization matrices.

``Λ_n`` on ``{1..k}``::

    i   -> i+1        (1 <= i <= k-2)
    k-1 -> k 1^(n+1)
    k   -> k 1^n

Matrices are tuples of row tuples of Python ints (unbounded), indexed from 0
internally; entry ``(i, j)`` counts letter ``i+1`` in the image of ``j+1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .itinerary import Itinerary, ItineraryExhausted
from .words import AlphabetMismatch, Word, check_alphabet

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Substitution:
    """A map from letters to non-empty words over the same alphabet."""

    images: tuple[Word, ...]

    def __post_init__(self) -> None:
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if len(images) < 2:
            raise ValueError("a substitution needs an image for each of k >= 2 letters")
        k = len(images)
        for im in images:
            if im.k != k:
                raise AlphabetMismatch("every image must be a word over the same k letters")

    @property
    def k(self) -> int:
        return len(self.images)

    def __call__(self, w: Word) -> Word:
        return apply(self, w)

    def __matmul__(self, other: "Substitution") -> "Substitution":
        return compose(self, other)

    def __str__(self) -> str:
        return ", ".join(f"{i + 1}->{im}" for i, im in enumerate(self.images))

    def matrix(self) -> Matrix:
        k = self.k
        cols = [im.counts for im in self.images]
        return tuple(tuple(cols[j][i] for j in range(k)) for i in range(k))


def identity(k: int) -> Substitution:
    return Substitution(tuple(Word((i,), k) for i in range(1, k + 1)))


def _lambda_image(n: int, letter: int, k: int) -> tuple[int, ...]:
    if letter <= k - 2:
        return (letter + 1,)
    if letter == k - 1:
        return (k,) + (1,) * (n + 1)
    return (k,) + (1,) * n


def lambda_sub(n: int, k: int) -> Substitution:
    """The substitution ``Λ_n`` on ``k`` letters."""
    check_alphabet(k)
    if n < 0:
        raise ValueError("branch index n must be >= 0")
    return Substitution(tuple(Word(_lambda_image(n, i, k), k) for i in range(1, k + 1)))


def apply(s: Substitution, w: Word) -> Word:
    if s.k != w.k:
        raise AlphabetMismatch(f"substitution on {s.k} letters applied to a word on {w.k}")
    out: list[int] = []
    for a in w.letters:
        out.extend(s.images[a - 1].letters)
    return Word(tuple(out), w.k)


def compose(s1: Substitution, s2: Substitution) -> Substitution:
    """``(s1 ∘ s2)(i) = s1(s2(i))``."""
    if s1.k != s2.k:
        raise AlphabetMismatch("cannot compose substitutions on different alphabets")
    return Substitution(tuple(apply(s1, im) for im in s2.images))


def compose_tower(ns: Sequence[int], k: int) -> Substitution:
    """``Λ_{n_0} ∘ Λ_{n_1} ∘ ... ∘ Λ_{n_r}``; the empty tower is the identity."""
    s = identity(k)
    for n in reversed(ns):
        s = compose(lambda_sub(n, k), s)
    return s


# -- matrices --------------------------------------------------------------

def abelian_matrix(n: int, k: int) -> Matrix:
    """``A(n)``: column ``j`` is the letter-count vector of ``Λ_n(j)``."""
    check_alphabet(k)
    if n < 0:
        raise ValueError("branch index n must be >= 0")
    a = [[0] * k for _ in range(k)]
    a[0][k - 2] += n + 1
    a[0][k - 1] += n
    for i in range(1, k):
        a[i][i - 1] = 1
    a[k - 1][k - 1] = 1
    return tuple(tuple(row) for row in a)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def mat_vec(a: Matrix, v: Sequence) -> tuple:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def mat_identity(k: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(k)) for i in range(k))


def tower_matrix(ns: Sequence[int], k: int) -> Matrix:
    """``A(n_0) A(n_1) ... A(n_r)``."""
    m = mat_identity(k)
    for n in ns:
        m = mat_mul(m, abelian_matrix(n, k))
    return m


def format_matrix(m: Matrix) -> str:
    width = max(len(str(x)) for row in m for x in row)
    return "\n".join(" ".join(str(x).rjust(width) for x in row) for row in m)


# -- towers ----------------------------------------------------------------

def _apply_truncated(n: int, k: int, letters: Sequence[int], limit: int | None) -> list[int]:
    """``Λ_n(letters)`` cut to ``limit`` letters; never builds long 1-runs beyond it."""
    out: list[int] = []
    for a in letters:
        if limit is not None and len(out) >= limit:
            break
        if a <= k - 2:
            out.append(a + 1)
            continue
        out.append(k)
        ones = n + 1 if a == k - 1 else n
        if limit is not None:
            ones = min(ones, limit - len(out))
        out.extend([1] * ones)
    if limit is not None:
        del out[limit:]
    return out


def tower_word(ns: Sequence[int], k: int, start: Sequence[int] | None = None,
               limit: int | None = None) -> tuple[int, ...]:
    """``Λ_{n_0} ∘ ... ∘ Λ_{n_r}`` applied to ``start`` (default the word ``k``),
    evaluated right to left and truncated to ``limit`` letters."""
    letters = list(start) if start is not None else [k]
    for n in reversed(ns):
        letters = _apply_truncated(n, k, letters, limit)
    return tuple(letters)


def tower_prefix(itin: Itinerary | Sequence[int], r: int, k: int,
                 limit: int | None = None) -> Word:
    """``Λ_{n_0} ∘ ... ∘ Λ_{n_r}(k)``, optionally only its first ``limit`` letters."""
    if r < -1:
        raise ValueError("r must be >= -1 (r = -1 is the empty tower)")
    if isinstance(itin, Itinerary):
        if not itin.available(r + 1):
            raise ItineraryExhausted(f"itinerary has fewer than {r + 1} known entries")
        ns = itin.take(r + 1)
    else:
        if len(itin) < r + 1:
            raise ItineraryExhausted(f"itinerary has fewer than {r + 1} entries")
        ns = tuple(itin[: r + 1])
    return Word(tower_word(ns, k, limit=limit), k)


def tower_lengths(m: Matrix) -> tuple[int, ...]:
    """Image lengths ``|Λ_{n,r}(i)|`` from a tower matrix (column sums)."""
    return tuple(sum(col) for col in zip(*m))


def depth_for_length(itin: Itinerary, R: int, k: int, max_depth: int = 100_000) -> tuple[int, Matrix]:
    """Smallest ``r`` with ``|Λ_{n,r}(k)| >= R``, and the tower matrix at ``r``.

    Lengths come from exact matrix products so nothing is materialized.
    Raises :class:`ItineraryExhausted` if a finite prefix runs out first.
    """
    m = mat_identity(k)
    for r in range(max_depth):
        if not itin.available(r + 1):
            raise ItineraryExhausted(
                f"known itinerary entries determine only {tower_lengths(m)[k - 1]} letters, {R} requested")
        m = mat_mul(m, abelian_matrix(itin[r], k))
        if tower_lengths(m)[k - 1] >= R:
            return r, m
    raise RuntimeError(f"no tower of length {R} within {max_depth} levels")
