from fractions import Fraction

from hypothesis import settings, strategies as st

from lexminimax.words import Word

settings.register_profile("default", deadline=None)
settings.load_profile("default")


@st.composite
def words(draw, k=None, min_size=1, max_size=12):
    if k is None:
        k = draw(st.integers(2, 5))
    letters = draw(st.lists(st.integers(1, k), min_size=min_size, max_size=max_size))
    return Word(tuple(letters), k)


@st.composite
def count_vectors(draw, k=None, max_entry=30):
    if k is None:
        k = draw(st.integers(2, 5))
    head = draw(st.lists(st.integers(0, max_entry), min_size=k - 1, max_size=k - 1))
    last = draw(st.integers(1, max_entry))
    return tuple(head) + (last,)


@st.composite
def rational_points(draw, k=None, max_den=60):
    """Points with entries a_i/q, q <= max_den, last entry positive."""
    if k is None:
        k = draw(st.integers(2, 5))
    q = draw(st.integers(1, max_den))
    cuts = sorted(draw(st.lists(st.integers(0, q - 1), min_size=k - 1, max_size=k - 1)))
    bounds = [0] + cuts + [q]
    parts = [bounds[i + 1] - bounds[i] for i in range(k)]
    return tuple(Fraction(p, q) for p in parts)


@st.composite
def interior_points(draw, k=None, max_entry=40):
    if k is None:
        k = draw(st.integers(2, 5))
    raw = draw(st.lists(st.integers(1, max_entry), min_size=k, max_size=k))
    total = sum(raw)
    return tuple(Fraction(x, total) for x in raw)
