from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from lexminimax.finite import khat_step, khat_step_inverse
from lexminimax.itinerary import Itinerary, parse_itinerary
from lexminimax.simplex import (
    DegeneratePoint,
    RationalPoint,
    branch_index,
    itinerary,
    normalize,
    orbit,
    point_from_finite_itinerary,
    reduce_dimension,
    reduce_itinerary,
    step,
    step_inverse,
    zero_component_profile,
)

from conftest import count_vectors, interior_points, rational_points


def P(text):
    return RationalPoint.parse(text)


def test_point_validation():
    with pytest.raises(DegeneratePoint):
        RationalPoint((F(1, 2), F(1, 2), F(0)))
    with pytest.raises(DegeneratePoint):
        RationalPoint((F(1, 2), F(1, 3), F(1, 3)))
    with pytest.raises(DegeneratePoint):
        RationalPoint((F(-1, 2), F(1, 2), F(1)))
    assert P("24,3,14") == P("24/41,3/41,14/41")


def test_degenerate_message_suggests_smaller_alphabet():
    with pytest.raises(DegeneratePoint, match="smaller alphabet"):
        RationalPoint((F(1), F(0)))


def test_known_steps():
    assert step_inverse(3, (0, 0, 1)).entries == (F(3, 4), F(0), F(1, 4))
    assert step_inverse(0, (0, 0, 1)).entries == (F(0), F(0), F(1))
    a = P("24/41,3/41,14/41")
    assert branch_index(a) == 1
    assert step(a) == P("3,10,4")


def test_known_itineraries():
    assert itinerary(P("24,3,14")).take(6) == (1, 0, 10, 3, 0, 0)
    assert itinerary(P("2/9,3/9,1/9,3/9")).render() == "0 3 1 2 | 0̄"
    assert itinerary(P("0,1/2,1/2")).take(3) == (0, 1, 0)
    assert itinerary(P("1/2,1/2")).take(2) == (1, 0)
    assert [str(p) for p in orbit(P("24,3,14"))][-1] == "0,0,1"


@given(interior_points(), st.integers(0, 20))
def test_step_inverse_round_trip(alpha, n):
    assert step(step_inverse(n, alpha)).entries == alpha
    assert branch_index(step_inverse(n, alpha)) == n


@given(rational_points())
def test_step_round_trip(alpha):
    a = RationalPoint(alpha)
    if a == RationalPoint.vertex(a.k):
        return
    assert step_inverse(branch_index(a), step(a)) == a


@given(count_vectors())
def test_commuting_diagram(counts):
    # normalizing after the integer step equals stepping the normalized point
    if not any(counts[:-1]):
        return
    assert RationalPoint.from_counts(khat_step(counts)) == step(RationalPoint.from_counts(counts))


@given(count_vectors(), st.integers(0, 10))
def test_integer_inverse(counts, n):
    back = khat_step_inverse(n, counts)
    assert khat_step(back) == counts
    assert RationalPoint.from_counts(back) == step_inverse(n, RationalPoint.from_counts(counts))


@given(st.lists(st.integers(0, 8), max_size=8), st.integers(2, 5))
def test_finite_itinerary_round_trip(ns, k):
    point = point_from_finite_itinerary(ns, k)
    itin = itinerary(point)
    assert itin.is_terminated
    trimmed = list(ns)
    while trimmed and trimmed[-1] == 0:
        trimmed.pop()
    assert list(itin.head[: itin.terminator]) == trimmed


@given(rational_points(max_den=60))
def test_zero_component_equivalence(alpha):
    report = zero_component_profile(alpha)
    assert report.decided
    assert report.consistent, list(report.rows())


@given(rational_points(k=4, max_den=40), st.integers(1, 3))
def test_dimension_reduction_commutes(alpha, i):
    if alpha[i - 1] != 0:
        return
    reduced = reduce_dimension(alpha, i)
    expected = reduce_itinerary(itinerary(alpha), i, 4)
    assert itinerary(reduced).take(12) == expected.take(12)


def test_reduce_itinerary_example():
    # (0,1/2,1/2) has itinerary 0 1 0̄; deleting letter 1 gives (1/2,1/2): 1 0̄
    itin = itinerary(P("0,1/2,1/2"))
    assert reduce_itinerary(itin, 1, 3).take(3) == (1, 0, 0)
    assert reduce_dimension(P("0,1/2,1/2"), 1) == P("1/2,1/2")
    with pytest.raises(ValueError):
        reduce_dimension(P("1/4,1/4,1/2"), 1)


def test_reduce_periodic_itinerary():
    itin = parse_itinerary("periodic:0,3")
    red = reduce_itinerary(itin, 1, 3)
    assert red.take(5) == (3, 3, 3, 3, 3)


def test_normalize():
    assert normalize((2, 2)) == (F(1, 2), F(1, 2))


def test_itinerary_prefix_when_steps_run_out():
    itin = itinerary(P("24,3,14"), max_steps=2)
    assert itin.kind == "prefix"
    assert itin.head == (1, 0)


@given(interior_points(), st.integers(0, 50))
def test_projective_action_matches_inverse(alpha, n):
    from lexminimax.substitutions import abelian_matrix, mat_vec

    assert normalize(mat_vec(abelian_matrix(n, len(alpha)), alpha)) == step_inverse(n, alpha).entries


def test_termination_spot_check():
    for q in range(1, 40):
        for a in range(q + 1):
            for b in range(q - a):
                p = RationalPoint((F(a, q), F(b, q), F(q - a - b, q)))
                assert itinerary(p, max_steps=10_000).is_terminated
