"""Worked examples with known answers, checked by ``lexminimax selftest``."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

from .finite import minimax_tower, minimax_word
from .infimax import infimax_prefix
from .itinerary import Itinerary
from .regularity import (
    classify,
    cross_ratio_d,
    exceptional_itinerary,
    hilbert_ratio,
    separation_delta,
    vertex_images,
)
from .simplex import RationalPoint, itinerary, step_inverse
from .substitutions import apply, compose_tower, lambda_sub, tower_matrix
from .words import Word, run_length_blocks

F = Fraction

FIXED_POINT_64 = "3123113122312311311312311312231223123113122312311311312311311312"


@dataclass(frozen=True)
class Case:
    name: str
    compute: Callable[[], Any]
    expected: Any

    def run(self) -> tuple[bool, Any]:
        got = self.compute()
        return got == self.expected, got


def _chain(counts):
    return [tuple(v) for v in minimax_tower(counts).chain]


CASES = [
    Case("minimax 24,3,14 (k=3)", lambda: run_length_blocks(minimax_word((24, 3, 14))), "31 311^10 312^3"),
    Case("minimax 2,3,1,3 (k=4)", lambda: str(minimax_word((2, 3, 1, 3))), "422234141"),
    Case("chain 24,3,14", lambda: _chain((24, 3, 14)),
         [(24, 3, 14), (3, 10, 4), (10, 3, 1), (3, 0, 1), (0, 0, 1)]),
    Case("chain 2,3,1,3", lambda: _chain((2, 3, 1, 3)),
         [(2, 3, 1, 3), (3, 1, 2, 1), (1, 2, 0, 1), (2, 0, 0, 1), (0, 0, 0, 1)]),
    Case("itinerary 2/9,3/9,1/9,3/9", lambda: itinerary(RationalPoint.parse("2/9,3/9,1/9,3/9")).render(),
         "0 3 1 2 | 0̄"),
    Case("itinerary 24/41,3/41,14/41", lambda: itinerary(RationalPoint.from_counts((24, 3, 14))).render(),
         "1 0 10 3 | 0̄"),
    Case("Λ_0(4111233) (k=4)", lambda: str(apply(lambda_sub(0, 4), Word.parse("4111233", 4))), "422234141"),
    Case("Λ_0∘Λ_3∘Λ_1∘Λ_2(4)", lambda: str(compose_tower((0, 3, 1, 2), 4).images[3]), "422234141"),
    Case("fixed point of Λ_1 (k=3), 64 letters",
         lambda: str(infimax_prefix(Itinerary.periodic((1,)), 64, 3).word), FIXED_POINT_64),
    Case("K_3^{-1}(0,0,1)", lambda: step_inverse(3, (0, 0, 1)).entries, (F(3, 4), F(0), F(1, 4))),
    Case("vertices r=0, n_0=1, k=3", lambda: vertex_images((1,), 0, 3).vertices,
         ((F(0), F(1), F(0)), (F(2, 3), F(0), F(1, 3)), (F(1, 2), F(0), F(1, 2)))),
    Case("vertex 3 of 1,0,10,3 at r=3", lambda: vertex_images((1, 0, 10, 3), 3, 3).vertices[2],
         (F(24, 41), F(3, 41), F(14, 41))),
    Case("A(1)^3 (k=3)", lambda: tower_matrix((1, 1, 1), 3), ((1, 5, 3), (2, 1, 1), (1, 3, 2))),
    Case("d(A(1)^3)", lambda: cross_ratio_d(tower_matrix((1, 1, 1), 3)), F(10)),
    Case("Hilbert ratio example", lambda: hilbert_ratio((F(1, 2), F(1, 4), F(1, 4)), (F(1, 4), F(1, 2), F(1, 4))),
         F(4)),
    Case("δ_0 = 1", lambda: separation_delta((7,), 0, 3), F(1)),
    Case("growth generator n_0..n_2", lambda: exceptional_itinerary(3, 1, 2), (1, 24, 1248)),
    Case("classify 1,0,10,3 then zeros", lambda: classify(Itinerary.terminated((1, 0, 10, 3)), 3).verdict, "regular"),
    Case("classify periodic 1 (k=3)", lambda: classify(Itinerary.periodic((1,)), 3).verdict, "regular"),
    Case("classify growth (k=3)", lambda: classify(Itinerary.growth(1), 3).verdict, "exceptional"),
]


def run_all() -> list[tuple[Case, bool, Any]]:
    out = []
    for case in CASES:
        try:
            ok, got = case.run()
        except Exception as exc:  # a crash is reported as a failed case
            ok, got = False, exc
        out.append((case, ok, got))
    return out
