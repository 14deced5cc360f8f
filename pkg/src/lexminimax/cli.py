"""Command-line front end.

Every command builds one record; ``--format json`` prints it as JSON and the
default text format prints the same fields as ``key: value`` lines.

Exit codes: 0 success, 2 malformed input, 3 cap exceeded, 4 internal
invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Sequence

from .finite import DEFAULT_WORD_CAP, BRUTE_FORCE_CAP, CapExceeded, brute_force_minimax, minimax_tower
from .infimax import infimax_prefix
from .itinerary import Itinerary, parse_itinerary
from .reference import run_all
from .regularity import classify, vertex_images
from .simplex import RationalPoint, itinerary, point_from_finite_itinerary
from .substitutions import tower_word
from .words import Word, run_length_blocks

EXIT_MALFORMED = 2
EXIT_CAP = 3
EXIT_INVARIANT = 4


class InvariantViolation(RuntimeError):
    pass


def _counts(text: str, k: int) -> tuple[int, ...]:
    try:
        counts = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise ValueError(f"expected comma-separated integer counts, got {text!r}") from None
    if len(counts) != k:
        raise ValueError(f"expected {k} counts, got {len(counts)}")
    return counts


def _point(text: str, k: int) -> RationalPoint:
    point = RationalPoint.parse(text)
    if point.k != k:
        raise ValueError(f"expected {k} entries, got {point.k}")
    return point


def _itinerary_arg(spec: str) -> Itinerary:
    if spec == "-":
        spec = _spec_from_stream(sys.stdin.read())
    return parse_itinerary(spec)


def _spec_from_stream(text: str) -> str:
    """Accept a bare spec, a ``spec: ...`` text line, or a JSON record with ``spec``."""
    text = text.strip()
    if text.startswith("{"):
        return json.loads(text)["spec"]
    for line in text.splitlines():
        if line.startswith("spec:"):
            return line.split(":", 1)[1].strip()
    return text


def _frac(x: Fraction) -> str:
    return str(x)


def _vec(v: Sequence[Fraction]) -> list[str]:
    return [_frac(x) for x in v]


def _word_field(word: Word, run_length: bool) -> str:
    return run_length_blocks(word) if run_length else str(word)


# -- commands ----------------------------------------------------------------

def cmd_minimax(args) -> dict:
    counts = _counts(args.payload, args.k)
    tower = minimax_tower(counts)
    word = tower.word(args.cap)
    return {
        "counts": list(counts),
        "length": tower.length,
        "branches": list(tower.branches),
        "word": _word_field(word, args.run_length),
    }


def cmd_oracle(args) -> dict:
    counts = _counts(args.payload, args.k)
    fast = minimax_tower(counts).word(DEFAULT_WORD_CAP)
    slow = brute_force_minimax(counts, cap=args.cap)
    if fast != slow:
        raise InvariantViolation(f"minimax {fast} differs from brute force {slow}")
    return {"counts": list(counts), "word": str(fast), "agree": True}


def cmd_itinerary(args) -> dict:
    point = _point(args.payload, args.k)
    itin = itinerary(point, max_steps=args.max_steps)
    if not itin.is_terminated:
        raise CapExceeded(f"orbit did not reach the vertex within {args.max_steps} steps")
    tower = minimax_tower(point.integer_vector())
    head = itin.head[: itin.terminator]
    return {
        "point": _vec(point.entries),
        "itinerary": itin.render(),
        "spec": "list:" + ",".join(map(str, head)),
        "chain": [list(v) for v in tower.chain],
    }


def cmd_point(args) -> dict:
    itin = _itinerary_arg(args.itinerary)
    if not itin.is_terminated:
        raise ValueError("point needs a finite itinerary (list:...) followed by zeros")
    head = itin.head[: itin.terminator]
    point = point_from_finite_itinerary(head, args.k)
    return {"spec": itin.spec(), "point": _vec(point.entries), "counts": list(point.integer_vector())}


def cmd_infimax(args) -> dict:
    if args.itinerary is not None:
        source: Any = _itinerary_arg(args.itinerary)
    elif args.payload is not None:
        source = _point(args.payload, args.k)
    else:
        raise ValueError("infimax needs a rational point or --itinerary")
    if args.R > args.cap:
        raise CapExceeded(f"R={args.R} exceeds cap {args.cap}")
    pre = infimax_prefix(source, args.R, args.k)
    return {
        "R": args.R,
        "depth": pre.depth,
        "periodic": pre.periodic,
        "word": _word_field(pre.word, args.run_length),
    }


def cmd_regularity(args) -> dict:
    itin = _itinerary_arg(args.itinerary)
    return classify(itin, args.k, depth=args.r).to_dict()


def cmd_vertices(args) -> dict:
    itin = _itinerary_arg(args.itinerary)
    r = args.r if args.r is not None else 0
    if not itin.available(r + 1):
        raise ValueError(f"itinerary has fewer than {r + 1} known entries")
    v = vertex_images(itin, r, args.k)
    return {
        "depth": r,
        "entries_used": list(itin.take(r + 1)),
        "vertices": [_vec(p) for p in v.vertices],
        "lengths": list(v.lengths),
        "matrix": [list(row) for row in v.product_matrix],
    }


def cmd_selftest(args) -> dict:
    results = run_all()
    failed = [c.name for c, ok, _ in results if not ok]
    record = {
        "cases": [{"name": c.name, "ok": ok} for c, ok, _ in results],
        "passed": len(results) - len(failed),
        "failed": failed,
    }
    if failed:
        record["_exit"] = EXIT_INVARIANT
    return record


COMMANDS = {
    "minimax": cmd_minimax,
    "oracle": cmd_oracle,
    "itinerary": cmd_itinerary,
    "point": cmd_point,
    "infimax": cmd_infimax,
    "regularity": cmd_regularity,
    "vertices": cmd_vertices,
    "selftest": cmd_selftest,
}


# -- output --------------------------------------------------------------------

def _text_value(value: Any) -> str:
    if isinstance(value, list):
        if value and isinstance(value[0], (list, dict)):
            return "\n" + "\n".join("  " + _text_value(v).strip() for v in value)
        return " ".join(str(v) for v in value)
    if isinstance(value, dict):
        return " ".join(f"{k}={_text_value(v)}" for k, v in value.items())
    return str(value)


def render(record: dict, fmt: str, out=None) -> None:
    out = out or sys.stdout
    data = {k: v for k, v in record.items() if not k.startswith("_")}
    if fmt == "json":
        json.dump(data, out, ensure_ascii=False)
        out.write("\n")
        return
    for key, value in data.items():
        text = _text_value(value)
        if isinstance(value, str) and len(value) > 65536:
            out.write(f"{key}: ")
            for i in range(0, len(value), 65536):
                out.write(value[i:i + 65536])
            out.write("\n")
        else:
            out.write(f"{key}: {text}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-k", type=int, default=3, help="alphabet size (default 3)")
    common.add_argument("--format", choices=("text", "json"), default="text")

    p = argparse.ArgumentParser(prog="lexminimax", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("minimax", parents=[common], help="smallest maximal word with given counts")
    s.add_argument("payload", help="counts, e.g. 24,3,14")
    s.add_argument("--cap", type=int, default=DEFAULT_WORD_CAP, help="largest word length to build")
    s.add_argument("--run-length", action="store_true", help="print in power notation")

    s = sub.add_parser("oracle", parents=[common], help="compare minimax with brute force")
    s.add_argument("payload")
    s.add_argument("--cap", type=int, default=BRUTE_FORCE_CAP, help="largest total for brute force")

    s = sub.add_parser("itinerary", parents=[common], help="itinerary of a rational point")
    s.add_argument("payload", help="point, e.g. 2/9,3/9,1/9,3/9, or integer counts")
    s.add_argument("--max-steps", type=int, default=100_000)

    s = sub.add_parser("point", parents=[common], help="point with a finite itinerary")
    s.add_argument("--itinerary", required=True, help="list:... spec, or - to read stdin")

    s = sub.add_parser("infimax", parents=[common], help="prefix of an infimax sequence")
    s.add_argument("payload", nargs="?", help="rational point")
    s.add_argument("--itinerary")
    s.add_argument("-R", type=int, required=True, help="prefix length")
    s.add_argument("--cap", type=int, default=DEFAULT_WORD_CAP)
    s.add_argument("--run-length", action="store_true")

    s = sub.add_parser("regularity", parents=[common], help="regular/exceptional verdict")
    s.add_argument("--itinerary", required=True)
    s.add_argument("-r", type=int, help="evidence depth")

    s = sub.add_parser("vertices", parents=[common], help="vertex images at depth r")
    s.add_argument("--itinerary", required=True)
    s.add_argument("-r", type=int, default=0)

    sub.add_parser("selftest", parents=[common], help="run the worked examples")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_MALFORMED if exc.code else 0
    if getattr(args, "R", None) is not None and args.R < 1:
        print("error: R must be >= 1", file=sys.stderr)
        return EXIT_MALFORMED
    try:
        record = COMMANDS[args.command](args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (InvariantViolation, AssertionError) as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (ValueError, IndexError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    render(record, args.format)
    return record.get("_exit", 0)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
