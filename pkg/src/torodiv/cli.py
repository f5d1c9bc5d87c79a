"""Command-line front end.

All results go to standard output as canonical JSON (sorted keys, lowest
terms rationals as strings, lexicographically sorted vector lists);
diagnostics go to standard error. Exit codes: 0 success, 1 malformed
input or usage, 2 inconclusive positivity, 3 verification not confirmed.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .divisors import PolyhedralDivisor, qdivisor_to_json_obj
from .errors import DomainError, StructuralError
from .sampling import random_divisor
from .semigroups import MonomialSemigroup, hilbert_basis
from .toroidal import fan_from_divisor, verify_charts

EXIT_OK = 0
EXIT_MALFORMED = 1
EXIT_INCONCLUSIVE = 2
EXIT_UNDETERMINED = 3

EXAMPLES = {
    "sl2": {
        "description": "Two-torus action on the group of determinant-one 2x2 matrices, "
                       "quotient map to the affine line: segments conv{0,e1} at 0 and "
                       "conv{0,e2} at 1, trivial tail.",
        "base": {"kind": "affine_line",
                 "points": [{"label": "0", "coordinate": "0"},
                            {"label": "1", "coordinate": "1"}]},
        "rank": 2,
        "tail": {"rank": 2, "generators": []},
        "coefficients": {
            "0": {"rank": 2, "vertices": [["0", "0"], ["1", "0"]], "rays": []},
            "1": {"rank": 2, "vertices": [["0", "0"], ["0", "1"]], "rays": []},
        },
        "U": [],
    },
    "trivial": {
        "description": "No nontrivial coefficients; the fan has no charts.",
        "base": {"kind": "affine_line", "points": [{"label": "0", "coordinate": "0"}]},
        "rank": 2,
        "tail": {"rank": 2, "generators": [[1, 0], [0, 1]]},
        "coefficients": {},
        "U": [],
    },
    "halfint": {
        "description": "A segment with a half-integer endpoint; its chart needs a "
                       "non-unimodular primitive generator.",
        "base": {"kind": "affine_line", "points": [{"label": "0", "coordinate": "0"}]},
        "rank": 2,
        "tail": {"rank": 2, "generators": []},
        "coefficients": {
            "0": {"rank": 2, "vertices": [["0", "0"], ["1/2", "0"]], "rays": []},
        },
        "U": [],
    },
    "product": {
        "description": "A lattice translate of the tail cone; the point is a product "
                       "point and its chart splits off a halfline factor.",
        "base": {"kind": "affine_line", "points": [{"label": "0", "coordinate": "0"}]},
        "rank": 2,
        "tail": {"rank": 2, "generators": [[1, 0], [0, 1]]},
        "coefficients": {
            "0": {"rank": 2, "vertices": [["3", "1"]], "rays": [[1, 0], [0, 1]]},
        },
        "U": [],
    },
}


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n")


def _read_document(path: str):
    """Load a JSON document from a file path or standard input ("-")."""
    if path == "-":
        text = sys.stdin.read()
        name = "<stdin>"
    else:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise StructuralError(f"cannot read {path}: {exc}") from exc
        name = path
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise StructuralError(
            f"malformed JSON in {name} at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc


def _load_divisor(path: str):
    doc = _read_document(path)
    divisor = PolyhedralDivisor.from_json_obj(doc)
    keep_trivial = doc.get("U", []) if isinstance(doc, dict) else []
    if not isinstance(keep_trivial, list) or any(not isinstance(x, str) for x in keep_trivial):
        raise StructuralError("'U' must be a list of point labels")
    return divisor, keep_trivial


def _parse_weight(text: str, rank: int):
    parts = [p.strip() for p in text.split(",")]
    try:
        u = tuple(int(p) for p in parts)
    except ValueError:
        raise StructuralError(f"weight must be comma-separated integers, got {text!r}") from None
    if len(u) != rank:
        raise StructuralError(f"weight has {len(u)} entries, divisor rank is {rank}")
    return u


def cmd_check(args) -> int:
    divisor, _ = _load_divisor(args.file)
    report = divisor.check_proper()
    _emit(report.to_json_obj())
    return EXIT_OK if report.proper is True else EXIT_INCONCLUSIVE


def cmd_eval(args) -> int:
    divisor, _ = _load_divisor(args.file)
    u = _parse_weight(args.u, divisor.rank)
    if args.floor:
        values = {k: v for k, v in divisor.evaluate_floor(u).items()}
        _emit({k: str(v) for k, v in values.items()})
    else:
        _emit(qdivisor_to_json_obj(divisor.evaluate(u)))
    return EXIT_OK


def cmd_fan(args) -> int:
    divisor, keep_trivial = _load_divisor(args.file)
    fan = fan_from_divisor(divisor, keep_trivial)
    _emit(fan.to_json_obj())
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.fuzz is not None:
        rng = random.Random(args.fuzz)
        failures = []
        for i in range(args.count):
            divisor = random_divisor(rng)
            report = verify_charts(divisor, args.box_cap)
            if not report.overall:
                failures.append({"index": i, "divisor": divisor.to_json_obj(),
                                 "report": report.to_json_obj()})
        _emit({"mode": "fuzz", "seed": args.fuzz, "count": args.count,
               "box_cap": args.box_cap, "all_verified": not failures,
               "failures": failures})
        return EXIT_OK if not failures else EXIT_UNDETERMINED
    if args.file is None:
        raise StructuralError("verify needs a divisor file or --fuzz SEED")
    divisor, _ = _load_divisor(args.file)
    report = verify_charts(divisor, args.box_cap)
    _emit(report.to_json_obj())
    return EXIT_OK if report.overall else EXIT_UNDETERMINED


def cmd_hilbert(args) -> int:
    divisor, _ = _load_divisor(args.file)
    if args.point not in divisor.base.labels:
        raise StructuralError(f"unknown point label {args.point!r}")
    semigroup = MonomialSemigroup(divisor.coefficient(args.point))
    basis = hilbert_basis(semigroup, args.box)
    _emit(basis.to_json_obj())
    return EXIT_OK


def cmd_example(args) -> int:
    if args.name not in EXAMPLES:
        sys.stderr.write(f"unknown example {args.name!r}; available: "
                         f"{', '.join(sorted(EXAMPLES))}\n")
        return EXIT_MALFORMED
    _emit(EXAMPLES[args.name])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="torodiv",
        description="Exact polyhedral-divisor computations: evaluation, positivity, "
                    "chart fans, Hilbert bases, and enumeration cross-checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="positivity check of a divisor file")
    p.add_argument("file", help="divisor JSON file, or - for standard input")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("eval", help="evaluate the divisor at a lattice weight")
    p.add_argument("file")
    p.add_argument("--u", required=True, help="comma-separated integers, e.g. \"-1,-1\"")
    p.add_argument("--floor", action="store_true", help="round each coefficient down")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("fan", help="glued chart fan of a divisor file")
    p.add_argument("file")
    p.set_defaults(func=cmd_fan)

    p = sub.add_parser("verify", help="cross-check charts against semigroup enumeration")
    p.add_argument("file", nargs="?", default=None)
    p.add_argument("--box-cap", type=int, default=12, dest="box_cap",
                   help="stabilization cap for the enumeration boxes (default 12)")
    p.add_argument("--fuzz", type=int, default=None, metavar="SEED",
                   help="verify randomly generated divisors instead of a file")
    p.add_argument("--count", type=int, default=20,
                   help="number of random divisors with --fuzz (default 20)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("hilbert", help="boxed Hilbert basis of a coefficient's semigroup")
    p.add_argument("file")
    p.add_argument("--point", required=True, help="point label")
    p.add_argument("--box", type=int, default=3, help="enumeration box bound (default 3)")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("example", help="print a built-in divisor file")
    p.add_argument("name", help=f"one of: {', '.join(sorted(EXAMPLES))}")
    p.set_defaults(func=cmd_example)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (StructuralError, DomainError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_MALFORMED


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
