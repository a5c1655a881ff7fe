"""Command-line front end.

Every subcommand reads one JSON object from stdin (``verify`` reads nothing)
and writes its result to stdout. Exit status: 0 on success, 1 when the input
cannot be parsed, 2 on a domain error. Errors are written as
``{"error": <code>, "message": <text>}``.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import certify
from .collection import (
    Collection4,
    GroupElement,
    SearchStats,
    apply_group_element,
    orbit_search,
    standard_collection,
)
from .errors import DomainError, Mismatch, UnsupportedSurface
from .k0 import K0Class, enumerate_exceptional_classes, euler_form
from .surface import DivisorClass, euler_char_line_bundle, line_bundle_cohomology
from .tower import DEFAULT_TOWER_MAX, classify_sheaves_sharing_class, ext_table, restriction_profile, tower_entry
from .twist import inverse_twist_class, twist_class
from .verify import DEFAULT_SEED, verify_suite

NEEDS_F2 = {"twist", "tower", "classify", "profile"}


class ParseError(Exception):
    pass


def _field(payload: dict, key: str, parse=lambda x: x):
    if not isinstance(payload, dict) or key not in payload:
        raise ParseError(f"payload is missing '{key}'")
    try:
        return parse(payload[key])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"cannot parse '{key}': {exc}") from exc


def _range(payload: dict, key: str, default):
    lo, hi = payload.get(key, default)
    return int(lo), int(hi)


def cmd_euler(args, payload):
    v = _field(payload, "v", K0Class.from_json)
    w = _field(payload, "w", K0Class.from_json)
    return {"chi": euler_form(args.n, v, w)}


def cmd_cohom(args, payload):
    D = _field(payload, "divisor", DivisorClass.from_json)
    h = line_bundle_cohomology(args.n, D)
    return {"h0": h.h0, "h1": h.h1, "h2": h.h2, "chi": euler_char_line_bundle(args.n, D)}


def cmd_twist(args, payload):
    a = _field(payload, "a", int)
    v = _field(payload, "class", K0Class.from_json)
    direction = payload.get("direction", "twist")
    if direction == "twist":
        return twist_class(a, v).to_json()
    if direction == "inverse":
        return inverse_twist_class(a, v).to_json()
    raise ParseError(f"direction must be 'twist' or 'inverse', got {direction!r}")


def cmd_tower(args, payload):
    v = _field(payload, "class", K0Class.from_json)
    if "i" in payload:
        return tower_entry(v, int(payload["i"])).to_json()
    p = restriction_profile(v)
    m = args.tower_max
    header = {"root": v.to_json(), **p.to_json()}
    return {"header": header, "entries": [tower_entry(v, i).to_json() for i in range(-m, m + 1)]}


def cmd_classify(args, payload):
    v = _field(payload, "class", K0Class.from_json)
    return classify_sheaves_sharing_class(v, args.tower_max).to_json()


def cmd_profile(args, payload):
    v = _field(payload, "class", K0Class.from_json)
    return restriction_profile(v).to_json()


def cmd_ext_table(args, payload):
    t = _field(payload, "t", int)
    f = _field(payload, "f", int)
    try:
        return ext_table(t, f).to_json()
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def cmd_mutate(args, payload):
    coll = _field(payload, "collection", Collection4.from_json)
    g = GroupElement.from_json(payload)
    return apply_group_element(coll, g, args.n).to_json()


def cmd_orbit_search(args, payload):
    source = _field(payload, "source", Collection4.from_json)
    target = Collection4.from_json(payload["target"]) if "target" in payload else standard_collection(args.n)
    stats = SearchStats()
    g = orbit_search(args.n, source, target, args.depth, stats)
    if not certify.verify_certificate(args.n, source, target, g):
        raise Mismatch(f"certificate {g.to_json()} failed independent re-verification")
    return g.to_json()


def cmd_enumerate(args, payload):
    payload = payload or {}
    classes = enumerate_exceptional_classes(
        args.n,
        rank=_range(payload, "rank", (1, 1)),
        x=_range(payload, "x", (-1, 1)),
        y=_range(payload, "y", (-1, 1)),
    )
    return [v.to_json() for v in classes]


def cmd_verify(args, payload):
    t0 = time.perf_counter()
    results = verify_suite(args.n, args.seed)
    return {
        "seed": args.seed,
        "passed": all(r.passed for r in results),
        "seconds": round(time.perf_counter() - t0, 3),
        "checks": [r.to_json() for r in results],
    }


COMMANDS = {
    "euler": cmd_euler,
    "cohom": cmd_cohom,
    "twist": cmd_twist,
    "tower": cmd_tower,
    "classify": cmd_classify,
    "profile": cmd_profile,
    "ext-table": cmd_ext_table,
    "mutate": cmd_mutate,
    "orbit-search": cmd_orbit_search,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hirzebruch", description="Exact K0 computations on Hirzebruch surfaces.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=2, help="degree of the Hirzebruch surface (default 2)")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--depth", type=int, default=5, help="orbit-search depth bound")
    common.add_argument("--tower-max", type=int, default=DEFAULT_TOWER_MAX)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def _render_text(result) -> str:
    if isinstance(result, dict) and "checks" in result:
        lines = [f"{'PASS' if c['status'] == 'pass' else 'FAIL'}  {c['name']:<28} {c['seconds']:>8.3f}s  {c['detail']}"
                 for c in result["checks"]]
        lines.append(f"{'all passed' if result['passed'] else 'FAILURES'} in {result['seconds']}s (seed {result['seed']})")
        return "\n".join(lines)
    if isinstance(result, list):
        return "\n".join(json.dumps(x, sort_keys=True) for x in result)
    if isinstance(result, dict):
        return "\n".join(f"{k}: {json.dumps(v, sort_keys=True)}" for k, v in result.items())
    return str(result)


def _emit(obj, fmt: str, stream) -> None:
    if fmt == "text" and not (isinstance(obj, dict) and "error" in obj):
        print(_render_text(obj), file=stream)
    else:
        print(json.dumps(obj, sort_keys=True), file=stream)


def run(argv, stdin_text: str = "") -> tuple[int, object]:
    """Run one invocation; returns ``(exit_code, payload)`` without printing."""
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return (0 if exc.code == 0 else 1), {"error": "ParseError", "message": "bad command line"}
    try:
        if args.command == "verify":
            payload = {}
        else:
            payload = json.loads(stdin_text) if stdin_text.strip() else {}
        if args.command in NEEDS_F2 and args.n != 2:
            raise UnsupportedSurface(f"'{args.command}' requires n = 2 (got n = {args.n})")
        if args.n < 0:
            raise ParseError("--n must be non-negative")
        result = COMMANDS[args.command](args, payload)
    except DomainError as exc:
        return 2, exc.to_json()
    except (ParseError, json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        return 1, {"error": "ParseError", "message": str(exc)}
    return 0, result


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    stdin_text = "" if args.command == "verify" else sys.stdin.read()
    code, result = run(argv, stdin_text)
    stream = sys.stderr if code and args.format == "text" else sys.stdout
    _emit(result, args.format, stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
