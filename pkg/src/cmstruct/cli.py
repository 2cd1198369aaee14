"""Command-line front end.

Exit status: 0 computed, 1 invalid input, 2 a decided negative answer
(no witness, "none" distortion, dominance fails).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import jsonio
from .bilipschitz import canonical_pattern, dominates, optimal_distortion
from .core import StructureError, SignatureMismatch, as_fraction, validate_structure
from .corpus import random_structure
from .embeddings import kuratowski_embed
from .groups import (
    alexandrov_structure,
    decide_translation_equiv,
    roelcke_structure,
    weighted_word_metric,
)
from .heaps import group_from_heap, heap_from_group, subheaps, validate_heap
from .isometry import brute_force_isometric_iso, canonical_signature, decide_isometric_iso
from .stone import clopen_algebra, stone_decode

OK, INVALID, NEGATIVE = 0, 1, 2


class InvalidInput(Exception):
    pass


def _load_structure(path):
    S = jsonio.structure_from_json(jsonio.read_json(path))
    report = validate_structure(S)
    if not report.ok:
        raise InvalidInput(f"{path}: invalid structure\n{report}")
    return S


def _ints(text: str | None) -> list[int]:
    if not text:
        return []
    return [int(x) for x in text.split(",") if x.strip()]


def _emit(args, payload, text: str) -> None:
    if args.json:
        print(jsonio.dumps(payload))
    else:
        print(text)


def cmd_isometry(args) -> int:
    S, T = _load_structure(args.X), _load_structure(args.Y)
    f = (brute_force_isometric_iso if args.oracle else decide_isometric_iso)(S, T)
    _emit(args, {"bijection": None if f is None else list(f)},
          "none" if f is None else " ".join(map(str, f)))
    return NEGATIVE if f is None else OK


def cmd_signature(args) -> int:
    S = _load_structure(args.X)
    entries = canonical_signature(S, max_points=args.max_points)
    payload = [
        {"matrix": [[jsonio.fmt(x) for x in row] for row in m],
         "relations": {name: [list(t) for t in tuples] for name, _, tuples in pats}}
        for m, pats in entries
    ]
    lines = []
    for m, pats in entries:
        mat = ";".join(",".join(jsonio.fmt(x) for x in row) for row in m)
        rels = " ".join(f"{name}={[list(t) for t in tuples]}".replace(" ", "") for name, _, tuples in pats)
        lines.append(f"{mat} {rels}".rstrip())
    _emit(args, payload, "\n".join(lines))
    return OK


def cmd_distortion(args) -> int:
    S, T = _load_structure(args.X), _load_structure(args.Y)
    c = optimal_distortion(S, T)
    _emit(args, {"distortion": None if c is None else jsonio.fmt(c)},
          "none" if c is None else jsonio.fmt(c))
    return NEGATIVE if c is None else OK


def cmd_dominates(args) -> int:
    S, T = _load_structure(args.X), _load_structure(args.Y)
    if args.canonical:
        patterns = [canonical_pattern(S)]
    else:
        raw = jsonio.read_json(args.patterns)
        patterns = [jsonio.pattern_from_json(p) for p in (raw if isinstance(raw, list) else [raw])]
    result = dominates(S, T, as_fraction(args.c), patterns)
    _emit(args, {"dominates": result}, "true" if result else "false")
    return OK if result else NEGATIVE


def _word_metric(G, args):
    gens = _ints(args.gens)
    if not gens:
        gens = [g for g in range(G.order) if g != G.identity]
    weights = [as_fraction(w) for w in args.weights.split(",")] if args.weights else [Fraction(1)] * len(gens)
    if len(weights) != len(gens):
        raise InvalidInput("--gens and --weights differ in length")
    return weighted_word_metric(G, dict(zip(gens, weights)))


def cmd_group(args) -> int:
    if args.action == "alexandrov":
        P = _load_structure(args.input)
        S = alexandrov_structure(P, args.base)
        _emit(args, jsonio.structure_to_json(S), jsonio.dumps(jsonio.structure_to_json(S)))
        return OK
    G = jsonio.group_from_json(jsonio.read_json(args.input))
    if args.action == "wordmetric":
        d = _word_metric(G, args)
        _emit(args, {"length": [jsonio.fmt(x) for x in d.length]},
              " ".join(jsonio.fmt(x) for x in d.length))
        return OK
    if args.action == "roelcke":
        S = roelcke_structure(G, _word_metric(G, args))
        _emit(args, jsonio.structure_to_json(S), jsonio.dumps(jsonio.structure_to_json(S)))
        return OK
    if args.action == "translate":
        if args.a is None or args.b is None:
            raise InvalidInput("translate needs --a and --b")
        g = decide_translation_equiv(G, args.a, args.b, _ints(args.A), _ints(args.B))
        _emit(args, {"translation": g}, "none" if g is None else str(g))
        return NEGATIVE if g is None else OK
    raise InvalidInput(f"unknown group action {args.action}")


def cmd_heap(args) -> int:
    raw = jsonio.read_json(args.input)
    if args.action == "from-group":
        H = heap_from_group(jsonio.group_from_json(raw))
        _emit(args, jsonio.heap_to_json(H), jsonio.dumps(jsonio.heap_to_json(H)))
        return OK
    H = jsonio.heap_from_json(raw)
    if args.action == "validate":
        report = validate_heap(H.op)
        witnesses = [{"axiom": name, "witness": list(w)} for name, w in report.violations]
        _emit(args, {"ok": report.ok, "violations": witnesses}, str(report))
        return OK if report.ok else INVALID
    if args.action == "to-group":
        G = group_from_heap(H, args.e)
        _emit(args, jsonio.group_to_json(G), jsonio.dumps(jsonio.group_to_json(G)))
        return OK
    if args.action == "subheaps":
        subs = [sorted(s) for s in subheaps(H)]
        _emit(args, subs, "\n".join(" ".join(map(str, s)) for s in subs))
        return OK
    raise InvalidInput(f"unknown heap action {args.action}")


def cmd_stone(args) -> int:
    if args.action == "encode":
        A = clopen_algebra(_load_structure(args.input))
        _emit(args, jsonio.boolean_to_json(A), jsonio.dumps(jsonio.boolean_to_json(A)))
    else:
        S = stone_decode(jsonio.boolean_from_json(jsonio.read_json(args.input)))
        _emit(args, jsonio.structure_to_json(S), jsonio.dumps(jsonio.structure_to_json(S)))
    return OK


def cmd_embed(args) -> int:
    S = _load_structure(args.X)
    pts = jsonio.cube_points_to_json(kuratowski_embed(S, args.dims))
    _emit(args, pts, "\n".join(" ".join(p) for p in pts))
    return OK


def cmd_validate(args) -> int:
    S = jsonio.structure_from_json(jsonio.read_json(args.X))
    report = validate_structure(S)
    witnesses = [{"axiom": name, "witness": list(w)} for name, w in report.violations]
    _emit(args, {"ok": report.ok, "violations": witnesses}, str(report))
    return OK if report.ok else INVALID


def cmd_random(args) -> int:
    signature = {}
    for item in args.signature.split(",") if args.signature else []:
        name, arity = item.split(":")
        signature[name] = int(arity)
    S = random_structure(args.seed, args.points, signature, density=args.density)
    print(jsonio.dumps(jsonio.structure_to_json(S)))
    return OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")

    p = argparse.ArgumentParser(prog="cmstruct", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("isometry", parents=[common], help="isometric isomorphism witness")
    s.add_argument("X")
    s.add_argument("Y")
    s.add_argument("--oracle", action="store_true", help="use exhaustive search")
    s.set_defaults(func=cmd_isometry)

    s = sub.add_parser("signature", parents=[common], help="canonical ordering signature")
    s.add_argument("X")
    s.add_argument("--max-points", type=int, default=8)
    s.set_defaults(func=cmd_signature)

    s = sub.add_parser("distortion", parents=[common], help="optimal bi-Lipschitz constant")
    s.add_argument("X")
    s.add_argument("Y")
    s.set_defaults(func=cmd_distortion)

    s = sub.add_parser("dominates", parents=[common], help="perturbation dominance at constant c")
    s.add_argument("X")
    s.add_argument("Y")
    s.add_argument("--c", required=True)
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--patterns")
    g.add_argument("--canonical", action="store_true")
    s.set_defaults(func=cmd_dominates)

    s = sub.add_parser("group", parents=[common], help="group encodings")
    s.add_argument("action", choices=["roelcke", "wordmetric", "alexandrov", "translate"])
    s.add_argument("input")
    s.add_argument("--gens")
    s.add_argument("--weights")
    s.add_argument("--base", type=int, default=0)
    s.add_argument("--a", type=int)
    s.add_argument("--b", type=int)
    s.add_argument("--A", default="")
    s.add_argument("--B", default="")
    s.set_defaults(func=cmd_group)

    s = sub.add_parser("heap", parents=[common], help="heap operations")
    s.add_argument("action", choices=["validate", "from-group", "to-group", "subheaps"])
    s.add_argument("input")
    s.add_argument("--e", type=int, default=0)
    s.set_defaults(func=cmd_heap)

    s = sub.add_parser("stone", parents=[common], help="clopen-algebra encoding")
    s.add_argument("action", choices=["encode", "decode"])
    s.add_argument("input")
    s.set_defaults(func=cmd_stone)

    s = sub.add_parser("embed", parents=[common], help="Kuratowski cube coordinates")
    s.add_argument("X")
    s.add_argument("--dims", type=int, required=True)
    s.set_defaults(func=cmd_embed)

    s = sub.add_parser("validate", parents=[common], help="check a structure file")
    s.add_argument("X")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("random", help="random structure for test corpora")
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--points", type=int, default=4)
    s.add_argument("--signature", default="R:2", help="e.g. R:2,U:1")
    s.add_argument("--density", type=float, default=0.3)
    s.set_defaults(func=cmd_random)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INVALID if exc.code else OK
    try:
        return args.func(args)
    except (InvalidInput, StructureError, SignatureMismatch, ValueError, KeyError,
            TypeError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INVALID


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
