"""wordlab command line.

Every subcommand prints a single JSON document (top-level key "schema")
on stdout, except the drawing commands (`render`, `ferrers`, and
`class --dot`) which print their document raw.  Domain errors exit with
code 2, budget errors with code 3.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

from . import fair, lattice, render
from .equivalence import (
    ClassSignature,
    final_word,
    init_word,
    minimal_derivation,
)
from .errors import DomainError, ResourceError
from .matrices import equivalent_2binomial, parikh_matrix, precedence_matrix
from .partitions import count_partitions, part_p, part_s
from .words import Word, binom, left_set, right_set, sum_positions

SCHEMA = "wordlab/1"


@dataclass
class CommandResult:
    status: str  # "ok" | "domain_error" | "resource_error"
    payload: dict = field(default_factory=dict)
    diagnostics: str = ""


def _default_jobs() -> int:
    return os.cpu_count() or 1


def _cmd_binom(args) -> dict:
    return {"value": binom(Word(args.word), args.subword)}


def _cmd_leftright(args) -> dict:
    w = Word(args.word)
    left = sorted(left_set(w))
    right = sorted(right_set(w))
    return {
        "left_count": len(left),
        "right_count": len(right),
        "left": [list(p) for p in left],
        "right": [list(p) for p in right],
    }


def _cmd_sums(args) -> dict:
    w = Word(args.word)
    rev = Word(str(w)[::-1], w.alphabet)
    return {
        "sum_positions": {ch: sum_positions(w, ch) for ch in w.alphabet},
        "mirror_sum_positions": {ch: sum_positions(rev, ch) for ch in w.alphabet},
    }


def _cmd_matrices(args) -> dict:
    w = Word(args.word)
    if args.parikh:
        mat = parikh_matrix(w)
        return {"kind": "parikh", **mat.as_dict()}
    if args.pmat_prime:
        mat = precedence_matrix(w, upper_only=True)
        return {"kind": "pmat_prime", **mat.as_dict()}
    mat = precedence_matrix(w)
    return {"kind": "precedence", **mat.as_dict()}


def _cmd_equiv(args) -> dict:
    return {"equivalent": equivalent_2binomial(Word(args.u), Word(args.v))}


def _cmd_derive(args) -> dict:
    derivation = minimal_derivation(Word(args.u), Word(args.v))
    return {"length": len(derivation), "steps": derivation.as_dicts()}


def _cmd_init(args) -> dict:
    return {"word": str(init_word(ClassSignature(args.na, args.nb, args.m)))}


def _cmd_final(args) -> dict:
    return {"word": str(final_word(ClassSignature(args.na, args.nb, args.m)))}


def _cmd_class(args) -> dict:
    sig = ClassSignature(args.na, args.nb, args.m)
    if args.verify:
        ok = lattice.verify_lattice(sig)
        size = len(lattice.enumerate_class(sig))
        return {"lattice": ok, "size": size}
    graph = lattice.cover_graph(sig, relation=args.relation)
    if args.dot:
        return {"document": render.render_class_dot(graph)}
    return graph.as_dict()


def _cmd_partition(args) -> dict:
    w = Word(args.word)
    parts = part_s(w) if args.suffix else part_p(w)
    return {"partition": list(parts)}


def _cmd_count_partitions(args) -> dict:
    return {"value": count_partitions(args.n, args.k, args.l)}


def _cmd_fair(args) -> dict:
    return fair.analyze(Word(args.word)).as_dict()


def _cmd_fair_count(args) -> dict:
    method = "brute" if args.method == "brute" else "signed_sum"
    return {"value": fair.fair_count(args.n, method, jobs=args.jobs)}


def _cmd_fair_length(args) -> dict:
    return {"value": fair.fair_length(Word(args.word))}


def _cmd_fair_factors(args) -> dict:
    factors = fair.fair_factor_census(Word(args.word))
    return {"factors": sorted(factors, key=lambda f: (len(f), str(f)))}


def _cmd_lsq(args) -> dict:
    w = Word(args.word)
    alpha, beta = fair.least_squares_fit(w)
    return {
        "alpha": {"num": alpha.numerator, "den": alpha.denominator},
        "beta": {"num": beta.numerator, "den": beta.denominator},
        "fair": beta == 0,
    }


def _cmd_balanced_fair(args) -> dict:
    return {"word": str(fair.construct_balanced_fair(args.k, args.l))}


def _cmd_tm_audit(args) -> dict:
    return {"value": fair.thue_morse_fair_length_audit(args.len, jobs=args.jobs)}


def _cmd_render(args) -> dict:
    w = Word(args.word)
    style = "svg" if args.svg else "ascii"
    if args.diagonal:
        return {"document": render.render_diagonal(w, style)}
    shade = {"left-right": "left_right"}.get(args.shade, args.shade)
    return {"document": render.render_line(w, style, shade)}


def _cmd_ferrers(args) -> dict:
    return {"document": render.render_ferrers(args.parts)}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wordlab",
        description="Scattered-subword combinatorics of binary words.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("binom", help="count occurrences of a subword")
    p.add_argument("word")
    p.add_argument("subword")
    p.set_defaults(handler=_cmd_binom)

    p = sub.add_parser("leftright", help="cells left/right of the broken line")
    p.add_argument("word")
    p.set_defaults(handler=_cmd_leftright)

    p = sub.add_parser("sums", help="sums of letter positions, word and reverse")
    p.add_argument("word")
    p.set_defaults(handler=_cmd_sums)

    p = sub.add_parser("matrices", help="precedence or Parikh matrix")
    p.add_argument("word")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--parikh", action="store_true")
    group.add_argument("--precedence", action="store_true")
    group.add_argument("--pmat-prime", dest="pmat_prime", action="store_true")
    p.set_defaults(handler=_cmd_matrices)

    p = sub.add_parser("equiv", help="test 2-binomial equivalence")
    p.add_argument("u")
    p.add_argument("v")
    p.set_defaults(handler=_cmd_equiv)

    p = sub.add_parser("derive", help="minimal rewriting chain between words")
    p.add_argument("u")
    p.add_argument("v")
    p.set_defaults(handler=_cmd_derive)

    for name, handler in (("init", _cmd_init), ("final", _cmd_final)):
        p = sub.add_parser(name, help=f"{name} word of the class (na, nb, m)")
        p.add_argument("na", type=int)
        p.add_argument("nb", type=int)
        p.add_argument("m", type=int)
        p.set_defaults(handler=handler)

    p = sub.add_parser("class", help="enumerate a class and its step graph")
    p.add_argument("na", type=int)
    p.add_argument("nb", type=int)
    p.add_argument("m", type=int)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--dot", action="store_true", help="emit DOT")
    group.add_argument("--verify", action="store_true", help="check the lattice")
    p.add_argument("--relation", choices=["spa", "full"], default="spa")
    p.set_defaults(handler=_cmd_class)

    p = sub.add_parser("partition", help="partition image of a word")
    p.add_argument("word")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--prefix", action="store_true")
    group.add_argument("--suffix", action="store_true")
    p.set_defaults(handler=_cmd_partition)

    p = sub.add_parser("count-partitions", help="partitions of n, <=k parts <=l")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("l", type=int)
    p.set_defaults(handler=_cmd_count_partitions)

    p = sub.add_parser("fair", help="full fairness record of a word")
    p.add_argument("word")
    p.set_defaults(handler=_cmd_fair)

    p = sub.add_parser("fair-count", help="number of fair words of a length")
    p.add_argument("n", type=int)
    p.add_argument("--method", choices=["brute", "signed"], default="signed")
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.set_defaults(handler=_cmd_fair_count)

    p = sub.add_parser("fair-length", help="least fair factorization size")
    p.add_argument("word")
    p.set_defaults(handler=_cmd_fair_length)

    p = sub.add_parser("fair-factors", help="all fair factors of a word")
    p.add_argument("word")
    p.set_defaults(handler=_cmd_fair_factors)

    p = sub.add_parser("lsq", help="exact least-squares line of a 0/1 word")
    p.add_argument("word")
    p.set_defaults(handler=_cmd_lsq)

    p = sub.add_parser("balanced-fair", help="palindromic balanced fair word")
    p.add_argument("k", type=int)
    p.add_argument("l", type=int)
    p.set_defaults(handler=_cmd_balanced_fair)

    p = sub.add_parser("tm-audit", help="max fair length over Thue-Morse factors")
    p.add_argument("len", type=int)
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.set_defaults(handler=_cmd_tm_audit)

    p = sub.add_parser("render", help="draw a word")
    p.add_argument("word")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--svg", action="store_true")
    group.add_argument("--ascii", action="store_true")
    p.add_argument(
        "--shade", choices=["left-right", "steps", "none"], default="none"
    )
    p.add_argument("--diagonal", action="store_true")
    p.set_defaults(handler=_cmd_render)

    p = sub.add_parser("ferrers", help="Ferrers diagram of a partition")
    p.add_argument("parts", type=int, nargs="*")
    p.set_defaults(handler=_cmd_ferrers)

    return parser


def dispatch(argv) -> CommandResult:
    """Run one command line; usage errors raise SystemExit via argparse."""
    args = build_parser().parse_args(argv)
    try:
        return CommandResult("ok", args.handler(args))
    except DomainError as exc:
        return CommandResult("domain_error", {}, str(exc))
    except ResourceError as exc:
        return CommandResult("resource_error", {}, str(exc))


_EXIT_CODES = {"ok": 0, "domain_error": 2, "resource_error": 3}


def main(argv=None) -> int:
    result = dispatch(sys.argv[1:] if argv is None else argv)
    if result.status == "ok":
        if "document" in result.payload:
            doc = result.payload["document"]
            sys.stdout.write(doc if doc.endswith("\n") else doc + "\n")
        else:
            json.dump({"schema": SCHEMA, **result.payload}, sys.stdout)
            sys.stdout.write("\n")
    else:
        json.dump(
            {"schema": SCHEMA, "status": result.status, "error": result.diagnostics},
            sys.stdout,
        )
        sys.stdout.write("\n")
        print(f"wordlab: {result.diagnostics}", file=sys.stderr)
    return _EXIT_CODES[result.status]
