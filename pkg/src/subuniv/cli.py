"""Command-line front end.

Exit status: 0 on success, 1 on domain errors (message on stderr), 2 on
usage errors.  ``--json`` switches any subcommand to a single JSON object
``{"command", "inputs", "result"}``; the schema is documented in
docs/json-output.md.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import oracle as oracle_mod
from .automaton import DEFAULT_STATE_BUDGET, Alphabet, Automaton
from .counting import INFINITE, count
from .deciders import (DEFAULT_SIGMA_CAP, UNBOUNDED, decide_asu, decide_esu,
                       max_universality_index, min_universality_index,
                       witness_k_universal)
from .errors import SubunivError
from .ranking import rank, unrank
from .regex import compile_regex
from .universality import arch_factorize, iota

PUBLIC_COMMANDS = ("iota", "arches", "esu", "asu", "min-index", "max-index",
                   "witness", "count", "rank", "unrank", "compile", "trim",
                   "determinize")


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 0:
        raise argparse.ArgumentTypeError("value must be non-negative")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="subuniv",
        description="Decide, count and rank k-subsequence-universal words "
                    "in regular languages.")
    subs = parser.add_subparsers(dest="command", required=True,
                                 metavar="{" + ",".join(PUBLIC_COMMANDS) + "}")

    source = argparse.ArgumentParser(add_help=False)
    group = source.add_mutually_exclusive_group(required=True)
    group.add_argument("--automaton", metavar="FILE",
                       help="automaton file (see README for the format)")
    group.add_argument("--regex", metavar="PATTERN",
                       help="regular expression; needs --alphabet")
    source.add_argument("--alphabet", metavar="SYMS",
                        help="alphabet symbols in order, e.g. 'abc'")
    source.add_argument("--sigma-cap", type=_nonneg_int, default=DEFAULT_SIGMA_CAP,
                        metavar="INT", help="cap on alphabet size for 2**sigma tables")

    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--json", action="store_true",
                        help="emit one JSON object instead of text")

    word_alphabet = argparse.ArgumentParser(add_help=False)
    word_alphabet.add_argument("--alphabet", metavar="SYMS", required=True,
                               help="alphabet symbols in order, e.g. 'abc'")
    word_alphabet.add_argument("word", help="the word to analyse")

    p = subs.add_parser("iota", parents=[word_alphabet, output],
                        help="universality index of a word")
    p = subs.add_parser("arches", parents=[word_alphabet, output],
                        help="arch factorization of a word")

    for name, text in (("esu", "does some accepted word have iota >= k"),
                       ("asu", "does every accepted word have iota >= k"),
                       ("witness", "an accepted word with iota >= k, if any")):
        p = subs.add_parser(name, parents=[source, output], help=text)
        p.add_argument("-k", type=_nonneg_int, required=True, metavar="INT")

    subs.add_parser("min-index", parents=[source, output],
                    help="minimum universality index over the language")
    subs.add_parser("max-index", parents=[source, output],
                    help="maximum universality index, or 'unbounded'")

    scoped = argparse.ArgumentParser(add_help=False)
    scope = scoped.add_mutually_exclusive_group(required=True)
    scope.add_argument("--length", type=_nonneg_int, metavar="INT",
                       help="exact word length")
    scope.add_argument("--max-length", type=_nonneg_int, metavar="INT",
                       help="maximum word length")
    scope.add_argument("--total", action="store_true",
                       help="the whole language (may be infinite)")
    scoped.add_argument("--determinize", action="store_true",
                        help="apply the subset construction first")
    scoped.add_argument("--state-budget", type=_nonneg_int,
                        default=DEFAULT_STATE_BUDGET, metavar="INT",
                        help="state cap for --determinize")

    p = subs.add_parser("count", parents=[source, scoped, output],
                        help="count k-universal accepting paths or words")
    p.add_argument("-k", type=_nonneg_int, required=True, metavar="INT")
    p.add_argument("--perfect", action="store_true",
                   help="only labels with exactly k arches and empty rest")
    unit = p.add_mutually_exclusive_group()
    unit.add_argument("--paths", dest="unit", action="store_const", const="paths",
                      help="count accepting paths (default)")
    unit.add_argument("--words", dest="unit", action="store_const", const="words",
                      help="count words; needs a deterministic automaton")
    p.set_defaults(unit="paths")

    p = subs.add_parser("rank", parents=[source, scoped, output],
                        help="number of smaller k-universal accepted words")
    p.add_argument("-k", type=_nonneg_int, required=True, metavar="INT")
    p.add_argument("word", help="the word to rank (need not be a member)")

    p = subs.add_parser("unrank", parents=[source, output],
                        help="the member with the given rank")
    p.add_argument("-k", type=_nonneg_int, required=True, metavar="INT")
    p.add_argument("index", type=_nonneg_int, help="rank to invert")
    scope = p.add_mutually_exclusive_group(required=True)
    scope.add_argument("--length", type=_nonneg_int, metavar="INT")
    scope.add_argument("--max-length", type=_nonneg_int, metavar="INT")
    p.add_argument("--determinize", action="store_true")
    p.add_argument("--state-budget", type=_nonneg_int,
                   default=DEFAULT_STATE_BUDGET, metavar="INT")

    p = subs.add_parser("compile", parents=[output],
                        help="compile a regex to an automaton file")
    p.add_argument("--regex", metavar="PATTERN", required=True)
    p.add_argument("--alphabet", metavar="SYMS", required=True)

    p = subs.add_parser("trim", parents=[output],
                        help="drop states that are not on any accepting path")
    p.add_argument("--automaton", metavar="FILE", required=True)

    p = subs.add_parser("determinize", parents=[output],
                        help="subset construction")
    p.add_argument("--automaton", metavar="FILE", required=True)
    p.add_argument("--state-budget", type=_nonneg_int,
                   default=DEFAULT_STATE_BUDGET, metavar="INT")

    # hidden debugging entry point: enumerate the language brute-force
    p = subs.add_parser("oracle", parents=[source, output])
    p.add_argument("--max-length", type=_nonneg_int, required=True, metavar="INT")
    p.add_argument("-k", type=_nonneg_int, default=0, metavar="INT")

    return parser


def _load_automaton(args) -> tuple[Automaton, dict]:
    if getattr(args, "automaton", None):
        with open(args.automaton, encoding="utf-8") as handle:
            text = handle.read()
        return Automaton.parse(text), {"automaton": args.automaton}
    if not args.alphabet:
        raise SubunivError("--regex needs --alphabet")
    alphabet = Alphabet.from_string(args.alphabet)
    return compile_regex(args.regex, alphabet), \
        {"regex": args.regex, "alphabet": args.alphabet}


def _maybe_determinize(a: Automaton, args) -> Automaton:
    if getattr(args, "determinize", False):
        return a.determinize(state_budget=args.state_budget)
    return a


def _scope_kwargs(args) -> dict:
    if args.length is not None:
        return {"length": args.length}
    if args.max_length is not None:
        return {"max_length": args.max_length}
    return {}


def _scope_inputs(args) -> dict:
    if args.length is not None:
        return {"scope": "exact", "length": args.length}
    if args.max_length is not None:
        return {"scope": "at-most", "length": args.max_length}
    return {"scope": "total"}


def _run(args) -> tuple[object, str]:
    """Returns (inputs+result JSON payload, text rendering)."""
    command = args.command

    if command in ("iota", "arches"):
        alphabet = Alphabet.from_string(args.alphabet)
        inputs = {"alphabet": args.alphabet, "word": args.word}
        if command == "iota":
            value = iota(args.word, alphabet)
            return {"inputs": inputs, "result": value}, str(value)
        fact = arch_factorize(args.word, alphabet)
        result = {"arches": list(fact.arches), "rest": fact.rest,
                  "index": fact.index}
        text = "\n".join(["arches: " + " ".join(fact.arches),
                          "rest: " + fact.rest,
                          f"index: {fact.index}"])
        return {"inputs": inputs, "result": result}, text

    if command == "compile":
        alphabet = Alphabet.from_string(args.alphabet)
        a = compile_regex(args.regex, alphabet)
        text = a.serialize()
        return {"inputs": {"regex": args.regex, "alphabet": args.alphabet},
                "result": {"automaton": text}}, text.rstrip("\n")

    if command in ("trim", "determinize"):
        a, inputs = _load_automaton(args)
        out = a.trim() if command == "trim" else a.determinize(
            state_budget=args.state_budget)
        text = out.serialize()
        return {"inputs": inputs, "result": {"automaton": text}}, text.rstrip("\n")

    a, inputs = _load_automaton(args)

    if command in ("esu", "asu"):
        inputs["k"] = args.k
        if command == "esu":
            value = decide_esu(a, args.k, sigma_cap=args.sigma_cap)
        else:
            value = decide_asu(a, args.k)
        return {"inputs": inputs, "result": value}, "true" if value else "false"

    if command == "min-index":
        value = min_universality_index(a)
        result = "empty" if value is None else value
        return {"inputs": inputs, "result": result}, str(result)

    if command == "max-index":
        value = max_universality_index(a, sigma_cap=args.sigma_cap)
        if value is None:
            result = "empty"
        elif value is UNBOUNDED:
            result = "unbounded"
        else:
            result = value
        return {"inputs": inputs, "result": result}, str(result)

    if command == "witness":
        inputs["k"] = args.k
        word = witness_k_universal(a, args.k, sigma_cap=args.sigma_cap)
        return {"inputs": inputs, "result": word}, word if word is not None else "none"

    if command == "count":
        a = _maybe_determinize(a, args)
        inputs.update(_scope_inputs(args))
        inputs.update({"k": args.k, "perfect": args.perfect, "unit": args.unit})
        value = count(a, args.k, perfect=args.perfect, unit=args.unit,
                      sigma_cap=args.sigma_cap, **_scope_kwargs(args))
        result = "infinite" if value is INFINITE else value
        return {"inputs": inputs, "result": result}, str(result)

    if command == "rank":
        a = _maybe_determinize(a, args)
        inputs.update(_scope_inputs(args))
        inputs.update({"k": args.k, "word": args.word})
        value = rank(a, args.word, args.k, sigma_cap=args.sigma_cap,
                     **_scope_kwargs(args))
        result = "infinite" if value is INFINITE else value
        return {"inputs": inputs, "result": result}, str(result)

    if command == "unrank":
        a = _maybe_determinize(a, args)
        scope = ({"length": args.length} if args.length is not None
                 else {"max_length": args.max_length})
        inputs.update({"k": args.k, "index": args.index,
                       **({"scope": "exact", "length": args.length}
                          if args.length is not None
                          else {"scope": "at-most", "length": args.max_length})})
        word = unrank(a, args.k, args.index, sigma_cap=args.sigma_cap, **scope)
        return {"inputs": inputs, "result": word}, word

    if command == "oracle":
        inputs.update({"k": args.k, "max_length": args.max_length})
        language = oracle_mod.enumerate_accepted(a, args.max_length)
        pairs = [[w, i] for w, i in zip(language.words, language.iotas)]
        text = "\n".join(f"{w or '(empty)'} {i}" for w, i in pairs) or "(no words)"
        return {"inputs": inputs, "result": {"words": pairs}}, text

    raise AssertionError(f"unhandled command {command}")


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        payload, text = _run(args)
    except (SubunivError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps({"command": args.command, **payload}))
    else:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
