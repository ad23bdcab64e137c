"""Command-line front end.

Exit codes: 0 success or true verdict, 1 false verdict, 2 usage or input
error, 3 disagreement between characterizations.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import generators
from .complexity import WindowError, WindowSpec, complexity_profile
from .crossval import BudgetError, crossvalidate
from .generators import MorphismError
from .richness import analyze, characterization_matrix, report_dict
from .words import Alphabet, AlphabetError

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_VIOLATION = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    word: str | None = None
    file: str | None = None
    alphabet: Alphabet | None = None
    fmt: str = "json"
    budget: int | None = None
    workers: int = 1


def _read_bytes(path: str) -> str:
    if path == "-":
        data = sys.stdin.buffer.read()
    else:
        try:
            with open(path, "rb") as fh:
                data = fh.read()
        except OSError as e:
            raise UsageError(f"cannot read {path}: {e.strerror}") from None
    text = data.decode("latin-1")
    if text.endswith("\r\n"):
        return text[:-2]
    return text[:-1] if text.endswith("\n") else text


def load_word(cfg: RunConfig) -> str:
    sources = [s for s in (cfg.word, cfg.file) if s is not None]
    if len(sources) != 1:
        raise UsageError("give exactly one input: a word, --file PATH, or '-' for stdin")
    if cfg.file is not None:
        w = _read_bytes(cfg.file)
    elif cfg.word == "-":
        w = _read_bytes("-")
    else:
        w = cfg.word
    if cfg.alphabet is not None:
        try:
            cfg.alphabet.validate(w)
        except AlphabetError as e:
            raise UsageError(str(e)) from None
    return w


def _dump(obj: dict) -> str:
    return json.dumps(obj, ensure_ascii=False)


def _table(d: dict) -> str:
    lines = []
    for k, v in d.items():
        if isinstance(v, dict):
            for kk, vv in v.items():
                lines.append(f"{k + '.' + kk:<20} {json.dumps(vv)}")
        else:
            lines.append(f"{k:<20} {json.dumps(v, ensure_ascii=False)}")
    return "\n".join(lines)


def cmd_analyze(cfg: RunConfig) -> int:
    w = load_word(cfg)
    d = report_dict(w, analyze(w))
    print(_dump(d) if cfg.fmt == "json" else _table(d))
    return EXIT_OK if d["isRich"] else EXIT_FALSE


def cmd_characterize(cfg: RunConfig) -> int:
    w = load_word(cfg)
    m = characterization_matrix(w)
    d = report_dict(w, analyze(w), m)
    print(_dump(d) if cfg.fmt == "json" else _table(d))
    if not m.all_agree or d["isRich"] != m.verdicts[next(iter(m.verdicts))]:
        return EXIT_VIOLATION
    return EXIT_OK if d["isRich"] else EXIT_FALSE


def cmd_crossval(args: argparse.Namespace, cfg: RunConfig) -> int:
    kw = {} if cfg.budget is None else {"budget": cfg.budget}
    try:
        summary = crossvalidate(args.alphabet_size, args.maxlen, workers=cfg.workers, **kw)
    except (BudgetError, ValueError) as e:
        raise UsageError(str(e)) from None
    print(_dump(summary.to_dict()) if cfg.fmt == "json" else summary.table(), end="\n" if cfg.fmt == "json" else "")
    if summary.disagreements:
        print(f"counterexample: {summary.first_counterexample}", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_generate(args: argparse.Namespace) -> int:
    try:
        if args.kind == "fibonacci":
            w = generators.fibonacci_word(args.n)
        elif args.kind == "morphic":
            w = generators.morphic_prefix(generators.Morphism.parse(args.rules), args.seed, args.n)
        elif args.kind == "periodic":
            w = generators.periodic_prefix(args.block, args.n)
        elif args.kind == "psi-fib":
            w = generators.psi_of_fibonacci(args.k, args.n)
        else:
            w = generators.kleene_staircase(args.n, args.mode)
    except (MorphismError, ValueError) as e:
        raise UsageError(str(e)) from None
    print(w)
    if args.check:
        d = report_dict(w, analyze(w))
        del d["word"]
        print(_dump(d), file=sys.stderr)
        return EXIT_OK if d["isRich"] else EXIT_FALSE
    return EXIT_OK


def cmd_complexity(args: argparse.Namespace, cfg: RunConfig) -> int:
    if args.periodic is not None:
        spec = WindowSpec.periodic(args.periodic, args.max_n, args.window)
    elif args.fibonacci is not None:
        spec = WindowSpec.prefix(generators.fibonacci_word(args.fibonacci))
    else:
        w = load_word(RunConfig("complexity", file=args.file, alphabet=cfg.alphabet))
        spec = WindowSpec.prefix(w)
    try:
        profile = complexity_profile(spec, args.max_n)
    except (WindowError, ValueError) as e:
        raise UsageError(str(e)) from None
    if cfg.fmt == "json":
        print(profile.to_json())
    else:
        print(profile.table(), end="")
    return EXIT_OK if profile.holds else EXIT_FALSE


def _positive(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {s}")
    return v


def _nonneg(s: str) -> int:
    v = int(s)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {s}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="richwords", description="Palindromic richness of finite words.")
    sub = p.add_subparsers(dest="command", required=True)

    def add_input(sp):
        sp.add_argument("word", nargs="?", help="the word itself, or '-' to read stdin")
        sp.add_argument("--file", help="read the word from a file (trailing newline stripped)")
        sp.add_argument("--alphabet", type=_positive, metavar="K",
                        help="restrict symbols to the first K lowercase letters")
        sp.add_argument("--format", choices=("json", "table"), default="json")

    add_input(sub.add_parser("analyze", help="palindrome count, defect and richness verdict"))
    add_input(sub.add_parser("characterize", help="evaluate all seven characterizations"))

    cv = sub.add_parser("crossval", help="exhaustive cross-validation of the characterizations")
    cv.add_argument("--alphabet", dest="alphabet_size", type=_positive, required=True, metavar="K")
    cv.add_argument("--maxlen", type=_nonneg, required=True)
    cv.add_argument("--workers", type=_positive, default=1)
    cv.add_argument("--budget", type=_positive)
    cv.add_argument("--format", choices=("json", "table"), default="table")

    gen = sub.add_parser("generate", help="print a prefix of an example word")
    gen.add_argument("--check", action="store_true", help="also analyze the word (report on stderr)")
    kinds = gen.add_subparsers(dest="kind", required=True)
    kinds.add_parser("fibonacci").add_argument("n", type=_nonneg)
    m = kinds.add_parser("morphic")
    m.add_argument("rules", help='rules such as "a=aba;b=bb"')
    m.add_argument("--seed", default="a")
    m.add_argument("n", type=_nonneg)
    per = kinds.add_parser("periodic")
    per.add_argument("block")
    per.add_argument("n", type=_nonneg)
    psi = kinds.add_parser("psi-fib")
    psi.add_argument("--k", type=_nonneg, default=1)
    psi.add_argument("n", type=_nonneg)
    st = kinds.add_parser("staircase")
    st.add_argument("--mode", type=int, choices=(1, 2), default=2)
    st.add_argument("n", type=_nonneg)
    for sp in kinds.choices.values():
        sp.add_argument("--check", action="store_true", default=argparse.SUPPRESS)

    cx = sub.add_parser("complexity", help="factor/palindromic complexity and the identity residuals")
    src = cx.add_mutually_exclusive_group(required=True)
    src.add_argument("--periodic", metavar="BLOCK")
    src.add_argument("--fibonacci", type=_nonneg, metavar="LENGTH")
    src.add_argument("--file", help="a long prefix of a uniformly recurrent word ('-' for stdin)")
    cx.add_argument("--max-n", type=_nonneg, required=True)
    cx.add_argument("--window", type=_positive, help="override the periodic window length")
    cx.add_argument("--alphabet", type=_positive, metavar="K")
    cx.add_argument("--format", choices=("json", "table"), default="table")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(command=args.command, fmt=getattr(args, "format", "json"))
    if args.command in ("analyze", "characterize", "complexity") and args.alphabet:
        cfg.alphabet = Alphabet.first(args.alphabet)
    try:
        if args.command in ("analyze", "characterize"):
            cfg.word, cfg.file = args.word, args.file
            return cmd_analyze(cfg) if args.command == "analyze" else cmd_characterize(cfg)
        if args.command == "crossval":
            cfg.workers, cfg.budget = args.workers, args.budget
            return cmd_crossval(args, cfg)
        if args.command == "generate":
            return cmd_generate(args)
        return cmd_complexity(args, cfg)
    except UsageError as e:
        print(f"richwords: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
