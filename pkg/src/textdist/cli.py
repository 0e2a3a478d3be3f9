"""Command-line front end: ``textdist <subcommand> ...``.

Exit codes: 0 success, 2 I/O or format problem, 3 measure-domain problem
(empty text, d2 on unequal lengths, oversized table), 4 token cap exceeded.
"""
from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import clustering
from .distance import MEASURES, distance
from .errors import DomainError, MatrixFormatError, TableTooLargeError, TokenCapError
from .generator import MAX_SEED, build_model, generate_tokens
from .match import check_discount, position_match_table, row_minima
from .text import DEFAULT_MAX_TOKENS, Text, read_text

log = logging.getLogger("textdist")

EXIT_OK, EXIT_IO, EXIT_DOMAIN, EXIT_CAP = 0, 2, 3, 4


@dataclass
class RunConfig:
    lam: float | None = None
    measure: str = "d4"
    jobs: int = 1
    max_tokens: int | None = DEFAULT_MAX_TOKENS
    ascii_only: bool = False
    latin1_fallback: bool = False
    paths: list[Path] = field(default_factory=list)
    out: Path | None = None

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        return cls(
            lam=getattr(args, "lam", None),
            measure=getattr(args, "measure", "d4"),
            jobs=getattr(args, "jobs", 1),
            max_tokens=args.max_tokens or None,
            ascii_only=args.ascii_only,
            latin1_fallback=args.latin1_fallback,
            paths=[Path(p) for p in getattr(args, "paths", [])],
            out=Path(args.out) if getattr(args, "out", None) else None,
        )

    def load(self, path: Path) -> Text:
        return read_text(path, self.max_tokens, self.ascii_only, self.latin1_fallback)


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _discount(s: str) -> float:
    try:
        lam = float(s)
        check_discount(lam)
    except (ValueError, DomainError):
        raise argparse.ArgumentTypeError(f"lambda must be a number in [0, 1), got {s!r}")
    return lam


def _positive(s: str) -> int:
    n = int(s)
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {s!r}")
    return n


def _seed(s: str) -> int:
    n = int(s)
    if not 0 <= n <= MAX_SEED:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return n


def _sweep(s: str) -> list[float]:
    return [_discount(x) for x in s.split(",") if x.strip()]


def _load(config: RunConfig, path: Path) -> Text:
    try:
        return config.load(path)
    except TokenCapError as e:
        raise CliError(EXIT_CAP, f"{path}: {e.count} tokens exceed the cap of {e.cap}") from e
    except (OSError, UnicodeDecodeError) as e:
        raise CliError(EXIT_IO, f"cannot read {path}: {e}") from e


def _expand(paths: list[Path]) -> list[Path]:
    files = []
    for p in paths:
        if p.is_dir():
            files.extend(sorted(p.glob("*.txt")))
        else:
            files.append(p)
    return files


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        try:
            out.write_text(text, encoding="utf-8")
        except OSError as e:
            raise CliError(EXIT_IO, f"cannot write {out}: {e}") from e


def cmd_pair(args) -> int:
    config = RunConfig.from_args(args)
    a, b = (_load(config, p) for p in config.paths)
    try:
        value = distance(a, b, config.lam, config.measure)
    except DomainError as e:
        if config.measure == "d2" and len(a) != len(b):
            raise CliError(
                EXIT_DOMAIN, f"d2 needs equal lengths: {a.id} has {len(a)}, {b.id} has {len(b)}"
            ) from e
        raise CliError(EXIT_DOMAIN, str(e)) from e
    except TableTooLargeError as e:
        raise CliError(EXIT_DOMAIN, str(e)) from e
    print(f"{value:.6f}")
    return EXIT_OK


def cmd_matrix(args) -> int:
    config = RunConfig.from_args(args)
    if args.sweep is None and config.lam is None:
        raise CliError(EXIT_IO, "matrix needs --lambda or --sweep")
    if args.sweep is not None and config.out is None:
        raise CliError(EXIT_IO, "--sweep needs --out to name the CSV files")
    files = _expand(config.paths)
    corpus, failures = [], []
    for path in files:
        try:
            corpus.append(_load(config, path))
        except CliError as e:
            failures.append(e)
            log.error("%s", e)
    if failures:
        raise CliError(failures[0].code, f"{len(failures)} of {len(files)} files failed")
    for t in corpus:
        if len(t) == 0:
            log.error("%s: no tokens after preprocessing", t.id)
            failures.append(t)
    if failures:
        raise CliError(EXIT_DOMAIN, f"{len(failures)} empty text(s)")

    def progress(k, total, a, b, value):
        log.info("pair %d/%d %s %s %.6f", k, total, a, b, value)

    lams = args.sweep if args.sweep is not None else [config.lam]
    for lam in lams:
        try:
            m = clustering.pairwise_matrix(corpus, lam, config.measure, config.jobs, progress)
        except (DomainError, TableTooLargeError) as e:
            raise CliError(EXIT_DOMAIN, str(e)) from e
        out = config.out
        if args.sweep is not None:
            out = out.with_name(f"{out.stem}-lambda{lam:g}{out.suffix or '.csv'}")
        _emit(clustering.write_matrix_csv(m), out)
        if out is not None:
            log.info("wrote %s", out)
    return EXIT_OK


def cmd_cluster(args) -> int:
    try:
        m = clustering.read_matrix_csv(args.matrix)
    except OSError as e:
        raise CliError(EXIT_IO, f"cannot read {args.matrix}: {e}") from e
    except MatrixFormatError as e:
        raise CliError(EXIT_IO, f"{args.matrix}: {e}") from e
    if len(m) < 2:
        raise CliError(EXIT_IO, f"{args.matrix}: need at least two texts")
    tree = clustering.agglomerate(m, args.linkage)
    text = clustering.serialize_dendrogram(tree, args.format)
    _emit(text + "\n", Path(args.out) if args.out else None)
    if args.cut is not None:
        try:
            parts = clustering.cut(tree, args.cut)
        except ValueError as e:
            raise CliError(EXIT_DOMAIN, str(e)) from e
        for part in parts:
            print("\t".join(part))
    return EXIT_OK


def cmd_tokenize(args) -> int:
    config = RunConfig.from_args(args)
    text = _load(config, Path(args.file))
    for tok in text:
        print(tok)
    return EXIT_OK


def cmd_match(args) -> int:
    config = RunConfig.from_args(args)
    a, b = (_load(config, p) for p in config.paths)
    try:
        if args.dump_table:
            table = position_match_table(a, b, config.lam, max_cells=args.max_cells)
            lines = [",".join(["", *b.tokens])]
            for tok, row in zip(a.tokens, table):
                lines.append(",".join([tok, *(f"{v:.6f}" for v in row)]))
        else:
            lines = [f"{tok},{v:.6f}" for tok, v in zip(a.tokens, row_minima(a, b, config.lam))]
    except (DomainError, TableTooLargeError) as e:
        raise CliError(EXIT_DOMAIN, str(e)) from e
    print("\n".join(lines))
    return EXIT_OK


def cmd_generate(args) -> int:
    config = RunConfig.from_args(args)
    corpus_dir = Path(args.corpus)
    files = _expand([corpus_dir])
    if not files:
        raise CliError(EXIT_IO, f"no .txt files in {corpus_dir}")
    corpus = [_load(config, p) for p in files]
    try:
        model = build_model(corpus)
    except DomainError as e:
        raise CliError(EXIT_DOMAIN, str(e)) from e
    out_dir = config.out or Path(".")
    out_dir.mkdir(parents=True, exist_ok=True)
    for k in range(args.count):
        seed = args.seed + k
        if seed > MAX_SEED:
            raise CliError(EXIT_DOMAIN, "derived seed overflows 64 bits")
        try:
            tokens, restarts = generate_tokens(model, args.length, seed)
        except DomainError as e:
            raise CliError(EXIT_DOMAIN, str(e)) from e
        if restarts:
            log.info("gen-%d-%d: restarted at %s", args.seed, k, restarts)
        path = out_dir / f"gen-{args.seed}-{k}.txt"
        _emit(" ".join(tokens) + "\n", path)
        log.info("wrote %s", path)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-tokens", type=int, default=DEFAULT_MAX_TOKENS,
                        help="token cap per text, 0 disables (default %(default)s)")
    common.add_argument("--ascii-only", action="store_true", help="letters mean ASCII letters")
    common.add_argument("--latin1-fallback", action="store_true",
                        help="decode non-UTF-8 files as Latin-1")
    common.add_argument("-v", "--verbose", action="store_true")
    common.add_argument("-q", "--quiet", action="store_true")

    parser = argparse.ArgumentParser(prog="textdist", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pair", parents=[common], help="distance between two texts")
    p.add_argument("paths", nargs=2, metavar="FILE")
    p.add_argument("--lambda", dest="lam", type=_discount, required=True)
    p.add_argument("--measure", choices=MEASURES, default="d4")
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("matrix", parents=[common], help="pairwise distance matrix as CSV")
    p.add_argument("paths", nargs="+", metavar="PATH", help="text files or directories of .txt")
    p.add_argument("--lambda", dest="lam", type=_discount)
    p.add_argument("--sweep", type=_sweep, help="comma-separated lambdas, one CSV each")
    p.add_argument("--measure", choices=("d4", "d2", "onegram"), default="d4")
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("cluster", parents=[common], help="dendrogram from a matrix CSV")
    p.add_argument("matrix")
    p.add_argument("--linkage", choices=clustering.LINKAGES, default="average")
    p.add_argument("--format", choices=("newick", "json"), default="newick")
    p.add_argument("--cut", type=_positive)
    p.add_argument("--out")
    p.set_defaults(func=cmd_cluster)

    p = sub.add_parser("tokenize", parents=[common], help="print one token per line")
    p.add_argument("file")
    p.set_defaults(func=cmd_tokenize)

    p = sub.add_parser("match", parents=[common], help="position matches of two short texts")
    p.add_argument("paths", nargs=2, metavar="FILE")
    p.add_argument("--lambda", dest="lam", type=_discount, required=True)
    p.add_argument("--dump-table", action="store_true", help="print the full table as CSV")
    p.add_argument("--max-cells", type=int, default=2000 * 2000)
    p.set_defaults(func=cmd_match)

    p = sub.add_parser("generate", parents=[common], help="Markov-chain fake texts")
    p.add_argument("--corpus", required=True, help="directory of .txt training files")
    p.add_argument("--length", type=_positive, required=True)
    p.add_argument("--seed", type=_seed, required=True)
    p.add_argument("--count", type=_positive, default=1)
    p.add_argument("--out", help="output directory (default: current directory)")
    p.set_defaults(func=cmd_generate, max_tokens=0)  # training corpora are not capped by default
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    level = logging.WARNING if args.quiet else logging.DEBUG if args.verbose else logging.INFO
    logging.basicConfig(level=level, format="%(message)s", stream=sys.stderr, force=True)
    try:
        return args.func(args)
    except CliError as e:
        print(f"textdist: {e}", file=sys.stderr)
        return e.code


if __name__ == "__main__":
    sys.exit(main())
