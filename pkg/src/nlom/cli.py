"""``nlom`` command line: validate, parse, decompose, implied, realize.

Exit status is 0 on success, 1 when a document is invalid or cannot be
modelled, and 2 when a file cannot be read or written. Output is
line-oriented UTF-8 and follows the order of the files given.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Sequence

from . import __version__
from .dump import dumps, write_atomic
from .errors import NlomError, SchemaError
from .markup import parse_markup
from .realizer import realize_basic
from .schema import validate_schema
from .sentences import (
    SimpleSentence,
    build_sentence,
    decompose,
    iter_simple_sentences,
    realize_simple,
    top_simple_sentences,
)

EXIT_OK, EXIT_DOMAIN, EXIT_IO = 0, 1, 2


@dataclass
class Outcome:
    """Result of one file: lines for stdout and stderr, a status, and an optional dump."""

    path: str
    status: int = EXIT_OK
    out: list[str] = field(default_factory=list)
    err: list[str] = field(default_factory=list)
    dump: str | None = None


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _load(path: str):
    root = parse_markup(_read(path))
    report = validate_schema(root)
    if not report.ok:
        raise SchemaError("; ".join(str(i) for i in report.issues), report.issues)
    return build_sentence(root)


def cmd_validate(path: str, opts: argparse.Namespace) -> Outcome:
    o = Outcome(path)
    report = validate_schema(parse_markup(_read(path)))
    if report.ok:
        o.out.append(f"{path}: ok")
    else:
        o.status = EXIT_DOMAIN
        o.out.extend(f"{path}: {issue}" for issue in report.issues)
    return o


def cmd_parse(path: str, opts: argparse.Namespace) -> Outcome:
    sentence = _load(path)
    o = Outcome(path, out=[sentence.text, sentence.description])
    if opts.json:
        o.dump = dumps(sentence, source_file=path)
    return o


def cmd_decompose(path: str, opts: argparse.Namespace) -> Outcome:
    result = decompose(_load(path))
    return Outcome(path, out=[f"{s.text}\t{result.relation}" for s in result.sentences])


def cmd_implied(path: str, opts: argparse.Namespace) -> Outcome:
    o = Outcome(path)
    for ss in iter_simple_sentences(_load(path)):
        for nc in ss.noun_clauses:
            o.out.append(f"{nc.clause_type}\t{nc.surface_text}\t{nc.implied_text}")
        for rc in ss.relative_clauses:
            o.out.append(f"relative_{rc.form}\t{rc.surface_text}\t{rc.implied_statement}")
    return o


def cmd_realize(path: str, opts: argparse.Namespace) -> Outcome:
    o = Outcome(path)
    for ss in top_simple_sentences(_load(path)):
        o.out.extend(realize_lines(ss, opts.punctuate))
    return o


def realize_lines(ss: SimpleSentence, punctuate: bool = False) -> list[str]:
    if ss.basic_sentences is None:
        return [realize_simple(ss, punctuate)]
    return [realize_basic(bs, punctuate) for bs in ss.basic_sentences]


COMMANDS: dict[str, Callable[[str, argparse.Namespace], Outcome]] = {
    "validate": cmd_validate,
    "parse": cmd_parse,
    "decompose": cmd_decompose,
    "implied": cmd_implied,
    "realize": cmd_realize,
}


def run_one(command: str, path: str, opts: argparse.Namespace) -> Outcome:
    """Run one command on one file, turning failures into an exit status."""
    try:
        return COMMANDS[command](path, opts)
    except NlomError as exc:
        o = Outcome(path, EXIT_DOMAIN, err=[f"{path}: {exc.code}: {exc}"])
        o.err.extend(f"{path}:   {issue}" for issue in getattr(exc, "issues", []))
        return o
    except (OSError, UnicodeDecodeError) as exc:
        return Outcome(path, EXIT_IO, err=[f"{path}: cannot read: {exc}"])


def expand(paths: Sequence[str]) -> list[str]:
    """Directories expand to their ``*.nlml`` files in name order."""
    out = []
    for p in paths:
        path = Path(p)
        if path.is_dir():
            out.extend(str(f) for f in sorted(path.glob("*.nlml")))
        else:
            out.append(p)
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nlom", description="Read NLML documents into a sentence object model.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("files", nargs="+", metavar="FILE", help="NLML files or directories of *.nlml files")
    parser.add_argument("--json", metavar="PATH", help="write the model dump (parse only)")
    parser.add_argument("--punctuate", action="store_true", help="end statements with a period")
    parser.add_argument("--jobs", type=int, default=1, metavar="N", help="process files in N worker processes")
    return parser


def _run_all(command: str, files: list[str], opts: argparse.Namespace) -> list[Outcome]:
    if opts.jobs > 1 and len(files) > 1:
        with ProcessPoolExecutor(max_workers=opts.jobs) as pool:
            return list(pool.map(run_one, [command] * len(files), files, [opts] * len(files)))
    return [run_one(command, f, opts) for f in files]


def _write_dumps(outcomes: list[Outcome], target: str) -> str | None:
    dumps_ = [o.dump for o in outcomes if o.dump is not None]
    if not dumps_:
        return None
    text = dumps_[0] if len(dumps_) == 1 else "[\n" + ",\n".join(d.rstrip("\n") for d in dumps_) + "\n]\n"
    try:
        write_atomic(target, text)
    except OSError as exc:
        return f"{target}: cannot write: {exc}"
    return None


def main(argv: Sequence[str] | None = None) -> int:
    opts = build_parser().parse_args(argv)
    if opts.json and opts.command != "parse":
        print("nlom: --json applies to the parse command only", file=sys.stderr)
        return EXIT_DOMAIN
    outcomes = _run_all(opts.command, expand(opts.files), opts)
    for o in outcomes:
        for line in o.out:
            sys.stdout.write(line + "\n")
        for line in o.err:
            sys.stderr.write(line + "\n")
    status = max((o.status for o in outcomes), default=EXIT_OK)
    if opts.json and status == EXIT_OK:
        problem = _write_dumps(outcomes, opts.json)
        if problem:
            sys.stderr.write(problem + "\n")
            status = EXIT_IO
    return status


if __name__ == "__main__":
    raise SystemExit(main())
