"""Command-line front end: ``transguard <subcommand> ...``.

Exit codes: 0 ok, 1 domain error (parse failure, focal not found, empty
corpus), 2 usage error, 3 translator failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Sequence

from .collapse import classify
from .config import ConfigError, load_config, merge, pipeline_config
from .harness import EmptyCorpus, ExternalChecker, fixtures_from_corpus, format_table, ingest, run_eval
from .pipeline import run_pipeline
from .rules.focal import DEFAULT_FOCAL, find_focal
from .rules.post import apply_post
from .rules.pre import Direction, apply_pre
from .rules.records import MutationRecord, RuleError
from .syntax.lexer import Language, SyntaxProblem
from .syntax.parser import parse_source
from .translators import (
    HttpTranslator,
    IdentityTranslator,
    MockTranslator,
    SubprocessTranslator,
    TranslatorFailure,
)

log = logging.getLogger("transguard")

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_TRANSLATOR = 0, 1, 2, 3


class UsageError(Exception):
    pass


class DomainError(Exception):
    pass


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--direction", choices=["j2p", "p2j"], help="translation direction")
    p.add_argument("--focal", help=f"focal method name (default {DEFAULT_FOCAL})")
    p.add_argument("--rules", help="r1,r2,r3a,r3b,r4 | all | none")
    p.add_argument("--arr-threshold", type=int, dest="arr_threshold")
    p.add_argument("--prune-mode", choices=["count", "match"], dest="prune_mode")
    p.add_argument("--config", help="JSON config file; flags override it")
    p.add_argument("--lenient", action="store_true", default=None, help="fall back to opaque statements")
    p.add_argument("--records", help="write MutationRecords as JSON to this path")
    p.add_argument("-o", "--output", help="write the result here instead of standard output")


def _translator_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--translator-cmd", dest="translator_cmd", help='command to run; "mock" echoes the input')
    p.add_argument("--translator-url", dest="translator_url")
    p.add_argument("--timeout", type=float, dest="timeout_s")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="transguard", description="Rule-based guard rails around a code translator.")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("preprocess", help="apply R1-R3 to a source file")
    p.add_argument("file")
    p.add_argument("--lang", choices=["java", "python"])
    _common(p)

    p = sub.add_parser("postprocess", help="apply R4 to a translation")
    p.add_argument("file", help="translated code")
    p.add_argument("--source", required=True, help="the (pre-processed) source the translation came from")
    _common(p)

    p = sub.add_parser("pipeline", help="preprocess, translate and postprocess one file")
    p.add_argument("file")
    _common(p)
    _translator_flags(p)

    p = sub.add_parser("detect-collapse", help="classify translator output")
    p.add_argument("file")
    p.add_argument("--lang", choices=["java", "python"])
    p.add_argument("--original", help="source file; enables the structural check")
    p.add_argument("--focal", help=f"focal method name (default {DEFAULT_FOCAL})")
    p.add_argument("--json", action="store_true")
    p.add_argument("--config")

    p = sub.add_parser("eval", help="run the corpus evaluation")
    p.add_argument("corpus")
    p.add_argument("--report", choices=["json", "csv", "md", "text"], default="text")
    p.add_argument("--mock-profiles", dest="mock_profiles", help="profiles for the mock translator")
    p.add_argument("--seed", type=int)
    p.add_argument("--check-compile", dest="check_compile", help="external compile command with {file}")
    p.add_argument("--check-run", dest="check_run")
    p.add_argument("--check-reference", dest="check_reference")
    p.add_argument("--workers", type=int)
    _common(p)
    _translator_flags(p)
    return parser


def _values(args: argparse.Namespace) -> dict[str, Any]:
    flags = {
        "direction": getattr(args, "direction", None),
        "focal": getattr(args, "focal", None),
        "rules": getattr(args, "rules", None),
        "arr_threshold": getattr(args, "arr_threshold", None),
        "prune.mode": getattr(args, "prune_mode", None),
        "lenient": getattr(args, "lenient", None),
        "translator.cmd": getattr(args, "translator_cmd", None),
        "translator.url": getattr(args, "translator_url", None),
        "timeout_s": getattr(args, "timeout_s", None),
        "seed": getattr(args, "seed", None),
        "mock.profiles": getattr(args, "mock_profiles", None),
        "lang": getattr(args, "lang", None),
    }
    return merge(load_config(getattr(args, "config", None)), flags)


def _language_of(path: str, explicit: str | None) -> Language:
    if explicit:
        return Language.coerce(explicit)
    suffix = Path(path).suffix
    if suffix == ".java":
        return Language.JAVA
    if suffix == ".py":
        return Language.PYTHON
    raise UsageError(f"cannot tell the language of {path}; pass --lang")


def _direction(values: dict[str, Any], source_lang: Language | None = None) -> Direction:
    if values.get("direction"):
        direction = Direction.coerce(values["direction"])
        if source_lang is not None and direction.source is not source_lang:
            raise UsageError(f"--direction {direction.value} expects {direction.source.value} input")
        return direction
    if source_lang is not None:
        return Direction.J2P if source_lang is Language.JAVA else Direction.P2J
    raise UsageError("--direction is required")


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as err:
        raise UsageError(f"cannot read {path}: {err.strerror}") from None
    except UnicodeDecodeError:
        raise DomainError(f"{path} is not UTF-8") from None


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
        if text and not text.endswith("\n"):
            sys.stdout.write("\n")


def _write_records(path: str | None, records: Sequence[MutationRecord]) -> None:
    if path:
        Path(path).write_text(json.dumps([r.to_json() for r in records], indent=2) + "\n", encoding="utf-8")


def _check_focal(text: str, language: Language, focal: str, lenient: bool) -> None:
    if not text.strip():
        raise DomainError("parse error: empty input")
    try:
        find_focal(parse_source(text, language, lenient=lenient), focal)
    except SyntaxProblem as err:
        raise DomainError(f"parse error: {err}") from None
    except RuleError as err:
        raise DomainError(str(err)) from None


def _adapter(values: dict[str, Any]):
    cmd, url = values.get("translator.cmd"), values.get("translator.url")
    timeout = float(values.get("timeout_s", 120.0))
    if cmd and url:
        raise UsageError("give either --translator-cmd or --translator-url, not both")
    if url:
        return HttpTranslator(url, timeout)
    if cmd == "mock":
        return IdentityTranslator()
    if cmd:
        return SubprocessTranslator(cmd, timeout)
    raise UsageError("a translator is required (--translator-cmd or --translator-url)")


def cmd_preprocess(args: argparse.Namespace) -> int:
    values = _values(args)
    lang = _language_of(args.file, values.get("lang"))
    direction = _direction(values, lang)
    focal = values.get("focal", DEFAULT_FOCAL)
    text = _read(args.file)
    cfg = pipeline_config(values)
    _check_focal(text, lang, focal, cfg.lenient)
    result = apply_pre(text, direction, cfg.pre_config(focal))
    for rec in result.records:
        log.info("%s applicable=%s applied=%s %s", rec.rule.value, rec.applicable, rec.applied, rec.notes)
    _write_records(args.records, result.records)
    _emit(result.text, args.output)
    return EXIT_OK


def cmd_postprocess(args: argparse.Namespace) -> int:
    values = _values(args)
    src_lang = _language_of(args.source, None) if Path(args.source).suffix in (".java", ".py") else None
    direction = _direction(values, src_lang)
    focal = values.get("focal", DEFAULT_FOCAL)
    src, dst = _read(args.source), _read(args.file)
    cfg = pipeline_config(values)
    _check_focal(src, direction.source, focal, True)
    result = apply_post(src, dst, cfg.prune, direction, focal)
    _write_records(args.records, result.records)
    _emit(result.text, args.output)
    return EXIT_OK


def cmd_pipeline(args: argparse.Namespace) -> int:
    values = _values(args)
    suffix = Path(args.file).suffix
    lang = _language_of(args.file, None) if suffix in (".java", ".py") else None
    direction = _direction(values, lang)
    focal = values.get("focal", DEFAULT_FOCAL)
    adapter = _adapter(values)
    text = _read(args.file)
    cfg = pipeline_config(values)
    _check_focal(text, direction.source, focal, cfg.lenient)
    result = run_pipeline(text, focal, direction, cfg, adapter)
    _write_records(args.records, result.records)
    if result.failed:
        print(f"transguard: translator failure: {result.verdict.failure}", file=sys.stderr)
        return EXIT_TRANSLATOR
    if not result.verdict.clean:
        log.warning("translation collapsed: %s", ", ".join(result.verdict.names()))
    _emit(result.output or "", args.output)
    return EXIT_OK


def cmd_detect(args: argparse.Namespace) -> int:
    values = merge(load_config(args.config), {"lang": args.lang, "focal": args.focal})
    lang = _language_of(args.file, values.get("lang"))
    text = _read(args.file)
    original = None
    if args.original:
        focal = values.get("focal", DEFAULT_FOCAL)
        src_lang = _language_of(args.original, None)
        src = _read(args.original)
        _check_focal(src, src_lang, focal, True)
        original = find_focal(parse_source(src, src_lang, lenient=True), focal)
    thresholds = pipeline_config(values).thresholds
    verdict = classify(text, lang, original, thresholds)
    if args.json:
        sys.stdout.write(json.dumps(verdict.to_json(), sort_keys=True, indent=2) + "\n")
    else:
        sys.stdout.write("\n".join(verdict.names() or ["clean"]) + "\n")
    return EXIT_OK


def cmd_eval(args: argparse.Namespace) -> int:
    values = _values(args)
    try:
        corpus = ingest(args.corpus, values.get("focal", DEFAULT_FOCAL))
    except EmptyCorpus as err:
        raise DomainError(str(err)) from None
    cfg = pipeline_config(values)
    directions = [Direction.coerce(values["direction"])] if values.get("direction") else list(Direction)
    checker = None
    if args.check_compile:
        checker = ExternalChecker(args.check_compile, args.check_run, args.check_reference)
    elif args.check_run or args.check_reference:
        raise UsageError("--check-run needs --check-compile")
    reports = []
    for direction in directions:
        if values.get("translator.cmd") == "mock" or values.get("mock.profiles"):
            profiles = values.get("mock.profiles") or "perfect"
            if isinstance(profiles, list):
                profiles = ",".join(profiles)
            try:
                adapter = MockTranslator(direction, fixtures_from_corpus(corpus, direction), profiles,
                                         seed=int(values.get("seed", 0)), focal_name=values.get("focal", DEFAULT_FOCAL))
            except ValueError as err:
                raise UsageError(str(err)) from None
        else:
            adapter = _adapter(values)
        reports.append(run_eval(corpus, direction, cfg, adapter, checker, workers=args.workers))
    if args.report == "text":
        payload = format_table(reports)
    elif args.report == "json":
        data = [r.to_json() for r in reports]
        payload = json.dumps(data[0] if len(data) == 1 else data, sort_keys=True, indent=2) + "\n"
    else:
        payload = "\n".join(r.render(args.report) for r in reports)
    _emit(payload, args.output)
    return EXIT_OK


COMMANDS = {
    "preprocess": cmd_preprocess,
    "postprocess": cmd_postprocess,
    "pipeline": cmd_pipeline,
    "detect-collapse": cmd_detect,
    "eval": cmd_eval,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.WARNING - 10 * min(args.verbose, 2),
        format="transguard: %(levelname)s: %(message)s",
        force=True,
    )
    try:
        return COMMANDS[args.command](args)
    except (UsageError, ConfigError) as err:
        print(f"transguard: error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as err:
        print(f"transguard: {err}", file=sys.stderr)
        return EXIT_DOMAIN
    except SyntaxProblem as err:
        print(f"transguard: parse error: {err}", file=sys.stderr)
        return EXIT_DOMAIN
    except RuleError as err:
        print(f"transguard: {err}", file=sys.stderr)
        return EXIT_DOMAIN
    except TranslatorFailure as err:
        print(f"transguard: translator failure: {err}", file=sys.stderr)
        return EXIT_TRANSLATOR


if __name__ == "__main__":
    sys.exit(main())
