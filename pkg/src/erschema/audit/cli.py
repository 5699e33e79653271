"""Command-line front end: transform, analyze and verify ER models."""
import argparse
import sys
from dataclasses import dataclass
from typing import List, Optional, Tuple

from erschema.audit import const
from erschema.audit.audit import Audit
from erschema.audit.model import (EnumerationCapExceededError, ErParseError,
                                  InvalidModelError, SchemaNameCollisionError)
from erschema.audit.oracle import pool_cap
from erschema.audit.reporting import render_analysis, render_verification
from erschema.audit.text import render_rds
from erschema.audit.tools import validate_field_options

STDIN_DISPLAY_NAME = '<stdin>'


class CliUsageError(ValueError):
    """Command line flags or values could not be accepted."""


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise CliUsageError(message)


def parse_max_samples(text: str) -> Tuple:
    """Parse ``2,3,N`` into max samples; ``1`` is always added first."""
    samples = [1]
    for item in text.split(','):
        item = item.strip()
        if item == const.UNBOUNDED_TOKEN:
            samples.append(item)
        elif item.isdigit() and int(item) >= 2:
            samples.append(int(item))
        else:
            raise CliUsageError(f'Max samples must be integers of at least 2 or N, got {item!r}')
    return tuple(dict.fromkeys(samples))


@dataclass(frozen=True)
class CliConfig:
    """One command-line invocation."""
    subcommand: str
    input_path: str = const.STDIN_PATH
    format: str = const.PAPER_FORMAT
    oracle: str = const.BOTH_ORACLES
    pool_size: int = const.DEFAULT_POOL_SIZE
    max_samples: Tuple = const.DEFAULT_MAX_SAMPLES

    def __post_init__(self):
        validate_field_options(self.subcommand, const.SUBCOMMANDS)
        validate_field_options(self.format, const.OUTPUT_FORMATS)
        validate_field_options(self.oracle, const.ORACLE_OPTIONS)
        if isinstance(self.pool_size, bool) or not isinstance(self.pool_size, int) or self.pool_size < 1:
            raise ValueError(f'Pool size must be a positive integer, got {self.pool_size!r}')

    @property
    def display_path(self) -> str:
        return STDIN_DISPLAY_NAME if self.input_path == const.STDIN_PATH else self.input_path


@dataclass(frozen=True)
class CliResult:
    exit_code: int
    stdout: str = ''
    stderr: str = ''


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog='erschema-audit',
                             description='Transform ER models to relational schemas and audit which '
                                         'structural constraints survive.')
    parser.add_argument('subcommand', choices=const.SUBCOMMANDS)
    parser.add_argument('input_path', help="ER notation file, or '-' for standard input")
    parser.add_argument('--format', choices=const.OUTPUT_FORMATS, default=const.PAPER_FORMAT)
    parser.add_argument('--oracle', choices=const.ORACLE_OPTIONS, default=const.BOTH_ORACLES,
                        help='oracle used by verify')
    parser.add_argument('--pool-size', type=int, default=const.DEFAULT_POOL_SIZE,
                        help='key pool per relation for the instance oracle')
    parser.add_argument('--max-samples', default='2,3,N',
                        help='comma-separated many-side max values for the inverse-image oracle')
    return parser


def parse_args(argv: List[str]) -> CliConfig:
    """Build a CliConfig from command-line arguments.

    Raises
    ------
    CliUsageError: On unknown flags or invalid values

    """
    args = build_parser().parse_args(argv)
    try:
        return CliConfig(subcommand=args.subcommand, input_path=args.input_path, format=args.format,
                         oracle=args.oracle, pool_size=args.pool_size,
                         max_samples=parse_max_samples(args.max_samples))
    except ValueError as err:
        raise CliUsageError(str(err)) from None


def run(config: CliConfig, text: str) -> CliResult:
    """Execute one invocation on already read input.

    Returns
    -------
    CliResult
        Exit code 0 on success or agreement, 1 on parse or validation
        diagnostics, 2 when an oracle disagrees with the analyzer, 3 when the
        enumeration cap is exceeded. The pool size is held to the cap for
        every subcommand.

    """
    path = config.display_path
    try:
        cap = pool_cap()
    except ValueError as err:
        return CliResult(const.EXIT_INVALID_INPUT, stderr=f'erschema-audit: error: {err}\n')
    if config.pool_size > cap:
        return CliResult(const.EXIT_CAP_EXCEEDED,
                         stderr=f'erschema-audit: error: Key pool size {config.pool_size} exceeds the cap of {cap}\n')

    try:
        audit = Audit(text)
    except ErParseError as err:
        return CliResult(const.EXIT_INVALID_INPUT,
                         stderr=''.join(f'{path}:{diagnostic}\n' for diagnostic in err.diagnostics))

    try:
        if config.subcommand == const.TRANSFORM_COMMAND:
            return CliResult(const.EXIT_OK, stdout=render_rds(audit.transform_model(), config.format))
        if config.subcommand == const.ANALYZE_COMMAND:
            report = audit.analyze_model()
            return CliResult(const.EXIT_OK, stdout=render_analysis(report, audit.summarize(), config.format))
        verification = audit.verify(config.oracle, config.pool_size, config.max_samples)
    except (InvalidModelError, SchemaNameCollisionError) as err:
        return CliResult(const.EXIT_INVALID_INPUT, stderr=f'{path}: error: {err}\n')
    except EnumerationCapExceededError as err:
        return CliResult(const.EXIT_CAP_EXCEEDED, stderr=f'{path}: error: {err}\n')

    exit_code = const.EXIT_OK if verification.agrees else const.EXIT_DISAGREEMENT
    return CliResult(exit_code, stdout=render_verification(verification, config.format))


def _read_input(config: CliConfig) -> str:
    if config.input_path == const.STDIN_PATH:
        return sys.stdin.read()
    with open(config.input_path, encoding='utf-8') as source:
        return source.read()


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point of the ``erschema-audit`` command."""
    argv = sys.argv[1:] if argv is None else argv
    try:
        config = parse_args(argv)
    except CliUsageError as err:
        sys.stderr.write(build_parser().format_usage())
        sys.stderr.write(f'erschema-audit: error: {err}\n')
        return const.EXIT_INVALID_INPUT

    try:
        text = _read_input(config)
    except (OSError, UnicodeDecodeError) as err:
        sys.stderr.write(f'{config.display_path}: error: cannot read input: {err}\n')
        return const.EXIT_INVALID_INPUT

    result = run(config, text)
    sys.stdout.write(result.stdout)
    sys.stderr.write(result.stderr)
    return result.exit_code


if __name__ == '__main__':
    sys.exit(main())
