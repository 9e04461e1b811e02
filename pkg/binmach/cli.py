# binmach/cli.py
"""Shared plumbing for the synth, sim, compare and gen management commands."""
from __future__ import annotations

import argparse
import logging
import sys
from contextlib import contextmanager

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from .exceptions import BinMachError, FormatErrorMixin
from .logic import UnitCosts
from .machine import DcPolicy
from .sequence import DigitSequence, read_sequence
from .synth import PermutationPolicy

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_FORMAT = 2
EXIT_USAGE = 3


# ---------------------------
# Settings accessors
# ---------------------------
def _conf(key):
    return settings.BINMACH[key]


def unit_costs() -> UnitCosts:
    return UnitCosts.from_mapping(_conf("UNIT_COSTS"))


def workers() -> int:
    return max(1, int(_conf("WORKERS")))


def max_parallel() -> int:
    return int(_conf("MAX_PARALLEL"))


def line_width() -> int:
    return int(_conf("SEQUENCE_LINE_WIDTH"))


# ---------------------------
# Flag value parsers (argparse `type=`)
# ---------------------------
def parallel_type(text: str) -> int:
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 1 <= p <= max_parallel():
        raise argparse.ArgumentTypeError(f"must be in 1..{max_parallel()}, got {p}")
    return p


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def dc_policy_type(text: str) -> DcPolicy:
    try:
        return DcPolicy(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not one of zero, one, minimize") from None


def perm_type(text: str) -> PermutationPolicy:
    try:
        return PermutationPolicy.parse(text)
    except BinMachError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


# ---------------------------
# Command base
# ---------------------------
class ToolCommand(BaseCommand):
    """BaseCommand with the toolkit's exit codes.

    Flag errors end with status 3 (argparse would use 2, which is reserved
    for unreadable input files here).
    """
    requires_system_checks = []

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)

        def error(message):
            if parser.called_from_command_line:
                parser.print_usage(sys.stderr)
                parser.exit(EXIT_USAGE, f"{parser.prog}: error: {message}\n")
            raise CommandError(f"Error: {message}", returncode=EXIT_USAGE)

        parser.error = error
        return parser

    @contextmanager
    def domain_errors(self):
        """Turn toolkit and I/O errors into CommandError with the right status."""
        try:
            yield
        except BinMachError as exc:
            code = EXIT_FORMAT if isinstance(exc, FormatErrorMixin) else EXIT_USAGE
            raise CommandError(str(exc), returncode=code) from exc
        except OSError as exc:
            name = exc.filename or ""
            raise CommandError(f"cannot access {name}: {exc.strerror or exc}", returncode=EXIT_FORMAT) from exc

    def usage_error(self, message: str):
        return CommandError(message, returncode=EXIT_USAGE)

    def load_binary(self, path) -> DigitSequence:
        with self.domain_errors():
            a = read_sequence(path)
        if a.m != 2:
            raise self.usage_error(f"{path}: expected a binary sequence, got m={a.m}")
        return a
