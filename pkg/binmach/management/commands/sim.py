from django.core.management.base import CommandError

from binmach.cli import EXIT_MISMATCH, ToolCommand, line_width, positive_int, workers
from binmach.machine import read_machine, run
from binmach.sequence import format_sequence


class Command(ToolCommand):
    help = "Run a BINMACH 1 machine and print the emitted bit stream; optionally verify it."

    def add_arguments(self, parser):
        parser.add_argument("machine", help="BINMACH 1 file")
        parser.add_argument("--cycles", type=positive_int, required=True)
        parser.add_argument("--expect", help="sequence file the stream must start with")

    def handle(self, *args, **opts):
        with self.domain_errors():
            bm = read_machine(opts["machine"], workers=workers())
            stream = run(bm, opts["cycles"])
        self.stdout.write(format_sequence(stream, line_width()), ending="")

        if opts["expect"]:
            expected = self.load_binary(opts["expect"])
            n = min(len(stream), len(expected))
            mismatch = next((i for i in range(n) if stream[i] != expected[i]), None)
            if mismatch is not None:
                raise CommandError(
                    f"mismatch at bit {mismatch}: got {stream[mismatch]}, expected {expected[mismatch]}",
                    returncode=EXIT_MISMATCH,
                )
            if len(stream) < len(expected):
                raise CommandError(
                    f"stream too short: {len(stream)} bits emitted, {len(expected) - len(stream)} "
                    f"of the {len(expected)} expected bits missing",
                    returncode=EXIT_MISMATCH,
                )
            self.stderr.write(f"ok: {n} bits match")
