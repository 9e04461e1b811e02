from binmach.baselines import write_lfsr
from binmach.cli import ToolCommand, dc_policy_type, parallel_type, unit_costs, workers
from binmach.compare import compare_many, format_csv, format_table
from binmach.machine import DcPolicy


class Command(ToolCommand):
    help = "Compare synthesized binary machines with Berlekamp-Massey LFSR baselines."

    def add_arguments(self, parser):
        parser.add_argument("--input", action="append", required=True,
                            help="sequence text file; repeat for several sequences")
        parser.add_argument("--parallel", type=parallel_type,
                            help="bits per cycle; default: smallest p with p stages")
        parser.add_argument("--dc-policy", type=dc_policy_type, default=DcPolicy.MINIMIZE)
        parser.add_argument("--format", choices=["text", "csv"], default="text")
        parser.add_argument("--lfsr-out", help="write the Berlekamp-Massey LFSR (single input only)")

    def handle(self, *args, **opts):
        paths = opts["input"]
        if opts["lfsr_out"] and len(paths) != 1:
            raise self.usage_error("--lfsr-out needs exactly one --input")
        items = [(path, self.load_binary(path)) for path in paths]

        with self.domain_errors():
            rows = compare_many(items, opts["parallel"], opts["dc_policy"], unit_costs(), workers())
            if opts["lfsr_out"]:
                write_lfsr(opts["lfsr_out"], rows[0].lfsr)

        render = format_csv if opts["format"] == "csv" else format_table
        self.stdout.write(render(rows), ending="")
