import logging

from binmach.cli import ToolCommand, dc_policy_type, parallel_type, perm_type, unit_costs, workers
from binmach.compare import synthesize
from binmach.machine import DcPolicy, write_machine
from binmach.sequence import period_analysis
from binmach.synth import IDENTITY

logger = logging.getLogger(__name__)


class Command(ToolCommand):
    help = "Synthesize a minimal-stage binary machine emitting p bits per cycle from a binary sequence file."

    def add_arguments(self, parser):
        parser.add_argument("--input", required=True, help="sequence text file")
        parser.add_argument("--parallel", type=parallel_type, default=1, help="bits per clock cycle (p)")
        parser.add_argument("--dc-policy", type=dc_policy_type, default=DcPolicy.ZERO,
                            help="don't-care completion: zero, one or minimize")
        parser.add_argument("--perm", type=perm_type, default=IDENTITY,
                            help="pool permutation: identity or shuffle:<seed>")
        parser.add_argument("--out", required=True, help="BINMACH 1 file to write")

    def handle(self, *args, **opts):
        a2 = self.load_binary(opts["input"])
        p = opts["parallel"]

        report = period_analysis(a2)
        if report.pre_period or report.period < len(a2):
            message = (
                f"warning: sequence has pre-period {report.pre_period} and period {report.period}; "
                f"synthesizing all {len(a2)} bits as one cycle"
            )
            logger.warning(message)
            self.stderr.write(message)

        with self.domain_errors():
            result = synthesize(a2, p, opts["dc_policy"], opts["perm"], unit_costs(), workers())
            write_machine(opts["out"], result.machine)

        cost = result.cost
        pad = "".join(map(str, result.encoding.pad)) or "-"
        self.stdout.write(
            f"k={len(a2)} p={p} m={1 << p} digits={len(result.encoding.sequence)} "
            f"N_max={result.n_max} stages={result.machine.n_bits} pad={pad}"
        )
        self.stdout.write(
            f"cost and2={cost.and2_count} xor2={cost.xor2_count} reg={cost.register_stages} "
            f"units={cost.total_units} literals={cost.sop_literals}"
        )
