from binmach.cli import ToolCommand, line_width, positive_int
from binmach.sequence import gen_golay_pair, gen_legendre, gen_random, merit_factor, write_sequence


class Command(ToolCommand):
    help = "Generate random, Legendre or Golay complementary test sequences."

    def add_arguments(self, parser):
        parser.add_argument("family", choices=["random", "legendre", "golay"])
        parser.add_argument("--length", type=positive_int, help="random: number of bits")
        parser.add_argument("--seed", type=int, help="random: PRNG seed")
        parser.add_argument("--prime", type=int, help="legendre: odd prime length")
        parser.add_argument("--order", type=int, help="golay: pair length is 2**order")
        parser.add_argument("--out", required=True, help="output file (golay writes <out>.a and <out>.b)")

    def _need(self, opts, *names):
        missing = [f"--{n}" for n in names if opts[n] is None]
        if missing:
            raise self.usage_error(f"{opts['family']} needs {', '.join(missing)}")

    def handle(self, *args, **opts):
        family, out = opts["family"], opts["out"]
        with self.domain_errors():
            if family == "random":
                self._need(opts, "length", "seed")
                outputs = [(out, gen_random(opts["length"], opts["seed"]))]
            elif family == "legendre":
                self._need(opts, "prime")
                outputs = [(out, gen_legendre(opts["prime"]))]
            else:
                self._need(opts, "order")
                a, b = gen_golay_pair(opts["order"])
                outputs = [(f"{out}.a", a), (f"{out}.b", b)]

            for path, seq in outputs:
                write_sequence(path, seq, line_width())
                self.stdout.write(f"{path}: k={len(seq)} merit_factor={merit_factor(seq):.4f}")
