import time

from django.test import SimpleTestCase

from binmach.compare import (
    COLUMNS,
    compare_many,
    compare_sequence,
    fixed_point_p,
    format_csv,
    format_table,
    ratio,
    synthesize,
)
from binmach.machine import DcPolicy
from binmach.sequence import DigitSequence, gen_legendre, gen_random
from binmach.synth import binary_stage_bound
from binmach.utils import ceil_log

from .fixtures import A2


class RatioTests(SimpleTestCase):
    def test_tokens(self):
        self.assertEqual(ratio(None, 10), "n/a")
        self.assertEqual(ratio(0, 10), "inf")
        self.assertEqual(ratio(30, 10), "3.000")


class CompareSequenceTests(SimpleTestCase):
    def test_fixed_point_of_example(self):
        self.assertEqual(fixed_point_p(A2), 3)

    def test_example_row(self):
        row = compare_sequence("a2", A2, p=3)
        self.assertEqual((row.k, row.p, row.bm_stages), (20, 3, 3))
        self.assertEqual(row.lfsr_bm_length, row.lfsr.length)
        self.assertGreater(row.bm_cost, 0)
        self.assertGreater(float(row.ratio_parallel), 0)
        self.assertGreater(float(row.ratio_decimation), 0)
        self.assertEqual(row.bm1_stages, 5)

    def test_zero_sequence(self):
        row = compare_sequence("zeros", DigitSequence.binary((0,) * 8), p=1)
        self.assertEqual(row.lfsr_bm_length, 0)
        self.assertIsNone(row.lfsr_parallel_cost)
        self.assertEqual(row.ratio_parallel, "n/a")
        self.assertEqual(row.decimation_bank_cost, 0)
        self.assertEqual(row.ratio_decimation, "inf")

    def test_legendre_17_at_fixed_point(self):
        row = compare_sequence("legendre17", gen_legendre(17))
        self.assertEqual(row.k, 17)
        self.assertEqual(row.bm_stages, row.p)

    def test_rows_keep_input_order(self):
        items = [(f"r{seed}", gen_random(40 + seed, seed)) for seed in range(6)]
        rows = compare_many(items, p=2, workers=3)
        self.assertEqual([r.seq_id for r in rows], [i for i, _ in items])
        self.assertEqual([r.k for r in rows], [40 + seed for seed in range(6)])


class TableTrendTests(SimpleTestCase):
    """Random 1024-bit sequences at the stage-count fixed point."""

    def test_machines_beat_lfsrs(self):
        k = 1024
        complex_lfsr = cheaper = 0
        for seed in range(20):
            a2 = gen_random(k, 1000 + seed)
            row = compare_sequence(f"s{seed}", a2, dc_policy=DcPolicy.MINIMIZE, serial=False)
            self.assertEqual(row.bm_stages, row.p)
            self.assertLessEqual(binary_stage_bound(a2, 1), ceil_log(2, k) + 1)
            complex_lfsr += row.lfsr_bm_length >= k // 4
            cheaper += row.lfsr_parallel_cost is not None and row.bm_cost < row.lfsr_parallel_cost
        self.assertGreaterEqual(complex_lfsr, 18)
        self.assertGreaterEqual(cheaper, 18)


class OutputFormatTests(SimpleTestCase):
    def setUp(self):
        self.rows = [compare_sequence("a2", A2, p=2), compare_sequence("zeros", DigitSequence.binary((0,) * 6), p=1)]

    def test_csv_layout(self):
        lines = format_csv(self.rows).splitlines()
        self.assertEqual(lines[0].split(","), list(COLUMNS))
        self.assertEqual(len(lines), 3)
        zeros = dict(zip(COLUMNS, lines[2].split(",")))
        self.assertEqual(zeros["lfsr_parallel_cost"], "n/a")
        self.assertEqual(zeros["ratio_decimation"], "inf")

    def test_text_table_is_aligned(self):
        lines = format_table(self.rows).splitlines()
        self.assertEqual(len(lines), 3)
        self.assertEqual(lines[0].split(), list(COLUMNS))
        self.assertEqual(len({len(line) for line in lines}), 1)


class SynthesizePipelineTests(SimpleTestCase):
    def test_small_machine_keeps_sop_route(self):
        result = synthesize(A2, 3, DcPolicy.ZERO)
        self.assertEqual(result.machine.n_bits, 3)
        self.assertIsNotNone(result.cost.sop_literals)

    def test_large_input_is_fast(self):
        a2 = gen_random(1 << 16, 77)
        start = time.perf_counter()
        result = synthesize(a2, 1, DcPolicy.ZERO)
        self.assertLess(time.perf_counter() - start, 10)
        self.assertEqual(result.machine.n_bits, binary_stage_bound(a2, 1))
        self.assertEqual(result.cost.register_stages, result.machine.n_bits)
        self.assertIsNone(result.cost.sop_literals)
