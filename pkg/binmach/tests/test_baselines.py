import itertools

import numpy as np
from django.test import SimpleTestCase

from binmach.baselines import (
    DecimationBank,
    LfsrSpec,
    berlekamp_massey,
    companion_matrix,
    decimate_synthesis,
    format_lfsr,
    gf2_matrix_power,
    lfsr_cost,
    lfsr_parallelize,
    parse_lfsr,
)
from binmach.exceptions import LfsrError, LfsrFormatError
from binmach.logic import UnitCosts
from binmach.sequence import DigitSequence, gen_random
from binmach.utils import generator

from .fixtures import A2

# s_t = s_{t-1} + s_{t-4}: connection polynomial 1 + x + x^4
X4_X_1 = LfsrSpec(4, (1, 0, 0, 1), (1, 0, 0, 0))


def linear_complexity_oracle(bits):
    """Textbook Berlekamp-Massey on lists, kept independent of the library version."""
    n = len(bits)
    c, b = [1] + [0] * n, [1] + [0] * n
    length, m = 0, -1
    for i in range(n):
        d = bits[i]
        for j in range(1, length + 1):
            d ^= c[j] & bits[i - j]
        if d:
            t = c[:]
            for j in range(i - m, n + 1):
                c[j] ^= b[j - i + m]
            if 2 * length <= i:
                length, m, b = i + 1 - length, i, t
    return length


def has_lfsr_of_length(bits, l):
    """Exhaustive search: some tap vector of length l reproduces bits from its own first l bits."""
    k = len(bits)
    if l >= k:
        return True
    s = np.asarray(bits, dtype=np.int64)
    if l == 0:
        return not s.any()
    history = np.array([[s[t - i] for i in range(1, l + 1)] for t in range(l, k)])
    taps = np.array(list(itertools.product((0, 1), repeat=l)))
    produced = history @ taps.T % 2
    return bool(np.any(np.all(produced == s[l:, None], axis=0)))


class LfsrSpecTests(SimpleTestCase):
    def test_generate_m_sequence(self):
        seq = X4_X_1.generate(30)
        self.assertEqual(seq.digits[:15], seq.digits[15:])
        self.assertEqual(sum(seq.digits[:15]), 8)

    def test_zero_length_generates_zeros(self):
        self.assertEqual(LfsrSpec(0, (), ()).generate(5).digits, (0,) * 5)

    def test_rejects_mismatched_fields(self):
        with self.assertRaises(LfsrError):
            LfsrSpec(3, (1, 1), (0, 0, 1))


class BerlekampMasseyTests(SimpleTestCase):
    def test_zero_sequence(self):
        self.assertEqual(berlekamp_massey(DigitSequence.binary((0, 0, 0, 0))).length, 0)

    def test_recovers_m_sequence(self):
        spec = berlekamp_massey(X4_X_1.generate(15))
        self.assertEqual(spec.length, 4)
        self.assertEqual(spec.taps, X4_X_1.taps)

    def test_example_sequence_against_oracle(self):
        spec = berlekamp_massey(A2)
        self.assertEqual(spec.length, linear_complexity_oracle(A2.digits))
        self.assertEqual(spec.generate(len(A2)), A2)

    def test_regenerates_random_sequences(self):
        rng = generator(12)
        for _ in range(40):
            a2 = gen_random(int(rng.integers(1, 300)), int(rng.integers(1 << 30)))
            spec = berlekamp_massey(a2)
            self.assertEqual(spec.generate(len(a2)), a2)
            self.assertEqual(spec.length, linear_complexity_oracle(a2.digits))

    def test_minimal_against_exhaustive_search(self):
        for k in range(1, 13):
            for bits in itertools.product((0, 1), repeat=k):
                length = berlekamp_massey(DigitSequence.binary(bits)).length
                if length:
                    self.assertFalse(has_lfsr_of_length(bits, length - 1), bits)

    def test_prefix_monotonicity(self):
        a2 = gen_random(200, 21)
        lengths = [berlekamp_massey(DigitSequence.binary(a2.digits[:n])).length for n in range(1, 201)]
        self.assertEqual(lengths, sorted(lengths))


class ParallelLinearMapTests(SimpleTestCase):
    def test_p1_is_companion_matrix(self):
        pmap = lfsr_parallelize(X4_X_1, 1)
        np.testing.assert_array_equal(pmap.matrix, companion_matrix(X4_X_1))

    def test_power_matches_sequential_steps(self):
        a = companion_matrix(X4_X_1)
        a4 = lfsr_parallelize(X4_X_1, 4).matrix
        rng = generator(3)
        for _ in range(100):
            state = rng.integers(0, 2, size=4)
            stepped = state
            for _ in range(4):
                stepped = a.astype(np.int64) @ stepped % 2
            np.testing.assert_array_equal(a4 @ state % 2, stepped)

    def test_p_equals_l_advances_fill(self):
        pmap = lfsr_parallelize(X4_X_1, 4)
        after = pmap.advance(np.asarray(X4_X_1.fill))
        self.assertEqual(tuple(after), X4_X_1.generate(8).digits[4:])

    def test_matrix_power_identity(self):
        a = companion_matrix(X4_X_1)
        np.testing.assert_array_equal(gf2_matrix_power(a, 0), np.eye(4, dtype=np.uint8))
        np.testing.assert_array_equal(gf2_matrix_power(a, 15), np.eye(4, dtype=np.uint8))

    def test_random_lfsrs_match_serial_output(self):
        rng = generator(50)
        for _ in range(50):
            length = int(rng.integers(1, 33))
            taps = tuple(rng.integers(0, 2, size=length).tolist())
            fill = tuple(rng.integers(0, 2, size=length).tolist())
            spec = LfsrSpec(length, taps, fill)
            serial = spec.generate(2048).digits
            for p in range(1, length + 1):
                cycles = 2048 // p
                self.assertEqual(lfsr_parallelize(spec, p).run(cycles).digits, serial[: p * cycles])

    def test_rejects_p_out_of_range(self):
        for p in (0, 5):
            with self.assertRaises(LfsrError):
                lfsr_parallelize(X4_X_1, p)


class DecimationTests(SimpleTestCase):
    def test_p1_is_berlekamp_massey(self):
        bank = decimate_synthesis(A2, 1)
        self.assertEqual(bank.entries, (berlekamp_massey(A2),))

    def test_alternating_sequence(self):
        bank = decimate_synthesis(DigitSequence.binary((0, 1) * 8), 2)
        self.assertEqual([e.length for e in bank.entries], [0, 1])
        self.assertEqual(bank.total_stages, 1)

    def test_example_regenerates(self):
        self.assertEqual(decimate_synthesis(A2, 2).interleave(), A2)

    def test_random_banks_regenerate_within_bound(self):
        rng = generator(6)
        for _ in range(30):
            a2 = gen_random(int(rng.integers(20, 400)), int(rng.integers(1 << 30)))
            for p in (2, 3, 5, 8):
                bank = decimate_synthesis(a2, p, workers=2)
                self.assertEqual(bank.interleave(), a2)
                self.assertLessEqual(bank.total_stages, bank.bound)

    def test_lfsr_sequence_within_bound(self):
        a2 = X4_X_1.generate(60)
        for p in (2, 3, 4, 6):
            bank = decimate_synthesis(a2, p)
            self.assertLessEqual(bank.total_stages, p * 4)

    def test_rejects_p_not_below_length(self):
        with self.assertRaises(LfsrError):
            decimate_synthesis(A2, len(A2))


class LfsrCostTests(SimpleTestCase):
    def test_serial_cost(self):
        self.assertEqual(lfsr_cost(X4_X_1).total_units, 9)
        self.assertEqual(lfsr_cost(lfsr_parallelize(X4_X_1, 1)).total_units, 9)

    def test_zero_entry_costs_nothing(self):
        bank = DecimationBank((LfsrSpec(0, (), ()),), 4, 0)
        self.assertEqual(lfsr_cost(bank).total_units, 0)

    def test_matrix_cost_lower_bound(self):
        costs = UnitCosts()
        rng = generator(8)
        for _ in range(20):
            spec = berlekamp_massey(gen_random(80, int(rng.integers(1 << 30))))
            for p in (1, 2, spec.length):
                report = lfsr_cost(lfsr_parallelize(spec, p), costs)
                self.assertGreaterEqual(report.total_units, spec.length * costs.reg)
                self.assertEqual(report.and2_count, 0)

    def test_unknown_type(self):
        with self.assertRaises(LfsrError):
            lfsr_cost("x^4+x+1")


class LfsrFormatTests(SimpleTestCase):
    def test_format(self):
        self.assertEqual(format_lfsr(X4_X_1), "LFSR 4\npoly 9\nfill 8\n")

    def test_round_trip(self):
        spec = berlekamp_massey(A2)
        self.assertEqual(parse_lfsr(format_lfsr(spec)), spec)

    def test_errors(self):
        with self.assertRaises(LfsrFormatError):
            parse_lfsr("LFSR 4\npoly 1f\nfill 0\n")
        with self.assertRaises(LfsrFormatError):
            parse_lfsr("LFSR 4\npoly 9\n")
        with self.assertRaises(LfsrFormatError) as ctx:
            parse_lfsr("LFSR 4\npoly zz\nfill 0\n")
        self.assertEqual(ctx.exception.token, "zz")
