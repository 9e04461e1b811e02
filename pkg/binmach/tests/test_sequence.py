import numpy as np
from django.test import SimpleTestCase
from sympy.ntheory import residue_ntheory

from binmach.exceptions import SequenceError, SequenceFormatError
from binmach.sequence import (
    DigitSequence,
    aperiodic_autocorrelation,
    decode_m_ary,
    digit_counts,
    encode_m_ary,
    format_sequence,
    gen_golay_pair,
    gen_legendre,
    gen_random,
    merit_factor,
    parse_sequence,
    period_analysis,
)
from binmach.utils import generator

from .fixtures import A2, A4


def least_period(bits):
    """(pre-period, period) by trying every pair; the tail must hold two periods
    and outlast the pre-period."""
    k = len(bits)
    for period in range(1, k + 1):
        for k0 in range(k):
            tail = k - k0
            if tail < 2 * period or tail <= k0:
                break
            if all(bits[i] == bits[i + period] for i in range(k0, k - period)):
                return k0, period
    return 0, k


class DigitSequenceTests(SimpleTestCase):
    def test_rejects_out_of_range_digit(self):
        with self.assertRaises(SequenceError):
            DigitSequence(4, (0, 4))

    def test_rejects_empty(self):
        with self.assertRaises(SequenceError):
            DigitSequence(2, ())

    def test_rejects_unary_alphabet(self):
        with self.assertRaises(SequenceError):
            DigitSequence(1, (0,))


class EncodingTests(SimpleTestCase):
    def test_quaternary_encoding(self):
        encoded, pad = encode_m_ary(A2, 2)
        self.assertEqual(encoded, A4)
        self.assertEqual(pad, ())

    def test_octal_encoding_pads_with_zero(self):
        encoded, pad = encode_m_ary(A2, 3)
        self.assertEqual(encoded.digits, (1, 5, 6, 2, 7, 3, 0))
        self.assertEqual(encoded.m, 8)
        self.assertEqual(pad, (0,))

    def test_p1_is_identity(self):
        encoded, pad = encode_m_ary(A2, 1)
        self.assertEqual(encoded.digits, A2.digits)
        self.assertEqual(pad, ())

    def test_pad_minimizes_n_max(self):
        # tail "0" with p=2: digit 0 (pad 0) already occurs, digit 1 (pad 1) does not
        encoded, pad = encode_m_ary(DigitSequence.binary((0, 0, 0)), 2)
        self.assertEqual(pad, (1,))
        self.assertEqual(encoded.digits, (0, 1))

    def test_rejects_bad_arguments(self):
        with self.assertRaises(SequenceError):
            encode_m_ary(A2, 0)
        with self.assertRaises(SequenceError):
            encode_m_ary(A4, 2)

    def test_decode_inverts_encode(self):
        encoded, pad = encode_m_ary(A2, 3)
        self.assertEqual(decode_m_ary(encoded, 3).digits, A2.digits + pad)
        with self.assertRaises(SequenceError):
            decode_m_ary(encoded, 2)

    def test_round_trip_for_every_p(self):
        rng = generator(16)
        for p in range(1, 17):
            for _ in range(5):
                a2 = gen_random(int(rng.integers(1, 200)), int(rng.integers(1 << 30)))
                encoded, pad = encode_m_ary(a2, p)
                self.assertEqual(encoded.m, 1 << p)
                self.assertEqual(len(pad), -len(a2) % p)
                self.assertEqual(decode_m_ary(encoded, p).digits, a2.digits + pad)


class StatisticsTests(SimpleTestCase):
    def test_digit_counts(self):
        counts = digit_counts(A4)
        self.assertEqual(counts.counts, (3, 1, 2, 4))
        self.assertEqual(counts.n_max, 4)
        self.assertEqual(sum(counts.counts), len(A4))

    def test_period_of_purely_periodic(self):
        report = period_analysis(DigitSequence.binary((0, 1, 1) * 4))
        self.assertEqual((report.pre_period, report.period), (0, 3))
        self.assertTrue(report.purely_periodic)

    def test_period_with_pre_period(self):
        report = period_analysis(DigitSequence.binary((1, 1, 0, 0, 0, 0)))
        self.assertEqual((report.pre_period, report.period), (2, 1))
        self.assertFalse(report.purely_periodic)

    def test_period_examples(self):
        cases = {
            (1, 1, 0, 0, 1, 0, 1, 0, 1): (3, 2),
            (0, 0, 0, 0): (0, 1),
            (0, 1, 0, 1, 0, 1): (0, 2),
        }
        for bits, expected in cases.items():
            report = period_analysis(DigitSequence.binary(bits))
            self.assertEqual((report.pre_period, report.period), expected, bits)

    def test_aperiodic_sequence_is_one_cycle(self):
        report = period_analysis(A2)
        self.assertEqual((report.pre_period, report.period), (0, len(A2)))

    def test_period_against_exhaustive_search(self):
        rng = generator(31)
        inputs = [tuple(rng.integers(0, 2, size=int(rng.integers(1, 30))).tolist()) for _ in range(150)]
        for _ in range(150):
            prefix = rng.integers(0, 2, size=int(rng.integers(0, 6))).tolist()
            block = rng.integers(0, 2, size=int(rng.integers(1, 5))).tolist()
            inputs.append(tuple(prefix + block * int(rng.integers(2, 7))))
        for bits in inputs:
            report = period_analysis(DigitSequence.binary(bits))
            self.assertEqual((report.pre_period, report.period), least_period(bits), bits)

    def test_autocorrelation_peak(self):
        c = aperiodic_autocorrelation(A2)
        self.assertEqual(len(c), len(A2))
        self.assertEqual(c[0], len(A2))

    def test_merit_factor_of_barker_13(self):
        barker = DigitSequence.binary((0, 0, 0, 0, 0, 1, 1, 0, 0, 1, 0, 1, 0))
        self.assertAlmostEqual(merit_factor(barker), 169 / 12)


class GeneratorTests(SimpleTestCase):
    def test_random_is_deterministic(self):
        self.assertEqual(gen_random(64, 1), gen_random(64, 1))
        self.assertNotEqual(gen_random(64, 1), gen_random(64, 2))

    def test_legendre_7(self):
        self.assertEqual(str(gen_legendre(7)), "1001011")

    def test_legendre_matches_residue_oracle(self):
        for prime in (3, 7, 17, 31, 61, 127):
            seq = gen_legendre(prime)
            residues = {i * i % prime for i in range(1, prime)}
            expected = [1] + [0 if i in residues else 1 for i in range(1, prime)]
            self.assertEqual(list(seq.digits), expected)
            self.assertEqual(seq.digits[1:].count(0), (prime - 1) // 2)
            self.assertTrue(all(residue_ntheory.is_quad_residue(i, prime) == (seq[i] == 0)
                                for i in range(1, prime)))

    def test_legendre_rejects_composite(self):
        for bad in (1, 2, 9, 15):
            with self.assertRaises(SequenceError):
                gen_legendre(bad)

    def test_golay_order_2(self):
        a, b = gen_golay_pair(2)
        self.assertEqual((str(a), str(b)), ("0001", "0010"))

    def test_golay_pairs_are_complementary(self):
        for order in range(1, 11):
            a, b = gen_golay_pair(order)
            total = aperiodic_autocorrelation(a) + aperiodic_autocorrelation(b)
            self.assertEqual(total[0], 2 * len(a))
            self.assertFalse(np.any(total[1:]), f"order {order}")


class TextFormatTests(SimpleTestCase):
    def test_parse_with_header_and_comments(self):
        text = "# quaternary example\nm=4\n03130\n 23230\n"
        self.assertEqual(parse_sequence(text), A4)

    def test_format_wraps_and_omits_binary_header(self):
        text = format_sequence(A2, width=8)
        self.assertEqual(text.splitlines(), ["00110111", "00101110", "1100"])
        self.assertEqual(parse_sequence(text), A2)

    def test_format_writes_header(self):
        self.assertTrue(format_sequence(A4).startswith("m=4\n"))

    def test_bad_digit_names_line_and_token(self):
        with self.assertRaises(SequenceFormatError) as ctx:
            parse_sequence("0101\n01x1\n")
        self.assertEqual(ctx.exception.line, 2)
        self.assertEqual(ctx.exception.token, "x")
        self.assertIn("line 2", str(ctx.exception))

    def test_digit_outside_alphabet(self):
        with self.assertRaises(SequenceFormatError):
            parse_sequence("m=3\n0123\n")

    def test_header_after_digits(self):
        with self.assertRaises(SequenceFormatError):
            parse_sequence("01\nm=4\n")
