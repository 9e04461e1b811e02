# binmach/sequence.py
"""Digit sequences: m-ary encoding, statistics, periodicity and test families."""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import NamedTuple

import numpy as np
from sympy import isprime
from sympy.ntheory import legendre_symbol

from .exceptions import SequenceError, SequenceFormatError
from .utils import generator

logger = logging.getLogger(__name__)

# '0'-'9' then 'a'-'v': one character per digit for m up to 32
DIGIT_CHARS = "0123456789abcdefghijklmnopqrstuv"
MAX_TEXT_ALPHABET = len(DIGIT_CHARS)


@dataclass(frozen=True)
class DigitSequence:
    """A finite sequence over M = {0..m-1}."""
    m: int
    digits: tuple[int, ...]

    def __post_init__(self):
        if self.m < 2:
            raise SequenceError(f"alphabet size must be >= 2, got {self.m}")
        digits = tuple(int(d) for d in self.digits)
        if not digits:
            raise SequenceError("a sequence needs at least one digit")
        if min(digits) < 0 or max(digits) >= self.m:
            bad = next(d for d in digits if not 0 <= d < self.m)
            raise SequenceError(f"digit {bad} is outside 0..{self.m - 1}")
        object.__setattr__(self, "digits", digits)

    @classmethod
    def binary(cls, bits) -> DigitSequence:
        return cls(2, tuple(bits))

    def __len__(self):
        return len(self.digits)

    def __iter__(self):
        return iter(self.digits)

    def __getitem__(self, index):
        return self.digits[index]

    def __str__(self):
        if self.m <= MAX_TEXT_ALPHABET:
            return "".join(DIGIT_CHARS[d] for d in self.digits)
        return " ".join(str(d) for d in self.digits)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.digits, dtype=np.int64)


@dataclass(frozen=True)
class DigitCounts:
    counts: tuple[int, ...]
    n_max: int

    def __getitem__(self, digit: int) -> int:
        return self.counts[digit]


@dataclass(frozen=True)
class PeriodReport:
    pre_period: int
    period: int

    @property
    def purely_periodic(self) -> bool:
        return self.pre_period == 0


class Encoding(NamedTuple):
    sequence: DigitSequence
    pad: tuple[int, ...]


def _require_binary(a: DigitSequence):
    if a.m != 2:
        raise SequenceError(f"expected a binary sequence, got m={a.m}")


# ---------------------------
# m-ary encoding
# ---------------------------
def _pack(bits) -> int:
    value = 0
    for b in bits:
        value = (value << 1) | b
    return value


def encode_m_ary(a2: DigitSequence, p: int) -> Encoding:
    """Group bits in p-tuples, most significant bit first, into radix 2**p digits.

    A short tail is padded up to a multiple of p; the pad minimizing N_max of
    the result wins, ties going to the lexicographically smallest pad.
    """
    _require_binary(a2)
    if p < 1:
        raise SequenceError(f"degree of parallelization must be >= 1, got {p}")
    m = 1 << p
    bits = a2.digits
    full = len(bits) - len(bits) % p
    digits = [_pack(bits[i:i + p]) for i in range(0, full, p)]
    pad: tuple[int, ...] = ()

    tail = bits[full:]
    if tail:
        counts = np.bincount(np.asarray(digits, dtype=np.int64), minlength=m) if digits else np.zeros(m, dtype=np.int64)
        base_max = int(counts.max())
        best = None
        for candidate in itertools.product((0, 1), repeat=p - len(tail)):
            last = _pack(tail + candidate)
            n_max = max(base_max, int(counts[last]) + 1)
            if best is None or n_max < best[0]:
                best = (n_max, candidate, last)
        _, pad, last = best
        digits.append(last)
    return Encoding(DigitSequence(m, tuple(digits)), tuple(pad))


def decode_m_ary(am: DigitSequence, p: int) -> DigitSequence:
    """Expand each radix 2**p digit back into p bits, most significant first."""
    if p < 1 or am.m != 1 << p:
        raise SequenceError(f"alphabet size {am.m} is not 2**{p}")
    bits = []
    for d in am.digits:
        bits.extend((d >> shift) & 1 for shift in range(p - 1, -1, -1))
    return DigitSequence.binary(bits)


# ---------------------------
# Statistics
# ---------------------------
def digit_counts(a: DigitSequence) -> DigitCounts:
    counts = np.bincount(a.as_array(), minlength=a.m)
    return DigitCounts(tuple(int(c) for c in counts), int(counts.max()))


def period_analysis(a: DigitSequence) -> PeriodReport:
    """Least period and pre-period exhibited by a finite sequence.

    A candidate (k0, period) must hold at every in-range index >= k0, and the
    tail from k0 must contain at least two full periods and be longer than
    k0; otherwise the whole sequence is taken as one cycle.
    """
    values = a.as_array()
    k = len(values)
    for period in range(1, k // 2 + 1):
        mismatches = np.nonzero(values[:-period] != values[period:])[0]
        pre_period = int(mismatches[-1]) + 1 if len(mismatches) else 0
        tail = k - pre_period
        if tail >= 2 * period and tail > pre_period:
            return PeriodReport(pre_period, period)
    return PeriodReport(0, k)


def aperiodic_autocorrelation(a: DigitSequence) -> np.ndarray:
    """C(u) for u = 0..k-1 with bits mapped 0 -> +1, 1 -> -1."""
    _require_binary(a)
    signs = 1 - 2 * a.as_array()
    full = np.correlate(signs, signs, mode="full")
    return full[len(signs) - 1:]


def merit_factor(a: DigitSequence) -> float:
    c = aperiodic_autocorrelation(a)
    energy = float(np.sum(c[1:].astype(np.float64) ** 2))
    if energy == 0:
        return float("inf")
    return len(a) ** 2 / (2 * energy)


# ---------------------------
# Generators
# ---------------------------
def gen_random(length: int, seed: int) -> DigitSequence:
    """Seeded bits from numpy's PCG64; same (length, seed), same sequence."""
    if length < 1:
        raise SequenceError("length must be >= 1")
    bits = generator(seed).integers(0, 2, size=length)
    return DigitSequence.binary(bits.tolist())


def gen_legendre(prime: int) -> DigitSequence:
    """a_0 = 1; a_i = 0 for quadratic residues i mod L and 1 otherwise."""
    if prime < 3 or prime % 2 == 0 or not isprime(prime):
        raise SequenceError(f"{prime} is not an odd prime")
    bits = [1] + [0 if legendre_symbol(i, prime) == 1 else 1 for i in range(1, prime)]
    return DigitSequence.binary(bits)


def gen_golay_pair(order: int) -> tuple[DigitSequence, DigitSequence]:
    """Complementary pair by doubling: A' = A|B, B' = A|not(B), from A = B = (0)."""
    if order < 0:
        raise SequenceError("order must be >= 0")
    a, b = [0], [0]
    for _ in range(order):
        a, b = a + b, a + [1 - x for x in b]
    return DigitSequence.binary(a), DigitSequence.binary(b)


# ---------------------------
# Text format
# ---------------------------
def parse_sequence(text: str) -> DigitSequence:
    """Read the sequence text format: optional "m=<int>" header, '#' comments."""
    m = 2
    digits = []
    seen_digit = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("m="):
            if seen_digit:
                raise SequenceFormatError("header must precede the digits", lineno, line)
            try:
                m = int(line[2:].strip())
            except ValueError:
                raise SequenceFormatError("bad alphabet size", lineno, line) from None
            if not 2 <= m <= MAX_TEXT_ALPHABET:
                raise SequenceFormatError(f"alphabet size must be in 2..{MAX_TEXT_ALPHABET}", lineno, line)
            continue
        for ch in line:
            if ch.isspace():
                continue
            value = DIGIT_CHARS.find(ch.lower())
            if value < 0 or value >= m:
                raise SequenceFormatError(f"not a digit of the {m}-ary alphabet", lineno, ch)
            digits.append(value)
            seen_digit = True
    if not digits:
        raise SequenceFormatError("no digits found")
    return DigitSequence(m, tuple(digits))


def format_sequence(a: DigitSequence, width: int = 64) -> str:
    if a.m > MAX_TEXT_ALPHABET:
        raise SequenceError(f"alphabet size {a.m} has no text form")
    body = str(a)
    lines = [body[i:i + width] for i in range(0, len(body), width)]
    if a.m != 2:
        lines.insert(0, f"m={a.m}")
    return "\n".join(lines) + "\n"


def read_sequence(path) -> DigitSequence:
    return parse_sequence(Path(path).read_text(encoding="ascii", errors="replace"))


def write_sequence(path, a: DigitSequence, width: int = 64) -> None:
    Path(path).write_text(format_sequence(a, width), encoding="ascii")
