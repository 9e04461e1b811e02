# binmach/baselines.py
"""Classical LFSR constructions the synthesized machines are measured against.

Fibonacci convention throughout: s_t = c_1*s_{t-1} + ... + c_L*s_{t-L} over
GF(2). The register state at time t is (s_t, ..., s_{t+L-1}) with s_t in
row 0, so the output of a cycle is read from the first rows before the
transition, the same as for binary machines.
"""
from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import singledispatch
from pathlib import Path

import numpy as np

from .exceptions import LfsrError, LfsrFormatError
from .logic import CostReport, UnitCosts
from .sequence import DigitSequence
from .utils import parity

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LfsrSpec:
    length: int
    taps: tuple[int, ...]
    fill: tuple[int, ...]

    def __post_init__(self):
        if self.length < 0:
            raise LfsrError("LFSR length must be >= 0")
        taps = tuple(int(c) & 1 for c in self.taps)
        fill = tuple(int(b) & 1 for b in self.fill)
        if len(taps) != self.length or len(fill) != self.length:
            raise LfsrError(f"an LFSR of length {self.length} needs {self.length} taps and fill bits")
        object.__setattr__(self, "taps", taps)
        object.__setattr__(self, "fill", fill)

    @property
    def tap_count(self) -> int:
        return sum(self.taps)

    def generate(self, count: int) -> DigitSequence:
        if count < 1:
            raise LfsrError("count must be >= 1")
        out = list(self.fill[:count])
        taps = [i for i, c in enumerate(self.taps, start=1) if c]
        while len(out) < count:
            t = len(out)
            out.append(sum(out[t - i] for i in taps) & 1 if self.length else 0)
        return DigitSequence.binary(out)


def berlekamp_massey(a2: DigitSequence) -> LfsrSpec:
    """Shortest LFSR generating a2, loaded with the first L bits of a2.

    Connection polynomials are kept as integers (bit i is c_i) and the window
    of recent bits as an integer with s_n in bit 0, so each discrepancy is
    one AND plus a parity.
    """
    if a2.m != 2:
        raise LfsrError(f"expected a binary sequence, got m={a2.m}")
    c, b = 1, 1
    length, shift = 0, 1
    window = 0
    for n, bit in enumerate(a2.digits):
        window = (window << 1) | bit
        if not parity(c & window):
            shift += 1
            continue
        if 2 * length <= n:
            c, b = c ^ (b << shift), c
            length = n + 1 - length
            shift = 1
        else:
            c ^= b << shift
            shift += 1
    taps = tuple((c >> i) & 1 for i in range(1, length + 1))
    return LfsrSpec(length, taps, a2.digits[:length])


# ---------------------------
# Parallelization by the p-th power of the connection matrix
# ---------------------------
def companion_matrix(l: LfsrSpec) -> np.ndarray:
    """One-step transition matrix of the register state."""
    n = l.length
    a = np.zeros((n, n), dtype=np.uint8)
    if n:
        a[np.arange(n - 1), np.arange(1, n)] = 1
        for i, c in enumerate(l.taps, start=1):
            a[n - 1, n - i] = c
    return a


def _gf2_matmul(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    # float64 products are exact for any size that fits in memory
    return (x.astype(np.float64) @ y.astype(np.float64) % 2).astype(np.uint8)


def gf2_matrix_power(a: np.ndarray, p: int) -> np.ndarray:
    if p < 0:
        raise LfsrError("matrix exponent must be >= 0")
    result = np.eye(a.shape[0], dtype=np.uint8)
    base = a.astype(np.uint8)
    while p:
        if p & 1:
            result = _gf2_matmul(result, base)
        p >>= 1
        if p:
            base = _gf2_matmul(base, base)
    return result


@dataclass(frozen=True, eq=False)
class ParallelLinearMap:
    matrix: np.ndarray
    p: int
    spec: LfsrSpec

    @property
    def output_rows(self) -> range:
        return range(self.p)

    def advance(self, state: np.ndarray) -> np.ndarray:
        return (self.matrix.astype(np.int64) @ state % 2).astype(np.uint8)

    def run(self, cycles: int) -> DigitSequence:
        """p bits per cycle starting from the spec's fill."""
        if cycles < 1:
            raise LfsrError("cycles must be >= 1")
        state = np.asarray(self.spec.fill, dtype=np.uint8)
        out = np.empty((cycles, self.p), dtype=np.uint8)
        for t in range(cycles):
            out[t] = state[: self.p]
            state = self.advance(state)
        return DigitSequence.binary(out.ravel().tolist())


def lfsr_parallelize(l: LfsrSpec, p: int) -> ParallelLinearMap:
    if not 1 <= p <= l.length:
        raise LfsrError(f"matrix parallelization needs 1 <= p <= L={l.length}, got p={p}")
    return ParallelLinearMap(gf2_matrix_power(companion_matrix(l), p), p, l)


# ---------------------------
# Parallelization by decimation
# ---------------------------
@dataclass(frozen=True)
class DecimationBank:
    entries: tuple[LfsrSpec, ...]
    length: int
    # p times the linear complexity of the whole sequence
    bound: int

    @property
    def p(self) -> int:
        return len(self.entries)

    @property
    def total_stages(self) -> int:
        return sum(e.length for e in self.entries)

    def interleave(self) -> DigitSequence:
        """Bit i*p + j comes from LFSR j; regenerates the decimated input."""
        out = np.zeros(self.length, dtype=np.uint8)
        for j, entry in enumerate(self.entries):
            count = len(range(j, self.length, self.p))
            out[j::self.p] = entry.generate(count).digits
        return DigitSequence.binary(out.tolist())


def decimate_synthesis(a2: DigitSequence, p: int, workers: int = 1) -> DecimationBank:
    k = len(a2)
    if p < 1 or p >= k:
        raise LfsrError(f"decimation needs 1 <= p < k={k}, got p={p}")
    phases = [DigitSequence.binary(a2.digits[j::p]) for j in range(p)]
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        entries = tuple(pool.map(berlekamp_massey, phases))
    bank = DecimationBank(entries, k, p * berlekamp_massey(a2).length)
    logger.debug("decimation p=%d: %d stages, bound %d", p, bank.total_stages, bank.bound)
    return bank


# ---------------------------
# Costs
# ---------------------------
@singledispatch
def lfsr_cost(obj, costs: UnitCosts = UnitCosts()) -> CostReport:
    raise LfsrError(f"no LFSR cost model for {type(obj).__name__}")


@lfsr_cost.register
def _(obj: LfsrSpec, costs: UnitCosts = UnitCosts()) -> CostReport:
    return CostReport.build(0, max(obj.tap_count - 1, 0), obj.length, costs)


@lfsr_cost.register
def _(obj: ParallelLinearMap, costs: UnitCosts = UnitCosts()) -> CostReport:
    weights = obj.matrix.astype(np.int64).sum(axis=1)
    xor2 = int(np.maximum(weights - 1, 0).sum())
    return CostReport.build(0, xor2, obj.spec.length, costs)


@lfsr_cost.register
def _(obj: DecimationBank, costs: UnitCosts = UnitCosts()) -> CostReport:
    xor2 = sum(max(e.tap_count - 1, 0) for e in obj.entries)
    return CostReport.build(0, xor2, obj.total_stages, costs)


# ---------------------------
# LFSR text format
# ---------------------------
def _bits_to_int(bits) -> int:
    value = 0
    for b in bits:
        value = (value << 1) | b
    return value


def format_lfsr(l: LfsrSpec) -> str:
    poly = _bits_to_int(reversed(l.taps))
    fill = _bits_to_int(l.fill)
    return f"LFSR {l.length}\npoly {poly:x}\nfill {fill:x}\n"


def parse_lfsr(text: str) -> LfsrSpec:
    fields: dict[str, tuple[int, str]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2 or parts[0] not in {"LFSR", "poly", "fill"}:
            raise LfsrFormatError("expected 'LFSR <L>', 'poly <hex>' or 'fill <hex>'", lineno, line)
        if parts[0] in fields:
            raise LfsrFormatError("repeated field", lineno, parts[0])
        try:
            value = int(parts[1], 10 if parts[0] == "LFSR" else 16)
        except ValueError:
            raise LfsrFormatError("bad number", lineno, parts[1]) from None
        if value < 0:
            raise LfsrFormatError("negative value", lineno, parts[1])
        fields[parts[0]] = (value, lineno)
    missing = [k for k in ("LFSR", "poly", "fill") if k not in fields]
    if missing:
        raise LfsrFormatError(f"missing field(s) {', '.join(missing)}")
    length = fields["LFSR"][0]
    for key in ("poly", "fill"):
        value, lineno = fields[key]
        if value >> length:
            raise LfsrFormatError(f"{key} does not fit in {length} bits", lineno, format(value, "x"))
    poly, fill = fields["poly"][0], fields["fill"][0]
    taps = tuple((poly >> i) & 1 for i in range(length))
    bits = tuple((fill >> (length - 1 - j)) & 1 for j in range(length))
    return LfsrSpec(length, taps, bits)


def read_lfsr(path) -> LfsrSpec:
    return parse_lfsr(Path(path).read_text(encoding="ascii", errors="replace"))


def write_lfsr(path, l: LfsrSpec) -> None:
    Path(path).write_text(format_lfsr(l), encoding="ascii")
