# binmach/compare.py
"""Binary machine vs LFSR baselines, one CompareRow per (sequence, p)."""
from __future__ import annotations

import csv
import io
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .baselines import LfsrSpec, berlekamp_massey, decimate_synthesis, lfsr_cost, lfsr_parallelize
from .exceptions import SequenceError
from .logic import CostReport, UnitCosts, machine_cost
from .machine import BinaryMachine, DcPolicy, binarize, complete
from .sequence import DigitSequence, Encoding, encode_m_ary
from .synth import IDENTITY, PermutationPolicy, binary_stage_bound, synthesize_machine

logger = logging.getLogger(__name__)

# CSV header, in this order
COLUMNS = (
    "seq_id",
    "k",
    "p",
    "bm_stages",
    "bm_cost",
    "lfsr_bm_length",
    "lfsr_parallel_cost",
    "decimation_bank_cost",
    "decimation_bits",
    "ratio_parallel",
    "ratio_decimation",
    "bm1_stages",
    "bm1_cost",
    "lfsr_serial_cost",
)

INF = "inf"
NOT_APPLICABLE = "n/a"


@dataclass(frozen=True)
class Synthesis:
    """Everything the synth pipeline produces for one (sequence, p)."""
    encoding: Encoding
    machine: BinaryMachine
    cost: CostReport
    n_max: int


def synthesize(a2: DigitSequence, p: int, dc_policy=DcPolicy.ZERO,
               perm: PermutationPolicy = IDENTITY, costs: UnitCosts = UnitCosts(),
               workers: int = 1) -> Synthesis:
    """encode -> assign states -> binarize -> complete -> cost."""
    encoding = encode_m_ary(a2, p)
    mm = synthesize_machine(encoding.sequence, perm)
    bm = complete(binarize(mm), dc_policy, workers=workers)
    return Synthesis(encoding, bm, machine_cost(bm, costs=costs), mm.assignment.counts.n_max)


def fixed_point_p(a2: DigitSequence) -> int:
    """Smallest p whose binary machine has exactly p stages."""
    for p in range(1, len(a2) + 1):
        if binary_stage_bound(a2, p) == p:
            return p
    raise SequenceError("no fixed point")  # p = k always qualifies


def ratio(baseline: int | None, cost: int) -> str:
    if baseline is None:
        return NOT_APPLICABLE
    if baseline == 0 or cost == 0:
        return INF
    return f"{baseline / cost:.3f}"


@dataclass(frozen=True)
class CompareRow:
    seq_id: str
    k: int
    p: int
    bm_stages: int
    bm_cost: int
    lfsr_bm_length: int
    lfsr_parallel_cost: int | None
    decimation_bank_cost: int | None
    decimation_bits: int | None
    ratio_parallel: str
    ratio_decimation: str
    bm1_stages: int | None = None
    bm1_cost: int | None = None
    lfsr_serial_cost: int | None = None
    lfsr: LfsrSpec | None = field(default=None, repr=False, compare=False)

    def values(self) -> list[str]:
        return [NOT_APPLICABLE if getattr(self, c) is None else str(getattr(self, c)) for c in COLUMNS]

    def as_dict(self) -> dict:
        return {c: getattr(self, c) for c in COLUMNS}


def compare_sequence(seq_id: str, a2: DigitSequence, p: int | None = None,
                     dc_policy=DcPolicy.MINIMIZE, costs: UnitCosts = UnitCosts(),
                     serial: bool = True, workers: int = 1) -> CompareRow:
    """One comparison row; p defaults to the stage-count fixed point."""
    if p is None:
        p = fixed_point_p(a2)
    k = len(a2)
    result = synthesize(a2, p, dc_policy, costs=costs, workers=workers)
    bm_cost = result.cost.total_units

    lfsr = berlekamp_massey(a2)
    parallel_cost = None
    if 1 <= p <= lfsr.length:
        parallel_cost = lfsr_cost(lfsr_parallelize(lfsr, p), costs).total_units
    bank_cost = bank_bits = None
    if p < k:
        bank = decimate_synthesis(a2, p, workers=workers)
        bank_cost = lfsr_cost(bank, costs).total_units
        bank_bits = bank.total_stages

    bm1_stages = bm1_cost = serial_cost = None
    if serial:
        bm1_stages = binary_stage_bound(a2, 1)
        bm1_cost = result.cost.total_units if p == 1 else \
            synthesize(a2, 1, dc_policy, costs=costs, workers=workers).cost.total_units
        serial_cost = lfsr_cost(lfsr, costs).total_units

    row = CompareRow(
        seq_id=seq_id,
        k=k,
        p=p,
        bm_stages=result.machine.n_bits,
        bm_cost=bm_cost,
        lfsr_bm_length=lfsr.length,
        lfsr_parallel_cost=parallel_cost,
        decimation_bank_cost=bank_cost,
        decimation_bits=bank_bits,
        ratio_parallel=ratio(parallel_cost, bm_cost),
        ratio_decimation=ratio(bank_cost, bm_cost),
        bm1_stages=bm1_stages,
        bm1_cost=bm1_cost,
        lfsr_serial_cost=serial_cost,
        lfsr=lfsr,
    )
    logger.info("compared %s: k=%d p=%d bm=%d lfsr=%s", seq_id, k, p, bm_cost, parallel_cost)
    return row


def compare_many(items, p: int | None = None, dc_policy=DcPolicy.MINIMIZE,
                 costs: UnitCosts = UnitCosts(), workers: int = 1) -> list[CompareRow]:
    """items: (seq_id, sequence) pairs; rows come back in input order."""
    items = list(items)
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        futures = [pool.submit(compare_sequence, seq_id, a2, p, dc_policy, costs) for seq_id, a2 in items]
        return [f.result() for f in futures]


def format_table(rows) -> str:
    cells = [list(COLUMNS)] + [row.values() for row in rows]
    widths = [max(len(line[i]) for line in cells) for i in range(len(COLUMNS))]
    lines = ["  ".join(cell.rjust(w) for cell, w in zip(line, widths)).rstrip() for line in cells]
    return "\n".join(lines) + "\n"


def format_csv(rows) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(COLUMNS)
    writer.writerows(row.values() for row in rows)
    return buffer.getvalue()
