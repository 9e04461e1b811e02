# binmach/machine.py
"""Executable m-ary and binary machines.

A state is stored as one integer: digit q (radix m) is the value of stage q,
stage 0 being the least significant digit. For m = 2**q the same integer is
the binary state, stage q*i + r holding bit r of m-ary stage i, so
binarization keeps the transition map as it is.
"""
from __future__ import annotations

import dataclasses
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import TYPE_CHECKING, Mapping

import numpy as np

from .exceptions import MachineError, MachineFormatError, UnspecifiedStateError
from .logic import DC, MAX_TABLE_VARS, BoolTable, Cover, minimize_sop
from .sequence import DigitSequence
from .utils import is_power_of_two, to_digits

if TYPE_CHECKING:
    from .synth import StateAssignment

logger = logging.getLogger(__name__)

MAGIC = "BINMACH 1"


class DcPolicy(str, Enum):
    ZERO = "zero"
    ONE = "one"
    MINIMIZE = "minimize"

    def __str__(self):
        return self.value


def _check_transitions(transitions: Mapping[int, int], size: int):
    for cur, nxt in transitions.items():
        if not 0 <= cur < size or not 0 <= nxt < size:
            raise MachineError(f"transition {cur} -> {nxt} leaves the {size}-state space")


@dataclass(frozen=True, eq=False)
class MAryMachine:
    m: int
    n: int
    transitions: Mapping[int, int]
    initial: int
    assignment: StateAssignment | None = None

    def __post_init__(self):
        if self.m < 2 or self.n < 1:
            raise MachineError(f"need m >= 2 and n >= 1, got m={self.m} n={self.n}")
        _check_transitions(self.transitions, self.size)
        if not 0 <= self.initial < self.size:
            raise MachineError(f"initial state {self.initial} is out of range")

    @property
    def size(self) -> int:
        return self.m ** self.n

    def digits(self, state: int) -> tuple[int, ...]:
        """Stage values, most significant stage first (x_{n-1} ... x_0)."""
        return tuple(reversed(to_digits(state, self.m, self.n)))

    def step(self, state: int) -> int:
        try:
            return self.transitions[state]
        except KeyError:
            raise UnspecifiedStateError(state) from None

    def output(self, state: int) -> tuple[int, ...]:
        return (state % self.m,)

    def stage_function(self, q: int) -> dict[tuple[int, ...], int]:
        """Defining table of f_q over the specified states; others are don't cares."""
        if not 0 <= q < self.n:
            raise MachineError(f"no stage {q} in a {self.n}-stage machine")
        weight = self.m ** q
        return {self.digits(cur): nxt // weight % self.m for cur, nxt in sorted(self.transitions.items())}

    def i_sets(self, q: int) -> dict[int, frozenset[tuple[int, ...]]]:
        table = self.stage_function(q)
        return {
            i: frozenset(x for x, value in table.items() if value == i)
            for i in range(self.m)
        }

    @property
    def dont_cares(self) -> int:
        return self.size - len(self.transitions)


@dataclass(frozen=True, eq=False)
class BinaryMachine:
    n_bits: int
    p: int
    transitions: Mapping[int, int]
    initial: int
    dc_policy: DcPolicy | None = None
    # per-stage completion covers, only for the minimize policy
    covers: tuple[Cover, ...] | None = None

    def __post_init__(self):
        if not 1 <= self.p <= self.n_bits:
            raise MachineError(f"degree of parallelization {self.p} must be in 1..{self.n_bits}")
        _check_transitions(self.transitions, self.size)
        if not 0 <= self.initial < self.size:
            raise MachineError(f"initial state {self.initial} is out of range")
        if self.dc_policy == DcPolicy.MINIMIZE and (self.covers is None or len(self.covers) != self.n_bits):
            raise MachineError("the minimize policy needs one cover per stage")

    @property
    def size(self) -> int:
        return 1 << self.n_bits

    @property
    def is_complete(self) -> bool:
        return self.dc_policy is not None or len(self.transitions) == self.size

    def step(self, state: int) -> int:
        nxt = self.transitions.get(state)
        if nxt is not None:
            return nxt
        if not 0 <= state < self.size:
            raise MachineError(f"state {state} is out of range")
        if self.dc_policy is None:
            raise UnspecifiedStateError(state)
        if self.dc_policy == DcPolicy.ZERO:
            return 0
        if self.dc_policy == DcPolicy.ONE:
            return self.size - 1
        return sum(cover.evaluate(state) << b for b, cover in enumerate(self.covers))

    def output(self, state: int) -> tuple[int, ...]:
        """The p least significant stages, most significant of them first."""
        return tuple((state >> b) & 1 for b in range(self.p - 1, -1, -1))

    def care_table(self, b: int) -> BoolTable:
        """Stage b's function on the specified states, dc elsewhere."""
        if not 0 <= b < self.n_bits:
            raise MachineError(f"no stage {b} in a {self.n_bits}-stage machine")
        values = np.full(self.size, DC, dtype=np.uint8)
        if self.transitions:
            cur = np.fromiter(self.transitions.keys(), dtype=np.int64, count=len(self.transitions))
            nxt = np.fromiter(self.transitions.values(), dtype=np.int64, count=len(self.transitions))
            values[cur] = (nxt >> b) & 1
        return BoolTable(self.n_bits, values)

    def stage_table(self, b: int) -> BoolTable:
        """Stage b's function with don't cares filled by the completion policy."""
        table = self.care_table(b)
        if self.dc_policy is None or table.is_complete:
            return table
        if self.dc_policy == DcPolicy.MINIMIZE:
            filled = np.where(table.values == DC, self.covers[b].to_table().values, table.values)
            return BoolTable(self.n_bits, filled)
        return table.filled(1 if self.dc_policy == DcPolicy.ONE else 0)


Machine = MAryMachine | BinaryMachine


def step(machine: Machine, state: int) -> int:
    """Synchronous update of every stage."""
    return machine.step(state)


def run(machine: Machine, cycles: int, state: int | None = None) -> DigitSequence:
    """Output digits of `cycles` clock cycles, read before each transition."""
    if cycles < 1:
        raise MachineError("cycles must be >= 1")
    state = machine.initial if state is None else state
    out = []
    for _ in range(cycles):
        out.extend(machine.output(state))
        state = machine.step(state)
    alphabet = machine.m if isinstance(machine, MAryMachine) else 2
    return DigitSequence(alphabet, tuple(out))


def binarize(mm: MAryMachine) -> BinaryMachine:
    """Replace every 2**q-valued stage by q binary stages (natural binary encoding).

    A synthesized machine drops the high bits that are 0 in every specified
    state, so it ends up with ceil(log2 N_max) + q stages; any other machine
    keeps all q*n stages.
    """
    if not is_power_of_two(mm.m):
        raise MachineError(f"m={mm.m} is not a power of two")
    q = mm.m.bit_length() - 1
    n_bits = q * mm.n
    if mm.assignment is not None:
        used = max([mm.initial, *mm.transitions.keys(), *mm.transitions.values()])
        n_bits = max(q, used.bit_length())
    return BinaryMachine(
        n_bits=n_bits,
        p=q,
        transitions=dict(mm.transitions),
        initial=mm.initial,
    )


def complete(bm: BinaryMachine, policy=DcPolicy.ZERO, workers: int = 1) -> BinaryMachine:
    """Specify every don't care; the generation cycle is untouched."""
    policy = DcPolicy(policy)
    covers = None
    if policy == DcPolicy.MINIMIZE:
        tables = [bm.care_table(b) for b in range(bm.n_bits)]
        with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
            covers = tuple(pool.map(minimize_sop, tables))
        logger.debug("minimized %d stage functions, %d literals",
                     bm.n_bits, sum(c.literal_count for c in covers))
    return dataclasses.replace(bm, dc_policy=policy, covers=covers)


# ---------------------------
# BINMACH 1 files
# ---------------------------
def format_machine(bm: BinaryMachine) -> str:
    if bm.dc_policy is None:
        raise MachineError("complete the machine before writing it")
    lines = [
        MAGIC,
        "m 2",
        f"n {bm.n_bits}",
        f"p {bm.p}",
        f"init {bm.initial}",
        f"dc {bm.dc_policy}",
    ]
    lines += [f"T {cur} {nxt}" for cur, nxt in sorted(bm.transitions.items())]
    return "\n".join(lines) + "\n"


def write_machine(path, bm: BinaryMachine) -> None:
    Path(path).write_text(format_machine(bm), encoding="ascii")


def _int_field(value: str, lineno: int) -> int:
    try:
        return int(value)
    except ValueError:
        raise MachineFormatError("expected an integer", lineno, value) from None


def parse_machine(text: str, workers: int = 1) -> BinaryMachine:
    lines = text.splitlines()
    if not lines or lines[0].strip() != MAGIC:
        raise MachineFormatError(f"first line must be {MAGIC!r}", 1, lines[0].strip() if lines else "")
    header: dict[str, str] = {}
    transitions: dict[int, int] = {}
    last = -1
    for lineno, raw in enumerate(lines[1:], start=2):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        key = parts[0]
        if key == "T":
            if len(parts) != 3:
                raise MachineFormatError("transition needs two states", lineno, line)
            cur, nxt = _int_field(parts[1], lineno), _int_field(parts[2], lineno)
            if cur <= last:
                raise MachineFormatError("transitions must be in ascending order", lineno, parts[1])
            transitions[cur] = nxt
            last = cur
        elif key in {"m", "n", "p", "init", "dc"}:
            if len(parts) != 2:
                raise MachineFormatError(f"{key} takes one value", lineno, line)
            if key in header:
                raise MachineFormatError("repeated header field", lineno, key)
            if transitions:
                raise MachineFormatError("header fields must precede transitions", lineno, key)
            header[key] = parts[1]
        else:
            raise MachineFormatError("unknown line", lineno, key)

    missing = [k for k in ("m", "n", "p", "init", "dc") if k not in header]
    if missing:
        raise MachineFormatError(f"missing header field(s) {', '.join(missing)}")
    if _int_field(header["m"], 0) != 2:
        raise MachineFormatError("only binary machines (m 2) are stored", token=header["m"])
    try:
        policy = DcPolicy(header["dc"])
    except ValueError:
        raise MachineFormatError("dc must be zero, one or minimize", token=header["dc"]) from None
    n_bits = _int_field(header["n"], 0)
    if policy == DcPolicy.MINIMIZE and n_bits > MAX_TABLE_VARS:
        raise MachineFormatError(f"dc minimize needs n <= {MAX_TABLE_VARS}", token=header["n"])
    try:
        bm = BinaryMachine(
            n_bits=n_bits,
            p=_int_field(header["p"], 0),
            transitions=transitions,
            initial=_int_field(header["init"], 0),
        )
    except MachineError as exc:
        raise MachineFormatError(str(exc)) from None
    return complete(bm, policy, workers=workers)


def read_machine(path, workers: int = 1) -> BinaryMachine:
    return parse_machine(Path(path).read_text(encoding="ascii", errors="replace"), workers=workers)
