# binmach/logic.py
"""Boolean updating functions: dense tables, ANF, cube covers, costs and PLA export.

Vertex x of a v-input table is the integer whose bit b is variable x_b, so a
binary machine state indexes its stage tables directly. Cubes are (mask,
value) pairs: bit b of mask set means x_b appears as a literal, with the
polarity given by bit b of value. Complemented literals cost nothing.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import NamedTuple

import numpy as np

from .exceptions import LogicError, PlaFormatError
from .utils import popcount, popcount_array

logger = logging.getLogger(__name__)

DC = 2
MAX_TABLE_VARS = 24
# disjoint decompositions beyond this many cubes are not worth costing
MAX_ESOP_CUBES = 1 << 14
# on-set size times off-set size above which a completed table skips the SOP route
SOP_WORK_LIMIT = 1 << 20


def _vertices(v: int) -> np.ndarray:
    return np.arange(1 << v, dtype=np.int64)


@dataclass(frozen=True, eq=False)
class BoolTable:
    """Value in {0, 1, DC} for each of the 2**v input vertices."""
    v: int
    values: np.ndarray

    def __post_init__(self):
        if not 0 <= self.v <= MAX_TABLE_VARS:
            raise LogicError(f"tables are limited to {MAX_TABLE_VARS} inputs, got {self.v}")
        values = np.array(self.values, dtype=np.uint8)
        if values.shape != (1 << self.v,):
            raise LogicError(f"a {self.v}-input table needs {1 << self.v} vertices, got {values.size}")
        if values.size and values.max() > DC:
            raise LogicError("table entries must be 0, 1 or dc")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @classmethod
    def from_sets(cls, v: int, on=(), off=(), default: int = DC) -> BoolTable:
        values = np.full(1 << v, default, dtype=np.uint8)
        values[np.asarray(list(off), dtype=np.int64)] = 0
        values[np.asarray(list(on), dtype=np.int64)] = 1
        return cls(v, values)

    @classmethod
    def from_string(cls, text: str) -> BoolTable:
        """Characters 0/1/- for vertices 0, 1, 2, ... in order."""
        lookup = {"0": 0, "1": 1, "-": DC}
        try:
            values = [lookup[ch] for ch in text]
        except KeyError as exc:
            raise LogicError(f"bad table character {exc.args[0]!r}") from None
        v = max(len(values) - 1, 0).bit_length()
        return cls(v, np.asarray(values, dtype=np.uint8))

    def __getitem__(self, vertex: int) -> int:
        return int(self.values[vertex])

    def __eq__(self, other):
        if not isinstance(other, BoolTable):
            return NotImplemented
        return self.v == other.v and np.array_equal(self.values, other.values)

    def __str__(self):
        return "".join("01-"[x] for x in self.values)

    def on_set(self) -> np.ndarray:
        return np.nonzero(self.values == 1)[0].astype(np.int64)

    def off_set(self) -> np.ndarray:
        return np.nonzero(self.values == 0)[0].astype(np.int64)

    def dc_set(self) -> np.ndarray:
        return np.nonzero(self.values == DC)[0].astype(np.int64)

    @property
    def is_complete(self) -> bool:
        return not np.any(self.values == DC)

    def filled(self, value: int) -> BoolTable:
        return BoolTable(self.v, np.where(self.values == DC, value, self.values))


# ---------------------------
# Algebraic normal form
# ---------------------------
@dataclass(frozen=True)
class AnfPoly:
    """XOR of AND-monomials; each monomial is a variable mask, 0 is the constant 1."""
    v: int
    monomials: frozenset[int]

    def evaluate(self, x: int) -> int:
        return sum(1 for mono in self.monomials if x & mono == mono) & 1

    def to_table(self) -> BoolTable:
        coeffs = np.zeros(1 << self.v, dtype=np.uint8)
        coeffs[list(self.monomials)] = 1
        return BoolTable(self.v, _mobius(coeffs))

    def __str__(self):
        if not self.monomials:
            return "0"
        terms = []
        for mono in sorted(self.monomials, key=lambda m: (popcount(m), m)):
            names = [f"x{b}" for b in range(self.v) if mono >> b & 1]
            terms.append("*".join(names) or "1")
        return " ^ ".join(terms)


def _mobius(values: np.ndarray) -> np.ndarray:
    """Binary Moebius transform (its own inverse over GF(2))."""
    out = values.astype(np.uint8).copy()
    size = out.size
    step = 1
    while step < size:
        view = out.reshape(-1, 2, step)
        view[:, 1, :] ^= view[:, 0, :]
        step <<= 1
    return out


def anf(t: BoolTable) -> AnfPoly:
    if not t.is_complete:
        raise LogicError("ANF needs a completely specified table")
    coeffs = _mobius(t.values)
    return AnfPoly(t.v, frozenset(int(m) for m in np.nonzero(coeffs)[0]))


class GateCount(NamedTuple):
    and2: int
    xor2: int


def cost_anf(poly: AnfPoly) -> GateCount:
    if not poly.monomials:
        return GateCount(0, 0)
    degrees = popcount_array(np.fromiter(poly.monomials, dtype=np.int64))
    and2 = int(np.sum(np.maximum(degrees - 1, 0)))
    return GateCount(and2, len(poly.monomials) - 1)


# ---------------------------
# Cubes and covers
# ---------------------------
class Cube(NamedTuple):
    mask: int
    value: int

    @classmethod
    def parse(cls, text: str) -> Cube:
        """Pattern of 0/1/- written x_{v-1} first."""
        mask = value = 0
        for ch in text:
            mask <<= 1
            value <<= 1
            if ch in "01":
                mask |= 1
                value |= ch == "1"
            elif ch != "-":
                raise LogicError(f"bad cube character {ch!r}")
        return cls(mask, value)

    @classmethod
    def from_literals(cls, literals) -> Cube:
        """literals: iterable of (variable, polarity), polarity 0 for a complement."""
        mask = value = 0
        for var, polarity in literals:
            mask |= 1 << var
            if polarity:
                value |= 1 << var
        return cls(mask, value)

    @property
    def literal_count(self) -> int:
        return popcount(self.mask)

    def covers(self, x: int) -> bool:
        return x & self.mask == self.value

    def contains(self, vertices: np.ndarray) -> np.ndarray:
        return (vertices & self.mask) == self.value

    def intersects(self, other: Cube) -> bool:
        return not (self.value ^ other.value) & self.mask & other.mask

    def pattern(self, v: int) -> str:
        chars = []
        for b in range(v - 1, -1, -1):
            chars.append(str(self.value >> b & 1) if self.mask >> b & 1 else "-")
        return "".join(chars)


def sharp(c: Cube, d: Cube) -> list[Cube]:
    """Disjoint cubes covering c minus d."""
    if not c.intersects(d):
        return [c]
    pieces = []
    mask, value = c
    free = d.mask & ~c.mask
    while free:
        bit = free & -free
        free ^= bit
        pieces.append(Cube(mask | bit, value | (~d.value & bit)))
        mask |= bit
        value |= d.value & bit
    return pieces


@dataclass(frozen=True)
class Cover:
    """Sum of products (OR of cubes)."""
    v: int
    cubes: tuple[Cube, ...]

    def evaluate(self, x: int) -> int:
        return int(any(c.covers(x) for c in self.cubes))

    def to_table(self) -> BoolTable:
        vertices = _vertices(self.v)
        values = np.zeros(vertices.size, dtype=bool)
        for c in self.cubes:
            values |= c.contains(vertices)
        return BoolTable(self.v, values.astype(np.uint8))

    @property
    def literal_count(self) -> int:
        return sum(c.literal_count for c in self.cubes)

    def disjoint(self, limit: int | None = None) -> Esop:
        """Disjoint-sharp decomposition; disjoint cubes OR and XOR alike."""
        result: list[Cube] = []
        for cube in self.cubes:
            pieces = [cube]
            for done in result:
                pieces = [q for piece in pieces for q in sharp(piece, done)]
                if not pieces:
                    break
            result.extend(pieces)
            if limit is not None and len(result) > limit:
                raise LogicError(f"disjoint decomposition exceeds {limit} cubes")
        return Esop(self.v, tuple(result))

    def patterns(self) -> list[str]:
        return [c.pattern(self.v) for c in self.cubes]


@dataclass(frozen=True)
class Esop:
    """Exclusive sum of products (XOR of cubes)."""
    v: int
    cubes: tuple[Cube, ...]

    @classmethod
    def from_terms(cls, v: int, terms) -> Esop:
        return cls(v, tuple(Cube.from_literals(t) for t in terms))

    def evaluate(self, x: int) -> int:
        return sum(1 for c in self.cubes if c.covers(x)) & 1

    def to_table(self) -> BoolTable:
        vertices = _vertices(self.v)
        values = np.zeros(vertices.size, dtype=bool)
        for c in self.cubes:
            values ^= c.contains(vertices)
        return BoolTable(self.v, values.astype(np.uint8))


def cost_esop(e: Esop) -> GateCount:
    if not e.cubes:
        return GateCount(0, 0)
    and2 = sum(max(c.literal_count - 1, 0) for c in e.cubes)
    return GateCount(and2, len(e.cubes) - 1)


# ---------------------------
# Two-level minimization
# ---------------------------
def _expand(cube: Cube, v: int, off: np.ndarray) -> Cube:
    """Drop literals one variable at a time while no off-vertex gets covered.

    Growing a cube never makes a rejected literal removable, so one pass
    leaves a prime.
    """
    for b in range(v):
        bit = 1 << b
        if not cube.mask & bit:
            continue
        trial = Cube(cube.mask & ~bit, cube.value & ~bit)
        if not np.any(trial.contains(off)):
            cube = trial
    return cube


def _irredundant(cubes: list[Cube], on: np.ndarray) -> list[Cube]:
    if not cubes:
        return cubes
    hits = [c.contains(on) for c in cubes]
    depth = np.sum(hits, axis=0)
    keep = [True] * len(cubes)
    for i in sorted(range(len(cubes)), key=lambda i: (int(hits[i].sum()), i)):
        if np.all(depth[hits[i]] >= 2):
            keep[i] = False
            depth = depth - hits[i]
    return [c for c, k in zip(cubes, keep) if k]


def _prime_cover(v: int, on: np.ndarray, off: np.ndarray) -> list[Cube]:
    full = (1 << v) - 1
    cubes = []
    covered = np.zeros(on.size, dtype=bool)
    for idx in range(on.size):
        if covered[idx]:
            continue
        cube = _expand(Cube(full, int(on[idx])), v, off)
        cubes.append(cube)
        covered |= cube.contains(on)
    return _irredundant(cubes, on)


def minimize_sop(t: BoolTable) -> Cover:
    """Greedy expand + irredundant cover exploiting don't cares.

    The cover built with every dc treated as off competes too (after a second
    expansion against the true off-set), so the result never has more
    literals than the cover of the zero-filled table.
    """
    on, off = t.on_set(), t.off_set()
    cubes = _prime_cover(t.v, on, off)
    if t.dc_set().size:
        strict = _prime_cover(t.v, on, np.union1d(off, t.dc_set()))
        strict = _irredundant([_expand(c, t.v, off) for c in strict], on)
        if sum(c.literal_count for c in strict) < sum(c.literal_count for c in cubes):
            cubes = strict
    return Cover(t.v, tuple(cubes))


# ---------------------------
# Costs
# ---------------------------
@dataclass(frozen=True)
class UnitCosts:
    and2: int = 1
    xor2: int = 1
    reg: int = 2

    @classmethod
    def from_mapping(cls, mapping) -> UnitCosts:
        return cls(**{k: int(v) for k, v in dict(mapping).items()})


@dataclass(frozen=True)
class CostReport:
    and2_count: int
    xor2_count: int
    register_stages: int
    total_units: int
    sop_literals: int | None = None

    @classmethod
    def build(cls, and2: int, xor2: int, stages: int, costs: UnitCosts = UnitCosts(),
              sop_literals: int | None = None) -> CostReport:
        total = and2 * costs.and2 + xor2 * costs.xor2 + stages * costs.reg
        return cls(and2, xor2, stages, total, sop_literals)

    def as_dict(self) -> dict:
        return {
            "and2": self.and2_count,
            "xor2": self.xor2_count,
            "register_stages": self.register_stages,
            "total_units": self.total_units,
            "sop_literals": self.sop_literals,
        }


def machine_cost(bm, policy=None, costs: UnitCosts = UnitCosts()) -> CostReport:
    """Cost of a binary machine's completed updating functions plus its register.

    Each stage function is costed through its ANF and through the disjoint
    form of its SOP cover; the cheaper route counts. Under the zero and one
    policies a stage whose on-set times off-set exceeds SOP_WORK_LIMIT gets
    the ANF route only, and sop_literals is then None.
    """
    from .machine import DcPolicy, complete

    def gates(count: GateCount) -> int:
        return count.and2 * costs.and2 + count.xor2 * costs.xor2

    policy = DcPolicy(policy or bm.dc_policy or DcPolicy.ZERO)
    done = bm if bm.dc_policy == policy else complete(bm, policy)
    and2 = xor2 = 0
    literals: int | None = 0
    for b in range(done.n_bits):
        table = done.stage_table(b)
        best = cost_anf(anf(table))
        if policy == DcPolicy.MINIMIZE:
            cover = done.covers[b]
        elif table.on_set().size * table.off_set().size <= SOP_WORK_LIMIT:
            cover = minimize_sop(table)
        else:
            logger.debug("stage %d: %d-input table too large for the SOP route", b, table.v)
            cover = None
        if cover is not None:
            try:
                by_esop = cost_esop(cover.disjoint(limit=MAX_ESOP_CUBES))
                if gates(by_esop) < gates(best):
                    best = by_esop
            except LogicError:
                logger.debug("stage %d: disjoint cover too large, ANF cost kept", b)
        and2 += best.and2
        xor2 += best.xor2
        literals = None if cover is None or literals is None else literals + cover.literal_count
    return CostReport.build(and2, xor2, done.n_bits, costs, sop_literals=literals)


# ---------------------------
# PLA
# ---------------------------
def _pattern(x: int, v: int) -> str:
    return format(x, f"0{v}b") if v else ""


def export_pla(source, destination=None, table: BoolTable | None = None) -> str:
    """Espresso PLA text (.type fr); dc vertices are left out.

    A Cover is written as its cubes (output 1) plus the off-set, taken from
    `table` when given and from the cover's complement otherwise.
    """
    if isinstance(source, BoolTable):
        v = source.v
        rows = [f"{_pattern(int(x), v)} {source[int(x)]}"
                for x in np.nonzero(source.values != DC)[0]]
    elif isinstance(source, Cover):
        v = source.v
        off = table.off_set() if table is not None else source.to_table().off_set()
        rows = [f"{p} 1" for p in source.patterns()]
        rows += [f"{_pattern(int(x), v)} 0" for x in off]
    else:
        raise LogicError(f"cannot export {type(source).__name__} as PLA")
    text = "\n".join([f".i {v}", ".o 1", ".type fr", f".p {len(rows)}", *rows, ".e"]) + "\n"
    if destination is not None:
        if hasattr(destination, "write"):
            destination.write(text)
        else:
            Path(destination).write_text(text, encoding="ascii")
    return text


def parse_pla(text: str) -> BoolTable:
    v = None
    kind = "fr"
    declared = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("."):
            key, _, arg = line.partition(" ")
            arg = arg.strip()
            if key == ".e":
                break
            if key in {".i", ".o", ".p"}:
                try:
                    number = int(arg)
                except ValueError:
                    raise PlaFormatError(f"{key} needs an integer", lineno, arg) from None
                if key == ".i":
                    v = number
                elif key == ".o" and number != 1:
                    raise PlaFormatError("only single-output PLAs are supported", lineno, arg)
                elif key == ".p":
                    declared = number
            elif key == ".type":
                if arg not in {"f", "fr"}:
                    raise PlaFormatError("unsupported PLA type", lineno, arg)
                kind = arg
            continue
        parts = line.split()
        if v is None or len(parts) != 2 or len(parts[0]) != v or parts[1] not in {"0", "1"}:
            raise PlaFormatError("malformed row", lineno, line)
        rows.append((lineno, parts[0], int(parts[1])))
    if v is None:
        raise PlaFormatError("missing .i")
    if declared is not None and declared != len(rows):
        raise PlaFormatError(f".p declares {declared} rows, found {len(rows)}")

    values = np.full(1 << v, 0 if kind == "f" else DC, dtype=np.uint8)
    for lineno, pattern, out in rows:
        try:
            cube = Cube.parse(pattern)
        except LogicError:
            raise PlaFormatError("bad input pattern", lineno, pattern) from None
        hit = cube.contains(_vertices(v))
        clash = hit & (values != DC) & (values != out)
        if kind == "fr" and np.any(clash):
            raise PlaFormatError("row contradicts an earlier row", lineno, pattern)
        values[hit] = out
    return BoolTable(v, values)

