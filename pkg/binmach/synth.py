# binmach/synth.py
"""Minimal-stage state assignment for m-ary machines.

Every digit a_j gets a state s_j with s_j mod m = a_j, drawn from the pool
B_i = {j*m + i : j < N_max}. Consecutive states form the generation cycle
s_0 -> s_1 -> ... -> s_{k-1} -> s_0; all other states are don't cares.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass

from .exceptions import SequenceError
from .machine import MAryMachine
from .sequence import DigitCounts, DigitSequence, digit_counts, encode_m_ary
from .utils import ceil_log, generator

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PermutationPolicy:
    """Order in which each pool B_i hands out its states."""
    kind: str = "identity"
    seed: int | None = None

    def __post_init__(self):
        if self.kind not in {"identity", "shuffle"}:
            raise SequenceError(f"unknown permutation policy {self.kind!r}")
        if self.kind == "shuffle" and self.seed is None:
            raise SequenceError("shuffle policy needs a seed")

    @classmethod
    def parse(cls, text: str) -> PermutationPolicy:
        """Accepts "identity" or "shuffle:<seed>"."""
        text = text.strip()
        if text == "identity":
            return cls()
        kind, _, seed = text.partition(":")
        if kind == "shuffle" and seed:
            try:
                return cls("shuffle", int(seed))
            except ValueError:
                pass
        raise SequenceError(f"bad permutation policy {text!r}; use identity or shuffle:<seed>")

    def __str__(self):
        return "identity" if self.kind == "identity" else f"shuffle:{self.seed}"


IDENTITY = PermutationPolicy()


@dataclass(frozen=True)
class StateAssignment:
    states: tuple[int, ...]
    m: int
    policy: PermutationPolicy
    pools: tuple[tuple[int, ...], ...]
    counts: DigitCounts


@dataclass(frozen=True)
class StageBound:
    n: int
    m: int
    n_max: int


def _pools(counts: DigitCounts, m: int, policy: PermutationPolicy) -> list[list[int]]:
    """The prefix of each permuted pool B_i that the sequence consumes (N_i states)."""
    if policy.kind == "identity":
        return [[j * m + i for j in range(n_i)] for i, n_i in enumerate(counts.counts)]
    rng = generator(policy.seed)
    pools = []
    for i, n_i in enumerate(counts.counts):
        picks = rng.choice(counts.n_max, size=n_i, replace=False) if n_i else ()
        pools.append([int(j) * m + i for j in picks])
    return pools


def assign_states(a: DigitSequence, policy: PermutationPolicy = IDENTITY) -> StateAssignment:
    counts = digit_counts(a)
    pools = _pools(counts, a.m, policy)
    used = [0] * a.m
    states = []
    for digit in a.digits:
        states.append(pools[digit][used[digit]])
        used[digit] += 1
    return StateAssignment(
        states=tuple(states),
        m=a.m,
        policy=policy,
        pools=tuple(tuple(pool) for pool in pools),
        counts=counts,
    )


def stage_count(counts: DigitCounts, m: int) -> StageBound:
    """n = ceil(log_m N_max) + 1."""
    if counts.n_max < 1:
        raise SequenceError("N_max must be >= 1")
    return StageBound(ceil_log(m, counts.n_max) + 1, m, counts.n_max)


def binary_stage_bound(a2: DigitSequence, p: int) -> int:
    """Stages of a binary machine emitting p bits per cycle: ceil(log2 N_max) + p."""
    encoded, _ = encode_m_ary(a2, p)
    return ceil_log(2, digit_counts(encoded).n_max) + p


def synthesize_machine(a: DigitSequence, policy: PermutationPolicy = IDENTITY) -> MAryMachine:
    assignment = assign_states(a, policy)
    bound = stage_count(assignment.counts, a.m)
    states = assignment.states
    k = len(states)
    transitions = {states[j]: states[(j + 1) % k] for j in range(k)}
    # pools are disjoint and every pool element is used once
    assert len(transitions) == k, "state assignment produced a repeated state"
    logger.debug("m=%d k=%d N_max=%d stages=%d", a.m, k, bound.n_max, bound.n)
    return MAryMachine(
        m=a.m,
        n=bound.n,
        transitions=transitions,
        initial=states[0],
        assignment=assignment,
    )
