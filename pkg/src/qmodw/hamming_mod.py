"""Hamming weight modulo m for m with prime factors 2 and 3 only.

The algorithm recursively partitions the queried indices into constant
blocks of size m (contributing 0 to the weight mod m) plus a remainder
set whose exact weight is known, using at most n - floor(n/m) queries:

* m = 2: pair the indices and learn each pair's parity with one query;
  parity-0 pairs are constant blocks, parity-1 pairs contribute weight 1.
* m = 3: same with triples and the 2-query mod-3 subroutine; outcome 0
  means a constant triple, outcomes 1 and 2 are the triple's exact weight
  (weights 0 and 3 are the constant cases, so the residue determines it).
* composite m = m1 * m2: recurse with m1, keep one representative index
  per constant block, recurse with m2 on the representatives, and glue
  m2 representative-blocks into size-m blocks.

Leftover indices that do not fill a block are read individually.  All
choices the underlying math leaves free (factor order, block grouping,
representatives) are fixed deterministically so runs are replayable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .oracle import CountingOracle
from .subroutines import deutsch, mod3


class UnsupportedModulus(ValueError):
    """Modulus with a prime factor other than 2 or 3 (or m < 2)."""


def query_bound(n: int, m: int) -> int:
    """ceil(n * (1 - 1/m)), computed exactly as n - floor(n/m)."""
    if m < 2:
        raise ValueError(f"modulus must be at least 2, got {m}")
    if n < 0:
        raise ValueError(f"negative n: {n}")
    return n - n // m


@dataclass(frozen=True)
class ModulusSchedule:
    """How a modulus is handled: base case, or a fixed split m = m1 * m2."""

    m: int
    split: Optional[tuple] = None


def factor_split(m: int) -> ModulusSchedule:
    """Validate m and fix the recursion split (smallest prime factor first)."""
    if m < 2:
        raise UnsupportedModulus(f"modulus must be at least 2, got {m}")
    rest = m
    for p in (2, 3):
        while rest % p == 0:
            rest //= p
    if rest != 1:
        raise UnsupportedModulus(
            f"modulus {m} has a prime factor other than 2 and 3")
    if m in (2, 3):
        return ModulusSchedule(m)
    m1 = 2 if m % 2 == 0 else 3
    return ModulusSchedule(m, (m1, m // m1))


@dataclass(frozen=True)
class PartitionResult:
    """Constant blocks of size m, plus a remainder of exactly-known weight."""

    m: int
    blocks: tuple          # disjoint index tuples, each of length m, x constant on each
    s2: tuple              # remaining indices, sorted
    w2: int                # exact Hamming weight on s2
    queries: int           # queries consumed by this run

    @property
    def s1(self) -> tuple:
        return tuple(sorted(i for b in self.blocks for i in b))


def partition_weight(o: CountingOracle, indices: Sequence[int],
                     m: int) -> PartitionResult:
    """Partition ``indices`` into constant m-blocks and a known remainder."""
    schedule = factor_split(m)
    indices = list(indices)
    for i in indices:
        if not 1 <= i <= o.n:
            raise IndexError(f"index {i} out of oracle range [1, {o.n}]")
    if len(set(indices)) != len(indices):
        raise ValueError("duplicate indices")
    start = o.query_count

    if schedule.split is None:
        blocks, s2, w2 = _base_case(o, indices, m)
    else:
        blocks, s2, w2 = _composite_case(o, indices, schedule.split)

    return PartitionResult(m=m, blocks=tuple(blocks), s2=tuple(sorted(s2)),
                           w2=w2, queries=o.query_count - start)


def _base_case(o: CountingOracle, indices, m: int):
    blocks = []
    s2 = []
    w2 = 0
    full = len(indices) - len(indices) % m
    for start in range(0, full, m):
        group = tuple(indices[start:start + m])
        outcome = deutsch(o, group) if m == 2 else mod3(o, group)
        if outcome == 0:
            blocks.append(group)
        else:
            # Weights 0 and m are the constant cases, so for a non-constant
            # group the residue is the weight itself.
            s2.extend(group)
            w2 += outcome
    for i in indices[full:]:
        s2.append(i)
        w2 += o.query_bit(i)
    return blocks, s2, w2


def _composite_case(o: CountingOracle, indices, split):
    m1, m2 = split
    inner = partition_weight(o, indices, m1)
    # One representative per constant m1-block; x is constant on the block,
    # so the representative's bit stands for all m1 of them.
    reps = [min(b) for b in inner.blocks]
    rep_block = {min(b): b for b in inner.blocks}
    outer = partition_weight(o, reps, m2)

    blocks = []
    for rep_group in outer.blocks:
        merged = []
        for rep in rep_group:
            merged.extend(rep_block[rep])
        blocks.append(tuple(sorted(merged)))
    s2 = list(inner.s2)
    for rep in outer.s2:
        s2.extend(rep_block[rep])
    w2 = inner.w2 + m1 * outer.w2
    return blocks, s2, w2


def weight_mod(o: CountingOracle, m: int) -> int:
    """|x| mod m for the oracle's full input, with certainty."""
    result = partition_weight(o, range(1, o.n + 1), m)
    return result.w2 % m
