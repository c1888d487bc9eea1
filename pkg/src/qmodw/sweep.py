"""Exhaustive verification sweeps over all inputs of each length.

For every input the harness replays the partition algorithm against a
fresh counting oracle and then audits the result against the hidden
string it chose itself: residue correctness, the query budget, and the
partition contract (disjoint constant blocks of size m whose union with
the remainder is everything, with the remainder weight exact).

Cells (one per (n, m) pair) can fan out across worker processes; the
QMODW_THREADS environment variable bounds the pool.  Aggregation is
deterministic: rows come back sorted by (n, m).
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

from .hamming_mod import partition_weight, query_bound
from .oracle import CountingOracle

DEFAULT_MODULI = (2, 3, 4, 6, 8, 9, 12)


@dataclass(frozen=True)
class SweepRow:
    n: int
    m: int
    inputs: int
    failures: int
    max_queries: int
    bound: int
    zero_input_queries: int

    @property
    def all_correct(self) -> bool:
        return self.failures == 0

    @property
    def tight(self) -> bool:
        """Worst case matches the bound and the all-zeros input attains it."""
        return (self.max_queries == self.bound
                and self.zero_input_queries == self.bound)


def audit_partition(result, bits: str, indices: Sequence[int]) -> list:
    """Check a PartitionResult against the hidden input, post hoc."""
    problems = []
    seen = []
    for block in result.blocks:
        if len(block) != result.m:
            problems.append(f"block {block} has size != {result.m}")
        vals = {bits[i - 1] for i in block}
        if len(vals) != 1:
            problems.append(f"block {block} not constant on input {bits}")
        seen.extend(block)
    seen.extend(result.s2)
    if sorted(seen) != sorted(indices):
        problems.append("blocks and s2 do not partition the queried indices")
    true_w2 = sum(int(bits[i - 1]) for i in result.s2)
    if result.w2 != true_w2:
        problems.append(f"w2={result.w2} but |x_S2|={true_w2}")
    return problems


def verify_cell(n: int, m: int, audit: bool = True) -> SweepRow:
    """Run the algorithm on all 2^n inputs for one modulus."""
    bound = query_bound(n, m)
    failures = 0
    max_queries = 0
    zero_queries = -1
    indices = range(1, n + 1)
    for value in range(2 ** n):
        bits = format(value, f"0{n}b")
        oracle = CountingOracle(bits)
        result = partition_weight(oracle, indices, m)
        residue = result.w2 % m
        ok = (residue == bits.count("1") % m
              and result.queries <= bound
              and oracle.query_count == result.queries)
        if ok and audit:
            ok = not audit_partition(result, bits, indices)
        if not ok:
            failures += 1
        max_queries = max(max_queries, result.queries)
        if value == 0:
            zero_queries = result.queries
    return SweepRow(n=n, m=m, inputs=2 ** n, failures=failures,
                    max_queries=max_queries, bound=bound,
                    zero_input_queries=zero_queries)


def _cell_args(args):
    return verify_cell(*args)


def default_threads() -> int:
    env = os.environ.get("QMODW_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def run_sweep(n_max: int, moduli: Sequence[int] = DEFAULT_MODULI,
              threads: Optional[int] = None, audit: bool = True) -> list:
    """Verify every (n, m) cell with n <= n_max; rows sorted by (n, m)."""
    if n_max < 1:
        raise ValueError(f"n_max must be positive, got {n_max}")
    cells = sorted((n, m) for n in range(1, n_max + 1) for m in set(moduli))
    if threads is None:
        threads = default_threads()
    if threads > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(_cell_args,
                                 [(n, m, audit) for n, m in cells]))
    else:
        rows = [verify_cell(n, m, audit) for n, m in cells]
    return sorted(rows, key=lambda r: (r.n, r.m))
