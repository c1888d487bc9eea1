"""Phase-oracle access to a hidden bit string, with query counting.

The hidden input is written once at construction and is reachable only
through :func:`phase_apply` (a block-restricted phase query) and
:func:`query_bit` (a classical single-bit read).  Both cost exactly one
query.  The oracle may act on extra trailing "padding" dimensions where it
is the identity; such queries still count.

Indices are 1-based, matching the convention x = x_1 x_2 ... x_n.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import StateVector


@dataclass(frozen=True)
class BlockView:
    """Maps local state dimensions to global input indices.

    Local dimension j (0-based, j < len(map)) carries the phase of input
    bit ``map[j]``; the last ``padding`` dimensions are untouched.
    """

    map: tuple
    padding: int = 0

    def __post_init__(self):
        if len(set(self.map)) != len(self.map):
            raise ValueError(f"duplicate indices in view: {self.map}")
        if self.padding < 0:
            raise ValueError("negative padding")

    @property
    def dim(self) -> int:
        return len(self.map) + self.padding


class CountingOracle:
    """The only channel to the hidden input string."""

    def __init__(self, bits: str):
        if not all(c in "01" for c in bits):
            raise ValueError(f"not a bit string: {bits!r}")
        self._hidden = tuple(int(c) for c in bits)
        self._queries = 0
        self._transcript = []

    @property
    def n(self) -> int:
        return len(self._hidden)

    @property
    def query_count(self) -> int:
        return self._queries

    @property
    def transcript(self) -> list:
        """Ordered query log: dicts with kind, indices, running count."""
        return list(self._transcript)

    def _check_index(self, i: int):
        if not 1 <= i <= self.n:
            raise IndexError(f"index {i} out of range [1, {self.n}]")

    def phase_apply(self, view: BlockView, v: StateVector) -> StateVector:
        """One phase query: entry j picks up (-1)^{x_map[j]}; padding is untouched."""
        for i in view.map:
            self._check_index(i)
        if v.dim != view.dim:
            raise ValueError(
                f"state dim {v.dim} != view dim {view.dim}")
        num = v._num.copy()
        for j, i in enumerate(view.map):
            if self._hidden[i - 1]:
                num[j] = -num[j]
        self._queries += 1
        self._transcript.append(
            {"kind": "phase", "indices": list(view.map),
             "padding": view.padding, "count": self._queries})
        return StateVector._from_packed(num, v._den)

    def query_bit(self, i: int) -> int:
        """Classical read of bit x_i; costs one query."""
        self._check_index(i)
        self._queries += 1
        self._transcript.append(
            {"kind": "bit", "indices": [i], "count": self._queries})
        return self._hidden[i - 1]
