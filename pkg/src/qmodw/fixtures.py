"""Frozen verification fixtures: the intermediate-state table and the
Gram matrix, stored as exact JSON encodings independent of the circuit
code that they are diffed against."""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources

from .linalg import StateVector

STATE_TABLE_ORDER = ("000", "100", "010", "001", "011", "101", "110", "111")
STAGES = ("psi1", "psi2", "psi3", "psi4")


def _load(name: str) -> dict:
    with resources.files(__package__).joinpath("data").joinpath(name).open() as fh:
        return json.load(fh)


def load_state_table() -> dict:
    """stage -> input bits -> exact StateVector, as frozen from the table."""
    raw = _load("state_table.json")
    return {stage: {bits: StateVector.from_json(raw[stage][bits])
                    for bits in raw["order"]}
            for stage in STAGES}


def load_gram() -> tuple:
    """8x8 rational Gram matrix, inputs in lexicographic order 000..111."""
    raw = _load("gram.json")
    return tuple(tuple(Fraction(p, q) for p, q in row)
                 for row in raw["entries"])
