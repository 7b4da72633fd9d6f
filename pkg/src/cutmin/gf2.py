"""Bit-packed GF(2) linear algebra; vectors are Python ints."""

from __future__ import annotations

from typing import Iterable


class GF2Basis:
    """Row-echelon basis keyed by leading bit."""

    def __init__(self) -> None:
        self.rows: dict[int, int] = {}

    def reduce(self, v: int) -> int:
        while v:
            lead = v.bit_length() - 1
            row = self.rows.get(lead)
            if row is None:
                return v
            v ^= row
        return 0

    def add(self, v: int) -> bool:
        v = self.reduce(v)
        if not v:
            return False
        self.rows[v.bit_length() - 1] = v
        return True

    def contains(self, v: int) -> bool:
        return self.reduce(v) == 0

    def __len__(self) -> int:
        return len(self.rows)


def rank(vectors: Iterable[int]) -> int:
    basis = GF2Basis()
    for v in vectors:
        basis.add(v)
    return len(basis)


def span(vectors: Iterable[int]) -> list[int]:
    """Every element of the span, smallest basis first."""
    basis = GF2Basis()
    for v in vectors:
        basis.add(v)
    out = [0]
    for row in basis.rows.values():
        out += [x ^ row for x in out]
    return out
