"""GF(2) linear algebra on integer-packed bit rows."""

from __future__ import annotations

from typing import Iterable, Sequence


class XorBasis:
    """Incremental echelon basis; ``add`` reports whether a row was independent."""

    def __init__(self, rows: Iterable[int] = ()) -> None:
        self._by_pivot: dict[int, int] = {}
        for row in rows:
            self.add(row)

    def reduce(self, row: int) -> int:
        while row:
            pivot = row.bit_length() - 1
            basis_row = self._by_pivot.get(pivot)
            if basis_row is None:
                return row
            row ^= basis_row
        return 0

    def add(self, row: int) -> bool:
        row = self.reduce(row)
        if not row:
            return False
        self._by_pivot[row.bit_length() - 1] = row
        return True

    def contains(self, row: int) -> bool:
        return self.reduce(row) == 0

    def __len__(self) -> int:
        return len(self._by_pivot)


def rank(rows: Iterable[int]) -> int:
    return len(XorBasis(rows))


def rref(rows: Sequence[int], ncols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    work = list(rows)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        bit = 1 << c
        for i in range(r, len(work)):
            if work[i] & bit:
                work[r], work[i] = work[i], work[r]
                break
        else:
            continue
        for i in range(len(work)):
            if i != r and work[i] & bit:
                work[i] ^= work[r]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def nullspace(rows: Sequence[int], ncols: int) -> list[int]:
    """Basis of ``{v : popcount(row & v) is even for every row}``."""
    reduced, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = 1 << free
        for row, p in zip(reduced, pivots):
            if (row >> free) & 1:
                v |= 1 << p
        basis.append(v)
    return basis
