"""Subcode chains of an inner code and the quantum coset codes between levels.

Levels and logical labels are numbered from 1: level ``i`` pairs ``B_i`` with
``B_{i+1}``, and label ``j`` refers to the ``j``-th logical pair of the base
code as given.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from gcqc.distance import DEFAULT_CAP, min_distance
from gcqc.stabilizer import LogicalPair, StabilizerCode


class ChainError(ValueError):
    pass


@dataclass(frozen=True)
class NestingStrategy:
    """Which logical Z's get promoted first, and which pairs trade X/Z roles.

    ``ordering`` lists logical labels in promotion order (``None`` keeps the
    given order); ``swaps`` holds labels whose X̄ and Z̄ are exchanged.
    """

    ordering: tuple[int, ...] | None = None
    swaps: frozenset[int] = field(default_factory=frozenset)

    def apply(self, pairs: Sequence[LogicalPair]) -> tuple[LogicalPair, ...]:
        k = len(pairs)
        order = self.ordering if self.ordering is not None else tuple(range(1, k + 1))
        if sorted(order) != list(range(1, k + 1)):
            raise ChainError(f"ordering {order} is not a permutation of 1..{k}")
        bad = sorted(s for s in self.swaps if not 1 <= s <= k)
        if bad:
            raise ChainError(f"swap labels {bad} outside 1..{k}")
        swapped = [(z, x) if j + 1 in self.swaps else (x, z) for j, (x, z) in enumerate(pairs)]
        return tuple(swapped[j - 1] for j in order)


@dataclass(frozen=True)
class CosetCode:
    level: int
    stabilizers: tuple
    logical_pairs: tuple[LogicalPair, ...]
    n: int

    @property
    def r(self) -> int:
        return len(self.logical_pairs)

    @property
    def dimension(self) -> int:
        return 2**self.r

    def as_code(self) -> StabilizerCode:
        return StabilizerCode.build(self.n, self.stabilizers, self.logical_pairs)


@dataclass(frozen=True)
class SubcodeChain:
    """``B_1 ⊃ B_2 ⊃ …`` built by promoting the strategy-ordered logical Z's.

    ``pairs`` are the base code's logical pairs after the strategy is applied;
    level ``i`` owns ``pairs[k_1 - k_i : k_1 - k_{i+1}]``.
    """

    base: StabilizerCode
    level_ks: tuple[int, ...]
    strategy: NestingStrategy
    pairs: tuple[LogicalPair, ...]
    level_ds: tuple[int, ...] | None = None

    @property
    def num_levels(self) -> int:
        return len(self.level_ks) - 1

    @property
    def fully_descends(self) -> bool:
        return self.level_ks[-1] == 0

    def r(self, level: int) -> int:
        self._check_level(level)
        return self.level_ks[level - 1] - self.level_ks[level]

    def _check_level(self, level: int) -> None:
        if not 1 <= level <= self.num_levels:
            raise ChainError(f"level {level} outside 1..{self.num_levels}")

    def subcode(self, index: int) -> StabilizerCode:
        """``B_index`` for ``1 <= index <= num_levels + 1``."""
        if not 1 <= index <= len(self.level_ks):
            raise ChainError(f"subcode B_{index} outside B_1..B_{len(self.level_ks)}")
        promoted = self.base.k - self.level_ks[index - 1]
        gens = self.base.generators + tuple(z for _, z in self.pairs[:promoted])
        return StabilizerCode(self.base.n, gens, self.pairs[promoted:])

    def distances(self, cap: int = DEFAULT_CAP) -> tuple[int, ...]:
        """``d_1..d_m``: the claimed values if given, else computed exactly."""
        if self.level_ds is not None:
            return self.level_ds[: self.num_levels]
        return tuple(min_distance(self.subcode(i), cap).distance for i in range(1, self.num_levels + 1))


def build_chain(
    base: StabilizerCode,
    level_ks: Sequence[int],
    strategy: NestingStrategy | None = None,
    level_ds: Sequence[int] | None = None,
) -> SubcodeChain:
    strategy = strategy or NestingStrategy()
    ks = tuple(level_ks)
    if not ks or ks[0] != base.k:
        raise ChainError(f"level_ks must start at k_1 = {base.k}, got {ks}")
    if any(a <= b for a, b in zip(ks, ks[1:])):
        raise ChainError(f"level_ks must be strictly decreasing, got {ks}")
    if ks[-1] < 0:
        raise ChainError("level_ks must be non-negative")
    ds = tuple(level_ds) if level_ds is not None else None
    if ds is not None:
        if len(ds) not in (len(ks) - 1, len(ks)):
            raise ChainError(f"expected {len(ks) - 1} level distances, got {len(ds)}")
        if any(a > b for a, b in zip(ds, ds[1:])):
            raise ChainError(f"level distances must be non-decreasing, got {ds}")
    base.check()
    return SubcodeChain(base, ks, strategy, strategy.apply(base.logical_pairs), ds)


def coset_code(chain: SubcodeChain, level: int) -> CosetCode:
    """The coset code between ``B_level`` and ``B_{level+1}``.

    Its stabilizer is ``S_{B_level}`` plus the logical Z's still carried by
    ``B_{level+1}``; its logical pairs are the ones promoted at this level.
    """
    chain._check_level(level)
    k1 = chain.base.k
    lo = k1 - chain.level_ks[level - 1]
    hi = k1 - chain.level_ks[level]
    pairs = chain.pairs
    stabilizers = (
        chain.base.generators
        + tuple(z for _, z in pairs[:lo])
        + tuple(z for _, z in pairs[hi:])
    )
    return CosetCode(level, stabilizers, pairs[lo:hi], chain.base.n)


def coset_distance(chain: SubcodeChain, level: int, cap: int = DEFAULT_CAP) -> int:
    return min_distance(coset_code(chain, level).as_code(), cap).distance
