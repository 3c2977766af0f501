"""Exact minimum distance by exhaustive enumeration of the normalizer.

Operators are packed into ``uint64`` words and weights come from
``np.bitwise_count``.  Elements of a span are addressed by an exponent index
whose bit ``i`` selects generator ``i``; the scan visits indices in increasing
order, so the reported witness is the first minimum-weight element in that
order.
"""

from __future__ import annotations

import math
import os
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import TYPE_CHECKING, Sequence

import numpy as np

from gcqc.pauli import PauliOperator, block_weight

if TYPE_CHECKING:
    from gcqc.stabilizer import StabilizerCode

DEFAULT_CAP = 1 << 28
WORKERS_ENV = "GCQC_WORKERS"
_CHUNK_BITS = 16
_MAX_QUBITS = 64


class BudgetExceeded(RuntimeError):
    """The enumeration would visit more elements than the caller allowed."""

    def __init__(self, required: int, cap: int) -> None:
        self.required = required
        self.cap = cap
        super().__init__(
            f"enumeration needs {required} elements (2^{required.bit_length() - 1}) "
            f"but the budget is {cap}; raise the cap to proceed"
        )


@dataclass(frozen=True)
class DistanceReport:
    distance: int
    witness: PauliOperator
    enumerated: int
    required: int
    elapsed: float


def default_workers() -> int:
    raw = os.environ.get(WORKERS_ENV)
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        raise ValueError(f"{WORKERS_ENV} must be a positive integer, got {raw!r}") from None


def _span_table(xs: Sequence[int], zs: Sequence[int]) -> tuple[np.ndarray, np.ndarray]:
    tx = np.zeros(1, dtype=np.uint64)
    tz = np.zeros(1, dtype=np.uint64)
    for gx, gz in zip(xs, zs):
        tx = np.concatenate((tx, tx ^ np.uint64(gx)))
        tz = np.concatenate((tz, tz ^ np.uint64(gz)))
    return tx, tz


def _weight_fn(n: int, block_size: int):
    if block_size == 1:
        return lambda x, z: np.bitwise_count(x | z)
    if n % block_size:
        raise ValueError(f"{n} qubits do not split into blocks of {block_size}")
    starts = sum(1 << b for b in range(0, n, block_size))
    mask = np.uint64(starts)
    shifts = [np.uint64(t) for t in range(1, block_size)]

    def fn(x: np.ndarray, z: np.ndarray) -> np.ndarray:
        u = x | z
        folded = u.copy()
        for t in shifts:
            folded |= u >> t
        return np.bitwise_count(folded & mask)

    return fn


class _Scanner:
    """Min-weight scan over span indices ``[start, stop)`` of a generator list."""

    def __init__(self, gens: Sequence[PauliOperator], n: int, block_size: int) -> None:
        if n > _MAX_QUBITS:
            raise ValueError(f"enumeration supports at most {_MAX_QUBITS} qubits, got {n}")
        self.gens = list(gens)
        self.n = n
        self.low_bits = min(len(self.gens), _CHUNK_BITS)
        xs = [g.x for g in self.gens]
        zs = [g.z for g in self.gens]
        self.low_x, self.low_z = _span_table(xs[: self.low_bits], zs[: self.low_bits])
        self.high_x, self.high_z = _span_table(xs[self.low_bits :], zs[self.low_bits :])
        self.weigh = _weight_fn(n, block_size)

    def scan(
        self,
        start: int,
        stop: int,
        floor: int,
        stop_flag=None,
    ) -> tuple[float, int, int]:
        """Return ``(best weight, best index, elements visited)``.

        Stops early once an element of weight ``floor`` is seen (nothing can be
        lighter) or when ``stop_flag()`` turns true.
        """
        best_w: float = math.inf
        best_i = -1
        visited = 0
        size = 1 << self.low_bits
        for h in range(start >> self.low_bits, ((stop - 1) >> self.low_bits) + 1):
            if stop_flag is not None and stop_flag():
                break
            base = h << self.low_bits
            lo = max(start - base, 0)
            hi = min(stop - base, size)
            w = self.weigh(self.low_x[lo:hi] ^ self.high_x[h], self.low_z[lo:hi] ^ self.high_z[h])
            visited += hi - lo
            j = int(np.argmin(w))
            if w[j] < best_w:
                best_w = int(w[j])
                best_i = base + lo + j
                if best_w <= floor:
                    break
        return best_w, best_i, visited

    def element(self, index: int) -> PauliOperator:
        x = z = 0
        for i, g in enumerate(self.gens):
            if (index >> i) & 1:
                x ^= g.x
                z ^= g.z
        return PauliOperator(self.n, x, z)


def _parallel_scan(scanner: _Scanner, start: int, stop: int, floor: int, workers: int):
    """Partition ``[start, stop)`` into contiguous ranges and min-reduce.

    A range may quit early only when a range *before* it already hit the
    floor, which keeps the earliest-index witness deterministic.
    """
    chunk = 1 << scanner.low_bits
    n_chunks = -(-(stop - start) // chunk)
    workers = max(1, min(workers, n_chunks))
    if workers == 1:
        return scanner.scan(start, stop, floor)
    bounds = [start + (stop - start) * p // workers for p in range(workers + 1)]
    hit = [False] * workers
    lock = threading.Lock()

    def run(p: int):
        def earlier_hit() -> bool:
            return any(hit[:p])

        result = scanner.scan(bounds[p], bounds[p + 1], floor, earlier_hit)
        if result[0] <= floor:
            with lock:
                hit[p] = True
        return result

    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(run, range(workers)))
    best_w, best_i = min((w, i) for w, i, _ in results if i >= 0)
    return best_w, best_i, sum(v for _, _, v in results)


def min_weight_in_group(
    generators: Sequence[PauliOperator],
    n: int,
    cap: int = DEFAULT_CAP,
    block_size: int = 1,
    workers: int | None = None,
) -> tuple[float, PauliOperator | None]:
    """Minimum weight over the non-identity elements of the generated group.

    Returns ``(math.inf, None)`` for an empty generator list.  ``generators``
    are assumed independent; dependent inputs just revisit the identity.
    """
    if not generators:
        return math.inf, None
    required = 1 << len(generators)
    if required > cap:
        raise BudgetExceeded(required, cap)
    scanner = _Scanner(generators, n, block_size)
    w, idx, _ = _parallel_scan(scanner, 1, required, 1, workers or default_workers())
    return w, scanner.element(idx)


def min_distance(
    code: StabilizerCode,
    cap: int = DEFAULT_CAP,
    block_size: int = 1,
    workers: int | None = None,
) -> DistanceReport:
    """Minimum weight of an element of N(S) outside S.

    Visits ``4^k * 2^(n-k)`` exponent vectors ordered by logical-class exponents
    first, then stabilizer exponents.  ``block_size`` > 1 measures weight as the
    number of non-identity blocks (outer codes over ``2^r``-ary alphabets).
    """
    if code.k == 0:
        raise ValueError("code encodes no logical qubits, so its distance is undefined")
    started = time.perf_counter()
    gens = list(code.generators)
    for x_op, z_op in code.logical_pairs:
        gens.extend((x_op, z_op))
    required = 1 << len(gens)
    if required > cap:
        raise BudgetExceeded(required, cap)
    scanner = _Scanner(gens, code.n, block_size)
    stabilizer_size = 1 << len(code.generators)
    w, idx, visited = _parallel_scan(
        scanner, stabilizer_size, required, 1, workers or default_workers()
    )
    witness = scanner.element(idx)
    assert block_weight(witness, block_size) == w
    return DistanceReport(
        distance=int(w),
        witness=witness,
        enumerated=visited,
        required=required,
        elapsed=time.perf_counter() - started,
    )
