"""Binary symplectic Pauli operators (modulo phase).

Qubit ``j`` is stored in bit ``j`` of two Python integers ``x`` and ``z``;
``(x_j, z_j)`` is ``(0,0)``/``(1,0)``/``(0,1)``/``(1,1)`` for I/X/Z/Y.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

_LETTERS = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}
_FROM_BITS = {bits: letter for letter, bits in _LETTERS.items()}


class PauliParseError(ValueError):
    """Raised for malformed Pauli strings."""

    def __init__(self, text: str, position: int, message: str) -> None:
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position} in {text!r}")


@dataclass(frozen=True)
class PauliOperator:
    """An ``n``-qubit Pauli operator with phase discarded."""

    n: int
    x: int = 0
    z: int = 0

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"qubit count must be non-negative, got {self.n}")
        if self.x >> self.n or self.z >> self.n or self.x < 0 or self.z < 0:
            raise ValueError(f"bit vectors exceed {self.n} qubits")

    @classmethod
    def identity(cls, n: int) -> PauliOperator:
        return cls(n, 0, 0)

    @classmethod
    def from_bits(cls, x_bits: Sequence[int], z_bits: Sequence[int]) -> PauliOperator:
        """Build from explicit bit lists, qubit 0 first."""
        if len(x_bits) != len(z_bits):
            raise ValueError("x and z parts must have the same length")
        x = sum(1 << j for j, b in enumerate(x_bits) if b & 1)
        z = sum(1 << j for j, b in enumerate(z_bits) if b & 1)
        return cls(len(x_bits), x, z)

    @classmethod
    def single(cls, n: int, qubit: int, letter: str) -> PauliOperator:
        a, b = _LETTERS[letter]
        return cls(n, a << qubit, b << qubit)

    @property
    def x_bits(self) -> tuple[int, ...]:
        return tuple((self.x >> j) & 1 for j in range(self.n))

    @property
    def z_bits(self) -> tuple[int, ...]:
        return tuple((self.z >> j) & 1 for j in range(self.n))

    @property
    def support(self) -> int:
        """Bit mask of qubits acted on non-trivially."""
        return self.x | self.z

    def is_identity(self) -> bool:
        return not (self.x or self.z)

    def __mul__(self, other: PauliOperator) -> PauliOperator:
        return multiply(self, other)

    def __len__(self) -> int:
        return self.n

    def __str__(self) -> str:
        return format_pauli(self)


def parse_pauli(text: str) -> PauliOperator:
    """Parse a string over ``IXYZ`` (qubit 0 leftmost)."""
    if not text:
        raise PauliParseError(text, 0, "empty Pauli string")
    x = z = 0
    for j, ch in enumerate(text):
        bits = _LETTERS.get(ch.upper())
        if bits is None:
            raise PauliParseError(text, j, f"invalid Pauli letter {ch!r}")
        x |= bits[0] << j
        z |= bits[1] << j
    return PauliOperator(len(text), x, z)


def format_pauli(p: PauliOperator) -> str:
    return "".join(_FROM_BITS[((p.x >> j) & 1, (p.z >> j) & 1)] for j in range(p.n))


def _check_lengths(p: PauliOperator, q: PauliOperator) -> None:
    if p.n != q.n:
        raise ValueError(f"length mismatch: {p.n} vs {q.n} qubits")


def multiply(p: PauliOperator, q: PauliOperator) -> PauliOperator:
    _check_lengths(p, q)
    return PauliOperator(p.n, p.x ^ q.x, p.z ^ q.z)


def product(ops: Iterable[PauliOperator], n: int) -> PauliOperator:
    """Product of ``ops``; identity on ``n`` qubits when empty."""
    x = z = 0
    for op in ops:
        if op.n != n:
            raise ValueError(f"length mismatch: {op.n} vs {n} qubits")
        x ^= op.x
        z ^= op.z
    return PauliOperator(n, x, z)


def weight(p: PauliOperator) -> int:
    return (p.x | p.z).bit_count()


def block_weight(p: PauliOperator, block_size: int) -> int:
    """Number of consecutive ``block_size``-qubit blocks acted on non-trivially."""
    if block_size == 1:
        return weight(p)
    mask = (1 << block_size) - 1
    support = p.x | p.z
    return sum(1 for b in range(0, p.n, block_size) if (support >> b) & mask)


def symplectic_product(p: PauliOperator, q: PauliOperator) -> int:
    """0 if ``p`` and ``q`` commute, 1 otherwise."""
    _check_lengths(p, q)
    return ((p.x & q.z).bit_count() + (p.z & q.x).bit_count()) & 1


def commutes(p: PauliOperator, q: PauliOperator) -> bool:
    return symplectic_product(p, q) == 0


def tensor_embed(p: PauliOperator, block: int, num_blocks: int) -> PauliOperator:
    """Place ``p`` on block ``block`` of ``num_blocks`` equal blocks, identity elsewhere."""
    if not 0 <= block < num_blocks:
        raise IndexError(f"block {block} out of range for {num_blocks} blocks")
    shift = block * p.n
    return PauliOperator(p.n * num_blocks, p.x << shift, p.z << shift)


def restrict(p: PauliOperator, block: int, block_size: int) -> PauliOperator:
    """Restriction of ``p`` to one block of ``block_size`` qubits."""
    if block_size <= 0 or p.n % block_size:
        raise ValueError(f"{p.n} qubits do not split into blocks of {block_size}")
    if not 0 <= block < p.n // block_size:
        raise IndexError(f"block {block} out of range")
    mask = (1 << block_size) - 1
    shift = block * block_size
    return PauliOperator(block_size, (p.x >> shift) & mask, (p.z >> shift) & mask)


def symplectic_row(p: PauliOperator) -> int:
    """The 2n-bit row ``x | z << n`` used for GF(2) elimination."""
    return p.x | (p.z << p.n)


def from_symplectic_row(row: int, n: int) -> PauliOperator:
    mask = (1 << n) - 1
    return PauliOperator(n, row & mask, (row >> n) & mask)
