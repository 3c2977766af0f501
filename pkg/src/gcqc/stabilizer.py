"""Stabilizer codes: validation, GF(2) rank, logical completion, degeneracy."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from gcqc import gf2
from gcqc.distance import BudgetExceeded, min_weight_in_group
from gcqc.pauli import PauliOperator, format_pauli, symplectic_product, symplectic_row

LogicalPair = tuple[PauliOperator, PauliOperator]

DEGENERACY_CAP = 1 << 20


@dataclass(frozen=True)
class Violation:
    kind: str
    message: str
    operands: tuple[str, ...] = ()


class InvalidCodeError(ValueError):
    def __init__(self, violations: Sequence[Violation]) -> None:
        self.violations = list(violations)
        super().__init__("; ".join(v.message for v in self.violations))


class DegeneracyUndecided(RuntimeError):
    """The stabilizer group is too large to enumerate under the degeneracy cap."""


@dataclass(frozen=True)
class StabilizerCode:
    """``n`` qubits, independent commuting ``generators`` and ``(X̄, Z̄)`` pairs.

    Construct through :meth:`build` to get validation and automatic logical
    completion; the raw constructor performs no checks.
    """

    n: int
    generators: tuple[PauliOperator, ...]
    logical_pairs: tuple[LogicalPair, ...] = ()
    claimed_distance: int | None = field(default=None, compare=False)

    @classmethod
    def build(
        cls,
        n: int,
        generators: Iterable[PauliOperator],
        logical_pairs: Iterable[LogicalPair] | None = None,
        claimed_distance: int | None = None,
    ) -> StabilizerCode:
        gens = tuple(generators)
        if logical_pairs is None:
            pairs = tuple(complete_logicals(gens, n))
        else:
            pairs = tuple((x, z) for x, z in logical_pairs)
        code = cls(n, gens, pairs, claimed_distance)
        code.check()
        return code

    @property
    def k(self) -> int:
        return self.n - len(self.generators)

    @property
    def logical_x(self) -> tuple[PauliOperator, ...]:
        return tuple(x for x, _ in self.logical_pairs)

    @property
    def logical_z(self) -> tuple[PauliOperator, ...]:
        return tuple(z for _, z in self.logical_pairs)

    def check(self) -> None:
        violations = validate(self)
        if violations:
            raise InvalidCodeError(violations)

    def __str__(self) -> str:
        d = f",{self.claimed_distance}" if self.claimed_distance is not None else ""
        return f"[[{self.n},{self.k}{d}]]"


def _fmt(p: PauliOperator) -> str:
    return format_pauli(p) if p.n else "<empty>"


def validate(code: StabilizerCode) -> list[Violation]:
    """Every broken invariant of ``code``, most fundamental first; empty if valid.

    Later checks are skipped once lengths or generators are broken, since their
    results would be meaningless.
    """
    ops = list(code.generators) + [p for pair in code.logical_pairs for p in pair]
    bad = [p for p in ops if p.n != code.n]
    if bad:
        return [
            Violation("length", f"operator {_fmt(p)} has {p.n} qubits, expected {code.n}", (_fmt(p),))
            for p in bad
        ]

    gens = code.generators
    for i, g in enumerate(gens):
        for h in gens[i + 1 :]:
            if symplectic_product(g, h):
                return [
                    Violation(
                        "anticommuting",
                        f"generators {_fmt(g)} and {_fmt(h)} anticommute",
                        (_fmt(g), _fmt(h)),
                    )
                ]
    basis = gf2.XorBasis()
    for g in gens:
        if not basis.add(symplectic_row(g)):
            return [
                Violation(
                    "dependent",
                    f"generator {_fmt(g)} depends on the preceding generators",
                    (_fmt(g),),
                )
            ]

    violations: list[Violation] = []
    if len(code.logical_pairs) != code.k:
        violations.append(
            Violation(
                "logical-count",
                f"expected {code.k} logical pairs, got {len(code.logical_pairs)}",
            )
        )
    logicals = [p for pair in code.logical_pairs for p in pair]
    for p in logicals:
        for g in gens:
            if symplectic_product(p, g):
                violations.append(
                    Violation(
                        "logical-not-in-normalizer",
                        f"logical {_fmt(p)} anticommutes with generator {_fmt(g)}",
                        (_fmt(p), _fmt(g)),
                    )
                )
                break
    for i, (xi, zi) in enumerate(code.logical_pairs):
        for j, (xj, zj) in enumerate(code.logical_pairs):
            if symplectic_product(xi, zj) != (i == j):
                violations.append(
                    Violation(
                        "pairing",
                        f"X̄{i + 1}={_fmt(xi)} and Z̄{j + 1}={_fmt(zj)} break the pairing relation",
                        (_fmt(xi), _fmt(zj)),
                    )
                )
            if j > i and symplectic_product(xi, xj):
                violations.append(
                    Violation("pairing", f"X̄{i + 1} and X̄{j + 1} anticommute", (_fmt(xi), _fmt(xj)))
                )
            if j > i and symplectic_product(zi, zj):
                violations.append(
                    Violation("pairing", f"Z̄{i + 1} and Z̄{j + 1} anticommute", (_fmt(zi), _fmt(zj)))
                )
    return violations


def rank_gf2(rows: Iterable[PauliOperator]) -> int:
    return gf2.rank(symplectic_row(p) for p in rows)


def complete_logicals(generators: Sequence[PauliOperator], n: int) -> list[LogicalPair]:
    """Find ``n - len(generators)`` logical pairs by symplectic Gram-Schmidt.

    The normalizer is the GF(2) kernel of the symplectic form against the
    generators; a complement of the stabilizer inside it is paired off greedily.
    """
    probe = StabilizerCode(n, tuple(generators))
    problems = [v for v in validate(probe) if v.kind in ("length", "anticommuting", "dependent")]
    if problems:
        raise InvalidCodeError(problems)

    # <v, g> = popcount(v & swap(g)) with swap exchanging the x and z halves
    swapped = [g.z | (g.x << n) for g in generators]
    normalizer = gf2.nullspace(swapped, 2 * n)
    span = gf2.XorBasis(symplectic_row(g) for g in generators)
    rest = [v for v in normalizer if span.add(v)]

    def sp(a: int, b: int) -> int:
        return (((a & ((1 << n) - 1)) & (b >> n)).bit_count() + ((a >> n) & b).bit_count()) & 1

    pairs: list[LogicalPair] = []
    while rest:
        u = rest.pop(0)
        partner = next((i for i, w in enumerate(rest) if sp(u, w)), None)
        if partner is None:
            raise ArithmeticError("symplectic form degenerate on normalizer complement")
        w = rest.pop(partner)
        rest = [c ^ (u if sp(c, w) else 0) ^ (w if sp(c, u) else 0) for c in rest]
        pairs.append((_row_to_pauli(u, n), _row_to_pauli(w, n)))
    return pairs


def _row_to_pauli(row: int, n: int) -> PauliOperator:
    mask = (1 << n) - 1
    return PauliOperator(n, row & mask, row >> n)


def in_stabilizer_group(code: StabilizerCode, p: PauliOperator) -> bool:
    if p.n != code.n:
        raise ValueError(f"length mismatch: {p.n} vs {code.n} qubits")
    return gf2.XorBasis(symplectic_row(g) for g in code.generators).contains(symplectic_row(p))


def degeneracy_witness(
    code: StabilizerCode, d: int, cap: int = DEGENERACY_CAP, block_size: int = 1
) -> PauliOperator | None:
    """A non-identity stabilizer element lighter than ``d``, or ``None``."""
    try:
        w, witness = min_weight_in_group(code.generators, code.n, cap=cap, block_size=block_size)
    except BudgetExceeded as exc:
        raise DegeneracyUndecided(
            f"stabilizer group of {code} has {exc.required} elements, above the cap {cap}"
        ) from exc
    return witness if w < d else None


def is_degenerate(
    code: StabilizerCode, d: int, cap: int = DEGENERACY_CAP, block_size: int = 1
) -> bool:
    """True iff some non-identity stabilizer element has weight below ``d``."""
    return degeneracy_witness(code, d, cap, block_size) is not None
