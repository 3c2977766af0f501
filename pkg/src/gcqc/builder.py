"""Assemble a generalized concatenated code from a subcode chain and outer codes.

Outer codes over ``2^r``-ary alphabets are handled in binary form: a stabilizer
code on ``r*N`` qubits read as ``N`` consecutive blocks of ``r`` qubits.  Their
distances and degeneracy are measured in blocks.
"""

from __future__ import annotations

import dataclasses
import itertools
import random
from dataclasses import dataclass
from typing import Sequence

from gcqc import gf2
from gcqc.distance import DEFAULT_CAP, DistanceReport, min_distance
from gcqc.partition import CosetCode, SubcodeChain, coset_code
from gcqc.pauli import PauliOperator, product, restrict, tensor_embed, weight
from gcqc.stabilizer import (
    InvalidCodeError,
    LogicalPair,
    StabilizerCode,
    degeneracy_witness,
    rank_gf2,
)


class BuildError(ValueError):
    pass


class ClaimError(BuildError):
    """A claimed distance is larger than the true one."""


@dataclass(frozen=True)
class OuterCodeSpec:
    level: int
    N: int
    r: int
    K: int
    D: int
    binary_form: StabilizerCode
    degeneracy_witness: PauliOperator | None

    @property
    def degenerate(self) -> bool:
        return self.degeneracy_witness is not None


def make_outer(
    level: int,
    N: int,
    r: int,
    generators: Sequence[PauliOperator],
    D: int,
    K: int | None = None,
    logical_pairs: Sequence[LogicalPair] | None = None,
) -> OuterCodeSpec:
    """Validate an outer code in binary form and test its degeneracy against ``D``."""
    if N < 1 or r < 1:
        raise BuildError(f"outer code {level}: N and r must be positive")
    code = StabilizerCode.build(r * N, generators, logical_pairs, claimed_distance=D)
    if code.k % r:
        raise BuildError(f"outer code {level}: {code.k} logical qubits is not a multiple of r={r}")
    if K is not None and code.k != r * K:
        raise BuildError(
            f"outer code {level}: claimed K={K} but generators leave {code.k // r} "
            f"{2**r}-ary logical symbols"
        )
    K = code.k // r
    if K < 1:
        raise BuildError(f"outer code {level} encodes nothing (K=0)")
    if D < 1:
        raise BuildError(f"outer code {level}: D must be positive")
    witness = degeneracy_witness(code, D, block_size=r)
    return OuterCodeSpec(level, N, r, K, D, code, witness)


@dataclass(frozen=True)
class GcqcResult:
    code: StabilizerCode
    s_i_part: tuple[PauliOperator, ...]
    lifted_outer: tuple[tuple[PauliOperator, ...], ...]
    lifted_logicals: tuple[tuple[LogicalPair, ...], ...]
    inner_n: int
    inner_k: int
    num_blocks: int
    level_rs: tuple[int, ...]
    level_ds: tuple[int, ...]
    outer_Ds: tuple[int, ...]
    outer_Ks: tuple[int, ...]
    degenerate: tuple[bool, ...]
    bound: int
    mu: int | None
    exact: DistanceReport | None = None

    @property
    def length(self) -> int:
        return self.code.n

    @property
    def dimension(self) -> int:
        return self.code.k

    def with_exact_distance(self, cap: int = DEFAULT_CAP, workers: int | None = None) -> GcqcResult:
        return dataclasses.replace(self, exact=min_distance(self.code, cap, workers=workers))


def build_s_i(inner_n: int, inner_generators: Sequence[PauliOperator], N: int) -> list[PauliOperator]:
    """Inner generators copied onto each of the ``N`` blocks."""
    if N < 1:
        raise BuildError("N must be at least 1")
    for g in inner_generators:
        if g.n != inner_n:
            raise BuildError(f"inner generator has {g.n} qubits, expected {inner_n}")
    return [tensor_embed(g, b, N) for b in range(N) for g in inner_generators]


def lift_operator(g: PauliOperator, coset: CosetCode, N: int) -> PauliOperator:
    """Replace each block's ``X^a Z^b`` pattern with the coset code's logical operators."""
    r = coset.r
    if g.n != r * N:
        raise BuildError(f"operator on {g.n} qubits does not split into {N} blocks of {r}")
    n = coset.n
    x = z = 0
    for block in range(N):
        parts = []
        for ell, (lx, lz) in enumerate(coset.logical_pairs):
            q = block * r + ell
            if (g.x >> q) & 1:
                parts.append(lx)
            if (g.z >> q) & 1:
                parts.append(lz)
        local = product(parts, n)
        x |= local.x << (block * n)
        z |= local.z << (block * n)
    return PauliOperator(n * N, x, z)


def distance_bound(
    chain_ds: Sequence[int], outer_Ds: Sequence[int], degenerate_flags: Sequence[bool]
) -> tuple[int, int | None]:
    """Lower bound on the concatenated distance and the first degenerate level.

    Levels before the first degenerate outer code contribute ``d_i * D_i``; from
    that level ``mu`` on, only ``d_mu * min(D_mu..D_m)`` is guaranteed.
    """
    m = len(chain_ds)
    if len(outer_Ds) != m or len(degenerate_flags) != m:
        raise ValueError("chain distances, outer distances and flags must have equal length")
    if m == 0:
        raise ValueError("need at least one level")
    mu = next((i + 1 for i, flag in enumerate(degenerate_flags) if flag), None)
    if mu is None:
        return min(d * D for d, D in zip(chain_ds, outer_Ds)), None
    terms = [chain_ds[i] * outer_Ds[i] for i in range(mu - 1)]
    terms.append(chain_ds[mu - 1] * min(outer_Ds[mu - 1 :]))
    return min(terms), mu


def build_gcqc(
    chain: SubcodeChain,
    outers: Sequence[OuterCodeSpec],
    verify_claims: bool = False,
    cap: int = DEFAULT_CAP,
) -> GcqcResult:
    """Stabilizer and logicals of the concatenated code, plus its parameters and bound.

    With ``verify_claims`` the claimed inner and outer distances are recomputed
    exactly and any overstatement raises :class:`ClaimError`.
    """
    m = chain.num_levels
    if not chain.fully_descends:
        raise BuildError(f"chain must descend to k=0, ends at k={chain.level_ks[-1]}")
    if len(outers) != m:
        raise BuildError(f"chain has {m} levels but {len(outers)} outer codes were given")
    Ns = {o.N for o in outers}
    if len(Ns) != 1:
        raise BuildError(f"outer codes must share one length N, got {sorted(Ns)}")
    (N,) = Ns
    for level, outer in enumerate(outers, start=1):
        if outer.r != chain.r(level):
            raise BuildError(
                f"outer code {level} has r={outer.r} but the chain's coset code "
                f"at level {level} carries r={chain.r(level)} logical qubits"
            )

    ds = chain.distances(cap)
    if verify_claims:
        _verify_claims(chain, outers, ds, cap)

    base = chain.base
    s_i = build_s_i(base.n, base.generators, N)
    lifted_outer = []
    lifted_logicals = []
    for level, outer in enumerate(outers, start=1):
        coset = coset_code(chain, level)
        lifted_outer.append(tuple(lift_operator(g, coset, N) for g in outer.binary_form.generators))
        lifted_logicals.append(
            tuple(
                (lift_operator(x, coset, N), lift_operator(z, coset, N))
                for x, z in outer.binary_form.logical_pairs
            )
        )

    gens = tuple(s_i) + tuple(g for level in lifted_outer for g in level)
    pairs = tuple(p for level in lifted_logicals for p in level)
    try:
        code = StabilizerCode.build(base.n * N, gens, pairs)
    except InvalidCodeError as exc:
        raise BuildError(f"lifted generators do not form a stabilizer code: {exc}") from exc

    expected_k = sum(o.r * o.K for o in outers)
    if code.k != expected_k:
        raise BuildError(f"dimension {code.k} disagrees with sum r_i*K_i = {expected_k}")

    flags = tuple(o.degenerate for o in outers)
    Ds = tuple(o.D for o in outers)
    bound, mu = distance_bound(ds, Ds, flags)
    return GcqcResult(
        code=code,
        s_i_part=tuple(s_i),
        lifted_outer=tuple(lifted_outer),
        lifted_logicals=tuple(lifted_logicals),
        inner_n=base.n,
        inner_k=base.k,
        num_blocks=N,
        level_rs=tuple(o.r for o in outers),
        level_ds=tuple(ds),
        outer_Ds=Ds,
        outer_Ks=tuple(o.K for o in outers),
        degenerate=flags,
        bound=bound,
        mu=mu,
    )


def _verify_claims(chain: SubcodeChain, outers: Sequence[OuterCodeSpec], ds, cap: int) -> None:
    for level in range(1, chain.num_levels + 1):
        true_d = min_distance(chain.subcode(level), cap).distance
        if ds[level - 1] > true_d:
            raise ClaimError(f"claimed d_{level}={ds[level - 1]} exceeds true distance {true_d}")
    for outer in outers:
        true_D = min_distance(outer.binary_form, cap, block_size=outer.r).distance
        if outer.D > true_D:
            raise ClaimError(
                f"claimed D_{outer.level}={outer.D} exceeds true distance {true_D}"
            )


@dataclass(frozen=True)
class Lemma1Report:
    ok: bool
    exhaustive: bool
    checked: int
    counterexample: tuple[int, int, int, PauliOperator] | None = None
    """``(level_i, level_j, block, restriction)`` of a failing product."""


def check_block_products(
    ws: Sequence[PauliOperator],
    vs: Sequence[PauliOperator],
    block_size: int,
    d: int,
) -> tuple[int, PauliOperator] | None:
    """First ``(block, restriction)`` where some ``w*v`` is neither identity nor of weight >= d."""
    for w in ws:
        for v in vs:
            p = w * v
            for b in range(p.n // block_size):
                part = restrict(p, b, block_size)
                if not part.is_identity() and weight(part) < d:
                    return b, part
    return None


def _block_span(ops: Sequence[PauliOperator], block: int, block_size: int) -> list[int]:
    """Independent symplectic rows spanning the restrictions of ``ops`` to one block."""
    basis = gf2.XorBasis()
    out = []
    for op in ops:
        part = restrict(op, block, block_size)
        row = part.x | (part.z << block_size)
        if basis.add(row):
            out.append(row)
    return out


def _span_elements(rows: Sequence[int], n: int, limit: int, rng: random.Random) -> tuple[list[PauliOperator], bool]:
    mask = (1 << n) - 1
    if 1 << len(rows) <= limit:
        combos = itertools.product((0, 1), repeat=len(rows))
        exhaustive = True
    else:
        combos = ([rng.getrandbits(1) for _ in rows] for _ in range(limit))
        exhaustive = False
    elements = []
    for bits in combos:
        acc = 0
        for bit, row in zip(bits, rows):
            if bit:
                acc ^= row
        elements.append(PauliOperator(n, acc & mask, acc >> n))
    return elements, exhaustive


def verify_lemma1(result: GcqcResult, limit: int = 1 << 12, seed: int = 0) -> Lemma1Report:
    """Check that lifted normalizer products are identity or of weight >= d_i on each block.

    For levels ``i <= j``, ``W`` ranges over the lifted normalizer of outer code
    ``i`` and ``V`` over that of ``j``.  Restriction to a block is linear, so
    every block restriction of ``W*V`` is a product of an element of the
    restricted span of level ``i`` and one of level ``j``; those spans are
    enumerated exhaustively when they have at most ``limit`` elements and
    sampled with ``seed`` otherwise.
    """
    n, N = result.inner_n, result.num_blocks
    normalizers = [
        list(gens) + [op for pair in pairs for op in pair]
        for gens, pairs in zip(result.lifted_outer, result.lifted_logicals)
    ]
    rng = random.Random(seed)
    exhaustive = True
    checked = 0
    m = len(normalizers)
    for block in range(N):
        spans = []
        for ops in normalizers:
            elements, full = _span_elements(_block_span(ops, block, n), n, limit, rng)
            exhaustive &= full
            spans.append(elements)
        for i in range(m):
            for j in range(i, m):
                d_i = result.level_ds[i]
                checked += len(spans[i]) * len(spans[j])
                bad = check_block_products(spans[i], spans[j], n, d_i)
                if bad is not None:
                    return Lemma1Report(False, exhaustive, checked, (i + 1, j + 1, block, bad[1]))
    return Lemma1Report(True, exhaustive, checked)


def counting_identities(result: GcqcResult) -> dict[str, bool]:
    """Rank checks tying generator counts to the claimed parameters."""
    n, k1, N = result.inner_n, result.inner_k, result.num_blocks
    expected_k = sum(r * K for r, K in zip(result.level_rs, result.outer_Ks))
    rank_sc = rank_gf2(result.code.generators)
    logical_ops = [op for pair in result.code.logical_pairs for op in pair]
    return {
        "length": result.length == n * N,
        "dimension": result.dimension == expected_k,
        "stabilizer_rank": rank_sc == result.length - expected_k,
        "s_i_rank": rank_gf2(result.s_i_part) == len(result.s_i_part) == (n - k1) * N,
        "factorization": rank_gf2(list(result.code.generators) + logical_ops)
        == result.length + expected_k
        and rank_sc + 2 * expected_k == result.length + expected_k,
    }
