"""Random valid inputs, used both by hypothesis tests and by seeded suites."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from gcqc.builder import make_outer
from gcqc.distance import min_distance
from gcqc.partition import NestingStrategy, build_chain
from gcqc.pauli import PauliOperator, commutes, symplectic_row
from gcqc.gf2 import XorBasis
from gcqc.stabilizer import StabilizerCode


def random_generators(rng: random.Random, n: int, s: int) -> list[PauliOperator]:
    """``s`` independent commuting generators on ``n`` qubits (``s <= n``)."""
    gens: list[PauliOperator] = []
    basis = XorBasis()
    while len(gens) < s:
        p = PauliOperator(n, rng.getrandbits(n), rng.getrandbits(n))
        if p.is_identity() or not all(commutes(p, g) for g in gens):
            continue
        if basis.add(symplectic_row(p)):
            gens.append(p)
    return gens


def random_code(rng: random.Random, n: int, s: int) -> StabilizerCode:
    return StabilizerCode.build(n, random_generators(rng, n, s))


@st.composite
def paulis(draw, n=None, max_n=8):
    if n is None:
        n = draw(st.integers(1, max_n))
    return PauliOperator(n, draw(st.integers(0, (1 << n) - 1)), draw(st.integers(0, (1 << n) - 1)))


@st.composite
def pauli_triples(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    return draw(paulis(n)), draw(paulis(n)), draw(paulis(n))


@st.composite
def stabilizer_codes(draw, max_n=6, min_k=0):
    n = draw(st.integers(max(1, min_k), max_n))
    s = draw(st.integers(0, n - min_k))
    rng = random.Random(draw(st.integers(0, 2**32 - 1)))
    return random_code(rng, n, s)


seeds = st.integers(0, 2**32 - 1).map(random.Random)


def random_strategy(rng: random.Random, k: int) -> NestingStrategy:
    order = list(range(1, k + 1))
    rng.shuffle(order)
    swaps = frozenset(j for j in range(1, k + 1) if rng.random() < 0.5)
    return NestingStrategy(tuple(order), swaps)


def random_chain(rng: random.Random, n: int, k1: int, m: int):
    base = random_code(rng, n, n - k1)
    if m == 1:
        ks = (k1, 0)
    else:
        ks = (k1, rng.randint(1, k1 - 1), 0)
    return build_chain(base, ks, random_strategy(rng, k1))


def _sample(make, distance, want: int, tries: int = 40):
    """Draw from ``make`` until ``distance`` reaches ``want`` or tries run out."""
    for _ in range(tries):
        item = make()
        d = distance(item)
        if d >= want:
            break
    return item, d


def random_gcqc_inputs(rng: random.Random, max_size_bits: int = 22, boost: float = 0.6):
    """A random (chain, outers) pair with n <= 6, N <= 3, m <= 2.

    With probability ``boost`` the inner code and each outer code are redrawn
    until their distance is at least 2, so that non-trivial bounds and
    degenerate outer codes show up.  Outer distances are the true block
    distances; chain distances are computed.  Inputs whose exact-distance
    budget exceeds ``2^max_size_bits`` are resampled.
    """
    while True:
        n = rng.randint(1, 6)
        k1 = rng.randint(1, min(n, 3))
        m = rng.randint(1, 2) if k1 >= 2 else 1
        N = rng.randint(1, 3)
        want = 2 if rng.random() < boost else 1
        chain, _ = _sample(
            lambda: random_chain(rng, n, k1, m),
            lambda c: min_distance(c.subcode(1)).distance,
            want,
        )
        rs = [chain.r(i) for i in range(1, m + 1)]
        Ks = [rng.randint(1, N) for _ in rs]
        if n * N + sum(r * K for r, K in zip(rs, Ks)) > max_size_bits:
            continue
        outers = []
        for level, (r, K) in enumerate(zip(rs, Ks), start=1):
            code, D = _sample(
                lambda: random_code(rng, r * N, r * (N - K)),
                lambda c: min_distance(c, block_size=r).distance,
                2 if rng.random() < boost else 1,
            )
            outers.append(make_outer(level, N, r, code.generators, D, K=K, logical_pairs=code.logical_pairs))
        return chain, outers


def random_degenerate_inputs(rng: random.Random, max_size_bits: int = 24):
    """Inputs whose first outer code is degenerate by construction.

    Block 0 of outer code 1 is pinned by single-block Z stabilizers while a
    random code with block distance >= 2 lives on the remaining blocks, the
    same shape as a ``[[5,1,2]]`` code carrying an ``XIIII`` stabilizer.
    Lengths go past ``N = 3`` because smaller degenerate codes barely exist.
    """
    while True:
        n = rng.randint(3, 4)
        k1 = rng.randint(1, 2)
        m = rng.randint(1, 2) if k1 == 2 else 1
        N = rng.randint(4, 5)
        chain = random_chain(rng, n, k1, m)
        rs = [chain.r(i) for i in range(1, m + 1)]
        Ks = [rng.randint(1, N - 1)] + [rng.randint(1, N) for _ in rs[1:]]
        if n * N + sum(r * K for r, K in zip(rs, Ks)) > max_size_bits:
            continue
        r1, K1 = rs[0], Ks[0]
        rest, D = _sample(
            lambda: random_code(rng, r1 * (N - 1), r1 * (N - 1 - K1)),
            lambda c: min_distance(c, block_size=r1).distance,
            2,
        )
        if D < 2:
            continue
        pinned = [PauliOperator(r1 * N, 0, 1 << q) for q in range(r1)]
        shifted = [PauliOperator(r1 * N, g.x << r1, g.z << r1) for g in rest.generators]
        pairs = [
            (PauliOperator(r1 * N, x.x << r1, x.z << r1), PauliOperator(r1 * N, z.x << r1, z.z << r1))
            for x, z in rest.logical_pairs
        ]
        outers = [make_outer(1, N, r1, pinned + shifted, D, K=K1, logical_pairs=pairs)]
        for level, (r, K) in enumerate(zip(rs[1:], Ks[1:]), start=2):
            code = random_code(rng, r * N, r * (N - K))
            D_level = min_distance(code, block_size=r).distance
            outers.append(make_outer(level, N, r, code.generators, D_level, K=K, logical_pairs=code.logical_pairs))
        return chain, outers
