"""Hypothesis checks of invariants not already covered by the acceptance suites."""

from hypothesis import given, settings
from hypothesis import strategies as st

from gcqc.builder import lift_operator
from gcqc.distance import min_distance
from gcqc.partition import NestingStrategy, build_chain, coset_code
from gcqc.pauli import PauliOperator, format_pauli, parse_pauli, symplectic_product, weight
from gcqc.stabilizer import StabilizerCode, in_stabilizer_group, is_degenerate
from oracles import naive_distance
from strategies import pauli_triples, paulis, random_chain, seeds, stabilizer_codes


@given(st.text(alphabet="IXYZ", min_size=1, max_size=12))
def test_parse_format_round_trip(s):
    assert format_pauli(parse_pauli(s)) == s


@given(pauli_triples())
def test_weight_subadditive(triple):
    p, q, _ = triple
    assert weight(p * q) <= weight(p) + weight(q)


@given(pauli_triples())
def test_multiplication_associative_and_involutive(triple):
    p, q, r = triple
    assert (p * q) * r == p * (q * r)
    assert (p * p).is_identity()


@given(stabilizer_codes(), st.data())
def test_members_commute_with_generators(code, data):
    bits = data.draw(st.lists(st.booleans(), min_size=len(code.generators), max_size=len(code.generators)))
    p = PauliOperator.identity(code.n)
    for b, g in zip(bits, code.generators):
        if b:
            p = p * g
    assert in_stabilizer_group(code, p)
    assert all(symplectic_product(p, g) == 0 for g in code.generators)


@given(stabilizer_codes(), st.data())
def test_membership_implies_commutation(code, data):
    p = data.draw(paulis(n=code.n))
    if in_stabilizer_group(code, p):
        assert all(symplectic_product(p, g) == 0 for g in code.generators)


@given(stabilizer_codes(), st.integers(1, 7))
def test_degeneracy_monotone(code, d):
    if is_degenerate(code, d):
        assert is_degenerate(code, d + 1)


@settings(max_examples=60, deadline=None)
@given(stabilizer_codes(max_n=5, min_k=1))
def test_distance_matches_naive(code):
    assert min_distance(code).distance == naive_distance([(g.x, g.z) for g in code.generators], code.n)


@settings(deadline=None)
@given(seeds, st.integers(2, 6))
def test_swap_is_an_involution(rng, n):
    k1 = rng.randint(1, n)
    chain = random_chain(rng, n, k1, 1)
    swaps = chain.strategy.swaps
    swapped = StabilizerCode(n, chain.base.generators, NestingStrategy(swaps=swaps).apply(chain.base.logical_pairs))
    again = NestingStrategy(swaps=swaps).apply(swapped.logical_pairs)
    assert again == chain.base.logical_pairs


@settings(deadline=None)
@given(seeds, st.data())
def test_lift_is_linear(rng, data):
    n = rng.randint(2, 6)
    k1 = rng.randint(1, min(n, 3))
    chain = random_chain(rng, n, k1, 1)
    coset = coset_code(chain, 1)
    N = data.draw(st.integers(1, 3))
    g = data.draw(paulis(n=coset.r * N))
    h = data.draw(paulis(n=coset.r * N))
    assert lift_operator(g * h, coset, N) == lift_operator(g, coset, N) * lift_operator(h, coset, N)
    assert symplectic_product(lift_operator(g, coset, N), lift_operator(h, coset, N)) == symplectic_product(g, h)


@settings(deadline=None)
@given(seeds)
def test_chain_distances_non_decreasing(rng):
    n = rng.randint(2, 6)
    k1 = rng.randint(2, min(n, 3)) if n >= 2 else 1
    chain = random_chain(rng, n, k1, 2)
    ds = [min_distance(chain.subcode(i)).distance for i in range(1, chain.num_levels + 1)]
    assert ds == sorted(ds)
