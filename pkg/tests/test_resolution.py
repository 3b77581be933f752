from __future__ import annotations

import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edgering.caps import Caps
from edgering.errors import EmptyTable, TooLarge
from edgering.monomial import Monomial
from edgering.resolution import (
    BettiTable, MonomialIdeal, SimplicialComplex, betti_table_monomial, euler_characteristics,
    koszul_homology, lcm_lattice, nerve, pdim_of, reduced_homology_ranks, reg_of,
    taylor_alternating_sums, upper_koszul,
)

VARS = "abcdef"


def mono(text: str) -> Monomial:
    return Monomial.from_vars(text)


def ideal(*gens: str) -> MonomialIdeal:
    return MonomialIdeal(tuple(VARS), [mono(g) for g in gens])


def padded(a: list, b: list) -> bool:
    """Equal up to trailing zeros."""
    width = max(len(a), len(b))
    return a + [0] * (width - len(a)) == b + [0] * (width - len(b))


squarefree_ideals = st.lists(
    st.frozensets(st.sampled_from(VARS), min_size=1, max_size=3), min_size=1, max_size=6,
).map(lambda gs: MonomialIdeal(tuple(VARS), [Monomial.from_vars(sorted(g)) for g in gs]))

complexes = st.lists(st.frozensets(st.integers(0, 6), min_size=1, max_size=4),
                     min_size=1, max_size=6).map(
    lambda fs: SimplicialComplex(frozenset(range(7)), tuple(fs)))


def test_minimal_generators():
    i = ideal("ab", "abc", "a", "bc")
    assert [str(g) for g in i.generators] == ["a", "b*c"]
    assert i.contains(mono("abd")) and not i.contains(mono("cd"))


def test_koszul_complex_of_variables():
    table = betti_table_monomial(ideal("a", "b", "c"), scale=1)
    assert table.totals() == [1, 3, 3, 1]
    assert table[3, mono("abc")] == 1


def test_triangle_ideal():
    table = betti_table_monomial(ideal("ab", "bc", "ac"), scale=1)
    assert table.totals() == [1, 3, 2]
    assert table.graded() == {(0, 0): 1, (1, 2): 3, (2, 3): 2}
    assert pdim_of(table) == 2 and reg_of(table) == 1


def test_path_ideal_multigraded():
    # edge ideal of the path a-b-c-d
    table = betti_table_monomial(ideal("ab", "bc", "cd"), scale=1)
    # the independence complex of the path is contractible: nothing at abcd
    assert table.totals() == [1, 3, 2]
    assert table[2, mono("abc")] == table[2, mono("bcd")] == 1
    assert table[2, mono("abcd")] == 0


def test_zero_ideal_and_empty_table():
    table = betti_table_monomial(MonomialIdeal(tuple(VARS), []), scale=1)
    assert table == BettiTable.trivial(scale=1)
    with pytest.raises(EmptyTable):
        pdim_of(BettiTable(scale=1))


def test_void_and_empty_complexes():
    void = SimplicialComplex(frozenset(), ())
    empty = SimplicialComplex(frozenset(), (frozenset(),))
    assert koszul_homology(void) == [0]
    assert koszul_homology(empty) == [1]
    assert reduced_homology_ranks(empty)[0] == 1


def test_sphere_homology():
    # boundary of a tetrahedron is a 2-sphere
    cx = SimplicialComplex(frozenset(range(4)), tuple(map(frozenset, combinations(range(4), 3))))
    assert reduced_homology_ranks(cx) == [0, 0, 0, 1]
    assert koszul_homology(cx) == [0, 0, 0, 1]


@settings(max_examples=80, deadline=None)
@given(complexes)
def test_nerve_has_the_same_homology(cx):
    direct = reduced_homology_ranks(cx)
    via_nerve = reduced_homology_ranks(nerve(cx))
    assert padded(direct, via_nerve)


@settings(max_examples=60, deadline=None)
@given(squarefree_ideals)
def test_euler_characteristic_matches_taylor_sums(i):
    table = betti_table_monomial(i, scale=1)
    assert euler_characteristics(table) == taylor_alternating_sums(i)


@settings(max_examples=40, deadline=None)
@given(squarefree_ideals, st.integers(0, 10**6))
def test_no_betti_numbers_off_the_lcm_lattice(i, seed):
    lattice = lcm_lattice(i) | {Monomial()}
    rng = random.Random(seed)
    for _ in range(20):
        alpha = Monomial({v: rng.randint(0, 2) for v in VARS})
        if alpha in lattice:
            continue
        ranks = koszul_homology(upper_koszul(i, alpha))
        assert not any(ranks), alpha


@settings(max_examples=40, deadline=None)
@given(squarefree_ideals)
def test_betti_numbers_match_direct_homology(i):
    for alpha in lcm_lattice(i):
        cx = upper_koszul(i, alpha)
        assert padded(koszul_homology(cx), reduced_homology_ranks(cx))


def test_lattice_cap():
    with pytest.raises(TooLarge):
        betti_table_monomial(ideal("a", "b", "c", "d"), scale=1, caps=Caps(lattice=5))


def test_regrade_accumulates_collisions():
    table = BettiTable(scale=1)
    table.add(1, mono("a"))
    table.add(1, mono("b"))
    pushed = table.regrade(lambda m: Monomial({"x": m.degree}), scale=1)
    assert pushed[1, Monomial({"x": 1})] == 2


def test_table_comparisons():
    small = BettiTable.trivial(scale=1)
    big = BettiTable.trivial(scale=1)
    big.add(1, mono("ab"))
    assert small.dominated_by(big) and not big.dominated_by(small)
    assert big.difference(small) == {(1, mono("ab")): 1}
    assert big.std_degree(mono("ab")) == 2
