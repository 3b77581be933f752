from __future__ import annotations

from itertools import combinations_with_replacement
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edgering.errors import NotTopBetti, OverlapError
from edgering.formulas import (
    evaluate, graded_betti, is_top_betti, mixed_total, multigraded_betti, n_i,
    odd_graded_count, pdim_formula, regularity_formula, tensor_convolve, top_betti_subgraphs,
    top_support, total_betti,
)
from edgering.graph import V1, V2, MultiPathSpec, sub_spec, theta
from edgering.monomial import Monomial
from edgering.resolution import BettiTable

v1, v2 = Monomial({V1: 1}), Monomial({V2: 1})
specs = st.lists(st.integers(2, 7), min_size=2, max_size=5).map(lambda ls: MultiPathSpec(tuple(ls)))


def S(text: str) -> MultiPathSpec:
    return MultiPathSpec.parse(text)


@pytest.mark.parametrize("text,pd", [("2,2,2", 2), ("2,3", 0), ("2,2", 1), ("3,3,3", 2),
                                     ("2,2,3,3", 2), ("2,2,3", 1), ("2,4,6,3,5", 3)])
def test_pdim(text, pd):
    assert pdim_formula(S(text)) == pd


@pytest.mark.parametrize("text,top", [("2,2", True), ("2,3", False), ("2,2,3,3", True),
                                      ("2,2,3", False), ("3,3", True), ("2,3,3", False)])
def test_top_betti(text, top):
    assert is_top_betti(S(text)) == top


def test_top_supports():
    k23 = S("2,2,2")
    assert top_support(k23) == {theta(k23) * v1, theta(k23) * v2}
    assert top_support(S("3,3")) == {theta(S("3,3"))}
    mixed = S("2,2,3,3")
    assert top_support(mixed) == {theta(mixed) * v1 * v2}
    with pytest.raises(NotTopBetti):
        top_support(S("2,2,3"))


@given(specs)
def test_top_support_size(spec):
    if not is_top_betti(spec):
        return
    p, q = spec.n_even, spec.n_odd
    size = {"even": p - 1, "odd": q - 1, "mixed": (p - 1) * (q - 1)}[spec.kind]
    assert len(top_support(spec)) == size
    for alpha in top_support(spec):
        assert theta(spec).divides(alpha)
        assert alpha.support == frozenset(spec.vertices)


def test_top_betti_subgraphs():
    assert top_betti_subgraphs(S("2,2,2"), 1) == [(1, 2), (1, 3), (2, 3)]
    assert top_betti_subgraphs(S("2,2,3,3"), 1) == [(1, 2), (3, 4)]
    assert top_betti_subgraphs(S("2,2,3,3"), 2) == [(1, 2, 3, 4)]


def test_n_i_examples():
    k23 = S("2,2,2")
    assert n_i(k23, 2) == {theta(k23) * v1, theta(k23) * v2}
    spec = S("2,2,3,3")
    assert n_i(spec, 1) == {theta(sub_spec(spec, (1, 2))), theta(sub_spec(spec, (3, 4)))}
    assert n_i(spec, 5) == set()


def test_graded_examples():
    assert graded_betti(S("2,4,6"))[1, 3] == 1
    assert graded_betti(S("3,3")) == {(0, 0): 1, (1, 3): 1}
    assert graded_betti(S("2,2,2")) == {(0, 0): 1, (1, 2): 3, (2, 3): 2}


def test_k23_totals_and_regularity():
    result = evaluate(S("2,2,2"))
    assert result.totals == [1, 3, 2]
    assert (result.pdim, result.mat, result.reg) == (2, 2, 1)


@pytest.mark.parametrize("text,reg", [("2,2,2", 1), ("2,2,3,3", 3), ("2,2,3", 1), ("2,3", 0),
                                      ("3,3", 2), ("2,4", 2), ("2,3,3", 2)])
def test_regularity(text, reg):
    assert regularity_formula(S(text)) == reg


def test_tensor_examples():
    a, b = multigraded_betti(S("2,2")), multigraded_betti(S("3,3"))
    assert tensor_convolve(a, BettiTable.trivial(scale=2)) == a
    # labels collide here (both parts use paths 1 and 2)
    with pytest.raises(OverlapError):
        tensor_convolve(a, b)
    spec = S("2,2,3,3")
    even = multigraded_betti(sub_spec(spec, (1, 2)))
    odd = multigraded_betti(sub_spec(spec, (3, 4)))
    conv = tensor_convolve(even, odd)
    assert conv.totals() == [1, 2, 1]
    assert conv == multigraded_betti(spec)


@settings(max_examples=60, deadline=None)
@given(specs)
def test_evaluate_is_coherent(spec):
    result = evaluate(spec)
    result.check()
    assert len(result.totals) == result.pdim + 1
    assert all(v == 1 for _, v in result.multigraded.items())


@pytest.mark.parametrize("p,q", [(2, 2), (2, 3), (3, 2), (3, 3), (4, 2), (2, 4)])
def test_mixed_totals_closed_form(p, q):
    spec = MultiPathSpec((2,) * p + (3,) * q)
    for i in range(1, pdim_formula(spec) + 1):
        direct = sum(comb(p, j) * comb(q, k) * (j - 1) * (k - 1)
                     for j in range(2, p + 1) for k in range(2, q + 1) if j + k == i + 2)
        expected = direct + i * (comb(p, i + 1) + comb(q, i + 1))
        assert mixed_total(p, q, i) == expected == total_betti(spec, i)


@pytest.mark.parametrize("halves", list(combinations_with_replacement((1, 2, 3), 3)))
def test_odd_counts_sum_to_totals(halves):
    m = len(halves)
    for i in range(1, m):
        total = sum(odd_graded_count(halves, i, j) for j in range(sum(halves) + m + 1))
        assert total == i * comb(m, i + 1)
