from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edgering.errors import InvalidSpec, SubsetTooSmall, TooLarge
from edgering.graph import (
    V1, V2, U, Edge, MultiPathSpec, big_d, build_graph, matching_number,
    matching_number_bruteforce, matching_number_formula, matching_number_hubs, parse_edge, parse_monomial,
    parse_vertex, sub_spec, sweep, theta,
)
from edgering.monomial import Monomial

lengths = st.lists(st.integers(2, 7), min_size=2, max_size=5)


def to_nx(spec: MultiPathSpec) -> nx.Graph:
    g = nx.Graph()
    g.add_edges_from(spec.endpoints(e) for e in spec.edges)
    return g


def test_parse_and_str():
    spec = MultiPathSpec.parse("2,2,3")
    assert spec.lengths == (2, 2, 3)
    assert str(spec) == "2,2,3"
    assert spec.kind == "mixed"
    assert (spec.n_even, spec.n_odd) == (2, 1)
    assert spec.halves == (1, 1, 1)


@pytest.mark.parametrize("text", ["2", "2,1", "", "a,b", "2,,3", "0,2"])
def test_invalid_specs(text):
    with pytest.raises(InvalidSpec):
        MultiPathSpec.parse(text)


def test_k23_shape():
    spec = MultiPathSpec.parse("2,2,2")
    g = build_graph(spec)
    assert len(g.vertices) == 5
    assert len(g.edge_list) == 6
    assert spec.kind == "even" and spec.is_bipartite
    assert theta(spec) == Monomial({V1: 1, V2: 1, U(1, 1): 1, U(2, 1): 1, U(3, 1): 1})
    assert big_d(spec) == theta(spec) ** 2 * Monomial({V1: 1, V2: 1})


def test_vertex_edge_round_trip():
    for v in (V1, V2, U(3, 12)):
        assert parse_vertex(str(v)) == v
    assert parse_edge("e2_3") == Edge(2, 3)
    m = parse_monomial("v1^2*u1_1")
    assert m == Monomial({V1: 2, U(1, 1): 1})
    assert str(m) == "v1^2*u1_1"
    assert parse_monomial("1") == Monomial()


@given(lengths)
def test_structure_matches_networkx(ls):
    spec = MultiPathSpec(tuple(ls))
    g = to_nx(spec)
    assert g.number_of_nodes() == sum(ls) - len(ls) + 2
    assert g.number_of_edges() == sum(ls)
    assert nx.is_connected(g)
    assert nx.is_bipartite(g) == spec.is_bipartite
    assert build_graph(spec).is_bipartite() == spec.is_bipartite
    assert sorted(d for _, d in g.degree())[-2:] == [len(ls), len(ls)]


@given(lengths)
def test_coloring_is_proper_when_bipartite(ls):
    spec = MultiPathSpec(tuple(ls))
    if not spec.is_bipartite:
        return
    for e in spec.edges:
        a, b = spec.endpoints(e)
        assert spec.color(a) != spec.color(b)


@given(lengths)
def test_edge_degrees_sum_to_twice_theta_shape(ls):
    spec = MultiPathSpec(tuple(ls))
    deg = Monomial()
    for e in spec.edges:
        deg = deg * spec.edge_degree(e)
    # every internal vertex has degree 2, hubs have degree t
    assert deg[V1] == deg[V2] == spec.t
    assert all(deg[v] == 2 for v in spec.vertices if not v.is_hub)


def test_sub_spec_keeps_labels():
    spec = MultiPathSpec.parse("2,3,4,5")
    h = sub_spec(spec, [4, 2])
    assert h.labels == (2, 4)
    assert h.lengths == (3, 5)
    assert U(4, 1) in h.vertices
    with pytest.raises(SubsetTooSmall):
        sub_spec(spec, [1])
    with pytest.raises(InvalidSpec):
        sub_spec(spec, [1, 9])


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(2, 6), min_size=2, max_size=4).filter(lambda ls: sum(ls) <= 16))
def test_matching_formula_against_networkx(ls):
    spec = MultiPathSpec(tuple(ls))
    expected = len(nx.max_weight_matching(to_nx(spec), maxcardinality=True))
    assert matching_number(spec) == expected
    assert matching_number_hubs(spec) == expected
    formula = matching_number_formula(spec)
    if formula is not None:
        assert formula == expected


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(2, 12), min_size=2, max_size=7))
def test_hub_matching_against_networkx_beyond_the_cap(ls):
    spec = MultiPathSpec(tuple(ls))
    assert matching_number_hubs(spec) == len(nx.max_weight_matching(to_nx(spec),
                                                                     maxcardinality=True))


def test_mixed_matching_uses_even_count():
    # subtracting the odd count instead would give 5 > |V| / 2
    spec = MultiPathSpec.parse("2,2,2,3,3")
    assert len(spec.vertices) == 9
    assert matching_number_formula(spec) == 4
    assert matching_number_bruteforce(build_graph(spec)) == 4


def test_lone_path_mixed_has_no_closed_form():
    spec = MultiPathSpec.parse("2,2,3")
    assert matching_number_formula(spec) is None
    assert matching_number(spec) == 3


def test_bruteforce_cap():
    spec = MultiPathSpec.parse("9,9")
    with pytest.raises(TooLarge):
        matching_number_bruteforce(build_graph(spec), cap=16)


def test_sweep_counts():
    specs = sweep(3, [2, 3, 4], "even", 8)
    assert all(s.kind == "even" for s in specs)
    assert all(sum(s.halves) <= 8 for s in specs)
    assert len(specs) == len(set(specs)) == 24
    odd = sweep(2, [2, 3, 4], "odd")
    assert len(odd) == 3 + 4 + 5
    assert all(s.kind == "odd" for s in odd)


def test_empty_graph_is_disconnected():
    g = build_graph(MultiPathSpec.parse("2,2"))
    assert not g.induced([]).is_connected()
    assert g.induced([V1]).is_connected()
