"""Multi-path graphs: construction, labelling and basic invariants.

A multi-path graph is ``t >= 2`` internally disjoint paths joining two hub
vertices ``v1`` and ``v2``.  Path ``k`` of length ``L_k`` has internal
vertices ``u{k}_1 .. u{k}_{L_k-1}`` and edges ``e{k}_1 .. e{k}_{L_k}``,
numbered starting at the ``v1`` end.
"""
from __future__ import annotations

import re
from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations_with_replacement
from typing import NamedTuple

from .caps import current_caps
from .errors import InvalidSpec, SubsetTooSmall, TooLarge
from .monomial import Monomial

_V1, _V2, _U = 0, 1, 2


class Vertex(NamedTuple):
    kind: int
    k: int = 0
    j: int = 0

    def __str__(self) -> str:
        if self.kind == _V1:
            return "v1"
        if self.kind == _V2:
            return "v2"
        return f"u{self.k}_{self.j}"

    @property
    def is_hub(self) -> bool:
        return self.kind != _U


V1 = Vertex(_V1)
V2 = Vertex(_V2)


def U(k: int, j: int) -> Vertex:
    return Vertex(_U, k, j)


class Edge(NamedTuple):
    k: int
    j: int

    def __str__(self) -> str:
        return f"e{self.k}_{self.j}"


_VERTEX_RE = re.compile(r"^(?:v([12])|u(\d+)_(\d+))$")
_EDGE_RE = re.compile(r"^e(\d+)_(\d+)$")
_FACTOR_RE = re.compile(r"^([a-z0-9_]+)(?:\^(\d+))?$")


def parse_vertex(text: str) -> Vertex:
    m = _VERTEX_RE.match(text.strip())
    if not m:
        raise InvalidSpec(f"not a vertex: {text!r}")
    if m.group(1):
        return V1 if m.group(1) == "1" else V2
    return U(int(m.group(2)), int(m.group(3)))


def parse_edge(text: str) -> Edge:
    m = _EDGE_RE.match(text.strip())
    if not m:
        raise InvalidSpec(f"not an edge variable: {text!r}")
    return Edge(int(m.group(1)), int(m.group(2)))


def parse_monomial(text: str, parse_var=parse_vertex) -> Monomial:
    """Inverse of ``str(Monomial)``: ``"v1^2*u1_1"`` and the like."""
    text = text.strip()
    if text == "1":
        return Monomial()
    exps: dict = {}
    for factor in text.split("*"):
        m = _FACTOR_RE.match(factor.strip())
        if not m:
            raise InvalidSpec(f"bad monomial factor {factor!r}")
        var = parse_var(m.group(1))
        exps[var] = exps.get(var, 0) + int(m.group(2) or 1)
    return Monomial(exps)


@dataclass(frozen=True)
class MultiPathSpec:
    """Path lengths ``L_1..L_t`` (edge counts) plus the labels of the paths.

    ``labels`` defaults to ``1..t``; sub-specs keep the labels of the parent
    so that their vertices and edges embed verbatim.
    """

    lengths: tuple[int, ...]
    labels: tuple[int, ...] = ()

    def __post_init__(self):
        lengths = tuple(int(x) for x in self.lengths)
        object.__setattr__(self, "lengths", lengths)
        labels = tuple(self.labels) or tuple(range(1, len(lengths) + 1))
        object.__setattr__(self, "labels", labels)
        if len(lengths) < 2:
            raise InvalidSpec("a multi-path graph needs at least two paths")
        if any(L < 2 for L in lengths):
            raise InvalidSpec(f"path lengths must be >= 2, got {lengths}")
        if len(labels) != len(lengths) or len(set(labels)) != len(labels):
            raise InvalidSpec("labels must be distinct, one per path")
        if any(k < 1 for k in labels):
            raise InvalidSpec("path labels are positive integers")

    @classmethod
    def parse(cls, text: str) -> "MultiPathSpec":
        try:
            lengths = tuple(int(x) for x in text.split(","))
        except ValueError:
            raise InvalidSpec(f"bad path list {text!r}") from None
        return cls(lengths)

    def __str__(self) -> str:
        return ",".join(map(str, self.lengths))

    @property
    def t(self) -> int:
        return len(self.lengths)

    def length(self, k: int) -> int:
        return self.lengths[self.labels.index(k)]

    @cached_property
    def even_labels(self) -> tuple[int, ...]:
        return tuple(k for k, L in zip(self.labels, self.lengths) if L % 2 == 0)

    @cached_property
    def odd_labels(self) -> tuple[int, ...]:
        return tuple(k for k, L in zip(self.labels, self.lengths) if L % 2 == 1)

    @property
    def n_even(self) -> int:
        return len(self.even_labels)

    @property
    def n_odd(self) -> int:
        return len(self.odd_labels)

    @property
    def kind(self) -> str:
        if not self.n_odd:
            return "even"
        if not self.n_even:
            return "odd"
        return "mixed"

    @property
    def is_bipartite(self) -> bool:
        return self.kind != "mixed"

    @property
    def halves(self) -> tuple[int, ...]:
        """The half-parameters: ``L/2`` for even paths, ``(L-1)/2`` for odd ones."""
        return tuple(L // 2 for L in self.lengths)

    @cached_property
    def vertices(self) -> tuple[Vertex, ...]:
        inner = [U(k, j) for k, L in zip(self.labels, self.lengths) for j in range(1, L)]
        return (V1, V2, *sorted(inner))

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(Edge(k, j) for k, L in zip(self.labels, self.lengths)
                            for j in range(1, L + 1)))

    def endpoints(self, edge: Edge) -> tuple[Vertex, Vertex]:
        k, j = edge
        L = self.length(k)
        if not 1 <= j <= L:
            raise InvalidSpec(f"{edge} not in graph {self}")
        left = V1 if j == 1 else U(k, j - 1)
        right = V2 if j == L else U(k, j)
        return left, right

    def edge_degree(self, edge: Edge) -> Monomial:
        """The vertex multidegree of an edge: the product of its endpoints."""
        return Monomial.from_vars(self.endpoints(edge))

    def color(self, v: Vertex) -> int:
        """Bipartition side (0 holds v1).  Meaningful for bipartite specs only."""
        if v == V1:
            return 0
        if v == V2:
            return self.lengths[0] % 2
        return v.j % 2

    def path_vertices(self, k: int) -> tuple[Vertex, ...]:
        return tuple(U(k, j) for j in range(1, self.length(k)))

    def even_part(self) -> "MultiPathSpec | None":
        return _part(self, self.even_labels)

    def odd_part(self) -> "MultiPathSpec | None":
        return _part(self, self.odd_labels)


def _part(spec, labels):
    if len(labels) < 2:
        return None
    return sub_spec(spec, labels)


@dataclass(frozen=True)
class SimpleGraph:
    vertices: tuple
    adjacency: dict

    @property
    def edge_list(self) -> list[tuple]:
        seen = []
        for a in self.vertices:
            for b in sorted(self.adjacency[a]):
                if a < b:
                    seen.append((a, b))
        return seen

    def induced(self, keep: Iterable) -> "SimpleGraph":
        keep = set(keep)
        verts = tuple(v for v in self.vertices if v in keep)
        adj = {v: frozenset(self.adjacency[v] & keep) for v in verts}
        return SimpleGraph(verts, adj)

    def is_connected(self) -> bool:
        """Connectivity; the graph with no vertices counts as disconnected."""
        if not self.vertices:
            return False
        start = self.vertices[0]
        seen = {start}
        queue = deque([start])
        while queue:
            for w in self.adjacency[queue.popleft()]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == len(self.vertices)

    def two_coloring(self) -> dict | None:
        color = {}
        for s in self.vertices:
            if s in color:
                continue
            color[s] = 0
            queue = deque([s])
            while queue:
                a = queue.popleft()
                for b in self.adjacency[a]:
                    if b not in color:
                        color[b] = 1 - color[a]
                        queue.append(b)
                    elif color[b] == color[a]:
                        return None
        return color

    def is_bipartite(self) -> bool:
        return self.two_coloring() is not None


def build_graph(spec: MultiPathSpec) -> SimpleGraph:
    adj: dict = {v: set() for v in spec.vertices}
    for e in spec.edges:
        a, b = spec.endpoints(e)
        adj[a].add(b)
        adj[b].add(a)
    return SimpleGraph(spec.vertices, {v: frozenset(n) for v, n in adj.items()})


def theta(spec: MultiPathSpec) -> Monomial:
    """Product of the vertices of degree at least two."""
    g = build_graph(spec)
    return Monomial.from_vars(v for v in g.vertices if len(g.adjacency[v]) >= 2)


def big_d(spec: MultiPathSpec) -> Monomial:
    """Sum of all edge degree vectors; the exponent of a vertex is its degree."""
    out = Monomial()
    for e in spec.edges:
        out = out * spec.edge_degree(e)
    return out


def sub_spec(spec: MultiPathSpec, paths: Iterable[int]) -> MultiPathSpec:
    """Induced multi-path subgraph on ``v1``, ``v2`` and the chosen paths.

    ``paths`` are path labels of ``spec``; they are kept in the result.
    """
    chosen = sorted(set(paths))
    if len(chosen) < 2:
        raise SubsetTooSmall(f"need at least two paths, got {chosen}")
    unknown = set(chosen) - set(spec.labels)
    if unknown:
        raise InvalidSpec(f"unknown path labels {sorted(unknown)}")
    return MultiPathSpec(tuple(spec.length(k) for k in chosen), tuple(chosen))


def matching_number_bruteforce(g: SimpleGraph, cap: int | None = None) -> int:
    """Exact maximum matching size by branch and bound over edge subsets."""
    edges = g.edge_list
    cap = current_caps().edges if cap is None else cap
    if len(edges) > cap:
        raise TooLarge(f"{len(edges)} edges exceeds brute-force cap {cap}")
    best = 0

    def search(i: int, used: frozenset, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        free = len(g.vertices) - len(used)
        if size + min(len(edges) - i, free // 2) <= best:
            return
        for idx in range(i, len(edges)):
            a, b = edges[idx]
            if a not in used and b not in used:
                search(idx + 1, used | {a, b}, size + 1)

    search(0, frozenset(), 0)
    return best


def matching_number_formula(spec: MultiPathSpec) -> int | None:
    """Closed-form matching number, or ``None`` where no closed form is known.

    Even paths contribute ``L/2`` and odd ones ``(L-1)/2``; the hubs add the
    correction term.  Mixed graphs need at least two paths of each parity.
    """
    total = sum(spec.halves)
    if spec.kind == "even":
        return total - spec.t + 2
    if spec.kind == "odd":
        return total + 1
    if spec.n_even >= 2 and spec.n_odd >= 2:
        return total - spec.n_even + 2
    return None


def matching_number_hubs(spec: MultiPathSpec) -> int:
    """Exact matching number by choosing the partner of each hub.

    Once ``v1`` and ``v2`` are matched (or left alone) every path leaves a
    run of consecutive internal vertices, which contributes ``n // 2``.
    """
    choices = [None, *spec.labels]
    best = 0
    for a in choices:
        for b in choices:
            used = {k: 0 for k in spec.labels}
            if a is not None:
                used[a] += 1
            if b is not None:
                used[b] += 1
            if any(spec.length(k) - 1 < used[k] for k in spec.labels):
                continue
            size = (a is not None) + (b is not None)
            size += sum((spec.length(k) - 1 - used[k]) // 2 for k in spec.labels)
            best = max(best, size)
    return best


def matching_number(spec: MultiPathSpec) -> int:
    m = matching_number_formula(spec)
    return m if m is not None else matching_number_hubs(spec)


def sweep(halves_max: int, counts: Sequence[int], parity: str,
          total_max: int | None = None) -> list[MultiPathSpec]:
    """Nondecreasing specs of one parity with the given path counts.

    ``halves_max`` bounds each half-parameter and ``total_max`` their sum.
    """
    out = []
    for t in counts:
        for halves in combinations_with_replacement(range(1, halves_max + 1), t):
            if total_max is not None and sum(halves) > total_max:
                continue
            lengths = tuple(2 * h + (parity == "odd") for h in halves)
            out.append(MultiPathSpec(lengths))
    return out
