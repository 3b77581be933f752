"""Edge cones of bipartite multi-path graphs and the canonical module.

The edge cone is spanned by the vectors ``v_e = x_a + x_b`` of the edges
``e = {a, b}``.  For a connected bipartite graph with sides ``V_1, V_2`` it
lies in the hyperplane ``sum(V_1) = sum(V_2)`` and is cut out by
``x_i >= 0`` for the vertices ``i`` whose removal keeps the graph connected,
and by ``sum(T) <= sum(N(T))`` for the independent sets ``T`` strictly inside
``V_1`` with both ``T + N(T)`` and its complement inducing connected graphs.
"""
from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
import random
from itertools import combinations, product

from .caps import current_caps
from .errors import NotBipartite, NotEvenType, TooLarge, VerificationFailed
from .graph import V1, V2, U, MultiPathSpec, Vertex, big_d, build_graph, theta
from .monomial import Monomial

RELATIONS = ("eq", "geq", "gt", "leq", "lt")


def _vec(vertices: Iterable[Vertex], sign: int = 1) -> dict:
    out: dict = {}
    for v in vertices:
        out[v] = out.get(v, 0) + sign
    return out


def _combine(pos: Mapping, neg: Mapping) -> tuple:
    out = dict(pos)
    for v, c in neg.items():
        out[v] = out.get(v, 0) - c
    return tuple(sorted((v, c) for v, c in out.items() if c))


@dataclass(frozen=True)
class LinearInequality:
    """``sum(coeffs[v] * x_v)  relation  0`` with integer coefficients."""

    coeffs: tuple
    relation: str = "geq"
    origin: str = ""
    text: str = field(default="", compare=False)

    def __post_init__(self):
        if self.relation not in RELATIONS:
            raise ValueError(f"unknown relation {self.relation!r}")

    @classmethod
    def compare(cls, small: Iterable[Vertex], big: Iterable[Vertex],
                origin: str = "", relation: str = "leq") -> "LinearInequality":
        """``sum(small) <= sum(big)``, stored as ``sum(big) - sum(small) >= 0``."""
        small, big = list(small), list(big)
        text = f"sum({','.join(map(str, small))}) <= sum({','.join(map(str, big))})"
        flipped = {"leq": "geq", "lt": "gt", "eq": "eq"}[relation]
        if relation == "eq":
            text = text.replace("<=", "=")
        return cls(_combine(_vec(big), _vec(small)), flipped, origin, text)

    @classmethod
    def nonneg(cls, v: Vertex) -> "LinearInequality":
        return cls(((v, 1),), "geq", f"i={v}", f"x({v}) >= 0")

    def value(self, alpha: Mapping) -> int:
        return sum(c * alpha.get(v, 0) for v, c in self.coeffs)

    def holds(self, alpha: Mapping, strict: bool = False) -> bool:
        x = self.value(alpha)
        rel = self.relation
        if strict:
            rel = {"geq": "gt", "leq": "lt"}.get(rel, rel)
        return {"eq": x == 0, "geq": x >= 0, "gt": x > 0, "leq": x <= 0, "lt": x < 0}[rel]

    def __str__(self) -> str:
        return self.text or " + ".join(f"{c}*x({v})" for v, c in self.coeffs) + f" {self.relation} 0"


@dataclass
class ConeDescription:
    affine: LinearInequality
    inequalities: list

    def contains(self, alpha: Mapping) -> bool:
        return self.affine.holds(alpha) and all(h.holds(alpha) for h in self.inequalities)

    def in_relint(self, alpha: Mapping) -> bool:
        return self.affine.holds(alpha) and all(h.holds(alpha, strict=True)
                                                for h in self.inequalities)


def sides(spec: MultiPathSpec) -> tuple[list[Vertex], list[Vertex]]:
    """``(V_1, V_2)``: ``V_1`` is the side away from ``v1``."""
    if not spec.is_bipartite:
        raise NotBipartite(f"{spec} is of mixed type")
    v1 = [v for v in spec.vertices if spec.color(v) == 1]
    v2 = [v for v in spec.vertices if spec.color(v) == 0]
    return v1, v2


def _affine(spec: MultiPathSpec) -> LinearInequality:
    side1, side2 = sides(spec)
    return LinearInequality.compare(side1, side2, "affine", relation="eq")


def _edge_vectors(spec: MultiPathSpec) -> list[Monomial]:
    return [spec.edge_degree(e) for e in spec.edges]


def _dedup(spec: MultiPathSpec, candidates: list) -> list:
    """Drop inequalities whose tight edge set repeats an earlier one."""
    edges = _edge_vectors(spec)
    seen = set()
    out = []
    for h in candidates:
        tight = frozenset(n for n, ve in enumerate(edges) if h.value(ve) == 0)
        if tight not in seen:
            seen.add(tight)
            out.append(h)
    return out


def facet_description(spec: MultiPathSpec, dedup: bool = True) -> ConeDescription:
    side1, _ = sides(spec)
    cap = current_caps().facets
    if len(side1) > cap:
        raise TooLarge(f"|V_1| = {len(side1)} exceeds facet enumeration cap {cap}")
    g = build_graph(spec)
    everything = set(g.vertices)
    candidates = [LinearInequality.nonneg(v) for v in g.vertices
                  if g.induced(everything - {v}).is_connected()]
    for r in range(1, len(side1)):
        for t in combinations(side1, r):
            nbrs = set().union(*(g.adjacency[v] for v in t))
            closed = set(t) | nbrs
            if g.induced(closed).is_connected() and g.induced(everything - closed).is_connected():
                candidates.append(LinearInequality.compare(
                    t, sorted(nbrs), "T={" + ",".join(map(str, t)) + "}"))
    if dedup:
        candidates = _dedup(spec, candidates)
    return ConeDescription(_affine(spec), candidates)


def even_type_inequalities(spec: MultiPathSpec) -> ConeDescription:
    """The explicit inequality families for an even-type graph.

    Coordinates: ``a[k, j]`` on ``u{k}_{j}``, ``b1`` on ``v1``, ``b2`` on ``v2``;
    path ``k`` has half-length ``h[k]`` and internal positions ``1..2h[k]-1``.
    """
    if spec.kind != "even":
        raise NotEvenType(f"{spec} is not of even type")
    labels = spec.labels
    h = {k: spec.length(k) // 2 for k in labels}

    def odd(k, lo, hi):  # u_{k,2i-1} for i in lo..hi
        return [U(k, 2 * i - 1) for i in range(lo, hi + 1)]

    def even(k, lo, hi):  # u_{k,2i} for i in lo..hi
        return [U(k, 2 * i) for i in range(lo, hi + 1)]

    def geq(big, small, origin):
        return LinearInequality.compare(small, big, origin)

    out = []
    for v in spec.vertices:  # (2), (3)
        out.append(LinearInequality.nonneg(v))
    for r in range(1, len(labels) + 1):
        for ps in combinations(labels, r):
            for ks in product(*(range(1, h[p]) for p in ps)):  # (4)
                big = [V1] + [v for p, k in zip(ps, ks) for v in even(p, 1, k)]
                small = [v for p, k in zip(ps, ks) for v in odd(p, 1, k)]
                out.append(geq(big, small, f"(4) P={ps} k={ks}"))
            for ks in product(*(range(2, h[p] + 1) for p in ps)):  # (5)
                big = [V2] + [v for p, k in zip(ps, ks) for v in even(p, k - 1, h[p] - 1)]
                small = [v for p, k in zip(ps, ks) for v in odd(p, k, h[p])]
                out.append(geq(big, small, f"(5) P={ps} k={ks}"))
    for p in labels:
        rest_big = [V1, V2] + [v for j in labels if j != p for v in even(j, 1, h[j] - 1)]
        rest_small = [v for j in labels if j != p for v in odd(j, 1, h[j])]
        out.append(geq(rest_big, rest_small, f"(6) p={p}"))
        for f in range(1, h[p]):  # (7)
            out.append(geq(rest_big + even(p, 1, f), rest_small + odd(p, 1, f),
                           f"(7) p={p} f={f}"))
        for k in range(2, h[p] + 1):  # (8): a_{p,2i-2} for i = k..h
            out.append(geq(rest_big + even(p, k - 1, h[p] - 1), rest_small + odd(p, k, h[p]),
                           f"(8) p={p} k={k}"))
        for f in range(1, h[p]):  # (9): 1 <= f < k-1 <= h-1
            for k in range(f + 2, h[p] + 1):
                out.append(geq(rest_big + even(p, 1, f) + even(p, k - 1, h[p] - 1),
                               rest_small + odd(p, 1, f) + odd(p, k, h[p]),
                               f"(9) p={p} f={f} k={k}"))
    for j in labels:  # (10): 2 <= f <= k <= h-1
        for f in range(2, h[j]):
            for k in range(f, h[j]):
                out.append(geq(even(j, f - 1, k), odd(j, f, k), f"(10) j={j} f={f} k={k}"))
    return ConeDescription(_affine(spec), out)


def in_relint(alpha: Mapping, cone: ConeDescription) -> bool:
    return cone.in_relint(alpha)


def _minus_edge(alpha: Mapping, ve: Monomial) -> dict:
    out = dict(alpha)
    for v, c in ve.items():
        out[v] = out.get(v, 0) - c
    return out


def is_minimal_interior(alpha: Mapping, cone: ConeDescription, spec: MultiPathSpec) -> bool:
    """No single edge can be removed while staying in the relative interior."""
    return all(not cone.in_relint(_minus_edge(alpha, ve)) for ve in _edge_vectors(spec))


def canonical_generators(spec: MultiPathSpec, oracle_top: Iterable[Monomial],
                         cone: ConeDescription | None = None) -> set[Monomial]:
    """``D_G - alpha`` for each top multidegree, each one checked to be a
    minimal lattice point of the relative interior of the edge cone."""
    cone = cone or facet_description(spec)
    d = big_d(spec)
    out = set()
    for alpha in oracle_top:
        if not alpha.divides(d):
            raise VerificationFailed(f"{alpha} does not divide D_G = {d}", alpha)
        gen = d / alpha
        if not cone.in_relint(gen):
            raise VerificationFailed(f"{gen} is not in the relative interior", gen)
        if not is_minimal_interior(gen, cone, spec):
            raise VerificationFailed(f"{gen} is not a minimal interior point", gen)
        out.add(gen)
    return out


def canonical_closed_form(spec: MultiPathSpec) -> set[Monomial]:
    """Closed-form minimal generators of the canonical module (pure types)."""
    th = theta(spec)
    v1, v2 = Monomial({V1: 1}), Monomial({V2: 1})
    if spec.kind == "even":
        m = spec.t
        return {th * v1 ** a * v2 ** (m - 2 - a) for a in range(m - 1)}
    if spec.kind == "odd":
        return {th * (v1 * v2) ** b for b in range(spec.t - 1)}
    raise NotBipartite(f"{spec} is of mixed type")


def sample_lattice_points(spec: MultiPathSpec, n: int, seed: int = 0) -> list[dict]:
    """``n`` random lattice points of total degree at most ``deg(D_G)``.

    Roughly a third are sums of edge vectors nudged by one unit (so they sit
    on or next to the cone), a third are uniform points rebalanced onto the
    affine hull, and the rest are uniform.
    """
    side1, side2 = sides(spec)
    verts = list(spec.vertices)
    edges = _edge_vectors(spec)
    top = big_d(spec).degree
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        alpha = dict.fromkeys(verts, 0)
        mode = rng.randrange(3)
        if mode == 0:
            for _ in range(rng.randint(0, top // 2)):
                for v, c in rng.choice(edges).items():
                    alpha[v] += c
            for _ in range(rng.randint(0, 2)):
                v = rng.choice(verts)
                alpha[v] = max(0, alpha[v] + rng.choice((-1, 1)))
        else:
            for _ in range(rng.randint(0, top)):
                alpha[rng.choice(verts)] += 1
            if mode == 1:
                gap = sum(alpha[v] for v in side1) - sum(alpha[v] for v in side2)
                for _ in range(abs(gap)):
                    alpha[rng.choice(side2 if gap > 0 else side1)] += 1
        if sum(alpha.values()) <= top:
            out.append(alpha)
    return out
