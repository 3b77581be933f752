"""Toric ideals of multi-path graphs and their square-free initial ideals.

Two paths of the same parity close up into an even cycle, and these cycles
are the only primitive even closed walks of a multi-path graph.  Their
binomials form a universal Groebner basis, so an initial ideal is read off
by picking the leading term of each binomial.
"""
from __future__ import annotations

import random
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from math import factorial

from .caps import current_caps
from .errors import InvalidSpec, TooLarge
from .graph import Edge, MultiPathSpec, parse_edge
from .monomial import Monomial
from .resolution import MonomialIdeal

KINDS = ("lex", "grlex", "grevlex")


@dataclass(frozen=True)
class PrimitiveBinomial:
    plus: Monomial
    minus: Monomial
    walk: tuple[int, int] = (0, 0)
    squarefree_pair: bool = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "squarefree_pair",
                           _one_variable_decides(self.plus, self.minus))

    def __str__(self) -> str:
        return f"{self.plus} - {self.minus}"


def walk_binomial(spec: MultiPathSpec, a: int, b: int) -> PrimitiveBinomial:
    """Binomial of the cycle running along path ``a`` from v1 to v2 and back
    along path ``b``; edges at odd positions of the walk form ``plus``."""
    walk = [Edge(a, j) for j in range(1, spec.length(a) + 1)]
    walk += [Edge(b, j) for j in range(spec.length(b), 0, -1)]
    if len(walk) % 2:
        raise InvalidSpec(f"paths {a} and {b} have different parity")
    plus = Monomial.from_vars(walk[0::2])
    minus = Monomial.from_vars(walk[1::2])
    return PrimitiveBinomial(plus, minus, (a, b))


def primitive_walks(spec: MultiPathSpec) -> list[PrimitiveBinomial]:
    out = []
    for labels in (spec.even_labels, spec.odd_labels):
        for a, b in combinations(labels, 2):
            out.append(walk_binomial(spec, a, b))
    return sorted(out, key=lambda f: f.walk)


def mdeg(spec: MultiPathSpec, em: Monomial) -> Monomial:
    """Vertex multidegree of an edge monomial."""
    out = Monomial()
    for e, n in em.items():
        out = out * spec.edge_degree(e) ** n
    return out


def degree_map(spec: MultiPathSpec) -> Callable[[Monomial], Monomial]:
    cache: dict = {}

    def push(em: Monomial) -> Monomial:
        if em not in cache:
            cache[em] = mdeg(spec, em)
        return cache[em]

    return push


@dataclass(frozen=True)
class MonomialOrder:
    """A lex / grlex / grevlex order; ``perm`` lists the variables from the
    largest to the smallest."""

    kind: str
    perm: tuple

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidSpec(f"unknown order kind {self.kind!r}")
        if len(set(self.perm)) != len(self.perm):
            raise InvalidSpec("order permutation repeats a variable")
        object.__setattr__(self, "_rank", {v: i for i, v in enumerate(self.perm)})

    @classmethod
    def natural(cls, spec: MultiPathSpec, kind: str = "lex") -> "MonomialOrder":
        return cls(kind, spec.edges)

    @classmethod
    def parse(cls, text: str, spec: MultiPathSpec) -> "MonomialOrder":
        """``kind:natural`` or ``kind:e1_2,e1_1,...`` (all edges, once each)."""
        kind, _, perm = text.partition(":")
        perm = perm.strip() or "natural"
        if perm == "natural":
            return cls.natural(spec, kind.strip())
        edges = tuple(parse_edge(s) for s in perm.split(","))
        if sorted(edges) != list(spec.edges):
            raise InvalidSpec("order must list every edge variable exactly once")
        return cls(kind.strip(), edges)

    def describe(self) -> str:
        return f"{self.kind}:" + ",".join(map(str, self.perm))

    def key(self, mono: Monomial) -> tuple:
        """Sort key: the larger monomial gets the larger key."""
        rank = self._rank
        vec = [0] * len(self.perm)
        for v, e in mono.items():
            vec[rank[v]] = e
        if self.kind == "lex":
            return tuple(vec)
        if self.kind == "grlex":
            return (mono.degree, *vec)
        return (mono.degree, *(-x for x in reversed(vec)))

    def greater(self, a: Monomial, b: Monomial) -> bool:
        return self.key(a) > self.key(b)


def _one_variable_decides(plus: Monomial, minus: Monomial) -> bool:
    return (plus.is_squarefree and minus.is_squarefree and len(plus) == len(minus)
            and not any(v in minus for v in plus))


def leading_term(b: PrimitiveBinomial, order: MonomialOrder) -> Monomial:
    plus, minus = b.plus, b.minus
    if b.squarefree_pair:
        # squarefree, disjoint, same degree: one variable decides
        rank = order._rank
        both = (*plus, *minus)
        if order.kind == "grevlex":
            return minus if max(both, key=rank.__getitem__) in plus else plus
        return plus if min(both, key=rank.__getitem__) in plus else minus
    return plus if order.greater(plus, minus) else minus


def initial_ideal(spec: MultiPathSpec, order: MonomialOrder,
                  binomials: Iterable[PrimitiveBinomial] | None = None) -> MonomialIdeal:
    if binomials is None:
        binomials = primitive_walks(spec)
    leads = [leading_term(b, order) for b in binomials]
    return MonomialIdeal(spec.edges, leads)


def _block_orders(spec: MultiPathSpec, kinds) -> list[MonomialOrder]:
    blocks = {k: [Edge(k, j) for j in range(1, spec.length(k) + 1)] for k in spec.labels}
    out = []
    for kind in kinds:
        for path_order in permutations(spec.labels):
            for flips in product((False, True), repeat=spec.t):
                perm = []
                for k, flip in zip(path_order, flips):
                    perm.extend(reversed(blocks[k]) if flip else blocks[k])
                out.append(MonomialOrder(kind, tuple(perm)))
    return out


def order_family(spec: MultiPathSpec, mode: str = "blocks", n: int = 0,
                 seed: int = 0, kinds: Iterable[str] | None = None) -> list[MonomialOrder]:
    """Deterministic families of monomial orders.

    ``exhaustive``: every permutation of the edges (lex and grevlex; grlex
    coincides with lex on these degree-homogeneous binomials).
    ``blocks``: path blocks permuted and each optionally reversed, all kinds.
    ``sampled``: the natural lex and grevlex orders plus ``n`` random ones.
    """
    edges = spec.edges
    if mode == "exhaustive":
        kinds = tuple(kinds or ("lex", "grevlex"))
        cap = current_caps().perms
        if len(edges) > cap:
            raise TooLarge(f"{len(edges)}! permutations exceed the exhaustive cap ({cap} edges)")
        return [MonomialOrder(kind, perm) for kind in kinds for perm in permutations(edges)]
    if mode == "blocks":
        return _block_orders(spec, tuple(kinds or KINDS))
    if mode == "sampled":
        kinds = tuple(kinds or KINDS)
        rng = random.Random(seed)
        out = [MonomialOrder.natural(spec, "lex"), MonomialOrder.natural(spec, "grevlex")]
        for _ in range(n):
            perm = list(edges)
            rng.shuffle(perm)
            out.append(MonomialOrder(rng.choice(kinds), tuple(perm)))
        return out
    raise InvalidSpec(f"unknown order family mode {mode!r}")


def family_size(spec: MultiPathSpec, mode: str, n: int = 0) -> int:
    if mode == "exhaustive":
        return 2 * factorial(len(spec.edges))
    if mode == "blocks":
        return len(KINDS) * factorial(spec.t) * 2 ** spec.t
    return n + 2
