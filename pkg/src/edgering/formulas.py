"""Closed-form Betti numbers of edge rings of multi-path graphs.

Every nonzero multigraded Betti number equals 1 and sits at a top-support
element of some induced multi-path subgraph.  Throughout, ``p`` counts the
even paths of a spec and ``q`` the odd ones.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import DisjointnessViolated, FormulaMismatch, NotTopBetti, OverlapError
from .graph import V1, V2, MultiPathSpec, matching_number, sub_spec, theta
from .monomial import Monomial
from .resolution import BettiTable

_V1 = Monomial({V1: 1})
_V2 = Monomial({V2: 1})


def pdim_formula(spec: MultiPathSpec) -> int:
    p, q = spec.n_even, spec.n_odd
    return p + q - 2 if p and q else p + q - 1


def is_top_betti(spec: MultiPathSpec) -> bool:
    return spec.n_even != 1 and spec.n_odd != 1


def top_support(spec: MultiPathSpec) -> set[Monomial]:
    if not is_top_betti(spec):
        raise NotTopBetti(f"{spec} has a lone path of one parity")
    p, q = spec.n_even, spec.n_odd
    th = theta(spec)
    if q == 0:
        return {th * _V1 ** a * _V2 ** (p - 2 - a) for a in range(p - 1)}
    if p == 0:
        return {th * (_V1 * _V2) ** b for b in range(q - 1)}
    return {th * _V1 ** (s + t + 1) * _V2 ** (p + s - t - 1)
            for s in range(q - 1) for t in range(p - 1)}


def top_betti_subgraphs(spec: MultiPathSpec, i: int) -> list[tuple[int, ...]]:
    """Path subsets whose induced subgraph is top-Betti with pdim ``i``."""
    out = []
    for r in range(2, spec.t + 1):
        for paths in combinations(spec.labels, r):
            h = sub_spec(spec, paths)
            if is_top_betti(h) and pdim_formula(h) == i:
                out.append(paths)
    return out


def n_i(spec: MultiPathSpec, i: int) -> set[Monomial]:
    """Union of the top supports of the top-Betti subgraphs with pdim ``i``."""
    out: set[Monomial] = set()
    for paths in top_betti_subgraphs(spec, i):
        h = sub_spec(spec, paths)
        part = top_support(h)
        if out & part:
            raise DisjointnessViolated(f"top supports overlap at paths {paths}")
        out |= part
    return out


def multigraded_betti(spec: MultiPathSpec) -> BettiTable:
    table = BettiTable.trivial(scale=2)
    for i in range(1, pdim_formula(spec) + 1):
        for alpha in n_i(spec, i):
            table.add(i, alpha)
    return table


def even_graded_count(halves, i: int, j: int) -> int:
    """``i`` times the number of ``(i+1)``-subsets of paths with half-sum ``j``."""
    return i * sum(1 for c in combinations(halves, i + 1) if sum(c) == j)


def odd_graded_count(halves, i: int, j: int) -> int:
    """Number of pairs (``(i+1)``-subset, ``r`` in 1..i) with half-sum + r = ``j``."""
    return sum(1 for c in combinations(halves, i + 1) for r in range(1, i + 1)
               if sum(c) + r == j)


def graded_betti(spec: MultiPathSpec) -> dict[tuple[int, int], int]:
    graded = multigraded_betti(spec).graded()
    if spec.kind != "mixed":
        count = even_graded_count if spec.kind == "even" else odd_graded_count
        halves = spec.halves
        for i in range(1, pdim_formula(spec) + 1):
            top_j = sum(sorted(halves)[-(i + 1):]) + i
            seen = {j for (k, j) in graded if k == i}
            for j in sorted(seen | set(range(1, top_j + 1))):
                if graded.get((i, j), 0) != count(halves, i, j):
                    raise FormulaMismatch(
                        f"beta_{i},{j}: table {graded.get((i, j), 0)} vs "
                        f"counting formula {count(halves, i, j)} for {spec}")
    return graded


def mixed_total(p: int, q: int, i: int) -> int:
    mixed = sum(comb(p, j) * comb(q, i + 2 - j) * (j - 1) * (i + 1 - j)
                for j in range(2, i + 1))
    return mixed + i * (comb(p, i + 1) + comb(q, i + 1))


def total_betti(spec: MultiPathSpec, i: int) -> int:
    if i == 0:
        return 1
    total = len(n_i(spec, i))
    p, q = spec.n_even, spec.n_odd
    if spec.kind == "even":
        expected = i * comb(p, i + 1)
    elif spec.kind == "odd":
        expected = i * comb(q, i + 1)
    elif p >= 2 and q >= 2:
        expected = mixed_total(p, q, i)
    else:
        expected = total
    if total != expected:
        raise FormulaMismatch(f"beta_{i}({spec}) = {total}, closed form {expected}")
    return total


def tensor_convolve(a: BettiTable, b: BettiTable) -> BettiTable:
    """Betti table of a tensor product over the base field.

    The two gradings may only share the hub vertices ``v1`` and ``v2``.
    """
    def inner(t):
        return {v for (_, alpha) in t.entries for v in alpha if not v.is_hub}

    overlap = inner(a) & inner(b)
    if overlap:
        raise OverlapError(f"tables share vertices {sorted(map(str, overlap))}")
    out = BettiTable(scale=a.scale)
    for (i, x), u in a.entries.items():
        for (k, y), w in b.entries.items():
            out.add(i + k, x * y, u * w)
    return out


def regularity_formula(spec: MultiPathSpec) -> int:
    """``mat - 1`` of the graph, or of its dominant part when the other parity
    has a single path.  Zero when the toric ideal vanishes."""
    p, q = spec.n_even, spec.n_odd
    if p <= 1 and q <= 1:
        return 0
    if spec.kind != "mixed" or (p >= 2 and q >= 2):
        return matching_number(spec) - 1
    dominant = spec.even_part() if p >= 2 else spec.odd_part()
    return matching_number(dominant) - 1


@dataclass
class BettiFormulaResult:
    spec: MultiPathSpec
    pdim: int
    reg: int
    mat: int
    multigraded: BettiTable
    graded: dict
    totals: list

    def check(self) -> None:
        rows = defaultdict(int)
        for (i, _), v in self.graded.items():
            rows[i] += v
        if [rows[i] for i in range(len(self.totals))] != self.totals:
            raise FormulaMismatch("graded table does not sum to the totals")
        if self.multigraded.graded() != self.graded:
            raise FormulaMismatch("multigraded table does not aggregate to the graded one")


def evaluate(spec: MultiPathSpec) -> BettiFormulaResult:
    pd = pdim_formula(spec)
    res = BettiFormulaResult(
        spec=spec,
        pdim=pd,
        reg=regularity_formula(spec),
        mat=matching_number(spec),
        multigraded=multigraded_betti(spec),
        graded=graded_betti(spec),
        totals=[total_betti(spec, i) for i in range(pd + 1)],
    )
    res.check()
    return res
