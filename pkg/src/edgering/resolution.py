"""Brute-force Betti numbers of monomial quotients.

For a monomial ideal ``I`` and a multidegree ``a`` the upper Koszul complex
``K^a(I)`` has the faces ``F`` (square-free, inside ``supp(a)``) with
``x^(a-F)`` in ``I``, and

    beta_{i,a}(R/I) = dim H~_{i-2}(K^a(I); Q)     for i >= 1.

Only multidegrees in the lcm lattice of ``I`` can carry Betti numbers.
Everything is exact: homology ranks come from integer elimination.
"""
from __future__ import annotations

from collections import defaultdict
from collections.abc import Callable
from dataclasses import dataclass, field
from itertools import combinations

from .caps import Caps, current_caps
from .errors import EmptyTable, TooLarge
from .linalg import sparse_rank
from .monomial import ONE, Monomial


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by its minimal generators.

    Non-minimal input generators are pruned by divisibility.
    """

    variables: tuple
    generators: tuple = ()

    def __post_init__(self):
        gens = sorted(set(self.generators), key=lambda g: (g.degree, g))
        minimal = [g for g in gens
                   if not any(h != g and h.divides(g) for h in gens)]
        object.__setattr__(self, "generators", tuple(sorted(minimal)))
        object.__setattr__(self, "variables", tuple(self.variables))

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_squarefree(self) -> bool:
        return all(g.is_squarefree for g in self.generators)

    def contains(self, mono: Monomial) -> bool:
        return any(g.divides(mono) for g in self.generators)

    def __str__(self) -> str:
        return "(" + ", ".join(map(str, self.generators)) + ")" if self.generators else "(0)"


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex given by its facets.  ``facets == ()`` is the void complex;
    ``facets == (frozenset(),)`` is the complex whose only face is empty."""

    ground: frozenset
    facets: tuple

    def __post_init__(self):
        fs = {frozenset(f) for f in self.facets}
        maximal = [f for f in fs if not any(f < g for g in fs)]
        object.__setattr__(self, "facets",
                           tuple(sorted(maximal, key=lambda f: (len(f), sorted(f)))))
        object.__setattr__(self, "ground", frozenset(self.ground))

    def faces(self) -> set[frozenset]:
        out: set[frozenset] = set()
        for f in self.facets:
            items = sorted(f)
            for r in range(len(items) + 1):
                out.update(frozenset(c) for c in combinations(items, r))
        return out

    @property
    def dimension(self) -> int:
        return max((len(f) - 1 for f in self.facets), default=-2)


@dataclass
class BettiTable:
    """Sparse table ``(i, multidegree) -> beta``.

    ``scale`` converts a multidegree's total degree into the standard degree
    ``j``: 1 when grading by edge variables, 2 when grading by vertices
    (an edge has vertex degree 2).
    """

    entries: dict = field(default_factory=dict)
    scale: int = 1

    def __post_init__(self):
        self.entries = {k: v for k, v in self.entries.items() if v}

    @classmethod
    def trivial(cls, scale: int = 1) -> "BettiTable":
        return cls({(0, ONE): 1}, scale)

    def __getitem__(self, key) -> int:
        return self.entries.get(key, 0)

    def add(self, i: int, alpha: Monomial, n: int = 1) -> None:
        key = (i, alpha)
        value = self.entries.get(key, 0) + n
        if value:
            self.entries[key] = value
        else:
            self.entries.pop(key, None)

    def items(self) -> list[tuple[tuple[int, Monomial], int]]:
        return sorted(self.entries.items(), key=lambda kv: (kv[0][0], kv[0][1].degree, kv[0][1]))

    def __eq__(self, other) -> bool:
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.entries == other.entries

    def row(self, i: int) -> dict[Monomial, int]:
        return {a: v for (k, a), v in self.entries.items() if k == i}

    def support(self, i: int) -> set[Monomial]:
        return set(self.row(i))

    def std_degree(self, alpha: Monomial) -> int:
        d, r = divmod(alpha.degree, self.scale)
        if r:
            raise ValueError(f"{alpha} has no integral standard degree")
        return d

    def graded(self) -> dict[tuple[int, int], int]:
        out: dict = defaultdict(int)
        for (i, a), v in self.entries.items():
            out[i, self.std_degree(a)] += v
        return dict(sorted(out.items()))

    def totals(self) -> list[int]:
        if not self.entries:
            return []
        out = [0] * (max(i for i, _ in self.entries) + 1)
        for (i, _), v in self.entries.items():
            out[i] += v
        return out

    def regrade(self, push: Callable[[Monomial], Monomial], scale: int) -> "BettiTable":
        """Push the grading forward along ``push``; colliding entries add."""
        out = BettiTable(scale=scale)
        for (i, a), v in self.entries.items():
            out.add(i, push(a), v)
        return out

    def dominated_by(self, other: "BettiTable") -> bool:
        return all(other[k] >= v for k, v in self.entries.items())

    def difference(self, other: "BettiTable") -> dict:
        keys = set(self.entries) | set(other.entries)
        return {k: self[k] - other[k] for k in keys if self[k] != other[k]}


def lcm_lattice(ideal: MonomialIdeal, cap: int | None = None) -> set[Monomial]:
    """All lcms of nonempty sets of generators."""
    cap = current_caps().lattice if cap is None else cap
    gens = ideal.generators
    lattice = set(gens)
    frontier = list(gens)
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = x.lcm(g)
                if y not in lattice:
                    lattice.add(y)
                    new.append(y)
                    if len(lattice) > cap:
                        raise TooLarge(f"lcm lattice exceeds {cap} elements")
        frontier = new
    return lattice


def upper_koszul(ideal: MonomialIdeal, alpha: Monomial) -> SimplicialComplex:
    """``K^alpha(I)``: faces ``F`` in ``supp(alpha)`` with ``alpha - F`` in ``I``."""
    facets = []
    for g in ideal.generators:
        if g.divides(alpha):
            facets.append(frozenset(x for x, e in alpha.items() if e > g[x]))
    return SimplicialComplex(alpha.support, tuple(facets))


def reduced_homology_ranks(cx: SimplicialComplex, cap: int | None = None) -> list[int]:
    """Ranks of reduced homology over Q in dimensions -1, 0, 1, ...

    Straight from the boundary matrices of the full face list.
    """
    cap = current_caps().ground if cap is None else cap
    used = frozenset().union(*cx.facets) if cx.facets else frozenset()
    if len(used) > cap:
        raise TooLarge(f"complex on {len(used)} vertices exceeds cap {cap}")
    if not cx.facets:
        return [0]
    by_dim: dict[int, list] = defaultdict(list)
    for f in cx.faces():
        by_dim[len(f) - 1].append(tuple(sorted(f)))
    top = max(by_dim)
    index = {d: {f: n for n, f in enumerate(sorted(fs))} for d, fs in by_dim.items()}
    ranks_bd = {}
    for d in range(0, top + 1):
        rows = []
        for f in index[d]:
            row = {}
            for pos in range(len(f)):
                row[index[d - 1][f[:pos] + f[pos + 1:]]] = -1 if pos % 2 else 1
            rows.append(row)
        ranks_bd[d] = sparse_rank(rows)
    out = []
    for d in range(-1, top + 1):
        n = len(index[d])
        out.append(n - ranks_bd.get(d, 0) - ranks_bd.get(d + 1, 0))
    return out


def nerve(cx: SimplicialComplex, cap: int | None = None) -> SimplicialComplex:
    """Nerve of the cover of ``cx`` by its facets.

    Facets are simplices, so every nonempty intersection is contractible and
    the nerve is homotopy equivalent to ``cx`` (for ``cx`` with a vertex).
    """
    cap = current_caps().ground if cap is None else cap
    facets = cx.facets
    if len(facets) > cap:
        raise TooLarge(f"nerve on {len(facets)} facets exceeds cap {cap}")
    maximal: list[frozenset] = []

    def grow(chosen: list[int], common: frozenset, start: int) -> None:
        extended = False
        for i in range(start, len(facets)):
            meet = common & facets[i]
            if meet:
                extended = True
                grow(chosen + [i], meet, i + 1)
        if not extended:
            # Could still be extendable by an earlier index; the complex prunes it.
            maximal.append(frozenset(chosen))

    for i, f in enumerate(facets):
        grow([i], f, i + 1)
    return SimplicialComplex(frozenset(range(len(facets))), tuple(maximal))


def koszul_homology(cx: SimplicialComplex, cap: int | None = None) -> list[int]:
    """Same ranks as :func:`reduced_homology_ranks`, computed on the nerve."""
    if not cx.facets:
        return [0]
    if cx.facets == (frozenset(),):
        return [1]
    return reduced_homology_ranks(nerve(cx, cap), cap)


def betti_table_monomial(ideal: MonomialIdeal,
                         degree_map: Callable[[Monomial], Monomial] | None = None,
                         scale: int = 2, caps: Caps | None = None) -> BettiTable:
    """Multigraded Betti numbers of ``R/I`` for a monomial ideal ``I``.

    With ``degree_map`` the table is pushed forward to the target grading
    (``scale`` then gives the standard degree of a target variable; 2 for
    vertex multidegrees of edge monomials).
    """
    caps = caps or current_caps()
    table = BettiTable.trivial(scale=1)
    for alpha in sorted(lcm_lattice(ideal, caps.lattice)):
        ranks = koszul_homology(upper_koszul(ideal, alpha), caps.ground)
        for d, r in enumerate(ranks, start=-1):
            if r:
                table.add(d + 2, alpha, r)
    if degree_map is not None:
        return table.regrade(degree_map, scale)
    return table


def pdim_of(table: BettiTable) -> int:
    if not table.entries:
        raise EmptyTable("empty Betti table")
    return max(i for i, _ in table.entries)


def reg_of(table: BettiTable) -> int:
    if not table.entries:
        raise EmptyTable("empty Betti table")
    return max(j - i for i, j in table.graded())


def taylor_alternating_sums(ideal: MonomialIdeal) -> dict[Monomial, int]:
    """``sum over generator subsets S with lcm(S) = a of (-1)^|S|``.

    These are the coefficients of the numerator of the multigraded Hilbert
    series of ``R/I`` (inclusion-exclusion), hence equal to
    ``sum_i (-1)^i beta_{i,a}(R/I)``.
    """
    out: dict = defaultdict(int)
    gens = ideal.generators
    for r in range(len(gens) + 1):
        for subset in combinations(gens, r):
            a = ONE
            for g in subset:
                a = a.lcm(g)
            out[a] += (-1) ** r
    return {a: v for a, v in out.items() if v}


def euler_characteristics(table: BettiTable) -> dict[Monomial, int]:
    out: dict = defaultdict(int)
    for (i, a), v in table.entries.items():
        out[a] += (-1) ** i * v
    return {a: v for a, v in out.items() if v}
