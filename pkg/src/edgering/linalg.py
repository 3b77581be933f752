"""Exact rank of integer matrices by fraction-free elimination."""
from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from functools import reduce
from math import gcd


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = reduce(gcd, row.values(), 0)
    if g > 1:
        return {c: v // g for c, v in row.items()}
    return row


def sparse_rank(rows: Iterable[Mapping[int, int]]) -> int:
    """Rank over the rationals of a matrix given as sparse rows ``{col: value}``.

    Eliminates with integer row combinations ``p*r - r[c]*pivot`` and divides
    every row by its content, so entries stay integral and small.
    """
    pending = [_primitive({c: v for c, v in r.items() if v}) for r in rows]
    pending = [r for r in pending if r]
    rank = 0
    while pending:
        # Sparsest row as pivot keeps fill-in down.
        pending.sort(key=len)
        pivot = pending.pop(0)
        col = min(pivot)
        p = pivot[col]
        rank += 1
        nxt = []
        for r in pending:
            a = r.get(col)
            if a is None:
                nxt.append(r)
                continue
            new = {c: p * v for c, v in r.items()}
            for c, v in pivot.items():
                new[c] = new.get(c, 0) - a * v
            new = {c: v for c, v in new.items() if v}
            if new:
                nxt.append(_primitive(new))
        pending = nxt
    return rank


def rank(matrix: Sequence[Sequence[int]]) -> int:
    """Rank of a dense integer matrix."""
    return sparse_rank({j: v for j, v in enumerate(row) if v} for row in matrix)
