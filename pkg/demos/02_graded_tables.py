"""Graded Betti tables of pure even and pure odd graphs.

For a single parity the closed form is a subset count over the half-lengths
of the paths.  This script prints a few tables next to those counts.
"""
from __future__ import annotations

from edgering.cli import latex_table
from edgering.formulas import evaluate, even_graded_count, odd_graded_count
from edgering.graph import MultiPathSpec

for text in ("2,4,6", "2,2,2,2", "3,5,5", "3,3,3,3"):
    res = evaluate(MultiPathSpec.parse(text))
    spec = res.spec
    count = even_graded_count if spec.kind == "even" else odd_graded_count
    print(f"== {text} ({spec.kind}, halves {spec.halves})")
    for (i, j), beta in sorted(res.graded.items()):
        if i:
            print(f"  beta_{i},{j} = {beta}   subset count {count(spec.halves, i, j)}")
    print(f"  totals {res.totals}, reg {res.reg}")
    print(latex_table(res.graded))
    print()
