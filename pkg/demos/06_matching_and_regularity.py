"""Regularity is the matching number minus one.

The matching number has a closed form by parity type.  When one parity has
a single path the regularity comes from the other part alone.
"""
from __future__ import annotations

from edgering.formulas import regularity_formula
from edgering.graph import (
    MultiPathSpec, build_graph, matching_number_bruteforce, matching_number_formula,
)
from edgering.resolution import reg_of
from edgering.verify import verify

print(f"{'spec':12} {'kind':6} {'mat':>4} {'brute':>6} {'reg':>4} {'oracle':>7}")
for text in ("2,2,2", "2,4,6", "3,3", "3,5,5", "2,2,3,3", "2,4,3,5", "2,2,3", "3,3,2"):
    spec = MultiPathSpec.parse(text)
    brute = matching_number_bruteforce(build_graph(spec))
    formula = matching_number_formula(spec)
    oracle = reg_of(verify(spec, "blocks").best.table)
    shown = "-" if formula is None else formula
    print(f"{text:12} {spec.kind:6} {shown:>4} {brute:>6} {regularity_formula(spec):>4} {oracle:>7}")
