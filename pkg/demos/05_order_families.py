"""How the choice of monomial order changes the initial ideal.

Different orders can give different initial ideals with different Betti
tables.  The closed form is the smallest possible table, and this script
counts how many orders of each family attain it.
"""
from __future__ import annotations

from edgering.graph import MultiPathSpec
from edgering.verify import verify

for text, mode in (("2,2,2", "exhaustive"), ("2,4,6", "blocks"), ("2,2,3,3", "blocks"),
                   ("2,2,2,2,2", "sampled:200:7")):
    report = verify(MultiPathSpec.parse(text), mode)
    exact = [r for r in report.runs if r.table == report.formula.multigraded]
    n_orders = sum(len(r.orders) for r in report.runs)
    n_exact = sum(len(r.orders) for r in exact)
    print(f"{text:10} {mode:14} {n_orders:5} orders, {len(report.runs):3} initial ideals, "
          f"{n_exact:5} orders reproduce the formula")
    worst = max(report.runs, key=lambda r: sum(r.table.totals()))
    print(f"{'':10} largest oracle totals {worst.table.totals()} at {worst.label}")
