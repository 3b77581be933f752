"""Mixed graphs split into an even and an odd half.

When both parities occur at least twice, the multigraded table of the whole
graph is the tensor product of the tables of its even part and its odd part.
"""
from __future__ import annotations

from edgering.formulas import mixed_total, multigraded_betti, tensor_convolve
from edgering.graph import MultiPathSpec
from edgering.verify import part_table

spec = MultiPathSpec.parse("2,4,2,3,3,5")
even = part_table(spec, spec.even_labels)
odd = part_table(spec, spec.odd_labels)
print(f"{spec}: even paths {spec.even_labels}, odd paths {spec.odd_labels}")
print("even part totals", even.totals())
print("odd part totals ", odd.totals())

whole = multigraded_betti(spec)
print("whole graph     ", whole.totals())
print("tensor identity holds:", tensor_convolve(even, odd) == whole)

p, q = spec.n_even, spec.n_odd
print("closed-form totals:", [1] + [mixed_total(p, q, i) for i in range(1, len(whole.totals()))])
