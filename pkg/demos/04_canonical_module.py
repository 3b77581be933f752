"""Edge cone facets and canonical module generators.

For bipartite graphs the edge cone has an explicit facet list.  The canonical
module is generated by the lattice points ``D_G - alpha`` with ``alpha`` a top
multidegree, and each of them must be a minimal point of the interior.
"""
from __future__ import annotations

from edgering.cone import canonical_closed_form, canonical_generators, facet_description
from edgering.formulas import top_support
from edgering.graph import MultiPathSpec, big_d

for text in ("2,2,2", "2,4", "3,3,5"):
    spec = MultiPathSpec.parse(text)
    cone = facet_description(spec)
    print(f"== {text}: D_G = {big_d(spec)}")
    print(f"  affine hull: {cone.affine}")
    for h in cone.inequalities:
        print(f"  facet {h}")
    gens = canonical_generators(spec, top_support(spec), cone)
    print("  canonical generators:")
    for g in sorted(gens):
        print(f"    {g}")
    print("  equal to closed form:", gens == canonical_closed_form(spec))
