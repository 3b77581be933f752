"""Resource caps for the brute-force routines.

Defaults can be overridden through the ``EDGERING_CAPS`` environment
variable, e.g. ``EDGERING_CAPS="lattice=8192,ground=24,edges=18"``.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace

from .errors import InvalidSpec

ENV_VAR = "EDGERING_CAPS"


@dataclass(frozen=True)
class Caps:
    lattice: int = 4096  # lcm-lattice elements per ideal
    ground: int = 20  # ground set of a simplicial complex
    edges: int = 16  # edges for brute-force matching
    perms: int = 8  # edges for exhaustive permutation order families
    facets: int = 18  # |V_1| for facet enumeration


DEFAULT_CAPS = Caps()


def parse_caps(text: str, base: Caps = DEFAULT_CAPS) -> Caps:
    known = {f.name for f in fields(Caps)}
    updates = {}
    for item in filter(None, (s.strip() for s in text.split(","))):
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or key not in known:
            raise InvalidSpec(f"bad cap entry {item!r}")
        try:
            n = int(value)
        except ValueError:
            raise InvalidSpec(f"bad cap value {item!r}") from None
        if n < 0:
            raise InvalidSpec(f"negative cap {item!r}")
        updates[key] = n
    return replace(base, **updates)


def current_caps() -> Caps:
    text = os.environ.get(ENV_VAR, "")
    return parse_caps(text) if text else DEFAULT_CAPS
