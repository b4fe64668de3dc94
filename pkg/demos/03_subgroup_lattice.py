"""Enumerate closed subsets and draw their inclusion order.

Every subset of the twelve leptons is tested for closure under ⊗; the
closed ones are the Hv-subgroups. The Hasse diagram of their inclusions
is written as a DOT file that Graphviz can render.

Usage: python demos/03_subgroup_lattice.py [out.dot]
"""

import sys
from pathlib import Path

from hyperlep import derive_table, enumerate_subgroups, inclusion_lattice, leptons
from hyperlep.export import lattice_to_dot

t = derive_table(leptons())
census = enumerate_subgroups(t)
for d, n in census.counts().items():
    print(f"size {d:2}: {n}")
print(f"total: {census.total}")

lat = inclusion_lattice(census)
print(f"{len(lat.edges)} strict inclusions, {len(lat.hasse_edges)} covering pairs")

# each size-4 set joins two charged-lepton and neutrino doublets from different generations
for m in census.by_dimension[4]:
    print("  ", t.carrier.names(m))

out = Path(sys.argv[1] if len(sys.argv) > 1 else "subgroups.dot")
out.write_text(lattice_to_dot(lat, t.carrier, census.labels()), encoding="utf-8")
print(f"wrote {out}")
