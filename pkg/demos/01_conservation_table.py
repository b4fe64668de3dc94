"""Build the lepton hyperoperation from charge and lepton-number conservation.

Two leptons x and y may scatter into any pair (a, b) with the same total
charge and the same electronic, muonic and tauonic numbers. Collapsing all
such pairs to the set of particles that can appear gives the cell x ⊗ y.
"""

from hyperlep import derive_table, leptons
from hyperlep.conservation import allowed_outgoing_pairs
from hyperlep.export import table_to_text, unicode_name

ps = leptons()
el = ps.carrier.elements

print("Quantum numbers (Q, Le, Lmu, Ltau):")
for p in ps.particles:
    print(f"  {unicode_name(p.name):4} {p.numbers.values}  anti: {unicode_name(p.antiparticle)}")

print()
for x, y in [("e", "e+"), ("e", "nu_mu"), ("e", "e")]:
    pairs = allowed_outgoing_pairs(ps, ps.index(x), ps.index(y))
    shown = " or ".join(f"{unicode_name(el[a])}+{unicode_name(el[b])}" for a, b in sorted(pairs))
    print(f"{unicode_name(x)} + {unicode_name(y)} -> {shown}")

t = derive_table(ps)
print()
print(table_to_text(t, unicode_name))
