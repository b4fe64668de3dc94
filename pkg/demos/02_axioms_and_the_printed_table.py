"""Check the hypergroup axioms, and compare against the printed table.

The conservation-derived table turns out to be associative, so it is a
hypergroup (and therefore also an Hv-group). The printed table differs from
it in a single cell. That one cell is enough to break commutativity and
associativity, and it accounts for every published associativity failure.
"""

from hyperlep import associativity_violations, classify, derive_table, leptons
from hyperlep.cli import summarize_report
from hyperlep.paperdata import diff_tables, load_fixtures

derived = derive_table(leptons())
printed = load_fixtures().table2
c = derived.carrier

print("derived:    ", summarize_report(classify(derived)))
print("transcribed:", summarize_report(classify(printed)))

print()
for x, y, a, b in diff_tables(derived, printed):
    print(f"cell ({c.elements[x]}, {c.elements[y]}): derived {c.names(a)}, printed {c.names(b)}")
    print(f"mirror cell ({c.elements[y]}, {c.elements[x]}): {c.names(derived.cells[y][x])}")

lists = associativity_violations(printed)
print()
print("associativity failures of the printed table:")
for kind, vs in lists._asdict().items():
    print(f"  {kind}: {len(vs)}")
first = lists.unequal[0]
print(
    f"  e.g. {[c.elements[k] for k in first.triple]}: "
    f"(ab)c = {c.names(first.left)}, a(bc) = {c.names(first.right)}"
)
