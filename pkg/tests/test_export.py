from __future__ import annotations

from hyperlep import export
from hyperlep.hypercore import Carrier, HyperTable
from hyperlep.substructures import enumerate_subgroups, inclusion_lattice


def test_unicode_names():
    assert export.unicode_name("nubar_mu") == "ν̄μ"
    assert export.unicode_name("tau+") == "τ⁺"
    assert export.unicode_name("nu_e") == "νe"
    assert export.unicode_name("e") == "e"


def test_round_trips(table, census):
    assert export.table_from_dict(export.table_to_dict(table)) == table
    assert export.table_from_csv(export.table_to_csv(table)) == table
    assert export.census_from_dict(export.census_to_dict(census, table.carrier)) == census


def test_dot_quoting():
    c = Carrier(['a"b', "c\\d"])
    t = HyperTable(c, [[1, 3], [3, 2]])
    census = enumerate_subgroups(t)
    dot = export.lattice_to_dot(inclusion_lattice(census), c, census.labels())
    assert '\\"' in dot and "\\\\" in dot
    assert all(line.endswith(("{", ";", "}")) for line in dot.splitlines())


def test_text_table_is_rectangular(table):
    lines = export.table_to_text(table).splitlines()
    assert len({line.count("|") for line in lines if "|" in line}) == 1
