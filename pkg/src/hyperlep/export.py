"""Text, CSV, JSON and DOT renderings of tables, violations and censuses."""

from __future__ import annotations

import csv
import io
import json
from typing import Callable, Mapping

from .axioms import ViolationLists
from .hypercore import Carrier, HyperError, HyperTable, SubsetMask
from .substructures import InclusionLattice, SubgroupCensus

Namer = Callable[[str], str]

_GLYPHS = (("nubar_", "ν̄"), ("nu_", "ν"), ("mu", "μ"), ("tau", "τ"), ("+", "⁺"))


def unicode_name(name: str) -> str:
    """``nubar_mu`` -> ``ν̄μ``, ``tau+`` -> ``τ⁺`` and so on."""
    for ascii_form, glyph in _GLYPHS:
        name = name.replace(ascii_form, glyph)
    return name


def ascii_name(name: str) -> str:
    return name


def _names(carrier: Carrier, mask: SubsetMask, namer: Namer) -> list[str]:
    return [namer(n) for n in carrier.names(mask)]


def table_to_text(table: HyperTable, namer: Namer = ascii_name, corner: str = "(x)") -> str:
    """Grid with row and column headers in carrier order; cells comma-joined."""
    c = table.carrier
    head = [corner] + [namer(n) for n in c]
    rows = [head]
    for i, name in enumerate(c):
        rows.append([namer(name)] + [",".join(_names(c, m, namer)) for m in table.cells[i]])
    widths = [max(len(r[k]) for r in rows) for k in range(len(head))]
    lines = [" | ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in rows]
    lines.insert(1, "-+-".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def table_to_csv(table: HyperTable, namer: Namer = ascii_name) -> str:
    c = table.carrier
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["row", "col", "cell"])
    for i, a in enumerate(c):
        for j, b in enumerate(c):
            w.writerow([namer(a), namer(b), " ".join(_names(c, table.cells[i][j], namer))])
    return buf.getvalue()


def table_from_csv(text: str) -> HyperTable:
    rows = list(csv.DictReader(io.StringIO(text)))
    order: dict[str, None] = {}
    for r in rows:
        order.setdefault(r["row"])
    carrier = Carrier(order)
    cells: list[list[SubsetMask | None]] = [[None] * carrier.size for _ in range(carrier.size)]
    for r in rows:
        cells[carrier.index(r["row"])][carrier.index(r["col"])] = carrier.mask(r["cell"].split())
    if any(cell is None for row in cells for cell in row):
        raise HyperError("CSV table is missing cells")
    return HyperTable(carrier, cells)


def table_to_dict(table: HyperTable, namer: Namer = ascii_name) -> dict:
    c = table.carrier
    return {
        "carrier": [namer(n) for n in c],
        "cells": [[_names(c, m, namer) for m in row] for row in table.cells],
    }


def table_from_dict(data: Mapping) -> HyperTable:
    carrier = Carrier(data["carrier"])
    return HyperTable.from_names(carrier, data["cells"])


def violations_to_dict(table: HyperTable, lists: ViolationLists, namer: Namer = ascii_name) -> dict:
    c = table.carrier

    def entry(v):
        return {
            "triple": [namer(c.elements[k]) for k in v.triple],
            "left": _names(c, v.left, namer),
            "right": _names(c, v.right, namer),
        }

    return {
        "carrier": [namer(n) for n in c],
        "violations": {kind: [entry(v) for v in vs] for kind, vs in lists._asdict().items()},
    }


def violations_to_csv(table: HyperTable, lists: ViolationLists, namer: Namer = ascii_name) -> str:
    c = table.carrier
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["kind", "a", "b", "c", "left", "right"])
    for kind, vs in lists._asdict().items():
        for v in vs:
            w.writerow(
                [kind, *(namer(c.elements[k]) for k in v.triple),
                 " ".join(_names(c, v.left, namer)), " ".join(_names(c, v.right, namer))]
            )
    return buf.getvalue()


def violations_to_text(table: HyperTable, lists: ViolationLists, namer: Namer = ascii_name) -> str:
    c = table.carrier
    headings = {
        "right_not_in_left": "a(bc) not contained in (ab)c",
        "left_not_in_right": "(ab)c not contained in a(bc)",
        "unequal": "(ab)c != a(bc)",
    }
    out = []
    for kind, vs in lists._asdict().items():
        out.append(f"{headings[kind]}: {len(vs)} triples")
        for v in vs:
            out.append("  [" + ", ".join(namer(c.elements[k]) for k in v.triple) + "]")
    return "\n".join(out) + "\n"


def census_to_dict(census: SubgroupCensus, carrier: Carrier, namer: Namer = ascii_name) -> dict:
    return {
        "carrier": [namer(n) for n in carrier],
        "census": {
            str(d): [_names(carrier, m, namer) for m in masks]
            for d, masks in sorted(census.by_dimension.items())
        },
    }


def census_from_dict(data: Mapping) -> SubgroupCensus:
    carrier = Carrier(data["carrier"])
    return SubgroupCensus(
        carrier.size,
        {int(d): tuple(carrier.mask(s) for s in sets) for d, sets in data["census"].items()},
    )


def census_to_text(
    census: SubgroupCensus,
    carrier: Carrier,
    namer: Namer = ascii_name,
    reference: Mapping[SubsetMask, str] | None = None,
) -> str:
    """Counts per size, then every member with its label.

    ``reference`` maps masks to externally published labels, shown alongside.
    """
    out = []
    for d in range(1, carrier.size + 1):
        out.append(f"dim {d}: {len(census.by_dimension.get(d, ()))}")
    out.append(f"total: {census.total}")
    out.append("")
    labels = census.labels()
    for m in census.members():
        line = f"{labels[m]:<8} {{{', '.join(_names(carrier, m, namer))}}}"
        if reference is not None:
            line += f"  [{reference.get(m, '-')}]"
        out.append(line)
    return "\n".join(out) + "\n"


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n") + '"'


def lattice_to_dot(
    lattice: InclusionLattice,
    carrier: Carrier,
    labels: Mapping[SubsetMask, str],
    namer: Namer = ascii_name,
    reference: Mapping[SubsetMask, str] | None = None,
) -> str:
    """DOT digraph of the Hasse edges, smaller set pointing to larger."""
    ids = {m: f"n{k}" for k, m in enumerate(lattice.nodes)}
    out = ["digraph subgroups {", "  rankdir=BT;", "  node [shape=box];"]
    for m in lattice.nodes:
        text = f"{labels[m]}\n{{{', '.join(_names(carrier, m, namer))}}}"
        if reference is not None and m in reference:
            text += f"\n({reference[m]})"
        out.append(f"  {ids[m]} [label={_dot_quote(text)}];")
    for a, b in lattice.hasse_edges:
        out.append(f"  {ids[a]} -> {ids[b]};")
    out.append("}")
    return "\n".join(out) + "\n"


def lattice_to_dict(lattice: InclusionLattice, carrier: Carrier, namer: Namer = ascii_name) -> dict:
    def s(m):
        return _names(carrier, m, namer)

    return {
        "carrier": [namer(n) for n in carrier],
        "nodes": [s(m) for m in lattice.nodes],
        "edges": [[s(a), s(b)] for a, b in lattice.edges],
        "hasse_edges": [[s(a), s(b)] for a, b in lattice.hasse_edges],
    }


def dumps(data) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"
