"""Slow, set-based reference implementations used to freeze expected values.

Nothing here imports the package; every result is recomputed from plain
Python sets and tuples.
"""

from __future__ import annotations

from itertools import combinations, combinations_with_replacement, product

# name: (Q, Le, Lmu, Ltau)
LEPTON_NUMBERS = {
    "e": (-1, 1, 0, 0),
    "nu_e": (0, 1, 0, 0),
    "e+": (1, -1, 0, 0),
    "nubar_e": (0, -1, 0, 0),
    "mu": (-1, 0, 1, 0),
    "nu_mu": (0, 0, 1, 0),
    "mu+": (1, 0, -1, 0),
    "nubar_mu": (0, 0, -1, 0),
    "tau": (-1, 0, 0, 1),
    "nu_tau": (0, 0, 0, 1),
    "tau+": (1, 0, 0, -1),
    "nubar_tau": (0, 0, 0, -1),
}
NAMES = list(LEPTON_NUMBERS)
ANTI = {
    "e": "e+", "nu_e": "nubar_e", "mu": "mu+", "nu_mu": "nubar_mu",
    "tau": "tau+", "nu_tau": "nubar_tau",
}
ANTI.update({v: k for k, v in list(ANTI.items())})


def _add(*vecs):
    return tuple(sum(c) for c in zip(*vecs))


def oracle_table(numbers=LEPTON_NUMBERS) -> dict[tuple[str, str], frozenset[str]]:
    names = list(numbers)
    out = {}
    for x, y in product(names, repeat=2):
        total = _add(numbers[x], numbers[y])
        cell = set()
        for a, b in combinations_with_replacement(names, 2):
            if _add(numbers[a], numbers[b]) == total:
                cell |= {a, b}
        out[x, y] = frozenset(cell)
    return out


def set_product(table, a, b) -> frozenset[str]:
    out = set()
    for x in a:
        for y in b:
            out |= table[x, y]
    return frozenset(out)


def violation_sets(table, names):
    """Triples (as name tuples) with right not in left, left not in right, unequal."""
    r_not_l, l_not_r, neq = set(), set(), set()
    for a, b, c in product(names, repeat=3):
        left = set_product(table, table[a, b], {c})
        right = set_product(table, {a}, table[b, c])
        if not right <= left:
            r_not_l.add((a, b, c))
        if not left <= right:
            l_not_r.add((a, b, c))
        if left != right:
            neq.add((a, b, c))
    return r_not_l, l_not_r, neq


def closed_subsets(table, names) -> dict[int, set[frozenset[str]]]:
    out: dict[int, set[frozenset[str]]] = {}
    for d in range(1, len(names) + 1):
        for combo in combinations(names, d):
            s = frozenset(combo)
            if set_product(table, s, s) <= s:
                out.setdefault(d, set()).add(s)
    return out


def transitive_reduction(edges):
    """Hasse edges of a strict order given as a set of (lower, upper) pairs."""
    edges = set(edges)
    nodes = {n for e in edges for n in e}
    return {
        (a, b) for a, b in edges
        if not any((a, c) in edges and (c, b) in edges for c in nodes)
    }
