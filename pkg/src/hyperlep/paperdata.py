"""Transcribed reference data for the lepton hyperstructure.

Everything here is typed in from the published tables and lists, never
computed, so it can be checked against what the engine derives. Element
names use the ASCII forms ``e nu_e e+ nubar_e mu nu_mu mu+ nubar_mu tau
nu_tau tau+ nubar_tau``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .conservation import Particle, ParticleSet, QuantumNumbers
from .hypercore import CarrierMismatchError, HyperTable, SubsetMask

# name: (Q, Le, Lmu, Ltau), antiparticle
TABLE1 = [
    ("e", (-1, 1, 0, 0), "e+"),
    ("nu_e", (0, 1, 0, 0), "nubar_e"),
    ("e+", (1, -1, 0, 0), "e"),
    ("nubar_e", (0, -1, 0, 0), "nu_e"),
    ("mu", (-1, 0, 1, 0), "mu+"),
    ("nu_mu", (0, 0, 1, 0), "nubar_mu"),
    ("mu+", (1, 0, -1, 0), "mu"),
    ("nubar_mu", (0, 0, -1, 0), "nu_mu"),
    ("tau", (-1, 0, 0, 1), "tau+"),
    ("nu_tau", (0, 0, 0, 1), "nubar_tau"),
    ("tau+", (1, 0, 0, -1), "tau"),
    ("nubar_tau", (0, 0, 0, -1), "nu_tau"),
]

# Rows and columns in the order above; "L" is the whole carrier.
# Transcribed as printed, including the (nubar_e, e+) cell.
TABLE2 = {
    "e": ["e", "e nu_e", "L", "e nubar_e mu nubar_mu tau nubar_tau", "e mu", "e nu_e mu nu_mu", "e nu_e mu+ nubar_mu", "e nubar_mu", "e tau", "e nu_e tau nu_tau", "e nu_e tau+ nubar_tau", "e nubar_tau"],
    "nu_e": ["e nu_e", "nu_e", "nu_e e+ nu_mu mu+ nu_tau tau+", "L", "e nu_e mu nu_mu", "nu_e nu_mu", "nu_e mu+", "e nu_e mu+ nubar_mu", "e nu_e tau nu_tau", "nu_e nu_tau", "nu_e tau+", "e nu_e tau+ nubar_tau"],
    "e+": ["L", "nu_e e+ nu_mu mu+ nu_tau tau+", "e+", "e+ nubar_e", "e+ nubar_e mu nu_mu", "e+ nu_mu", "e+ mu+", "e+ nubar_e mu+ nubar_mu", "e+ nubar_e tau nu_tau", "e+ nu_tau", "e+ tau+", "e+ nubar_e tau+ nubar_tau"],
    "nubar_e": ["e nubar_e mu nubar_mu tau nubar_tau", "L", "e+ nubar_mu", "nubar_e", "nubar_e mu", "e+ nubar_e mu nu_mu", "e+ nubar_e mu+ nubar_mu", "nubar_e nubar_mu", "nubar_e tau", "e+ nubar_e tau nu_tau", "e+ nubar_e tau+ nubar_tau", "nubar_e nubar_tau"],
    "mu": ["e mu", "e nu_e mu nu_mu", "e+ nubar_e mu nu_mu", "nubar_e mu", "mu", "mu nu_mu", "L", "e nubar_e mu nubar_mu tau nubar_tau", "mu tau", "mu nu_mu tau nu_tau", "mu nu_mu tau+ nubar_tau", "mu nubar_tau"],
    "nu_mu": ["e nu_e mu nu_mu", "nu_e nu_mu", "e+ nu_mu", "e+ nubar_e mu nu_mu", "mu nu_mu", "nu_mu", "nu_e e+ nu_mu mu+ nu_tau tau+", "L", "mu nu_mu tau nu_tau", "nu_mu nu_tau", "nu_mu tau+", "mu nu_mu tau+ nubar_tau"],
    "mu+": ["e nu_e mu+ nubar_mu", "nu_e mu+", "e+ mu+", "e+ nubar_e mu+ nubar_mu", "L", "nu_e e+ nu_mu mu+ nu_tau tau+", "mu+", "mu+ nubar_mu", "mu+ nubar_mu tau nu_tau", "mu+ nu_tau", "mu+ tau+", "mu+ nubar_mu tau+ nubar_tau"],
    "nubar_mu": ["e nubar_mu", "e nu_e mu+ nubar_mu", "e+ nubar_e mu+ nubar_mu", "nubar_e nubar_mu", "e nubar_e mu nubar_mu tau nubar_tau", "L", "mu+ nubar_mu", "nubar_mu", "nubar_mu tau", "mu+ nubar_mu tau nu_tau", "mu+ nubar_mu tau+ nubar_tau", "nubar_mu nubar_tau"],
    "tau": ["e tau", "e nu_e tau nu_tau", "e+ nubar_e tau nu_tau", "nubar_e tau", "mu tau", "mu nu_mu tau nu_tau", "mu+ nubar_mu tau nu_tau", "nubar_mu tau", "tau", "tau nu_tau", "L", "e nubar_e mu nubar_mu tau nubar_tau"],
    "nu_tau": ["e nu_e tau nu_tau", "nu_e nu_tau", "e+ nu_tau", "e+ nubar_e tau nu_tau", "mu nu_mu tau nu_tau", "nu_mu nu_tau", "mu+ nu_tau", "mu+ nubar_mu tau nu_tau", "tau nu_tau", "nu_tau", "nu_e e+ nu_mu mu+ nu_tau tau+", "L"],
    "tau+": ["e nu_e tau+ nubar_tau", "nu_e tau+", "e+ tau+", "e+ nubar_e tau+ nubar_tau", "mu nu_mu tau+ nubar_tau", "nu_mu tau+", "mu+ tau+", "mu+ nubar_mu tau+ nubar_tau", "L", "nu_e e+ nu_mu mu+ nu_tau tau+", "tau+", "tau+ nubar_tau"],
    "nubar_tau": ["e nubar_tau", "e nu_e tau+ nubar_tau", "e+ nubar_e tau+ nubar_tau", "nubar_e nubar_tau", "mu nubar_tau", "mu nu_mu tau+ nubar_tau", "mu+ nubar_mu tau+ nubar_tau", "nubar_mu nubar_tau", "e nubar_e mu nubar_mu tau nubar_tau", "L", "tau+ nubar_tau", "nubar_tau"],
}

# Triples [A, B, C] in printed order. Headings as printed: lemma52 is
# "A(BC) not in (AB)C", lemma53 "(AB)C not in A(BC)", lemma54 "(AB)C != A(BC)".
LEMMA52 = [
    ("e+", "mu", "e+"), ("e+", "tau", "e+"), ("e+", "nubar_tau", "e+"), ("mu", "e+", "e+"),
    ("mu+", "nubar_e", "e+"), ("tau", "e+", "e+"), ("tau+", "nubar_e", "e+"),
    ("nubar_e", "e+", "e+"), ("nubar_e", "e+", "mu"), ("nubar_e", "e+", "tau+"),
    ("nubar_e", "e+", "nu_mu"), ("nubar_e", "e+", "nu_tau"), ("nubar_tau", "e+", "e+"),
    ("nu_e", "nubar_e", "e+"), ("nu_tau", "nubar_e", "e+"),
]
LEMMA53 = [
    ("e+", "nubar_e", "e+"), ("mu", "nubar_e", "e+"), ("tau+", "nubar_e", "e+"),
    ("nubar_e", "e+", "mu+"), ("nubar_e", "e+", "tau+"), ("nubar_e", "e+", "nu_e"),
    ("nubar_e", "e+", "nu_tau"), ("nubar_e", "tau+", "nubar_e"), ("nubar_e", "nubar_e", "e+"),
    ("nubar_e", "nubar_e", "tau+"), ("nubar_e", "nubar_e", "nu_mu"),
    ("nubar_e", "nubar_e", "nu_tau"), ("nubar_e", "nu_mu", "nubar_e"),
    ("nubar_e", "nu_tau", "nubar_e"), ("nu_mu", "nubar_e", "e+"), ("nu_tau", "nubar_e", "e+"),
]
LEMMA54 = [
    ("e+", "mu", "e+"), ("e+", "tau", "e+"), ("e+", "nubar_e", "e+"), ("e+", "nubar_tau", "e+"),
    ("mu", "e+", "e+"), ("mu", "nubar_e", "e+"), ("mu+", "nubar_e", "e+"), ("tau", "e+", "e+"),
    ("tau+", "nubar_e", "e+"), ("nubar_e", "e+", "e+"), ("nubar_e", "e+", "mu"),
    ("nubar_e", "e+", "mu+"), ("nubar_e", "e+", "tau+"), ("nubar_e", "e+", "nu_e"),
    ("nubar_e", "e+", "nu_mu"), ("nubar_e", "e+", "nu_tau"), ("nubar_e", "tau+", "nubar_e"),
    ("nubar_e", "nubar_e", "e+"), ("nubar_e", "nubar_e", "tau+"), ("nubar_e", "nubar_e", "nu_mu"),
    ("nubar_e", "nubar_e", "nu_tau"), ("nubar_e", "nu_mu", "nubar_e"),
    ("nubar_e", "nu_tau", "nubar_e"), ("nubar_tau", "e+", "e+"), ("nu_e", "nubar_e", "e+"),
    ("nu_mu", "nubar_e", "e+"), ("nu_tau", "nubar_e", "e+"),
]

# Closed subsets by size; list position i (from 1) is the published L^d_i.
THEOREM56 = {
    1: [
        "e", "e+", "mu", "mu+",
        "tau", "tau+", "nubar_e", "nubar_mu",
        "nubar_tau", "nu_e", "nu_mu", "nu_tau",
    ],
    2: [
        "e mu", "e tau", "e nubar_mu", "e nubar_tau",
        "e nu_e", "e+ mu+", "e+ tau+", "e+ nu_mu",
        "e+ nu_tau", "mu tau", "nubar_e mu", "mu nubar_tau",
        "mu nu_mu", "mu+ tau+", "mu+ nubar_mu", "nu_e mu+",
        "mu+ nu_tau", "nubar_e tau", "nubar_mu tau", "tau nu_tau",
        "tau+ nubar_tau", "nu_e tau+", "nu_mu tau+", "nubar_e nubar_mu",
        "nubar_e nubar_tau", "nubar_mu nubar_tau", "nu_e nu_mu", "nu_e nu_tau",
        "nu_mu nu_tau",
    ],
    3: [
        "e mu tau", "e mu nubar_tau", "e nubar_mu tau", "e nubar_mu nubar_tau",
        "e+ mu+ tau+", "e+ mu+ nu_tau", "e+ nu_mu tau+", "e+ nu_mu nu_tau",
        "nubar_e mu tau", "nubar_e mu nubar_tau", "nu_e mu+ tau+", "nu_e mu+ nu_tau",
        "nubar_e nubar_mu tau", "nu_e nu_mu tau+", "nubar_e nubar_mu nubar_tau", "nu_e nu_mu nu_tau",
    ],
    4: [
        "e nu_e mu nu_mu", "e nu_e mu+ nubar_mu", "e nu_e tau nu_tau", "e nu_e tau+ nubar_tau",
        "e+ nubar_e mu+ nubar_mu", "mu nu_mu tau nu_tau", "mu nu_mu tau+ nubar_tau", "mu+ nubar_mu tau nu_tau",
        "mu+ nubar_mu tau+ nubar_tau",
    ],
    6: [
        "e nubar_e mu nubar_mu tau nubar_tau", "e nu_e mu nu_mu tau nu_tau",
        "e nu_e mu nu_mu tau+ nubar_tau", "e nu_e mu+ nubar_mu tau nu_tau",
        "e nu_e mu+ nubar_mu tau+ nubar_tau", "e+ nubar_e mu+ nubar_mu tau nu_tau",
        "e+ nubar_e mu+ nubar_mu tau+ nubar_tau", "nu_e e+ nu_mu mu+ nu_tau tau+",
    ],
    12: ["L"],
}

# (d, i) -> labels (d', j) with L^d_i strictly inside L^d'_j; (12, 1) is L itself.
CONCLUSION57 = {
    (1, 1): [(2, 1), (2, 2), (2, 3), (2, 4), (2, 5), (3, 1), (3, 2), (3, 3), (3, 4), (4, 1), (4, 2), (4, 3), (4, 4), (6, 1), (6, 2), (6, 3), (6, 4), (6, 5), (12, 1)],
    (1, 2): [(2, 6), (2, 7), (2, 8), (2, 9), (3, 5), (3, 6), (3, 7), (3, 8), (4, 5), (6, 6), (6, 7), (6, 8), (12, 1)],
    (1, 3): [(2, 1), (2, 10), (2, 11), (2, 12), (2, 13), (3, 1), (3, 2), (3, 9), (3, 10), (4, 1), (4, 6), (4, 7), (6, 1), (6, 2), (6, 3), (12, 1)],
    (1, 4): [(2, 6), (2, 14), (2, 15), (2, 16), (2, 17), (3, 5), (3, 6), (3, 11), (3, 12), (4, 2), (4, 5), (4, 8), (4, 9), (6, 4), (6, 5), (6, 6), (6, 7), (6, 8), (12, 1)],
    (1, 5): [(2, 2), (2, 10), (2, 18), (2, 19), (2, 20), (3, 1), (3, 3), (3, 9), (3, 13), (4, 3), (4, 6), (4, 8), (6, 1), (6, 2), (6, 4), (6, 6), (12, 1)],
    (1, 6): [(2, 7), (2, 14), (2, 21), (2, 22), (2, 23), (3, 5), (3, 7), (3, 11), (3, 14), (4, 4), (4, 7), (4, 9), (6, 3), (6, 5), (6, 7), (6, 8), (12, 1)],
    (1, 7): [(2, 11), (2, 18), (2, 24), (2, 25), (3, 9), (3, 10), (3, 13), (3, 15), (4, 5), (6, 1), (6, 6), (6, 7), (12, 1)],
    (1, 8): [(2, 3), (2, 15), (2, 19), (2, 24), (2, 26), (3, 3), (3, 4), (3, 13), (3, 15), (4, 2), (4, 5), (4, 8), (4, 9), (6, 1), (6, 4), (6, 5), (6, 6), (6, 7), (12, 1)],
    (1, 9): [(2, 4), (2, 12), (2, 21), (2, 25), (2, 26), (3, 2), (3, 4), (3, 10), (3, 15), (4, 4), (4, 7), (4, 9), (6, 1), (6, 3), (6, 5), (6, 7), (12, 1)],
    (1, 10): [(2, 5), (2, 16), (2, 22), (2, 27), (2, 28), (3, 11), (3, 12), (3, 14), (3, 16), (4, 1), (4, 2), (4, 3), (4, 4), (6, 2), (6, 3), (6, 4), (6, 5), (6, 8), (12, 1)],
    (1, 11): [(2, 8), (2, 13), (2, 23), (2, 27), (2, 29), (3, 7), (3, 8), (3, 14), (3, 16), (4, 1), (4, 6), (4, 7), (6, 2), (6, 3), (6, 8), (12, 1)],
    (1, 12): [(2, 9), (2, 17), (2, 20), (2, 28), (2, 29), (3, 6), (3, 8), (3, 12), (3, 16), (4, 3), (4, 6), (4, 8), (6, 2), (6, 4), (6, 6), (6, 8), (12, 1)],
    (2, 1): [(3, 1), (3, 2), (4, 1), (6, 1), (6, 2), (6, 3), (12, 1)],
    (2, 2): [(3, 1), (3, 3), (4, 3), (6, 1), (6, 2), (6, 4), (12, 1)],
    (2, 3): [(3, 3), (3, 4), (4, 2), (6, 1), (6, 4), (6, 5), (12, 1)],
    (2, 4): [(3, 2), (3, 4), (4, 4), (6, 1), (6, 3), (6, 5), (12, 1)],
    (2, 5): [(4, 1), (4, 2), (4, 3), (4, 4), (6, 2), (6, 3), (6, 4), (6, 5), (12, 1)],
    (2, 6): [(3, 5), (3, 6), (4, 5), (6, 6), (6, 7), (6, 8), (12, 1)],
    (2, 7): [(3, 5), (3, 7), (6, 7), (6, 8), (12, 1)],
    (2, 8): [(3, 7), (3, 8), (6, 8), (12, 1)],
    (2, 9): [(3, 6), (3, 8), (6, 6), (6, 8), (12, 1)],
    (2, 10): [(3, 1), (3, 9), (4, 6), (6, 1), (6, 2), (12, 1)],
    (2, 11): [(3, 9), (3, 10), (6, 1), (12, 1)],
    (2, 12): [(3, 2), (3, 10), (4, 7), (6, 1), (6, 3), (12, 1)],
    (2, 13): [(4, 1), (4, 6), (4, 7), (6, 2), (6, 3), (12, 1)],
    (2, 14): [(3, 5), (3, 11), (4, 9), (6, 5), (6, 7), (6, 8), (12, 1)],
    (2, 15): [(4, 2), (4, 5), (4, 8), (4, 9), (6, 4), (6, 5), (6, 6), (6, 7), (12, 1)],
    (2, 16): [(3, 11), (3, 12), (4, 2), (6, 4), (6, 5), (6, 8), (12, 1)],
    (2, 17): [(3, 6), (3, 12), (4, 8), (6, 4), (6, 6), (6, 8), (12, 1)],
    (2, 18): [(3, 9), (3, 13), (6, 1), (6, 6), (12, 1)],
    (2, 19): [(3, 3), (3, 13), (4, 8), (6, 1), (6, 4), (6, 6), (12, 1)],
    (2, 20): [(4, 3), (4, 6), (4, 8), (6, 2), (6, 4), (6, 6), (12, 1)],
    (2, 21): [(4, 4), (4, 7), (4, 9), (6, 3), (6, 5), (6, 7), (12, 1)],
    (2, 22): [(3, 11), (3, 14), (4, 4), (6, 3), (6, 5), (6, 8), (12, 1)],
    (2, 23): [(3, 7), (3, 14), (4, 7), (6, 3), (6, 8), (12, 1)],
    (2, 24): [(3, 13), (3, 15), (4, 5), (6, 1), (6, 6), (6, 7), (12, 1)],
    (2, 25): [(3, 10), (3, 15), (6, 1), (6, 7), (12, 1)],
    (2, 26): [(3, 4), (3, 15), (4, 9), (6, 1), (6, 5), (6, 7), (12, 1)],
    (2, 27): [(3, 14), (3, 16), (4, 1), (6, 2), (6, 3), (6, 8), (12, 1)],
    (2, 28): [(3, 12), (3, 16), (4, 3), (6, 2), (6, 4), (6, 8), (12, 1)],
    (2, 29): [(3, 8), (3, 16), (4, 6), (6, 2), (6, 8), (12, 1)],
    (3, 1): [(6, 1), (6, 2), (12, 1)],
    (3, 2): [(6, 1), (6, 3), (12, 1)],
    (3, 3): [(6, 1), (6, 4), (12, 1)],
    (3, 4): [(6, 1), (6, 5), (12, 1)],
    (3, 5): [(6, 7), (6, 8), (12, 1)],
    (3, 6): [(6, 6), (6, 8), (12, 1)],
    (3, 7): [(6, 8), (12, 1)],
    (3, 8): [(6, 8), (12, 1)],
    (3, 9): [(6, 1), (12, 1)],
    (3, 10): [(6, 1), (12, 1)],
    (3, 11): [(6, 5), (6, 8), (12, 1)],
    (3, 12): [(6, 4), (6, 8), (12, 1)],
    (3, 13): [(6, 1), (6, 6), (12, 1)],
    (3, 14): [(6, 3), (6, 8), (12, 1)],
    (3, 15): [(6, 1), (6, 7), (12, 1)],
    (3, 16): [(6, 2), (6, 8), (12, 1)],
    (4, 1): [(6, 2), (6, 3), (12, 1)],
    (4, 2): [(6, 4), (6, 5), (12, 1)],
    (4, 3): [(6, 2), (6, 4), (12, 1)],
    (4, 4): [(6, 3), (6, 5), (12, 1)],
    (4, 5): [(6, 6), (6, 7), (12, 1)],
    (4, 6): [(6, 2), (12, 1)],
    (4, 7): [(6, 3), (12, 1)],
    (4, 8): [(6, 4), (6, 6), (12, 1)],
    (4, 9): [(6, 5), (6, 7), (12, 1)],
    (6, 1): [(12, 1)],
    (6, 2): [(12, 1)],
    (6, 3): [(12, 1)],
    (6, 4): [(12, 1)],
    (6, 5): [(12, 1)],
    (6, 6): [(12, 1)],
    (6, 7): [(12, 1)],
    (6, 8): [(12, 1)],
}

TYPO_NOTES = (
    "lemma54: printed [t, e+, e+]; stored as (tau, e+, e+).",
    "theorem56: nu_tau in L^6_6 printed without its subscript macro; stored as nu_tau.",
    "theorem56: L^3_8 printed as {e+, nu_mu, nu_e}; stored as {e+, nu_mu, nu_tau}. The printed set "
    "is closed under neither table, and the inclusion list puts {nu_tau}, {e+, nu_tau} and "
    "{nu_mu, nu_tau} inside L^3_8 but not {nu_e}.",
    "table2: cell (nu_tau, tau+) has a stray line break; read as {e+, mu+, tau+, nu_e, nu_mu, nu_tau}.",
    "conclusion57: every sub-list is headed '(i)'; pairs are keyed by the size of the smaller set.",
    "conclusion57: L^{12} stands for the whole carrier; stored as label (12, 1).",
)

# Recorded exactly as printed, not normalized.
KNOWN_DISCREPANCIES = (
    "table2: cell (nubar_e, e+) is printed as {e+, nubar_mu}. That outcome does not conserve the "
    "electronic number, and the mirror cell (e+, nubar_e) is {e+, nubar_e}.",
    "lemma52/lemma53: for the printed table, the lemma52 triples are those where (AB)C is not "
    "contained in A(BC), and the lemma53 triples the reverse. The list headings state the opposite.",
)


@dataclass(frozen=True)
class PaperFixtures:
    table1: ParticleSet
    table2: HyperTable
    lemma52: tuple[tuple[int, int, int], ...]
    lemma53: tuple[tuple[int, int, int], ...]
    lemma54: tuple[tuple[int, int, int], ...]
    theorem56: dict[int, tuple[SubsetMask, ...]]
    conclusion57_labels: tuple[tuple[tuple[int, int], tuple[int, int]], ...]
    typo_notes: tuple[str, ...]
    discrepancies: tuple[str, ...]

    def label_mask(self, label: tuple[int, int]) -> SubsetMask:
        d, i = label
        return self.theorem56[d][i - 1]

    @property
    def conclusion57_pairs(self) -> tuple[tuple[SubsetMask, SubsetMask], ...]:
        return tuple((self.label_mask(a), self.label_mask(b)) for a, b in self.conclusion57_labels)

    def labels(self) -> dict[SubsetMask, str]:
        """Published ``L^d_i`` label of each listed set."""
        out = {}
        for d, masks in self.theorem56.items():
            for i, m in enumerate(masks, 1):
                out[m] = "L^12" if d == 12 else f"L^{d}_{i}"
        return out


def _mask(carrier, cell: str) -> SubsetMask:
    return carrier.full() if cell == "L" else carrier.mask(cell.split())


@lru_cache(maxsize=None)
def load_fixtures() -> PaperFixtures:
    table1 = ParticleSet(
        Particle(name, QuantumNumbers(nums), anti) for name, nums, anti in TABLE1
    )
    carrier = table1.carrier
    table2 = HyperTable(carrier, [[_mask(carrier, c) for c in TABLE2[name]] for name in carrier])

    def triples(rows):
        return tuple(tuple(carrier.index(x) for x in row) for row in rows)

    pairs = tuple((a, b) for a, bs in CONCLUSION57.items() for b in bs)
    return PaperFixtures(
        table1=table1,
        table2=table2,
        lemma52=triples(LEMMA52),
        lemma53=triples(LEMMA53),
        lemma54=triples(LEMMA54),
        theorem56={d: tuple(_mask(carrier, s) for s in sets) for d, sets in THEOREM56.items()},
        conclusion57_labels=pairs,
        typo_notes=TYPO_NOTES,
        discrepancies=KNOWN_DISCREPANCIES,
    )


def diff_tables(a: HyperTable, b: HyperTable) -> list[tuple[int, int, SubsetMask, SubsetMask]]:
    """Cells where two tables over the same carrier disagree, in row-major order."""
    if a.carrier != b.carrier:
        raise CarrierMismatchError("carrier mismatch")
    n = a.size
    return [
        (x, y, a.cells[x][y], b.cells[x][y])
        for x in range(n)
        for y in range(n)
        if a.bits[x][y] != b.bits[x][y]
    ]
