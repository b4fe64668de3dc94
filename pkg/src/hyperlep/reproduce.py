"""Golden comparisons between derived results and the transcribed reference data."""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import lru_cache

from . import axioms, substructures
from .conservation import ParticleSet, derive_table, leptons
from .hypercore import HyperError, HyperTable, SubsetMask
from .paperdata import PaperFixtures, diff_tables, load_fixtures


@dataclass(frozen=True)
class Claim:
    name: str
    passed: bool
    detail: str = ""


def corrupt_cell(table: HyperTable, row: int, col: int) -> HyperTable:
    """Perturb one cell: add the first missing element, or drop the first if the cell is full."""
    cell = table.cells[row][col]
    n = table.size
    missing = [k for k in range(n) if k not in cell]
    bits = cell.bits | 1 << missing[0] if missing else cell.bits & ~1
    return table.with_cell(row, col, SubsetMask(bits, n))


def fixtures_with_corrupt_cell(fx: PaperFixtures, row: str, col: str) -> PaperFixtures:
    c = fx.table2.carrier
    return replace(fx, table2=corrupt_cell(fx.table2, c.index(row), c.index(col)))


def _fmt(carrier, mask: SubsetMask) -> str:
    return "{" + ", ".join(carrier.names(mask)) + "}"


def _fmt_triples(carrier, triples) -> str:
    return " ".join("[" + ",".join(carrier.elements[k] for k in t) + "]" for t in sorted(triples))


def _same_particles(a: ParticleSet, b: ParticleSet) -> bool:
    return [(p.name, p.numbers.values, p.antiparticle) for p in a.particles] == [
        (p.name, p.numbers.values, p.antiparticle) for p in b.particles
    ]


@lru_cache(maxsize=4)
def _analyse(t: HyperTable):
    return (
        axioms.classify(t),
        axioms.associativity_violations(t),
        substructures.enumerate_subgroups(t),
    )


def run_claims(fx: PaperFixtures | None = None, subject: str = "derived") -> list[Claim]:
    """Evaluate every reference claim.

    The hypertable comparison always pits the derived table against the
    transcription. The remaining claims are evaluated on the ``subject``
    table: ``"derived"`` (from conservation laws) or ``"transcribed"`` (the
    transcription itself).
    """
    fx = fx or load_fixtures()
    ps = leptons()
    derived = derive_table(ps)
    if subject == "derived":
        t = derived
    elif subject == "transcribed":
        t = fx.table2
    else:
        raise HyperError(f"unknown subject table {subject!r}")
    c = t.carrier
    claims: list[Claim] = []

    claims.append(Claim(
        "particle table: bundled definitions match transcription",
        _same_particles(ps, fx.table1),
    ))

    mismatches = diff_tables(derived, fx.table2)
    claims.append(Claim(
        f"hypertable: derived equals transcription ({c.size**2 - len(mismatches)}/{c.size**2} cells)",
        not mismatches,
        "; ".join(
            f"cell ({c.elements[x]}, {c.elements[y]}): derived {_fmt(c, a)} transcribed {_fmt(c, b)}"
            for x, y, a, b in mismatches
        ),
    ))

    report, lists, census = _analyse(t)
    claims.append(Claim(
        "abelian: table is commutative",
        report.commutative,
        " ".join(f"({c.elements[x]}, {c.elements[y]})" for x, y in report.noncommuting_pairs),
    ))
    claims.append(Claim(
        f"reproduction: x(H) = (H)x = H for all {c.size} elements",
        report.reproductive,
        " ".join(c.elements[x] for x in report.reproduction_failures),
    ))
    claims.append(Claim(
        f"weak associativity: all {report.triples_checked} triples",
        report.weakly_associative,
        _fmt_triples(c, report.weak_failures),
    ))
    claims.append(Claim(
        "classification: Hv-group",
        report.classification == axioms.HV_GROUP,
        f"classified as {report.classification}",
    ))
    claims.append(Claim(
        "not associative",
        not report.strongly_associative,
        f"{report.unequal_triples} unequal triples",
    ))

    got = {
        "lemma52": {v.triple for v in lists.right_not_in_left},
        "lemma53": {v.triple for v in lists.left_not_in_right},
        "lemma54": {v.triple for v in lists.unequal},
    }
    headings = {
        "lemma52": "a(bc) not in (ab)c",
        "lemma53": "(ab)c not in a(bc)",
        "lemma54": "(ab)c != a(bc)",
    }
    for key, heading in headings.items():
        want = set(getattr(fx, key))
        detail = []
        if got[key] - want:
            detail.append("extra " + _fmt_triples(c, got[key] - want))
        if want - got[key]:
            detail.append("missing " + _fmt_triples(c, want - got[key]))
        claims.append(Claim(
            f"violations {heading}: {len(got[key])} triples (reference: {len(want)})",
            got[key] == want,
            "; ".join(detail),
        ))
    claims.append(Claim(
        "violations: unequal list is the union of the two containment lists",
        got["lemma54"] == got["lemma52"] | got["lemma53"],
    ))
    claims.append(Claim(
        "violations: every violating triple is still weakly associative",
        all(v.left.bits & v.right.bits for v in lists.unequal),
    ))

    counts = census.counts()
    absent = [d for d in range(1, c.size + 1) if d not in fx.theorem56]
    claims.append(Claim(
        "census: no subgroups of order " + ", ".join(map(str, absent)),
        all(counts.get(d, 0) == 0 for d in absent),
        " ".join(f"dim {d}: {counts[d]}" for d in absent if counts.get(d)),
    ))
    for d, want_masks in sorted(fx.theorem56.items()):
        have = set(census.by_dimension.get(d, ()))
        want = set(want_masks)
        detail = []
        if have - want:
            detail.append("extra " + " ".join(_fmt(c, m) for m in sorted(have - want, key=SubsetMask.sort_key)))
        if want - have:
            detail.append("missing " + " ".join(_fmt(c, m) for m in sorted(want - have, key=SubsetMask.sort_key)))
        claims.append(Claim(
            f"dim {d}: {len(have)} subgroups (reference: {len(want)})",
            have == want,
            "; ".join(detail),
        ))

    labels = fx.labels()
    bad = []
    for a, b in fx.conclusion57_pairs:
        if not (a in census and b in census and a < b):
            bad.append(f"{labels[a]} < {labels[b]}")
    claims.append(Claim(
        f"inclusions: all {len(fx.conclusion57_pairs)} listed pairs hold among computed subgroups",
        not bad,
        " ".join(bad),
    ))
    return claims


def format_claims(claims: list[Claim]) -> str:
    lines = []
    for cl in claims:
        lines.append(f"{'PASS' if cl.passed else 'FAIL'}  {cl.name}")
        if cl.detail and not cl.passed:
            lines.append(f"      {cl.detail}")
    passed = sum(cl.passed for cl in claims)
    lines.append(f"{passed}/{len(claims)} claims PASS")
    return "\n".join(lines) + "\n"
