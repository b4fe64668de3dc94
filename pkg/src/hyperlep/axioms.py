"""Axiom checks for finite hypergroupoids.

For a triple ``(a, b, c)`` the *left* association is ``(a ⊗ b) ⊗ c`` and the
*right* association is ``a ⊗ (b ⊗ c)``, both computed with the subset
extension of the operation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import NamedTuple

from .hypercore import HyperTable, SubsetMask

HYPERGROUPOID = "hypergroupoid"
SEMIHYPERGROUP = "semihypergroup"
HYPERGROUP = "hypergroup"
HV_GROUP = "Hv-group"

RIGHT_NOT_IN_LEFT = "right_not_in_left"
LEFT_NOT_IN_RIGHT = "left_not_in_right"
UNEQUAL = "unequal"


@dataclass(frozen=True)
class TripleViolation:
    a: int
    b: int
    c: int
    left: SubsetMask
    right: SubsetMask
    kind: str

    def __post_init__(self):
        holds = {
            RIGHT_NOT_IN_LEFT: not self.right <= self.left,
            LEFT_NOT_IN_RIGHT: not self.left <= self.right,
            UNEQUAL: self.left != self.right,
        }
        if not holds.get(self.kind, False):
            raise ValueError(f"{self.triple}: kind {self.kind!r} does not hold")

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)


class ViolationLists(NamedTuple):
    right_not_in_left: list[TripleViolation]
    left_not_in_right: list[TripleViolation]
    unequal: list[TripleViolation]


@dataclass(frozen=True)
class AxiomReport:
    commutative: bool
    reproductive: bool
    weakly_associative: bool
    strongly_associative: bool
    classification: str
    triples_checked: int = 0
    reproduction_failures: tuple[int, ...] = ()
    weak_failures: tuple[tuple[int, int, int], ...] = ()
    unequal_triples: int = 0
    noncommuting_pairs: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self):
        if self.strongly_associative and not self.weakly_associative:
            raise ValueError("strong associativity implies weak associativity")
        if self.classification != _classification(
            self.reproductive, self.weakly_associative, self.strongly_associative
        ):
            raise ValueError(f"classification {self.classification!r} inconsistent with flags")

    @property
    def is_hv_group(self) -> bool:
        # Every hypergroup is also an Hv-group.
        return self.weakly_associative and self.reproductive


def _classification(reproductive: bool, weak: bool, strong: bool) -> str:
    if strong:
        return HYPERGROUP if reproductive else SEMIHYPERGROUP
    if weak and reproductive:
        return HV_GROUP
    return HYPERGROUPOID


def _left_right(bits, a: int, b: int, c: int) -> tuple[int, int]:
    left = 0
    u_bits = bits[a][b]
    while u_bits:
        low = u_bits & -u_bits
        left |= bits[low.bit_length() - 1][c]
        u_bits ^= low
    right = 0
    row = bits[a]
    v_bits = bits[b][c]
    while v_bits:
        low = v_bits & -v_bits
        right |= row[low.bit_length() - 1]
        v_bits ^= low
    return left, right


def associations(t: HyperTable, a: int, b: int, c: int) -> tuple[SubsetMask, SubsetMask]:
    """``((a ⊗ b) ⊗ c, a ⊗ (b ⊗ c))``."""
    left, right = _left_right(t.bits, a, b, c)
    return SubsetMask(left, t.size), SubsetMask(right, t.size)


def noncommuting_pairs(t: HyperTable) -> list[tuple[int, int]]:
    n = t.size
    return [(x, y) for x in range(n) for y in range(x + 1, n) if t.bits[x][y] != t.bits[y][x]]


def is_commutative(t: HyperTable) -> bool:
    return not noncommuting_pairs(t)


def check_reproduction(t: HyperTable) -> tuple[bool, list[int]]:
    """Whether ``x ⊗ H = H ⊗ x = H`` for every ``x``; also the failing ``x``."""
    n = t.size
    full = (1 << n) - 1
    bits = t.bits
    failing = []
    for x in range(n):
        row = col = 0
        for y in range(n):
            row |= bits[x][y]
            col |= bits[y][x]
        if row != full or col != full:
            failing.append(x)
    return not failing, failing


def check_weak_associativity(t: HyperTable) -> tuple[bool, list[tuple[int, int, int]]]:
    """Whether the two associations of every triple intersect; also the failing triples."""
    bits = t.bits
    failing = [tri for tri in product(range(t.size), repeat=3) if not _meet(bits, *tri)]
    return not failing, failing


def _meet(bits, a, b, c) -> bool:
    left, right = _left_right(bits, a, b, c)
    return bool(left & right)


def associativity_violations(t: HyperTable) -> ViolationLists:
    """Triples where the two associations differ, split three ways.

    Lists are in lexicographic ``(a, b, c)`` index order. The ``unequal`` list
    is the union of the other two.
    """
    out = ViolationLists([], [], [])
    n = t.size
    bits = t.bits
    for a, b, c in product(range(n), repeat=3):
        left, right = _left_right(bits, a, b, c)
        if left == right:
            continue
        lm, rm = SubsetMask(left, n), SubsetMask(right, n)
        if right & ~left:
            out.right_not_in_left.append(TripleViolation(a, b, c, lm, rm, RIGHT_NOT_IN_LEFT))
        if left & ~right:
            out.left_not_in_right.append(TripleViolation(a, b, c, lm, rm, LEFT_NOT_IN_RIGHT))
        out.unequal.append(TripleViolation(a, b, c, lm, rm, UNEQUAL))
    return out


def is_strongly_associative(t: HyperTable) -> bool:
    bits = t.bits
    for a, b, c in product(range(t.size), repeat=3):
        left, right = _left_right(bits, a, b, c)
        if left != right:
            return False
    return True


def classify(t: HyperTable) -> AxiomReport:
    """Run every axiom check and name the strongest structure that applies.

    Associative and reproductive gives ``hypergroup``; weakly associative and
    reproductive but not associative gives ``Hv-group``; associative only gives
    ``semihypergroup``; anything else is a ``hypergroupoid``.
    """
    reproductive, repro_fail = check_reproduction(t)
    weak, weak_fail = check_weak_associativity(t)
    unequal = len(associativity_violations(t).unequal)
    strong = unequal == 0
    pairs = noncommuting_pairs(t)
    return AxiomReport(
        commutative=not pairs,
        reproductive=reproductive,
        weakly_associative=weak,
        strongly_associative=strong,
        classification=_classification(reproductive, weak, strong),
        triples_checked=t.size**3,
        reproduction_failures=tuple(repro_fail),
        weak_failures=tuple(weak_fail),
        unequal_triples=unequal,
        noncommuting_pairs=tuple(pairs),
    )
