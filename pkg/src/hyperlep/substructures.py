"""Closed subsets (Hv-subgroups), their census by size, and the inclusion order."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .hypercore import EmptyOperandError, HyperError, HyperTable, SubsetMask, subset_product

EXHAUSTIVE_LIMIT = 24


def _product_bits(bits, mask: int) -> int:
    out = 0
    a_bits = mask
    while a_bits:
        low = a_bits & -a_bits
        row = bits[low.bit_length() - 1]
        a_bits ^= low
        b_bits = mask
        while b_bits:
            lowb = b_bits & -b_bits
            out |= row[lowb.bit_length() - 1]
            b_bits ^= lowb
    return out


def _closed_bits(bits, mask: int) -> bool:
    a_bits = mask
    while a_bits:
        low = a_bits & -a_bits
        row = bits[low.bit_length() - 1]
        a_bits ^= low
        b_bits = mask
        while b_bits:
            lowb = b_bits & -b_bits
            if row[lowb.bit_length() - 1] & ~mask:
                return False
            b_bits ^= lowb
    return True


def _require_nonempty(t: HyperTable, k: SubsetMask) -> None:
    if k.carrier_size != t.size:
        raise HyperError("carrier mismatch")
    if not k:
        raise EmptyOperandError("empty operand")


def is_closed(t: HyperTable, k: SubsetMask) -> bool:
    """Whether ``a ⊗ b ⊆ k`` for all ``a, b`` in ``k``."""
    _require_nonempty(t, k)
    return _closed_bits(t.bits, k.bits)


def closure_of(t: HyperTable, seed: SubsetMask) -> SubsetMask:
    """Smallest closed mask containing ``seed``."""
    _require_nonempty(t, seed)
    mask = seed.bits
    while True:
        grown = mask | _product_bits(t.bits, mask)
        if grown == mask:
            return SubsetMask(mask, t.size)
        mask = grown


def verify_reproduction_within(t: HyperTable, k: SubsetMask) -> bool:
    """Whether ``a ⊗ k = k`` for every ``a`` in a closed mask ``k``."""
    if not is_closed(t, k):
        raise HyperError(f"{t.carrier.names(k)} is not closed")
    return all(subset_product(t, t.carrier.singleton(a), k) == k for a in k)


@dataclass(frozen=True)
class SubgroupCensus:
    carrier_size: int
    by_dimension: dict[int, tuple[SubsetMask, ...]]

    @property
    def total(self) -> int:
        return sum(len(v) for v in self.by_dimension.values())

    def counts(self) -> dict[int, int]:
        return {d: len(v) for d, v in sorted(self.by_dimension.items())}

    def members(self) -> list[SubsetMask]:
        """All members, by size then bit pattern."""
        return [m for d in sorted(self.by_dimension) for m in self.by_dimension[d]]

    def __contains__(self, mask: SubsetMask) -> bool:
        return mask in self.by_dimension.get(len(mask), ())

    def labels(self) -> dict[SubsetMask, str]:
        """``L^d_i`` labels, ``i`` counted from 1 in sorted order within each size."""
        return {
            m: f"L^{d}_{i}"
            for d, masks in sorted(self.by_dimension.items())
            for i, m in enumerate(masks, 1)
        }


def enumerate_subgroups(t: HyperTable, max_dimension: int | None = None) -> SubgroupCensus:
    """Every closed non-empty subset, grouped by size.

    Scans all ``2^n - 1`` masks. For carriers above ``EXHAUSTIVE_LIMIT`` pass
    ``max_dimension`` to scan only subsets up to that size.
    """
    n = t.size
    bits = t.bits
    found: dict[int, list[int]] = {}
    if max_dimension is None:
        if n > EXHAUSTIVE_LIMIT:
            raise HyperError(
                f"carrier of size {n} exceeds the exhaustive limit of {EXHAUSTIVE_LIMIT}; "
                "pass max_dimension to scan only small subsets"
            )
        for mask in range(1, 1 << n):
            if _closed_bits(bits, mask):
                found.setdefault(mask.bit_count(), []).append(mask)
    else:
        if max_dimension < 1:
            raise HyperError("max_dimension must be at least 1")
        max_dimension = min(max_dimension, n)
        budget = sum(comb(n, d) for d in range(1, max_dimension + 1))
        if budget > 1 << EXHAUSTIVE_LIMIT:
            raise HyperError(f"{budget} candidate subsets is too many; lower max_dimension")
        for d in range(1, max_dimension + 1):
            for combo in combinations(range(n), d):
                mask = 0
                for i in combo:
                    mask |= 1 << i
                if _closed_bits(bits, mask):
                    found.setdefault(d, []).append(mask)
    return SubgroupCensus(
        n, {d: tuple(SubsetMask(m, n) for m in sorted(ms)) for d, ms in sorted(found.items())}
    )


@dataclass(frozen=True)
class InclusionLattice:
    nodes: tuple[SubsetMask, ...]
    edges: tuple[tuple[SubsetMask, SubsetMask], ...]
    hasse_edges: tuple[tuple[SubsetMask, SubsetMask], ...]


def _pair_key(pair):
    return (pair[0].sort_key(), pair[1].sort_key())


def inclusion_lattice(census: SubgroupCensus) -> InclusionLattice:
    """All strict inclusions between census members, and their Hasse reduction."""
    nodes = tuple(census.members())
    edges = [(a, b) for a in nodes for b in nodes if a < b]
    edges.sort(key=_pair_key)
    hasse = [
        (a, b) for a, b in edges if not any(a < c < b for c in nodes if len(a) < len(c) < len(b))
    ]
    return InclusionLattice(nodes, tuple(edges), tuple(hasse))
