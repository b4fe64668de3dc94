"""Carriers, subset bitmasks and finite hyperoperation tables.

A hyperoperation sends a pair of elements to a non-empty *set* of elements.
Everything here works over a fixed, ordered carrier so that subsets can be
stored as integer bitmasks: bit ``i`` set means element ``i`` is present.
"""

from __future__ import annotations

from itertools import product
from typing import Callable, Iterable, Iterator, Mapping, Sequence

MAX_CARRIER_SIZE = 64


class HyperError(ValueError):
    """Base class for invalid hyperstructure input."""


class EmptyOperandError(HyperError):
    pass


class CarrierMismatchError(HyperError):
    pass


class Carrier:
    """An ordered finite set of uniquely named elements."""

    __slots__ = ("elements", "_index")

    def __init__(self, elements: Iterable[str]):
        elements = tuple(elements)
        if not elements:
            raise HyperError("carrier must have at least one element")
        if len(elements) > MAX_CARRIER_SIZE:
            raise HyperError(
                f"carrier has {len(elements)} elements; at most {MAX_CARRIER_SIZE} supported"
            )
        for name in elements:
            if not isinstance(name, str) or not name:
                raise HyperError(f"element names must be non-empty strings, got {name!r}")
        index = {name: i for i, name in enumerate(elements)}
        if len(index) != len(elements):
            dupes = sorted({n for n in elements if elements.count(n) > 1})
            raise HyperError(f"duplicate element names: {', '.join(dupes)}")
        self.elements = elements
        self._index = index

    @property
    def size(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Carrier) and self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def __repr__(self) -> str:
        return f"Carrier({list(self.elements)!r})"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise HyperError(f"unknown element {name!r}") from None

    def mask(self, names: Iterable[str] = ()) -> SubsetMask:
        """Mask of the named elements."""
        bits = 0
        for name in names:
            bits |= 1 << self.index(name)
        return SubsetMask(bits, self.size)

    def singleton(self, i: int) -> SubsetMask:
        if not 0 <= i < self.size:
            raise HyperError(f"index {i} out of range for carrier of size {self.size}")
        return SubsetMask(1 << i, self.size)

    def full(self) -> SubsetMask:
        return SubsetMask((1 << self.size) - 1, self.size)

    def names(self, mask: SubsetMask) -> list[str]:
        """Element names of ``mask`` in carrier order."""
        if mask.carrier_size != self.size:
            raise CarrierMismatchError("carrier mismatch")
        return [self.elements[i] for i in mask]


class SubsetMask:
    """Immutable subset of a carrier, encoded as an integer bitmask."""

    __slots__ = ("bits", "carrier_size")

    def __init__(self, bits: int, carrier_size: int):
        if not 1 <= carrier_size <= MAX_CARRIER_SIZE:
            raise HyperError(f"carrier size {carrier_size} outside 1..{MAX_CARRIER_SIZE}")
        if bits < 0 or bits >> carrier_size:
            raise HyperError(f"bits {bits:#x} exceed carrier of size {carrier_size}")
        object.__setattr__(self, "bits", bits)
        object.__setattr__(self, "carrier_size", carrier_size)

    def __setattr__(self, name, value):
        raise AttributeError("SubsetMask is immutable")

    @classmethod
    def from_indices(cls, indices: Iterable[int], carrier_size: int) -> SubsetMask:
        bits = 0
        for i in indices:
            if not 0 <= i < carrier_size:
                raise HyperError(f"index {i} out of range for carrier of size {carrier_size}")
            bits |= 1 << i
        return cls(bits, carrier_size)

    def _check(self, other: SubsetMask) -> None:
        if not isinstance(other, SubsetMask):
            raise TypeError(f"expected SubsetMask, got {type(other).__name__}")
        if other.carrier_size != self.carrier_size:
            raise CarrierMismatchError("carrier mismatch")

    def __or__(self, other: SubsetMask) -> SubsetMask:
        self._check(other)
        return SubsetMask(self.bits | other.bits, self.carrier_size)

    def __and__(self, other: SubsetMask) -> SubsetMask:
        self._check(other)
        return SubsetMask(self.bits & other.bits, self.carrier_size)

    def __sub__(self, other: SubsetMask) -> SubsetMask:
        self._check(other)
        return SubsetMask(self.bits & ~other.bits, self.carrier_size)

    def __le__(self, other: SubsetMask) -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def __lt__(self, other: SubsetMask) -> bool:
        return self <= other and self.bits != other.bits

    def issubset(self, other: SubsetMask) -> bool:
        return self <= other

    def __contains__(self, i: int) -> bool:
        return 0 <= i < self.carrier_size and bool(self.bits >> i & 1)

    def __iter__(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SubsetMask)
            and self.bits == other.bits
            and self.carrier_size == other.carrier_size
        )

    def __hash__(self) -> int:
        return hash((self.bits, self.carrier_size))

    def __repr__(self) -> str:
        return f"SubsetMask({sorted(self)}, n={self.carrier_size})"

    def sort_key(self) -> tuple[int, int]:
        """Order by size, then bit pattern."""
        return (len(self), self.bits)


def _union_over(cells: Sequence[Sequence[int]], a_bits: int, b_bits: int) -> int:
    out = 0
    i_bits = a_bits
    while i_bits:
        low = i_bits & -i_bits
        row = cells[low.bit_length() - 1]
        i_bits ^= low
        j_bits = b_bits
        while j_bits:
            lowj = j_bits & -j_bits
            out |= row[lowj.bit_length() - 1]
            j_bits ^= lowj
    return out


class HyperTable:
    """A binary hyperoperation on a carrier, stored as its full Cayley hypertable.

    ``cells[i][j]`` is the non-empty mask of ``i ⊗ j``.
    """

    __slots__ = ("carrier", "cells", "_bits")

    def __init__(self, carrier: Carrier, cells: Sequence[Sequence[SubsetMask | int]]):
        n = carrier.size
        if len(cells) != n or any(len(row) != n for row in cells):
            raise HyperError(f"hypertable must be {n}x{n}")
        rows = []
        bit_rows = []
        for i, row in enumerate(cells):
            masks = []
            for j, cell in enumerate(row):
                if isinstance(cell, SubsetMask):
                    if cell.carrier_size != n:
                        raise CarrierMismatchError(f"cell ({i}, {j}): carrier mismatch")
                else:
                    cell = SubsetMask(int(cell), n)
                if not cell:
                    raise HyperError(
                        f"cell ({carrier.elements[i]}, {carrier.elements[j]}) is empty"
                    )
                masks.append(cell)
            rows.append(tuple(masks))
            bit_rows.append(tuple(m.bits for m in masks))
        self.carrier = carrier
        self.cells = tuple(rows)
        self._bits = tuple(bit_rows)

    @classmethod
    def from_names(cls, carrier: Carrier, cells: Sequence[Sequence[Iterable[str]]]) -> HyperTable:
        return cls(carrier, [[carrier.mask(c) for c in row] for row in cells])

    @classmethod
    def from_function(cls, carrier: Carrier, op: Callable[[int, int], SubsetMask]) -> HyperTable:
        n = carrier.size
        return cls(carrier, [[op(i, j) for j in range(n)] for i in range(n)])

    @property
    def size(self) -> int:
        return self.carrier.size

    @property
    def bits(self) -> tuple[tuple[int, ...], ...]:
        """Raw integer cells, for tight loops."""
        return self._bits

    def cell(self, x: int | str, y: int | str) -> SubsetMask:
        if isinstance(x, str):
            x = self.carrier.index(x)
        if isinstance(y, str):
            y = self.carrier.index(y)
        return self.cells[x][y]

    def with_cell(self, x: int, y: int, value: SubsetMask) -> HyperTable:
        """Copy of this table with one cell replaced."""
        rows = [list(r) for r in self.cells]
        rows[x][y] = value
        return HyperTable(self.carrier, rows)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, HyperTable)
            and self.carrier == other.carrier
            and self._bits == other._bits
        )

    def __hash__(self) -> int:
        return hash((self.carrier, self._bits))

    def __repr__(self) -> str:
        return f"HyperTable(n={self.size})"


def _check_operand(table: HyperTable, m: SubsetMask) -> None:
    if m.carrier_size != table.size:
        raise CarrierMismatchError("carrier mismatch")
    if not m:
        raise EmptyOperandError("empty operand")


def subset_product(table: HyperTable, a: SubsetMask, b: SubsetMask) -> SubsetMask:
    """``A ⊗ B``: union of ``x ⊗ y`` over all ``x`` in ``a`` and ``y`` in ``b``."""
    _check_operand(table, a)
    _check_operand(table, b)
    return SubsetMask(_union_over(table.bits, a.bits, b.bits), table.size)


def lift_to_powerset(table: HyperTable) -> Callable[[SubsetMask, SubsetMask], SubsetMask]:
    """The induced operation on non-empty subsets.

    Calling the result on singletons gives back the original table.
    """

    def lifted(a: SubsetMask, b: SubsetMask) -> SubsetMask:
        return subset_product(table, a, b)

    lifted.table = table  # type: ignore[attr-defined]
    return lifted


def restrict_to_singletons(
    carrier: Carrier, op: Callable[[SubsetMask, SubsetMask], SubsetMask]
) -> HyperTable:
    """Point table ``x * y = {x} ⊗ {y}`` of an operation on subsets."""
    return HyperTable.from_function(
        carrier, lambda i, j: op(carrier.singleton(i), carrier.singleton(j))
    )


def conjugation_map(carrier: Carrier, pairing: Iterable[tuple[int, int]]) -> tuple[int, ...]:
    """Involutive permutation of carrier indices from a list of pairs.

    Indices that appear in no pair are fixed points; ``(i, i)`` is allowed.
    An index paired with two different partners is an error.
    """
    n = carrier.size
    perm: list[int | None] = [None] * n
    for i, j in pairing:
        for k in (i, j):
            if not 0 <= k < n:
                raise HyperError(f"index {k} out of range for carrier of size {n}")
        for a, b in ((i, j), (j, i)):
            if perm[a] is not None and perm[a] != b:
                raise HyperError(
                    f"pairing is not an involution: {carrier.elements[a]} paired with both "
                    f"{carrier.elements[perm[a]]} and {carrier.elements[b]}"
                )
            perm[a] = b
    return tuple(i if p is None else p for i, p in enumerate(perm))


def permute_mask(perm: Sequence[int], mask: SubsetMask) -> SubsetMask:
    """Image of ``mask`` under an index permutation."""
    if len(perm) != mask.carrier_size:
        raise CarrierMismatchError("carrier mismatch")
    bits = 0
    for i in mask:
        bits |= 1 << perm[i]
    return SubsetMask(bits, mask.carrier_size)


def merge_carriers(carriers: Sequence[Carrier]) -> Carrier:
    """Union of carriers by element name, in first-declaration order."""
    seen: dict[str, None] = {}
    for c in carriers:
        for name in c:
            seen.setdefault(name)
    return Carrier(seen)


class NAryHyperOp:
    """A general n-ary hyperoperation ``H1 x ... x Hn -> P*(H1 ∪ ... ∪ Hn)``.

    ``cells`` maps index tuples (coordinate ``k`` indexes ``input_carriers[k]``)
    to non-empty masks over ``union_carrier``. The map must be total.
    """

    __slots__ = ("input_carriers", "union_carrier", "cells")

    def __init__(self, input_carriers: Sequence[Carrier], cells: Mapping[tuple[int, ...], SubsetMask]):
        input_carriers = tuple(input_carriers)
        if not input_carriers:
            raise HyperError("arity must be at least 1")
        union = merge_carriers(input_carriers)
        n = len(input_carriers)
        stored: dict[tuple[int, ...], SubsetMask] = {}
        for key, value in cells.items():
            key = tuple(key)
            if len(key) != n:
                raise HyperError(f"cell key {key} has arity {len(key)}, expected {n}")
            for k, (i, c) in enumerate(zip(key, input_carriers)):
                if not 0 <= i < c.size:
                    raise HyperError(f"cell key {key}: coordinate {k} out of range")
            if value.carrier_size != union.size:
                raise CarrierMismatchError(f"cell {key}: carrier mismatch")
            if not value:
                raise HyperError(f"cell {key} is empty")
            stored[key] = value
        expected = 1
        for c in input_carriers:
            expected *= c.size
        if len(stored) != expected:
            missing = next(t for t in product(*(range(c.size) for c in input_carriers)) if t not in stored)
            raise HyperError(f"hyperoperation undefined at {missing}")
        self.input_carriers = input_carriers
        self.union_carrier = union
        self.cells = stored

    @property
    def arity(self) -> int:
        return len(self.input_carriers)

    @classmethod
    def from_table(cls, table: HyperTable) -> NAryHyperOp:
        n = table.size
        return cls(
            (table.carrier, table.carrier),
            {(i, j): table.cells[i][j] for i in range(n) for j in range(n)},
        )

    def __call__(self, *indices: int) -> SubsetMask:
        return self.cells[tuple(indices)]


def nary_subset_extension(op: NAryHyperOp, args: Sequence[SubsetMask]) -> SubsetMask:
    """``f(A1, ..., An)``: union of ``f`` over the Cartesian product of the masks."""
    if len(args) != op.arity:
        raise HyperError(f"arity mismatch: expected {op.arity} operands, got {len(args)}")
    for a, c in zip(args, op.input_carriers):
        if a.carrier_size != c.size:
            raise CarrierMismatchError("carrier mismatch")
        if not a:
            raise EmptyOperandError("empty operand")
    out = 0
    cells = op.cells
    for key in product(*(tuple(a) for a in args)):
        out |= cells[key].bits
    return SubsetMask(out, op.union_carrier.size)
