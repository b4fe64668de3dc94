"""Particles with additive quantum numbers, and the interaction hyperoperation.

Two particles ``x, y`` interact into every outgoing pair ``a, b`` whose summed
quantum numbers equal those of ``x, y``. The hyperproduct ``x ⊗ y`` is the set
of all particles that occur in some allowed outgoing pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from itertools import combinations_with_replacement, product
from pathlib import Path
from typing import Iterable, Sequence

from .hypercore import Carrier, HyperError, HyperTable, NAryHyperOp, SubsetMask, conjugation_map

DEFAULT_AXES = ("Q", "Le", "Lmu", "Ltau")


@dataclass(frozen=True)
class QuantumNumbers:
    values: tuple[int, ...]
    axis_names: tuple[str, ...] = DEFAULT_AXES

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        object.__setattr__(self, "axis_names", tuple(self.axis_names))
        if len(self.values) != len(self.axis_names):
            raise HyperError(
                f"{len(self.values)} values for {len(self.axis_names)} axes {self.axis_names}"
            )

    @classmethod
    def zero(cls, axis_names: Sequence[str] = DEFAULT_AXES) -> QuantumNumbers:
        return cls((0,) * len(axis_names), tuple(axis_names))

    def __add__(self, other: QuantumNumbers) -> QuantumNumbers:
        if self.axis_names != other.axis_names:
            raise HyperError(f"axis mismatch: {self.axis_names} vs {other.axis_names}")
        return QuantumNumbers(tuple(a + b for a, b in zip(self.values, other.values)), self.axis_names)

    def __neg__(self) -> QuantumNumbers:
        return QuantumNumbers(tuple(-v for v in self.values), self.axis_names)

    def is_zero(self) -> bool:
        return not any(self.values)

    def as_dict(self) -> dict[str, int]:
        return dict(zip(self.axis_names, self.values))


@dataclass(frozen=True)
class Particle:
    name: str
    numbers: QuantumNumbers
    antiparticle: str


class ParticleSet:
    """An ordered, antiparticle-closed collection of particles."""

    def __init__(self, particles: Iterable[Particle]):
        particles = tuple(particles)
        if not particles:
            raise HyperError("particle set is empty")
        carrier = Carrier(p.name for p in particles)
        axes = particles[0].numbers.axis_names
        by_name = {p.name: p for p in particles}
        for p in particles:
            if p.numbers.axis_names != axes:
                raise HyperError(f"{p.name}: axes {p.numbers.axis_names} differ from {axes}")
            anti = by_name.get(p.antiparticle)
            if anti is None:
                raise HyperError(f"{p.name}: antiparticle {p.antiparticle!r} not defined")
            if anti.antiparticle != p.name:
                raise HyperError(
                    f"antiparticle relation not symmetric: {p.name} -> {anti.name} -> {anti.antiparticle}"
                )
            if anti.numbers != -p.numbers:
                raise HyperError(
                    f"{anti.name} numbers {anti.numbers.values} are not the negation of "
                    f"{p.name} numbers {p.numbers.values}"
                )
        self.particles = particles
        self.carrier = carrier
        self.axis_names = axes
        self.conjugation = conjugation_map(
            carrier, [(i, carrier.index(p.antiparticle)) for i, p in enumerate(particles)]
        )

    def __len__(self) -> int:
        return len(self.particles)

    def __getitem__(self, key: int | str) -> Particle:
        if isinstance(key, str):
            key = self.carrier.index(key)
        return self.particles[key]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ParticleSet) and self.particles == other.particles

    def __repr__(self) -> str:
        return f"ParticleSet({list(self.carrier.elements)!r})"

    def index(self, name: str) -> int:
        return self.carrier.index(name)


def total_numbers(ps: ParticleSet, members: Sequence[int]) -> QuantumNumbers:
    """Componentwise sum of the members' quantum numbers."""
    if not members:
        raise HyperError("empty member list")
    total = QuantumNumbers.zero(ps.axis_names)
    for i in members:
        total = total + ps.particles[i].numbers
    return total


def _outgoing_by_total(ps: ParticleSet, n_out: int) -> dict[tuple[int, ...], list[tuple[int, ...]]]:
    groups: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for combo in combinations_with_replacement(range(len(ps)), n_out):
        groups.setdefault(total_numbers(ps, combo).values, []).append(combo)
    return groups


def allowed_outgoing_pairs(ps: ParticleSet, x: int, y: int) -> set[tuple[int, int]]:
    """Unordered pairs ``(a, b)``, ``a <= b``, conserving every quantum number of ``x + y``."""
    target = total_numbers(ps, [x, y])
    n = len(ps)
    return {
        (a, b)
        for a in range(n)
        for b in range(a, n)
        if total_numbers(ps, [a, b]) == target
    }


def derive_cell(ps: ParticleSet, x: int, y: int) -> SubsetMask:
    """All particles appearing in some allowed outgoing pair of ``x + y``."""
    bits = 0
    for a, b in allowed_outgoing_pairs(ps, x, y):
        bits |= 1 << a | 1 << b
    return SubsetMask(bits, len(ps))


def derive_table(ps: ParticleSet) -> HyperTable:
    """The 2 -> 2 interaction hypertable of a particle set."""
    n = len(ps)
    union_by_total = {
        total: _collapse(combos, n) for total, combos in _outgoing_by_total(ps, 2).items()
    }
    return HyperTable(
        ps.carrier,
        [[union_by_total[total_numbers(ps, [x, y]).values] for y in range(n)] for x in range(n)],
    )


def _collapse(combos: Iterable[tuple[int, ...]], n: int) -> SubsetMask:
    bits = 0
    for combo in combos:
        for i in combo:
            bits |= 1 << i
    return SubsetMask(bits, n)


def derive_nary(ps: ParticleSet, n_in: int, n_out: int = 2) -> NAryHyperOp:
    """The ``n_in -> n_out`` interaction hyperoperation.

    Each input tuple maps to the union of all outgoing multisets of size
    ``n_out`` with the same total quantum numbers. Raises if some input tuple
    has no conserving outgoing multiset.
    """
    if n_in < 1 or n_out < 1:
        raise HyperError("n_in and n_out must both be at least 1")
    n = len(ps)
    union_by_total = {
        total: _collapse(combos, n) for total, combos in _outgoing_by_total(ps, n_out).items()
    }
    cells = {}
    for key in product(range(n), repeat=n_in):
        total = total_numbers(ps, key).values
        if total not in union_by_total:
            names = ", ".join(ps.carrier.elements[i] for i in key)
            raise HyperError(f"no conserving {n_out}-particle outcome for ({names})")
        cells[key] = union_by_total[total]
    return NAryHyperOp([ps.carrier] * n_in, cells)


class ParseError(HyperError):
    """Malformed particle-definition input."""

    def __init__(self, line: int, field: str, message: str):
        self.line = line
        self.field = field
        super().__init__(f"line {line}, field {field}: {message}")


def parse_particles(text: str) -> ParticleSet:
    """Parse the line-oriented particle-definition format.

    One particle per line, ``name, <one integer per axis>, antiparticle``.
    ``#`` starts a comment; ``#axes: A,B,...`` declares the axis names and
    must precede the first particle. Without it the axes are Q, Le, Lmu, Ltau.
    """
    axes = DEFAULT_AXES
    rows: list[tuple[int, str, list[str], str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.lower().startswith("axes:"):
                if rows:
                    raise ParseError(lineno, "axes", "axes header after first particle")
                axes = tuple(a.strip() for a in body[5:].split(","))
                if not axes or any(not a for a in axes):
                    raise ParseError(lineno, "axes", "empty axis name")
                if len(set(axes)) != len(axes):
                    raise ParseError(lineno, "axes", "duplicate axis name")
            continue
        fields = [f.strip() for f in line.split(",")]
        if len(fields) != len(axes) + 2:
            raise ParseError(
                lineno, "line", f"expected {len(axes) + 2} comma-separated fields, got {len(fields)}"
            )
        if not fields[0]:
            raise ParseError(lineno, "name", "empty particle name")
        if not fields[-1]:
            raise ParseError(lineno, "antiparticle", "empty antiparticle name")
        rows.append((lineno, fields[0], fields[1:-1], fields[-1]))

    particles = []
    seen: dict[str, int] = {}
    for lineno, name, values, anti in rows:
        if name in seen:
            raise ParseError(lineno, "name", f"duplicate particle {name!r} (first on line {seen[name]})")
        seen[name] = lineno
        nums = []
        for axis, v in zip(axes, values):
            try:
                nums.append(int(v))
            except ValueError:
                raise ParseError(lineno, axis, f"not an integer: {v!r}") from None
        particles.append(Particle(name, QuantumNumbers(tuple(nums), axes), anti))
    if not particles:
        raise ParseError(0, "file", "no particles defined")
    by_name = {p.name: p for p in particles}
    for (lineno, name, _, anti), p in zip(rows, particles):
        partner = by_name.get(anti)
        if partner is None:
            raise ParseError(lineno, "antiparticle", f"{anti!r} is not defined")
        if partner.antiparticle != name:
            raise ParseError(
                lineno, "antiparticle", f"{anti!r} names {partner.antiparticle!r} as its antiparticle"
            )
        if partner.numbers != -p.numbers:
            raise ParseError(
                lineno, "antiparticle", f"{anti!r} numbers are not the negation of {name!r} numbers"
            )
    return ParticleSet(particles)


def format_particles(ps: ParticleSet) -> str:
    lines = ["#axes: " + ",".join(ps.axis_names)]
    for p in ps.particles:
        lines.append(", ".join([p.name, *map(str, p.numbers.values), p.antiparticle]))
    return "\n".join(lines) + "\n"


def load_particles(path: str | Path) -> ParticleSet:
    return parse_particles(Path(path).read_text(encoding="utf-8"))


def leptons() -> ParticleSet:
    """The bundled twelve-lepton definition."""
    text = resources.files("hyperlep").joinpath("data/leptons.txt").read_text(encoding="utf-8")
    return parse_particles(text)
