"""Finite universes, bitmask subsets and set-valued maps.

Element identity is the positional index inside a :class:`Universe`; labels
only matter at the I/O boundary. Every :class:`Subset` is an int bitmask
bound to its universe, and a :class:`SetValuedMap` stores one image mask per
source element.

Approximations use the Pawlak names::

    lower(F, A) = {x : F(x) ⊆ A}
    upper(F, A) = {x : F(x) ∩ A ≠ ∅}
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import SizeCapExceeded, StructuralError, UniverseMismatch

MAX_UNIVERSE = 256

LOWER_FORMULA = "{x : F(x) ⊆ A}"
UPPER_FORMULA = "{x : F(x) ∩ A ≠ ∅}"
BOUNDARY_FORMULA = "upper \\ lower"


class Universe:
    """An ordered, non-empty collection of distinct labels."""

    __slots__ = ("labels", "_index", "_hash")

    def __init__(self, labels: Iterable[object]):
        labels = tuple(str(label) for label in labels)
        if not labels:
            raise StructuralError("a universe needs at least one element")
        if len(labels) > MAX_UNIVERSE:
            raise SizeCapExceeded(f"universe of {len(labels)} elements exceeds cap {MAX_UNIVERSE}")
        index = {}
        for i, label in enumerate(labels):
            if label in index:
                raise StructuralError(f"duplicate label {label!r}")
            index[label] = i
        self.labels = labels
        self._index = index
        self._hash = hash(labels)

    @classmethod
    def range(cls, n: int, start: int = 0) -> "Universe":
        return cls(range(start, start + n))

    @property
    def size(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    def index(self, label: object) -> int:
        try:
            return self._index[str(label)]
        except KeyError:
            raise StructuralError(f"{label!r} is not an element of {self!r}") from None

    def label(self, index: int) -> str:
        return self.labels[index]

    @property
    def full_mask(self) -> int:
        return (1 << len(self.labels)) - 1

    def subset(self, labels: Iterable[object] = ()) -> "Subset":
        bits = 0
        for label in labels:
            bits |= 1 << self.index(label)
        return Subset(self, bits)

    def from_indices(self, indices: Iterable[int]) -> "Subset":
        bits = 0
        for i in indices:
            if not 0 <= i < len(self.labels):
                raise StructuralError(f"index {i} out of range for {self!r}")
            bits |= 1 << i
        return Subset(self, bits)

    def empty(self) -> "Subset":
        return Subset(self, 0)

    def full(self) -> "Subset":
        return Subset(self, self.full_mask)

    def all_subsets(self) -> Iterator["Subset"]:
        """Every subset, in binary-counter order."""
        for bits in range(1 << len(self.labels)):
            yield Subset(self, bits)

    def __eq__(self, other: object) -> bool:
        return self is other or (isinstance(other, Universe) and self.labels == other.labels)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Universe({' '.join(self.labels)})"


def _check_same(a: "Universe", b: "Universe") -> None:
    if a is not b and a != b:
        raise UniverseMismatch(f"{a!r} and {b!r} are different universes")


@dataclass(frozen=True)
class Subset:
    """A subset of a universe stored as a membership bitmask."""

    universe: Universe
    bits: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.universe.size:
            raise StructuralError(f"bitmask {self.bits:#x} has bits outside {self.universe!r}")

    def _other(self, other: "Subset") -> int:
        if not isinstance(other, Subset):
            raise StructuralError(f"expected a Subset, got {type(other).__name__}")
        _check_same(self.universe, other.universe)
        return other.bits

    def union(self, other: "Subset") -> "Subset":
        return Subset(self.universe, self.bits | self._other(other))

    def intersection(self, other: "Subset") -> "Subset":
        return Subset(self.universe, self.bits & self._other(other))

    def difference(self, other: "Subset") -> "Subset":
        return Subset(self.universe, self.bits & ~self._other(other))

    def symmetric_difference(self, other: "Subset") -> "Subset":
        return Subset(self.universe, self.bits ^ self._other(other))

    def complement(self) -> "Subset":
        return Subset(self.universe, self.universe.full_mask & ~self.bits)

    def issubset(self, other: "Subset") -> bool:
        return self.bits & ~self._other(other) == 0

    def issuperset(self, other: "Subset") -> bool:
        return self._other(other) & ~self.bits == 0

    __or__ = union
    __and__ = intersection
    __sub__ = difference
    __xor__ = symmetric_difference
    __le__ = issubset
    __ge__ = issuperset

    def __lt__(self, other: "Subset") -> bool:
        return self.issubset(other) and self.bits != other.bits

    def __gt__(self, other: "Subset") -> bool:
        return self.issuperset(other) and self.bits != other.bits

    def __invert__(self) -> "Subset":
        return self.complement()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __iter__(self) -> Iterator[int]:
        bits, i = self.bits, 0
        while bits:
            if bits & 1:
                yield i
            bits >>= 1
            i += 1

    def __contains__(self, label: object) -> bool:
        return bool(self.bits >> self.universe.index(label) & 1)

    def has_index(self, i: int) -> bool:
        return bool(self.bits >> i & 1)

    def indices(self) -> list[int]:
        return list(self)

    def labels(self) -> list[str]:
        return [self.universe.labels[i] for i in self]

    def format(self) -> str:
        """Canonical text form: ``{a b c}`` in universe order."""
        return "{" + " ".join(self.labels()) + "}"

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"Subset({self.format()})"


def subset_algebra(op: str, a: Subset, b: Subset | None = None):
    """Dispatch a named set operation. Mostly useful from the CLI and tests."""
    if op == "complement":
        return a.complement()
    if b is None:
        raise StructuralError(f"{op} needs two operands")
    ops = {
        "union": Subset.union,
        "intersection": Subset.intersection,
        "difference": Subset.difference,
        "symmetric-difference": Subset.symmetric_difference,
        "is-subset-of": Subset.issubset,
        "equality": lambda x, y: x._other(y) == x.bits,
    }
    try:
        return ops[op](a, b)
    except KeyError:
        raise StructuralError(f"unknown set operation {op!r}") from None


@dataclass(frozen=True)
class RoughPair:
    lower: Subset
    upper: Subset
    boundary: Subset

    @property
    def is_rough(self) -> bool:
        return bool(self.boundary)

    @property
    def is_exact(self) -> bool:
        return not self.boundary


class SetValuedMap:
    """A map from a source universe to subsets of a target universe."""

    __slots__ = ("source", "target", "table")

    def __init__(self, source: Universe, target: Universe, table: Sequence[int]):
        table = tuple(int(t) for t in table)
        if len(table) != source.size:
            raise StructuralError(f"map table has {len(table)} entries, source has {source.size}")
        full = target.full_mask
        for t in table:
            if t < 0 or t & ~full:
                raise StructuralError(f"image mask {t:#x} has bits outside {target!r}")
        self.source = source
        self.target = target
        self.table = table

    @classmethod
    def from_mapping(cls, source: Universe, target: Universe,
                     images: Mapping[object, Iterable[object]]) -> "SetValuedMap":
        """Build from ``{source label: target labels}``; missing sources map to ∅."""
        table = [0] * source.size
        for x, ys in images.items():
            table[source.index(x)] = target.subset(ys).bits
        return cls(source, target, table)

    @classmethod
    def from_function(cls, source: Universe, target: Universe, fn) -> "SetValuedMap":
        """``fn(index) -> iterable of target indices``."""
        return cls(source, target, [target.from_indices(fn(i)).bits for i in range(source.size)])

    @classmethod
    def constant(cls, source: Universe, target: Universe, value: Subset) -> "SetValuedMap":
        _check_same(target, value.universe)
        return cls(source, target, [value.bits] * source.size)

    def __call__(self, x: object) -> Subset:
        return Subset(self.target, self.table[self.source.index(x)])

    def at(self, i: int) -> Subset:
        return Subset(self.target, self.table[i])

    @property
    def total(self) -> bool:
        return all(self.table)

    def _target_bits(self, a: Subset) -> int:
        if not isinstance(a, Subset):
            raise StructuralError(f"expected a Subset, got {type(a).__name__}")
        _check_same(self.target, a.universe)
        return a.bits

    def _same_shape(self, other: "SetValuedMap") -> None:
        _check_same(self.source, other.source)
        _check_same(self.target, other.target)

    def domain(self) -> Subset:
        bits = 0
        for i, t in enumerate(self.table):
            if t:
                bits |= 1 << i
        return Subset(self.source, bits)

    def image(self) -> Subset:
        bits = 0
        for t in self.table:
            bits |= t
        return Subset(self.target, bits)

    def lower(self, a: Subset) -> Subset:
        a = self._target_bits(a)
        bits = 0
        for i, t in enumerate(self.table):
            if t & ~a == 0:
                bits |= 1 << i
        return Subset(self.source, bits)

    def upper(self, a: Subset) -> Subset:
        a = self._target_bits(a)
        bits = 0
        for i, t in enumerate(self.table):
            if t & a:
                bits |= 1 << i
        return Subset(self.source, bits)

    # inverse-image vocabulary for the same two operators
    lower_inverse_image = lower
    upper_inverse_image = upper

    def rough_pair(self, a: Subset) -> RoughPair:
        lo, up = self.lower(a), self.upper(a)
        return RoughPair(lo, up, up.difference(lo))

    def inverse(self) -> "SetValuedMap":
        table = [0] * self.target.size
        for x, t in enumerate(self.table):
            y = 0
            while t:
                if t & 1:
                    table[y] |= 1 << x
                t >>= 1
                y += 1
        return SetValuedMap(self.target, self.source, table)

    def union(self, other: "SetValuedMap") -> "SetValuedMap":
        self._same_shape(other)
        return SetValuedMap(self.source, self.target, [a | b for a, b in zip(self.table, other.table)])

    def intersection(self, other: "SetValuedMap") -> "SetValuedMap":
        """Pointwise intersection. The result's ``total`` flag tells whether every meet is non-empty."""
        self._same_shape(other)
        return SetValuedMap(self.source, self.target, [a & b for a, b in zip(self.table, other.table)])

    def images(self) -> list[Subset]:
        return [Subset(self.target, t) for t in self.table]

    def items(self) -> Iterator[tuple[str, Subset]]:
        for i, t in enumerate(self.table):
            yield self.source.labels[i], Subset(self.target, t)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, SetValuedMap) and self.source == other.source
                and self.target == other.target and self.table == other.table)

    def __hash__(self) -> int:
        return hash((self.source, self.target, self.table))

    def __repr__(self) -> str:
        body = ", ".join(f"{x}: {s.format()}" for x, s in self.items())
        return f"SetValuedMap({body})"


def domain(F: SetValuedMap) -> Subset:
    return F.domain()


def image(F: SetValuedMap) -> Subset:
    return F.image()


def lower_approx(F: SetValuedMap, A: Subset) -> Subset:
    return F.lower(A)


def upper_approx(F: SetValuedMap, A: Subset) -> Subset:
    return F.upper(A)


def rough_pair(F: SetValuedMap, A: Subset) -> RoughPair:
    return F.rough_pair(A)


def invert(F: SetValuedMap) -> SetValuedMap:
    return F.inverse()


def union_maps(F1: SetValuedMap, F2: SetValuedMap) -> SetValuedMap:
    return F1.union(F2)


def intersect_maps(F1: SetValuedMap, F2: SetValuedMap) -> SetValuedMap:
    return F1.intersection(F2)
