"""Binary relations on a finite carrier as bit-packed boolean matrices.

Row a of `rows` holds the successors of a: bit b is set iff a R b. With
carriers capped at 4096 after squaring, base carriers stay <= 64, so a row
is a single machine word.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iterprod
from typing import Iterable, Iterator

from .algebra import ElementSet, FiniteAlgebra
from .errors import SizeMismatch, ValueOutOfRange


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class BinRel:
    size: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.size:
            raise SizeMismatch("row count differs from carrier size")
        full = (1 << self.size) - 1
        for row in self.rows:
            if row < 0 or row & ~full:
                raise ValueOutOfRange("row bits exceed carrier size")

    @classmethod
    def empty(cls, size: int) -> "BinRel":
        return cls(size, (0,) * size)

    @classmethod
    def diagonal(cls, size: int) -> "BinRel":
        return cls(size, tuple(1 << a for a in range(size)))

    @classmethod
    def full(cls, size: int) -> "BinRel":
        return cls(size, ((1 << size) - 1,) * size)

    @classmethod
    def from_pairs(cls, size: int, pairs: Iterable[tuple[int, int]]) -> "BinRel":
        rows = [0] * size
        for a, b in pairs:
            if not (0 <= a < size and 0 <= b < size):
                raise ValueOutOfRange(f"pair ({a},{b}) outside carrier of size {size}")
            rows[a] |= 1 << b
        return cls(size, tuple(rows))

    @classmethod
    def from_support(cls, support: ElementSet, size: int) -> "BinRel":
        """Decode a subset of the squared carrier (pair (a,b) at bit a*size+b)."""
        if support.size != size * size:
            raise SizeMismatch("support set is not over the squared carrier")
        rows = [0] * size
        for code in support:
            rows[code // size] |= 1 << (code % size)
        return cls(size, tuple(rows))

    def support(self) -> ElementSet:
        """Encode as a subset of the squared carrier."""
        mask = 0
        for a, row in enumerate(self.rows):
            mask |= row << (a * self.size)
        return ElementSet(self.size * self.size, mask)

    def pairs(self) -> list[tuple[int, int]]:
        return [(a, b) for a in range(self.size) for b in _bits(self.rows[a])]

    def __contains__(self, pair: tuple[int, int]) -> bool:
        a, b = pair
        return 0 <= a < self.size and 0 <= b < self.size and bool(self.rows[a] >> b & 1)

    def __len__(self) -> int:
        return sum(row.bit_count() for row in self.rows)

    def _check(self, other: "BinRel") -> None:
        if self.size != other.size:
            raise SizeMismatch("relations over different carriers")

    def union(self, other: "BinRel") -> "BinRel":
        self._check(other)
        return BinRel(self.size, tuple(a | b for a, b in zip(self.rows, other.rows)))

    def issubset(self, other: "BinRel") -> bool:
        self._check(other)
        return all(a & ~b == 0 for a, b in zip(self.rows, other.rows))

    def is_reflexive(self) -> bool:
        return all(row >> a & 1 for a, row in enumerate(self.rows))

    def is_symmetric(self) -> bool:
        return self == opposite(self)

    def is_transitive(self) -> bool:
        return compose(self, self).issubset(self)


def compose(first: BinRel, second: BinRel) -> BinRel:
    """a (first;second) c iff some b has a first b and b second c."""
    first._check(second)
    rows = []
    for row in first.rows:
        acc = 0
        for b in _bits(row):
            acc |= second.rows[b]
        rows.append(acc)
    return BinRel(first.size, tuple(rows))


def opposite(rel: BinRel) -> BinRel:
    rows = [0] * rel.size
    for a, row in enumerate(rel.rows):
        bit = 1 << a
        for b in _bits(row):
            rows[b] |= bit
    return BinRel(rel.size, tuple(rows))


def left_image(rel: BinRel, targets: ElementSet) -> ElementSet:
    """{x | x R y for some y in targets}."""
    if targets.size != rel.size:
        raise SizeMismatch("target set over a different carrier")
    mask = 0
    for a, row in enumerate(rel.rows):
        if row & targets.mask:
            mask |= 1 << a
    return ElementSet(rel.size, mask)


def right_image(rel: BinRel, sources: ElementSet) -> ElementSet:
    """{x | y R x for some y in sources}."""
    if sources.size != rel.size:
        raise SizeMismatch("source set over a different carrier")
    mask = 0
    for y in sources:
        mask |= rel.rows[y]
    return ElementSet(rel.size, mask)


def is_compatible(algebra: FiniteAlgebra, rel: BinRel) -> bool:
    """True iff the relation's support is closed under every operation acting
    componentwise and contains each constant pair (c, c)."""
    if rel.size != algebra.size:
        raise SizeMismatch("relation over a different carrier")
    n = algebra.size
    support = rel.pairs()
    for _, arity, table in algebra.ops():
        if arity == 0:
            c = table[0]
            if (c, c) not in rel:
                return False
            continue
        for tup in iterprod(support, repeat=arity):
            left = 0
            right = 0
            for a, b in tup:
                left = left * n + a
                right = right * n + b
            if (table[left], table[right]) not in rel:
                return False
    return True
