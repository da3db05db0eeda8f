"""Fixed-universe node sets backed by a single Python integer bitmask."""

from __future__ import annotations

from typing import Iterable, Iterator


def iter_bits(bits: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``bits`` in ascending order."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


class NodeSet:
    """An immutable set of node indices drawn from ``range(universe_size)``.

    Set algebra is plain integer bit logic, so union, intersection,
    difference and containment never loop over elements. Operands must
    share a universe; mixing universes raises ``ValueError``.

    Membership queries outside the universe raise ``IndexError`` rather
    than answering ``False``.
    """

    __slots__ = ("_bits", "_size")

    def __init__(self, universe_size: int, members: Iterable[int] = ()) -> None:
        if universe_size < 0:
            raise ValueError("universe_size must be non-negative")
        bits = 0
        for i in members:
            if not 0 <= i < universe_size:
                raise IndexError(f"node {i} outside universe of size {universe_size}")
            bits |= 1 << i
        self._size = universe_size
        self._bits = bits

    @classmethod
    def from_bits(cls, universe_size: int, bits: int) -> NodeSet:
        if bits < 0 or bits >> universe_size:
            raise IndexError(f"bitmask exceeds universe of size {universe_size}")
        obj = cls.__new__(cls)
        obj._size = universe_size
        obj._bits = bits
        return obj

    @classmethod
    def empty(cls, universe_size: int) -> NodeSet:
        return cls.from_bits(universe_size, 0)

    @classmethod
    def full(cls, universe_size: int) -> NodeSet:
        return cls.from_bits(universe_size, (1 << universe_size) - 1)

    @property
    def bits(self) -> int:
        return self._bits

    @property
    def universe_size(self) -> int:
        return self._size

    def _check(self, other: object) -> NodeSet:
        if not isinstance(other, NodeSet):
            raise TypeError(f"expected NodeSet, got {type(other).__name__}")
        if other._size != self._size:
            raise ValueError(
                f"universe mismatch: {self._size} vs {other._size}"
            )
        return other

    def __contains__(self, i: object) -> bool:
        if not isinstance(i, int):
            raise TypeError("node indices are integers")
        if not 0 <= i < self._size:
            raise IndexError(f"node {i} outside universe of size {self._size}")
        return bool(self._bits >> i & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self._bits)

    def __len__(self) -> int:
        return self._bits.bit_count()

    def __bool__(self) -> bool:
        return self._bits != 0

    def __or__(self, other: NodeSet) -> NodeSet:
        return NodeSet.from_bits(self._size, self._bits | self._check(other)._bits)

    def __and__(self, other: NodeSet) -> NodeSet:
        return NodeSet.from_bits(self._size, self._bits & self._check(other)._bits)

    def __sub__(self, other: NodeSet) -> NodeSet:
        return NodeSet.from_bits(self._size, self._bits & ~self._check(other)._bits)

    def __xor__(self, other: NodeSet) -> NodeSet:
        return NodeSet.from_bits(self._size, self._bits ^ self._check(other)._bits)

    def __le__(self, other: NodeSet) -> bool:
        return self._bits & ~self._check(other)._bits == 0

    def __lt__(self, other: NodeSet) -> bool:
        return self <= other and self._bits != other._bits

    def __ge__(self, other: NodeSet) -> bool:
        return self._check(other) <= self

    def __gt__(self, other: NodeSet) -> bool:
        return self._check(other) < self

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NodeSet):
            return NotImplemented
        return self._size == other._size and self._bits == other._bits

    def __hash__(self) -> int:
        return hash((self._size, self._bits))

    def __repr__(self) -> str:
        return f"NodeSet({self._size}, {sorted(self)})"

    def issubset(self, other: NodeSet) -> bool:
        return self <= other

    def isdisjoint(self, other: NodeSet) -> bool:
        return self._bits & self._check(other)._bits == 0

    def add(self, i: int) -> NodeSet:
        """Return a copy with ``i`` added."""
        if not 0 <= i < self._size:
            raise IndexError(f"node {i} outside universe of size {self._size}")
        return NodeSet.from_bits(self._size, self._bits | 1 << i)

    def discard(self, i: int) -> NodeSet:
        """Return a copy without ``i``."""
        if not 0 <= i < self._size:
            raise IndexError(f"node {i} outside universe of size {self._size}")
        return NodeSet.from_bits(self._size, self._bits & ~(1 << i))

    def min(self) -> int:
        if not self._bits:
            raise ValueError("min() of empty NodeSet")
        return (self._bits & -self._bits).bit_length() - 1
