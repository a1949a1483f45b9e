"""Integer partitions: parsing, conjugation, hook lengths and p-adic predicates.

Partitions are immutable tuples of weakly decreasing positive parts.  Rows
and columns are 1-based everywhere in the public API, matching the usual
(row, column) convention for Young diagrams.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import groupby
from typing import Iterable, Iterator, NamedTuple, Optional

from .errors import InvalidNodeError, NotPrimeError, PartitionDomainError, PartitionSyntaxError


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Behaves like a plain tuple (0-based indexing, ``len`` is the length),
    with :meth:`part` as the 1-based, zero-extended accessor.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(parts)
        for x in parts:
            if not isinstance(x, int) or isinstance(x, bool):
                raise PartitionDomainError(f"part {x!r} is not an integer")
            if x < 1:
                raise PartitionDomainError(f"part {x} is not positive")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise PartitionDomainError(f"parts {parts} are not weakly decreasing")
        return super().__new__(cls, parts)

    @classmethod
    def from_padded(cls, parts: Iterable[int]) -> "Partition":
        """Build from a sequence that may carry trailing zeros."""
        parts = list(parts)
        while parts and parts[-1] == 0:
            parts.pop()
        return cls(parts)

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """1-based part accessor; returns 0 beyond the length."""
        if i < 1:
            raise IndexError("parts are indexed from 1")
        return self[i - 1] if i <= len(self) else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def nodes(self) -> Iterator["Node"]:
        for i, row in enumerate(self, start=1):
            for j in range(1, row + 1):
                yield Node(i, j)

    def __str__(self) -> str:
        return format_partition(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


class Node(NamedTuple):
    row: int
    col: int


EMPTY = Partition()

_PART_RE = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_partition(text: str) -> Partition:
    """Parse ``"7,3,2^2,1"`` style expressions; ``"-"`` or ``""`` is empty."""
    text = text.strip()
    if text in ("", "-"):
        return EMPTY
    parts: list[int] = []
    for token in text.split(","):
        token = token.strip()
        m = _PART_RE.match(token)
        if m is None:
            raise PartitionSyntaxError(f"malformed part {token!r} in {text!r}")
        value = int(m.group(1))
        reps = int(m.group(2)) if m.group(2) is not None else 1
        if value < 1 or reps < 1:
            raise PartitionDomainError(f"part {token!r} must have value and exponent >= 1")
        parts.extend([value] * reps)
    return Partition(parts)


def format_partition(lam: Iterable[int]) -> str:
    """Canonical text form, using ``^`` for runs of two or more equal parts."""
    lam = tuple(lam)
    if not lam:
        return "-"
    out = []
    for value, run in groupby(lam):
        k = len(list(run))
        out.append(f"{value}^{k}" if k > 1 else str(value))
    return ",".join(out)


@lru_cache(maxsize=65536)
def conjugate(lam: Partition) -> Partition:
    if not lam:
        return EMPTY
    return Partition(sum(1 for x in lam if x >= i) for i in range(1, lam[0] + 1))


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def require_prime(p: int) -> int:
    if not isinstance(p, int) or not is_prime(p):
        raise NotPrimeError(f"{p!r} is not a prime")
    return p


def _valuation(m: int, p: int) -> int:
    e = 0
    while m % p == 0:
        m //= p
        e += 1
    return e


def valuation(m: int, p: int) -> int:
    """Exponent of the largest power of ``p`` dividing ``m``."""
    if m < 1:
        raise ValueError(f"valuation undefined for {m}")
    require_prime(p)
    return _valuation(m, p)


def hook_length(lam: Partition, node: tuple[int, int]) -> int:
    i, j = node
    if not (1 <= i <= len(lam) and 1 <= j <= lam[i - 1]):
        raise InvalidNodeError(f"{tuple(node)} is not a node of {format_partition(lam)}")
    return lam[i - 1] - i + conjugate(lam)[j - 1] - j + 1


@lru_cache(maxsize=65536)
def hook_rows(lam: Partition) -> tuple[tuple[int, ...], ...]:
    """Hook lengths row by row."""
    conj = conjugate(lam)
    return tuple(
        tuple(row - i + conj[j - 1] - j + 1 for j in range(1, row + 1))
        for i, row in enumerate(lam, start=1)
    )


@dataclass(frozen=True)
class HookTable:
    owner: Partition
    rows: tuple[tuple[int, ...], ...]

    def __getitem__(self, node: tuple[int, int]) -> int:
        i, j = node
        if not (1 <= i <= len(self.rows) and 1 <= j <= len(self.rows[i - 1])):
            raise InvalidNodeError(f"{tuple(node)} is not a node of {format_partition(self.owner)}")
        return self.rows[i - 1][j - 1]

    def __len__(self) -> int:
        return sum(len(r) for r in self.rows)

    @property
    def entries(self) -> dict[Node, int]:
        return {Node(i, j): h for i, row in enumerate(self.rows, 1) for j, h in enumerate(row, 1)}

    def valuations(self, p: int) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(_valuation(h, p) for h in row) for row in self.rows)

    def divisible(self, p: int) -> tuple[tuple[bool, ...], ...]:
        return tuple(tuple(h % p == 0 for h in row) for row in self.rows)


def hook_table(lam: Partition) -> HookTable:
    return HookTable(lam, hook_rows(lam))


def multiplicities(lam: Iterable[int]) -> dict[int, int]:
    return {value: len(list(run)) for value, run in groupby(lam)}


def is_p_regular(lam: Partition, p: int) -> bool:
    require_prime(p)
    return all(k < p for k in multiplicities(lam).values())


def is_p_restricted(lam: Partition, p: int) -> bool:
    return is_p_regular(conjugate(lam), p)


def is_p_hook_free(lam: Partition, p: int) -> bool:
    require_prime(p)
    return all(h % p for row in hook_rows(lam) for h in row)


def partitions_of(n: int, max_len: Optional[int] = None, max_part: Optional[int] = None) -> Iterator[Partition]:
    """Partitions of ``n`` in lexicographically decreasing order."""
    if n < 0:
        return
    max_part = n if max_part is None else min(max_part, n)
    max_len = n if max_len is None else max_len

    def rec(remaining: int, cap: int, slots: int, prefix: list[int]) -> Iterator[Partition]:
        if remaining == 0:
            yield Partition(prefix)
            return
        if slots == 0 or cap * slots < remaining:
            return
        for first in range(min(cap, remaining), 0, -1):
            prefix.append(first)
            yield from rec(remaining - first, first, slots - 1, prefix)
            prefix.pop()

    yield from rec(n, max_part, max_len, [])
