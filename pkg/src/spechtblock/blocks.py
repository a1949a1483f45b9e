"""Construct and count the p-irreducible Specht labels of a p-block.

For odd p the labels of a block with core ``nu`` are in bijection with pairs
``(alpha, gamma)`` of p-regular p-irreducible partitions: ``alpha_i``
horizontal p-strips go on row ``i`` of ``nu`` and ``gamma_j`` vertical
p-strips on column ``j``.  For p = 2 only one of the two may be nonempty.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .cores import BlockId, p_core, residual_bound
from .errors import ConstructionDefect, LabelPairError, PartitionDomainError, SpecialCaseError
from .irreducible import is_p_irreducible, is_specht_irreducible
from .partition import EMPTY, Partition, conjugate, format_partition, is_p_regular, partitions_of, require_prime


@lru_cache(maxsize=4096)
def _regular_irreducibles(w: int, max_len: int, p: int) -> tuple[Partition, ...]:
    return tuple(
        lam for lam in partitions_of(w, max_len=max_len)
        if is_p_regular(lam, p) and is_p_irreducible(lam, p)
    )


def regular_irreducibles(w: int, max_len: int, p: int) -> list[Partition]:
    """p-regular p-irreducible partitions of ``w`` with at most ``max_len`` parts.

    Ordered lexicographically decreasing; ``w = 0`` gives ``[()]``.
    """
    require_prime(p)
    if w < 0:
        return []
    return list(_regular_irreducibles(w, max_len, p))


@dataclass(frozen=True)
class LabelPair:
    alpha: Partition
    gamma: Partition

    def __post_init__(self):
        object.__setattr__(self, "alpha", Partition(self.alpha))
        object.__setattr__(self, "gamma", Partition(self.gamma))

    def __str__(self) -> str:
        return f"({format_partition(self.alpha)} | {format_partition(self.gamma)})"


@dataclass(frozen=True)
class LabelledPartition:
    pair: LabelPair
    lam: Partition


@dataclass(frozen=True)
class BlockEnumeration:
    block: BlockId
    items: tuple[LabelledPartition, ...]

    @property
    def count(self) -> int:
        return len(self.items)

    def partitions(self) -> list[Partition]:
        return [item.lam for item in self.items]


def _length_cap(block: BlockId) -> int | None:
    """Cap on len(alpha) + len(gamma), present only when t + b is maximal."""
    if block.p == 2:
        return None
    t, b = block.residual
    return t + b - 1 if residual_bound(block.core, block.p).is_maximal else None


def enumerate_label_pairs(block: BlockId) -> list[LabelPair]:
    """All pairs ``(alpha, gamma)`` indexing p-irreducible labels of ``block`` (odd p).

    Sorted by ``|alpha|`` descending, then by alpha and gamma in
    lexicographically decreasing order.
    """
    if block.p == 2:
        raise SpecialCaseError("p = 2 blocks are enumerated by enumerate_block")
    p, w = block.p, block.weight
    t, b = block.residual
    cap = _length_cap(block)
    pairs = []
    for k in range(w, -1, -1):
        for alpha in _regular_irreducibles(k, t, p):
            for gamma in _regular_irreducibles(w - k, b, p):
                if cap is None or len(alpha) + len(gamma) <= cap:
                    pairs.append(LabelPair(alpha, gamma))
    return pairs


def _validate_pair(block: BlockId, pair: LabelPair):
    p = block.p
    t, b = block.residual
    alpha, gamma = pair.alpha, pair.gamma
    if alpha.size + gamma.size != block.weight:
        raise LabelPairError(f"{pair} does not have total size {block.weight}")
    for name, part, limit in (("alpha", alpha, t), ("gamma", gamma, b)):
        if len(part) > limit:
            raise LabelPairError(f"{name} = {format_partition(part)} has more than {limit} parts")
        if not (is_p_regular(part, p) and is_p_irreducible(part, p)):
            raise LabelPairError(f"{name} = {format_partition(part)} is not {p}-regular and {p}-irreducible")
    cap = _length_cap(block)
    if cap is not None and len(alpha) + len(gamma) > cap:
        raise LabelPairError(f"{pair} exceeds the combined length cap {cap}")


def _add_strips(nu: Partition, p: int, alpha: Partition, gamma: Partition, columns_first: bool) -> Partition:
    def rows(lam, strips):
        n = max(len(lam), len(strips))
        return Partition.from_padded(lam.part(i) + p * strips.part(i) for i in range(1, n + 1))

    def cols(lam, strips):
        return conjugate(rows(conjugate(lam), strips))

    if columns_first:
        return rows(cols(nu, gamma), alpha)
    return cols(rows(nu, alpha), gamma)


def construct_from_pair(block: BlockId, pair: LabelPair) -> Partition:
    """Add ``gamma_j`` vertical p-strips to column ``j`` of the core, then
    ``alpha_i`` horizontal p-strips to row ``i``."""
    _validate_pair(block, pair)
    p, nu = block.p, block.core
    try:
        lam = _add_strips(nu, p, pair.alpha, pair.gamma, columns_first=True)
    except PartitionDomainError as exc:
        raise ConstructionDefect(f"strip addition for {pair} left a non-partition: {exc}") from exc
    if __debug__:
        other = _add_strips(nu, p, pair.alpha, pair.gamma, columns_first=False)
        if other != lam:
            raise ConstructionDefect(f"strip additions for {pair} do not commute")
    if lam.size != block.n or p_core(lam, p) != nu or not is_p_irreducible(lam, p):
        raise ConstructionDefect(f"{format_partition(lam)} built from {pair} is not a label of the block")
    return lam


def _two_block_alphas(block: BlockId) -> list[Partition]:
    return list(_regular_irreducibles(block.weight, len(block.core) + 1, 2))


def _refuse_n4(block: BlockId):
    if block.p == 2 and block.n == 4:
        raise SpecialCaseError(
            "p = 2, n = 4 is excluded from the counting theorem ((2,2) is an extra label); use the oracle"
        )


def enumerate_block(block: BlockId) -> BlockEnumeration:
    """Every p-irreducible Specht label of ``block`` with the pair that builds it."""
    _refuse_n4(block)
    if block.p > 2:
        pairs = enumerate_label_pairs(block)
    elif block.weight == 0:
        pairs = [LabelPair(EMPTY, EMPTY)]
    else:
        alphas = _two_block_alphas(block)
        pairs = [LabelPair(a, EMPTY) for a in alphas] + [LabelPair(EMPTY, a) for a in alphas]
    items = tuple(LabelledPartition(pair, construct_from_pair(block, pair)) for pair in pairs)
    if block.p == 2:
        for item in items:
            if not is_specht_irreducible(item.lam, 2):
                raise ConstructionDefect(f"{format_partition(item.lam)} is not a 2-irreducible Specht label")
    return BlockEnumeration(block, items)


def _length_histogram(w: int, max_len: int, p: int) -> Counter:
    return Counter(len(lam) for lam in _regular_irreducibles(w, max_len, p))


def _count_pairs(block: BlockId) -> int:
    p, w = block.p, block.weight
    t, b = block.residual
    cap = _length_cap(block)
    if cap is None:
        return sum(
            len(_regular_irreducibles(k, t, p)) * len(_regular_irreducibles(w - k, b, p))
            for k in range(w + 1)
        )
    total = 0
    for k in range(w + 1):
        alphas = _length_histogram(k, t, p)
        gammas = _length_histogram(w - k, b, p)
        total += sum(ca * cg for la, ca in alphas.items() for lg, cg in gammas.items() if la + lg <= cap)
    return total


def count_block(block: BlockId) -> int:
    """Number of p-irreducible Specht labels in ``block``, without building them."""
    _refuse_n4(block)
    if block.p == 2:
        return 1 if block.weight == 0 else 2 * len(_two_block_alphas(block))
    count = _count_pairs(block)
    if tuple(block.residual) == (1, 1):
        closed = 1 if block.weight == 0 else (2 if not block.core else block.weight + 1)
        assert closed == count, (block, closed, count)
    return count


@dataclass(frozen=True)
class RegularRestrictedCount:
    regular: int
    restricted: int


def count_regular_and_restricted(block: BlockId) -> RegularRestrictedCount:
    """Labels in ``block`` that are p-regular, respectively p-restricted."""
    t, b = block.residual
    return RegularRestrictedCount(
        regular=len(_regular_irreducibles(block.weight, t, block.p)),
        restricted=len(_regular_irreducibles(block.weight, b, block.p)),
    )
