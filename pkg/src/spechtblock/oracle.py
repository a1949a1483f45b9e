"""Brute-force reference implementations used only to cross-check the fast paths.

Nothing here imports the hook, core or criterion code from the rest of the
package: diagrams are plain sets of ``(row, col)`` cells and every quantity
is recomputed from them literally.
"""
from __future__ import annotations

import os
import random
from functools import lru_cache

from .errors import LimitExceededError, PartitionDomainError
from .partition import Partition, require_prime

DEFAULT_MAX_N = 60


def max_n() -> int:
    """Safety limit on ``n``; the ``SPECHT_MAX_N`` environment variable overrides it."""
    value = os.environ.get("SPECHT_MAX_N")
    return int(value) if value else DEFAULT_MAX_N


def _check_limit(n: int, limit: int | None):
    limit = max_n() if limit is None else limit
    if n > limit:
        raise LimitExceededError(f"n = {n} exceeds the oracle limit {limit} (set SPECHT_MAX_N to raise it)")


@lru_cache(maxsize=None)
def _partitions(n: int) -> tuple[tuple[int, ...], ...]:
    # Partitions of n with parts <= m, built bottom-up as a table.
    table = [[() for _ in range(n + 1)] for _ in range(n + 1)]
    for m in range(n + 1):
        table[0][m] = ((),)
    for k in range(1, n + 1):
        for m in range(1, n + 1):
            smaller = table[k][m - 1]
            with_m = tuple((m,) + rest for rest in table[k - m][m]) if m <= k else ()
            table[k][m] = with_m + smaller
    return table[n][n]


def all_partitions(n: int, limit: int | None = None) -> list[Partition]:
    """Every partition of ``n`` exactly once, largest first part first."""
    if n < 0:
        return []
    _check_limit(n, limit)
    return [Partition(parts) for parts in _partitions(n)]


def _cells(lam) -> frozenset:
    return frozenset((i, j) for i, row in enumerate(lam, 1) for j in range(1, row + 1))


def _hook(cells: frozenset, i: int, j: int) -> int:
    arm = sum(1 for (r, c) in cells if r == i and c > j)
    leg = sum(1 for (r, c) in cells if c == j and r > i)
    return arm + leg + 1


def _rows(cells: frozenset) -> Partition:
    lengths: dict[int, int] = {}
    for r, _ in cells:
        lengths[r] = lengths.get(r, 0) + 1
    return Partition(lengths[r] for r in sorted(lengths))


def _rim(cells: frozenset, i: int, j: int) -> set:
    """Cells of the border strip cut off by the hook at ``(i, j)``."""
    return {
        (r, c) for (r, c) in cells
        if r >= i and c >= j and (r + 1, c + 1) not in cells
    }


def p_core_by_rim_removal(lam: Partition, p: int, order_seed: int = 0) -> Partition:
    """Strip rim p-hooks one at a time, choosing among candidates at random."""
    require_prime(p)
    rng = random.Random(order_seed)
    cells = _cells(lam)
    while True:
        candidates = sorted((i, j) for (i, j) in cells if _hook(cells, i, j) == p)
        if not candidates:
            return _rows(cells)
        i, j = rng.choice(candidates)
        rim = _rim(cells, i, j)
        assert len(rim) == p
        cells = cells - rim
        # the remainder must still be a diagram
        assert all((r - 1, c) in cells or r == 1 for (r, c) in cells)
        assert all((r, c - 1) in cells or c == 1 for (r, c) in cells)


def _val(m: int, p: int) -> int:
    e = 0
    while m % p == 0:
        m //= p
        e += 1
    return e


def fayers_by_search(lam: Partition, p: int) -> bool:
    """Literal search for a forbidden triple (i,j), (i,y), (x,j)."""
    cells = _cells(lam)
    v = {(i, j): _val(_hook(cells, i, j), p) for (i, j) in cells}
    for (i, j), vij in v.items():
        if vij == 0:
            continue
        bad_row = any(v[(r, c)] != vij for (r, c) in cells if r == i)
        bad_col = any(v[(r, c)] != vij for (r, c) in cells if c == j)
        if bad_row and bad_col:
            return False
    return True


def _regular(parts, p: int) -> bool:
    return all(list(parts).count(x) < p for x in set(parts))


def specht_irreducible_by_search(lam: Partition, p: int) -> bool:
    if p > 2:
        return fayers_by_search(lam, p)
    if tuple(lam) == (2, 2):
        return True
    conj = _rows({(c, r) for (r, c) in _cells(lam)})
    return (_regular(lam, 2) or _regular(conj, 2)) and fayers_by_search(lam, 2)


def hook_free_by_search(lam: Partition, p: int) -> bool:
    cells = _cells(lam)
    return all(_hook(cells, i, j) % p for (i, j) in cells)


def brute_force_block(p: int, core: Partition, w: int, limit: int | None = None) -> list[Partition]:
    """All partitions of ``|core| + p*w`` with p-core ``core`` labelling
    p-irreducible Specht modules."""
    require_prime(p)
    core = Partition(core)
    if not hook_free_by_search(core, p):
        raise PartitionDomainError(f"core {core} is not {p}-hook free")
    n = core.size + p * w
    _check_limit(n, limit)
    return [
        lam for lam in all_partitions(n, limit)
        if specht_irreducible_by_search(lam, p) and _core_cached(lam, p) == core
    ]


@lru_cache(maxsize=None)
def _core_cached(lam: Partition, p: int) -> Partition:
    return p_core_by_rim_removal(lam, p, 0)
