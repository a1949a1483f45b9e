"""The Fayers criterion, tops and bottoms, the two gluings and the decomposition.

A p-irreducible partition splits uniquely as ``glue_oplus(top, mid, bottom)``
where ``top`` is a p-irreducible top, ``mid`` is p-hook free and ``bottom``
is a p-irreducible bottom.  Tops with ``k`` rows correspond to p-regular
p-irreducible partitions of length ``k`` via :func:`shrink_top`.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .errors import GlueError, NotIrreducibleError, ShrinkError
from .partition import (
    EMPTY,
    Partition,
    _valuation,
    conjugate,
    format_partition,
    hook_rows,
    is_p_regular,
    is_p_restricted,
    require_prime,
)


@lru_cache(maxsize=65536)
def _valuation_rows(lam: Partition, p: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(_valuation(h, p) for h in row) for row in hook_rows(lam))


def _constant_lines(vals: tuple[tuple[int, ...], ...]) -> tuple[list[bool], list[bool]]:
    row_const = [all(v == row[0] for v in row) for row in vals]
    ncols = len(vals[0]) if vals else 0
    col_const = []
    for j in range(ncols):
        column = [row[j] for row in vals if len(row) > j]
        col_const.append(all(v == column[0] for v in column))
    return row_const, col_const


@lru_cache(maxsize=65536)
def _irreducible(lam: Partition, p: int) -> bool:
    vals = _valuation_rows(lam, p)
    row_const, col_const = _constant_lines(vals)
    for i, row in enumerate(vals):
        for j, v in enumerate(row):
            if v > 0 and not row_const[i] and not col_const[j]:
                return False
    return True


def is_p_irreducible(lam: Partition, p: int) -> bool:
    """Fayers' criterion: every p-divisible hook has a constant-valuation row or column."""
    require_prime(p)
    return _irreducible(Partition(lam), p)


def is_specht_irreducible(lam: Partition, p: int) -> bool:
    """Whether the Specht module labelled by ``lam`` stays irreducible mod ``p``.

    For odd ``p`` this is Fayers' criterion.  For ``p = 2`` the partition must
    also be 2-regular or 2-restricted, and (2, 2) is the one exception.
    """
    require_prime(p)
    lam = Partition(lam)
    if p > 2:
        return _irreducible(lam, p)
    if lam == (2, 2):
        return True
    return (is_p_regular(lam, 2) or is_p_restricted(lam, 2)) and _irreducible(lam, 2)


def is_p_top(lam: Partition, p: int) -> bool:
    require_prime(p)
    lam = Partition(lam)
    return bool(lam) and all(row[0] % p == 0 for row in hook_rows(lam))


def is_p_bottom(lam: Partition, p: int) -> bool:
    return is_p_top(conjugate(Partition(lam)), p)


def _check_glue_args(top: Partition, mid: Partition, bottom: Partition):
    if not mid and top and bottom:
        raise GlueError("the middle partition may only be empty when the top or bottom is")


def glue_oplus(top: Partition, mid: Partition, bottom: Partition) -> Partition:
    """Overlapping gluing: the last row of ``top`` shares a row with the first row of ``mid``,
    and the first column of ``mid`` shares a column with the last column of ``bottom``.

    With ``bottom`` empty, its first part counts as 1 (no shared column);
    with ``top`` empty, the first row of ``mid`` is emitted on its own.
    """
    top, mid, bottom = Partition(top), Partition(mid), Partition(bottom)
    _check_glue_args(top, mid, bottom)
    b1 = bottom[0] if bottom else 1
    m1 = mid.part(1)
    rows = [t + m1 + b1 - 1 for t in top]
    rows += [m + b1 - 1 for m in (mid[1:] if top else mid)]
    rows += list(bottom)
    return Partition(rows)


def glue_oplus_hat(top: Partition, mid: Partition, bottom: Partition) -> Partition:
    """Corner-to-corner gluing, used to assemble p-cores."""
    top, mid, bottom = Partition(top), Partition(mid), Partition(bottom)
    _check_glue_args(top, mid, bottom)
    b1 = bottom.part(1)
    m1 = mid.part(1)
    rows = [t + m1 + b1 for t in top] + [m + b1 for m in mid] + list(bottom)
    return Partition.from_padded(rows)


@dataclass(frozen=True)
class Decomposition:
    top: Partition
    mid: Partition
    bottom: Partition
    split_row: Optional[int] = None
    split_col: Optional[int] = None

    def glue(self) -> Partition:
        return glue_oplus(self.top, self.mid, self.bottom)


def decompose(lam: Partition, p: int) -> Decomposition:
    """Split a p-irreducible partition into its top, middle and bottom."""
    require_prime(p)
    lam = Partition(lam)
    if not _irreducible(lam, p):
        raise NotIrreducibleError(f"{format_partition(lam)} is not {p}-irreducible")
    rows = hook_rows(lam)
    conj = conjugate(lam)

    a = next((i for i, row in enumerate(rows, 1) if all(h % p == 0 for h in row)), None)
    b = next(
        (j for j in range(1, len(conj) + 1) if all(rows[i][j - 1] % p == 0 for i in range(conj[j - 1]))),
        None,
    )

    bottom = Partition(lam[a - 1:]) if a is not None else EMPTY
    top = conjugate(Partition(conj[b - 1:])) if b is not None else EMPTY

    x_lo = conj[b - 1] if b is not None else 1
    x_hi = a - 1 if a is not None else len(lam)
    y_lo = lam[a - 1] if a is not None else 1
    mid_rows = []
    for x in range(x_lo, x_hi + 1):
        y_hi = lam[x - 1] if b is None else min(lam[x - 1], b - 1)
        if y_hi >= y_lo:
            mid_rows.append(y_hi - y_lo + 1)
    return Decomposition(top, Partition(mid_rows), bottom, a, b)


def expand_top(sigma: Partition, k: int, p: int) -> Partition:
    """Inflate ``sigma`` to a partition with ``k`` rows whose p-hooks are ``p`` times those of ``sigma``."""
    require_prime(p)
    sigma = Partition(sigma)
    if k < 1 or len(sigma) > k:
        raise ShrinkError(f"need 1 <= len(sigma) <= k, got len {len(sigma)} and k={k}")
    return Partition.from_padded((k - i) * (p - 1) + p * sigma.part(i) for i in range(1, k + 1))


def shrink_top(tau: Partition, k: int, p: int) -> Partition:
    """Inverse of :func:`expand_top` for a fixed ``k``."""
    require_prime(p)
    tau = Partition(tau)
    if k < 1 or len(tau) > k:
        raise ShrinkError(f"{format_partition(tau)} has more than k={k} rows")
    sigma = []
    for i in range(1, k + 1):
        excess = tau.part(i) - (k - i) * (p - 1)
        if excess < 0 or excess % p:
            raise ShrinkError(
                f"row {i} of {format_partition(tau)} is not {(k - i) * (p - 1)} plus a multiple of {p}"
            )
        sigma.append(excess // p)
    return Partition.from_padded(sigma)
