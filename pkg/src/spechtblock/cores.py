"""p-cores, block weights and the p-residual of a partition."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import PartitionDomainError
from .partition import Partition, conjugate, format_partition, is_p_hook_free, require_prime


@lru_cache(maxsize=65536)
def _core(lam: Partition, p: int) -> Partition:
    # Beta-numbers: slide every bead on each p-runner of the abacus to the top.
    L = len(lam)
    beads = [0] * p
    for i, part in enumerate(lam, start=1):
        beads[(part + L - i) % p] += 1
    betas = sorted((r + p * k for r in range(p) for k in range(beads[r])), reverse=True)
    return Partition.from_padded(b - (L - i) for i, b in enumerate(betas, start=1))


def p_core(lam: Partition, p: int) -> Partition:
    """The p-core of ``lam``, computed from its beta-numbers."""
    require_prime(p)
    return _core(Partition(lam), p)


def p_weight(lam: Partition, p: int) -> int:
    require_prime(p)
    removed = sum(lam) - sum(_core(Partition(lam), p))
    assert removed % p == 0
    return removed // p


@dataclass(frozen=True)
class PResidual:
    t: int
    b: int

    def __iter__(self):
        return iter((self.t, self.b))

    def __str__(self) -> str:
        return f"({self.t},{self.b})"


def _run_length(nu: Partition, p: int) -> int:
    i = 1
    while nu.part(i) - nu.part(i + 1) == p - 1:
        i += 1
    return i


def p_residual(nu: Partition, p: int) -> PResidual:
    """Lengths of the initial runs of part differences equal to ``p - 1``.

    ``t`` looks at the rows of ``nu`` and ``b`` at its columns.  The empty
    partition has residual (1, 1).
    """
    require_prime(p)
    nu = Partition(nu)
    if not nu:
        return PResidual(1, 1)
    return PResidual(_run_length(nu, p), _run_length(conjugate(nu), p))


@dataclass(frozen=True)
class ResidualBound:
    t_plus_b: int
    bound: Fraction
    is_maximal: bool


def residual_equality_case(nu: Partition, p: int) -> bool:
    """The three shapes for which ``t + b`` attains its upper bound (p > 2)."""
    nu = Partition(nu)
    t, b = p_residual(nu, p)
    rows, cols = len(nu), len(conjugate(nu))
    if (t, b) == (1, cols + 1) or (t, b) == (rows + 1, 1):
        return True
    return t > 1 and b > 1 and nu.part(t - 1) >= b - 1 and nu.part(t) < b


def residual_bound(nu: Partition, p: int) -> ResidualBound:
    """Compare ``t + b`` with ``(len(nu) + len(nu')) / p + 2`` exactly.

    The inequality and its equality characterisation only hold for odd
    ``p``; for ``p = 2`` the values are reported without the cross-check.
    """
    nu = Partition(nu)
    t, b = p_residual(nu, p)
    bound = Fraction(len(nu) + len(conjugate(nu)), p) + 2
    result = ResidualBound(t + b, bound, t + b == bound)
    if p > 2:
        assert t + b <= bound, (format_partition(nu), p)
        assert result.is_maximal == residual_equality_case(nu, p), (format_partition(nu), p)
    return result


@dataclass(frozen=True)
class BlockId:
    """A p-block of a symmetric group: prime, p-hook-free core and weight."""

    p: int
    core: Partition
    weight: int

    def __post_init__(self):
        require_prime(self.p)
        object.__setattr__(self, "core", Partition(self.core))
        if not isinstance(self.weight, int) or self.weight < 0:
            raise PartitionDomainError(f"weight must be a non-negative integer, got {self.weight!r}")
        if not is_p_hook_free(self.core, self.p):
            raise PartitionDomainError(f"{format_partition(self.core)} is not {self.p}-hook free")

    @property
    def n(self) -> int:
        return self.core.size + self.p * self.weight

    @property
    def residual(self) -> PResidual:
        return p_residual(self.core, self.p)

    @classmethod
    def of(cls, lam: Partition, p: int) -> "BlockId":
        """The block containing the Specht label ``lam``."""
        return cls(p, p_core(lam, p), p_weight(lam, p))
