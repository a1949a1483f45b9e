"""Oracle-equivalence sweep: constructive enumeration vs. brute force."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .blocks import count_block, enumerate_block
from .cores import BlockId
from .oracle import brute_force_block
from .partition import Partition, format_partition, is_p_hook_free, partitions_of, require_prime


@dataclass(frozen=True)
class Instance:
    p: int
    core: Partition
    weight: int

    @property
    def n(self) -> int:
        return self.core.size + self.p * self.weight

    def __str__(self) -> str:
        return f"p={self.p} core={format_partition(self.core)} w={self.weight} (n={self.n})"


@dataclass
class InstanceResult:
    instance: Instance
    ok: bool
    count: int
    missing: list = field(default_factory=list)
    extra: list = field(default_factory=list)
    note: str = ""


def hook_free_cores(p: int, max_size: int) -> list[Partition]:
    return [
        nu for s in range(max_size + 1) for nu in partitions_of(s)
        if is_p_hook_free(nu, p)
    ]


def sweep_instances(p: int, max_core: int, max_n: int) -> list[Instance]:
    require_prime(p)
    out = []
    for core in hook_free_cores(p, max_core):
        w = 0
        while core.size + p * w <= max_n:
            out.append(Instance(p, core, w))
            w += 1
    return out


def check_instance(inst: Instance) -> InstanceResult:
    expected = set(brute_force_block(inst.p, inst.core, inst.weight, limit=None))
    if inst.p == 2 and inst.n == 4:
        ok = Partition((2, 2)) in expected
        return InstanceResult(inst, ok, len(expected), note="n = 4 special case, oracle only")
    block = BlockId(inst.p, inst.core, inst.weight)
    got = enumerate_block(block).partitions()
    got_set = set(got)
    ok = got_set == expected and len(got) == len(got_set) and count_block(block) == len(got)
    return InstanceResult(
        inst, ok, len(got),
        missing=sorted(expected - got_set), extra=sorted(got_set - expected),
        note="" if len(got) == len(got_set) else "duplicate labels emitted",
    )


def run_sweep(primes, max_core: int, max_n: int, jobs: int = 1) -> list[InstanceResult]:
    instances = [inst for p in primes for inst in sweep_instances(p, max_core, max_n)]
    if jobs <= 1:
        return [check_instance(inst) for inst in instances]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(check_instance, instances, chunksize=4))


def minimal_failure(results: list[InstanceResult]) -> InstanceResult | None:
    failures = [r for r in results if not r.ok]
    if not failures:
        return None
    return min(failures, key=lambda r: (r.instance.n, r.instance.p, r.instance.core.size))
