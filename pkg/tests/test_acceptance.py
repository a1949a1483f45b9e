"""Exit criteria for the build, one test per criterion.

Run ``pytest tests/test_acceptance.py`` to get a PASS/FAIL line for each.
"""
import time
from fractions import Fraction

import pytest

from conftest import partitions_up_to
from spechtblock.blocks import (
    LabelPair,
    construct_from_pair,
    count_block,
    enumerate_block,
    regular_irreducibles,
)
from spechtblock.cores import BlockId, p_core, p_residual, residual_bound
from spechtblock.irreducible import (
    decompose,
    expand_top,
    glue_oplus,
    glue_oplus_hat,
    is_p_irreducible,
    is_p_top,
    shrink_top,
)
from spechtblock.oracle import brute_force_block, fayers_by_search, p_core_by_rim_removal
from spechtblock.partition import EMPTY, Partition, conjugate, hook_table, is_p_regular, is_p_restricted, parse_partition
from spechtblock.verify import minimal_failure, run_sweep, sweep_instances

criterion = pytest.mark.criterion
NU = parse_partition("17,13,9,5^2,3^3,2^4,1^4")
EXAMPLE = BlockId(5, NU, 8)


@criterion(1, "worked example block count is exactly 83, in under 1 s")
def test_example_count():
    start = time.perf_counter()
    assert count_block(EXAMPLE) == 83
    assert time.perf_counter() - start < 1.0


@criterion(2, "row- and column-capped counts reproduce both printed sequences")
def test_example_sequences():
    assert tuple(len(regular_irreducibles(k, 4, 5)) for k in range(9)) == (1, 1, 2, 3, 5, 3, 6, 6, 8)
    assert tuple(len(regular_irreducibles(k, 3, 5)) for k in range(9)) == (1, 1, 2, 3, 4, 3, 5, 4, 5)


@criterion(3, "5-residual of the example core is (4,3)")
def test_example_residual():
    assert tuple(p_residual(NU, 5)) == (4, 3)


@criterion(4, "construction from ((2,2,1),(2,1)) gives the size-110 label, checked by the oracle")
def test_example_construction():
    lam = construct_from_pair(EXAMPLE, LabelPair((2, 2, 1), (2, 1)))
    assert lam.size == 110
    # independent checks: literal rim removal and literal criterion search
    assert p_core_by_rim_removal(lam, 5, order_seed=1) == NU
    assert fayers_by_search(lam, 5)
    assert lam == (27, 23, 14, 5, 5, 3, 3, 3) + (2,) * 9 + (1,) * 9


@criterion("5a", "hook table of (7,3,2^2,1) matches the displayed figure cell for cell")
def test_hook_figure():
    assert hook_table(Partition((7, 3, 2, 2, 1))).rows == (
        (11, 9, 6, 4, 3, 2, 1), (6, 4, 1), (4, 2), (3, 1), (1,),
    )


@criterion("5b", "conjugate of (7,3,2^2,1) equals (5,4,2,1^3) as stated")
def test_conjugate_as_stated():
    # Stated value has size 14 while (7,3,2,2,1) has size 15; the true
    # conjugate is (5,4,2,1^4).  Asserted as written.
    assert conjugate(Partition((7, 3, 2, 2, 1))) == (5, 4, 2, 1, 1, 1)


@criterion(6, "enumerate_block equals brute force on the full sweep, zero mismatches, < 2 min")
def test_oracle_equivalence():
    start = time.perf_counter()
    results = run_sweep([2, 3, 5], max_core=6, max_n=26, jobs=1)
    elapsed = time.perf_counter() - start
    theorem_path = [r for r in results if not (r.instance.p == 2 and r.instance.n == 4)]
    assert len(theorem_path) == len(results) - 1
    assert minimal_failure(results) is None
    assert elapsed < 120


def _irreducibles(p, max_size):
    return [lam for lam in partitions_up_to(max_size) if is_p_irreducible(lam, p)]


@criterion(7, "glue/decompose and shrink/expand round trips")
def test_round_trips():
    for p in (2, 3, 5):
        for lam in _irreducibles(p, 14):
            d = decompose(lam, p)
            assert glue_oplus(d.top, d.mid, d.bottom) == lam
            assert decompose(glue_oplus(d.top, d.mid, d.bottom), p) == d
        for sigma in partitions_up_to(8):
            for k in range(max(len(sigma), 1), 6):
                assert shrink_top(expand_top(sigma, k, p), k, p) == sigma


@criterion(8, "regular iff no bottom, restricted iff no top, core gluing, top cores are staircases")
def test_structural_corollaries():
    for p in (2, 3, 5):
        for lam in _irreducibles(p, 14):
            d = decompose(lam, p)
            assert is_p_regular(lam, p) == (not d.bottom)
            assert is_p_restricted(lam, p) == (not d.top)
            assert p_core(lam, p) == glue_oplus_hat(p_core(d.top, p), d.mid, p_core(d.bottom, p))
        tops = [lam for lam in partitions_up_to(14) if is_p_top(lam, p)]
        tops += [expand_top(s, k, p) for s in partitions_up_to(8) for k in range(max(len(s), 1), 6)]
        for tau in tops:
            if not is_p_top(tau, p):
                continue
            k = len(tau)
            assert p_core(tau, p) == Partition.from_padded((k - i) * (p - 1) for i in range(1, k))


@criterion(9, "closed forms: residual (1,1) counts, p=2 doubling, (2,2) at n=4")
def test_closed_forms():
    for p in (2, 3, 5):
        for inst in sweep_instances(p, 6, 26):
            if p == 2 and inst.n == 4:
                assert Partition((2, 2)) in brute_force_block(2, EMPTY, 2)
                continue
            block = BlockId(inst.p, inst.core, inst.weight)
            count = count_block(block)
            assert count == enumerate_block(block).count
            if p > 2 and tuple(block.residual) == (1, 1):
                if block.core:
                    assert count == block.weight + 1
                elif block.weight >= 1:
                    assert count == 2
            if p == 2:
                if block.weight >= 1:
                    alphas = regular_irreducibles(block.weight, len(block.core) + 1, 2)
                    assert count == 2 * len(alphas)
                else:
                    assert count == 1


def _equality_shape(nu, p):
    t, b = p_residual(nu, p)
    cells = {(i, j) for i, row in enumerate(nu, 1) for j in range(1, row + 1)}
    return (
        (t, b) == (1, len(conjugate(nu)) + 1)
        or (t, b) == (len(nu) + 1, 1)
        or (t > 1 and b > 1 and (t - 1, b - 1) in cells and (t, b) not in cells)
    )


@criterion(10, "t + b bound and its three equality shapes on all partitions of size <= 15")
def test_residual_bound():
    for p in (3, 5, 7):
        for nu in partitions_up_to(15):
            t, b = p_residual(nu, p)
            bound = Fraction(len(nu) + len(conjugate(nu)), p) + 2
            assert t + b <= bound
            assert (t + b == bound) == _equality_shape(nu, p)
            assert residual_bound(nu, p).is_maximal == (t + b == bound)
