"""Rebuild the 5-block of S_110 with core (17,13,9,5^2,3^3,2^4,1^4) and weight 8.

Prints the residual, the two capped counting sequences, the total and a
sample construction, then checks every label with the brute-force predicates.
"""
import argparse
import time

from spechtblock import BlockId, LabelPair, construct_from_pair, count_block, enumerate_block, parse_partition
from spechtblock import regular_irreducibles
from spechtblock.oracle import fayers_by_search, p_core_by_rim_removal


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--list", action="store_true", help="print all labels")
    args = parser.parse_args()

    core = parse_partition("17,13,9,5^2,3^3,2^4,1^4")
    block = BlockId(5, core, 8)
    t, b = block.residual
    print(f"core {core} (size {core.size}), n = {block.n}, residual ({t},{b})")
    print("rows-capped  :", [len(regular_irreducibles(k, t, 5)) for k in range(9)])
    print("column-capped:", [len(regular_irreducibles(k, b, 5)) for k in range(9)])

    start = time.perf_counter()
    print(f"count = {count_block(block)}  ({time.perf_counter() - start:.3f}s)")

    lam = construct_from_pair(block, LabelPair((2, 2, 1), (2, 1)))
    print(f"alpha = 2^2,1, gamma = 2,1 -> {lam} (size {lam.size})")

    enum = enumerate_block(block)
    bad = [it.lam for it in enum.items
           if p_core_by_rim_removal(it.lam, 5) != core or not fayers_by_search(it.lam, 5)]
    print(f"{enum.count} labels built, {len(bad)} rejected by the literal checks")
    if args.list:
        for it in enum.items:
            print(f"  {it.pair} -> {it.lam}")


if __name__ == "__main__":
    main()
