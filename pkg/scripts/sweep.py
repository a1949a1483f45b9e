"""Oracle-equivalence sweep with per-prime timing and a per-block table."""
import argparse
import time

from spechtblock.verify import minimal_failure, run_sweep


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--primes", type=int, nargs="+", default=[2, 3, 5])
    parser.add_argument("--max-core", type=int, default=6)
    parser.add_argument("--max-n", type=int, default=26)
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--table", action="store_true")
    args = parser.parse_args()

    total_failures = 0
    for p in args.primes:
        start = time.perf_counter()
        results = run_sweep([p], args.max_core, args.max_n, args.jobs)
        elapsed = time.perf_counter() - start
        failures = sum(not r.ok for r in results)
        total_failures += failures
        print(f"p={p}: {len(results)} blocks, {failures} mismatches, {elapsed:.1f}s")
        if args.table:
            for r in results:
                print(f"   {'ok ' if r.ok else 'BAD'} {r.instance}  count={r.count} {r.note}")
        worst = minimal_failure(results)
        if worst is not None:
            print(f"   smallest counterexample: {worst.instance}")
    raise SystemExit(3 if total_failures else 0)


if __name__ == "__main__":
    main()
