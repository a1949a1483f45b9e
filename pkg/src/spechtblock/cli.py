"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 verification failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .blocks import count_block, count_regular_and_restricted, enumerate_block
from .cores import BlockId, p_core, p_residual, p_weight, residual_bound
from .errors import NotIrreducibleError, SpechtError
from .irreducible import (
    decompose,
    glue_oplus,
    glue_oplus_hat,
    is_p_bottom,
    is_p_irreducible,
    is_p_top,
    is_specht_irreducible,
)
from .partition import Partition, conjugate, format_partition, hook_rows, is_p_hook_free, parse_partition, require_prime
from .verify import minimal_failure, run_sweep

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_VERIFY = 0, 1, 2, 3
MAX_DIAGRAM_COLS = 40


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


_PARTITION_ARGS = ("partition", "core", "top", "mid", "bottom")


def _parse_partition_args(args):
    for name in _PARTITION_ARGS:
        if isinstance(getattr(args, name, None), str):
            setattr(args, name, parse_partition(getattr(args, name)))


def _plist(lam) -> list[int]:
    return list(lam)


# -- rendering ---------------------------------------------------------------

def render_diagram(lam: Partition, labels=None, flags=None) -> str:
    """Young diagram with ``[ ]`` cells, optionally showing a label in each cell.

    Rows longer than the column cap are cut with a ``...(+k)`` marker.
    """
    if not lam:
        return "-"
    width = max((len(str(x)) for row in labels for x in row), default=0) if labels else 1
    lines = []
    for i, row in enumerate(lam):
        cells = []
        for j in range(min(row, MAX_DIAGRAM_COLS)):
            if labels:
                mark = "*" if flags and flags[i][j] else " "
                cells.append(f"[{labels[i][j]:>{width}}{mark}]")
            else:
                cells.append("[ ]")
        line = "".join(cells)
        if row > MAX_DIAGRAM_COLS:
            line += f"...(+{row - MAX_DIAGRAM_COLS})"
        lines.append(line)
    return "\n".join(lines)


def _emit(args, text: str, payload: dict, diagram: Optional[str] = None):
    if args.format == "json":
        print(json.dumps(payload))
    elif args.format == "diagram" and diagram is not None:
        print(diagram)
    else:
        print(text)


def enumeration_to_json(enum) -> dict:
    block = enum.block
    return {
        "p": block.p,
        "core": _plist(block.core),
        "weight": block.weight,
        "n": block.n,
        "count": enum.count,
        "items": [
            {"alpha": _plist(it.pair.alpha), "gamma": _plist(it.pair.gamma), "lambda": _plist(it.lam)}
            for it in enum.items
        ],
    }


# -- subcommands -------------------------------------------------------------

def cmd_hooks(args):
    lam = args.partition
    rows = hook_rows(lam)
    flags = [[args.p is not None and h % args.p == 0 for h in row] for row in rows]
    text = "\n".join(
        " ".join(f"{h}{'*' if f else ''}" for h, f in zip(row, frow)) for row, frow in zip(rows, flags)
    ) or "-"
    payload = {"partition": _plist(lam), "hooks": [list(r) for r in rows]}
    if args.p is not None:
        payload["p"] = args.p
        payload["divisible"] = flags
    _emit(args, text, payload, render_diagram(lam, rows, flags))


def cmd_conjugate(args):
    conj = conjugate(args.partition)
    _emit(args, format_partition(conj), {"partition": _plist(args.partition), "conjugate": _plist(conj)},
          render_diagram(conj))


def cmd_core(args):
    core = p_core(args.partition, args.p)
    w = p_weight(args.partition, args.p)
    _emit(args, f"core: {format_partition(core)}\nweight: {w}",
          {"partition": _plist(args.partition), "p": args.p, "core": _plist(core), "weight": w},
          render_diagram(core))


def cmd_residual(args):
    res = p_residual(args.partition, args.p)
    rb = residual_bound(args.partition, args.p)
    text = (f"{res}\nt+b: {rb.t_plus_b}\nbound: {rb.bound}\n"
            f"maximal: {'yes' if rb.is_maximal else 'no'}")
    _emit(args, text, {
        "partition": _plist(args.partition), "p": args.p, "t": res.t, "b": res.b,
        "t_plus_b": rb.t_plus_b, "bound": str(rb.bound), "is_maximal": rb.is_maximal,
    })


def cmd_check(args):
    pred = is_specht_irreducible if args.specht else is_p_irreducible
    ok = pred(args.partition, args.p)
    kind = "Specht-irreducible" if args.specht else "p-irreducible"
    _emit(args, f"{kind}: {'yes' if ok else 'no'}",
          {"partition": _plist(args.partition), "p": args.p, "specht": args.specht, "irreducible": ok})


def cmd_decompose(args):
    try:
        d = decompose(args.partition, args.p)
    except NotIrreducibleError as exc:
        raise NotIrreducibleError(f"not p-irreducible: {exc}") from exc
    text = "\n".join([
        f"top: {format_partition(d.top)}",
        f"mid: {format_partition(d.mid)}",
        f"bottom: {format_partition(d.bottom)}",
        f"split_row: {d.split_row if d.split_row is not None else '-'}",
        f"split_col: {d.split_col if d.split_col is not None else '-'}",
    ])
    _emit(args, text, {
        "partition": _plist(args.partition), "p": args.p, "top": _plist(d.top), "mid": _plist(d.mid),
        "bottom": _plist(d.bottom), "split_row": d.split_row, "split_col": d.split_col,
    })


def _role_warnings(top, mid, bottom, p) -> list[str]:
    warnings = []
    if top and not (is_p_top(top, p) and is_p_irreducible(top, p)):
        warnings.append(f"top {format_partition(top)} is not a {p}-irreducible top")
    if not is_p_hook_free(mid, p):
        warnings.append(f"mid {format_partition(mid)} is not {p}-hook free")
    if bottom and not (is_p_bottom(bottom, p) and is_p_irreducible(bottom, p)):
        warnings.append(f"bottom {format_partition(bottom)} is not a {p}-irreducible bottom")
    return warnings


def cmd_glue(args):
    require_prime(args.p)
    glue = glue_oplus_hat if args.hat else glue_oplus
    lam = glue(args.top, args.mid, args.bottom)
    for msg in _role_warnings(args.top, args.mid, args.bottom, args.p):
        print(f"warning: {msg}", file=sys.stderr)
    _emit(args, format_partition(lam), {"partition": _plist(lam), "hat": args.hat}, render_diagram(lam))


def _block(args) -> BlockId:
    return BlockId(args.p, args.core, args.w)


def cmd_enumerate(args):
    enum = enumerate_block(_block(args))
    lines = [f"p={enum.block.p} core={format_partition(enum.block.core)} w={enum.block.weight} "
             f"n={enum.block.n} count={enum.count}"]
    for it in enum.items:
        lines.append(f"{format_partition(it.pair.alpha)} | {format_partition(it.pair.gamma)} -> "
                     f"{format_partition(it.lam)}")
    _emit(args, "\n".join(lines), enumeration_to_json(enum))


def cmd_count(args):
    block = _block(args)
    if args.regular or args.restricted:
        rr = count_regular_and_restricted(block)
        value = rr.regular if args.regular else rr.restricted
    else:
        value = count_block(block)
    _emit(args, str(value), {"p": block.p, "core": _plist(block.core), "weight": block.weight,
                             "n": block.n, "count": value})


def cmd_verify(args):
    results = run_sweep([args.p], args.max_core, args.max_n, jobs=args.jobs)
    failure = minimal_failure(results)
    if args.format == "json":
        print(json.dumps({
            "p": args.p, "instances": len(results), "failures": sum(not r.ok for r in results),
            "counterexample": None if failure is None else str(failure.instance),
        }))
    else:
        print(f"checked {len(results)} blocks for p={args.p}: "
              f"{sum(not r.ok for r in results)} mismatches")
    if failure is not None:
        inst = failure.instance
        print(f"counterexample: {inst}; missing {[format_partition(x) for x in failure.missing]}, "
              f"extra {[format_partition(x) for x in failure.extra]} {failure.note}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="spechtblock", description="p-irreducible Specht labels in blocks of symmetric groups")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--format", choices=("text", "json", "diagram"), default="text")
        sp.set_defaults(func=func)
        return sp

    sp = add("hooks", cmd_hooks, "hook-length table")
    sp.add_argument("partition")
    sp.add_argument("-p", type=int)

    sp = add("conjugate", cmd_conjugate, "conjugate partition")
    sp.add_argument("partition")

    for name, func, help_ in (("core", cmd_core, "p-core and weight"),
                              ("residual", cmd_residual, "p-residual and its bound"),
                              ("decompose", cmd_decompose, "top/mid/bottom decomposition")):
        sp = add(name, func, help_)
        sp.add_argument("partition")
        sp.add_argument("-p", type=int, required=True)

    sp = add("check", cmd_check, "irreducibility criterion")
    sp.add_argument("partition")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("--specht", action="store_true", help="Specht-module predicate (differs at p=2)")

    sp = add("glue", cmd_glue, "glue a top, middle and bottom")
    sp.add_argument("--top", default="-")
    sp.add_argument("--mid", default="-")
    sp.add_argument("--bottom", default="-")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("--hat", action="store_true", help="corner gluing used for cores")

    for name, func, help_ in (("enumerate", cmd_enumerate, "all labels in a block"),
                              ("count", cmd_count, "number of labels in a block")):
        sp = add(name, func, help_)
        sp.add_argument("--core", required=True)
        sp.add_argument("-p", type=int, required=True)
        sp.add_argument("-w", type=int, required=True)
        if name == "count":
            group = sp.add_mutually_exclusive_group()
            group.add_argument("--regular", action="store_true")
            group.add_argument("--restricted", action="store_true")

    sp = add("verify", cmd_verify, "oracle-equivalence sweep")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("--max-core", type=int, required=True)
    sp.add_argument("--max-n", type=int, required=True)
    sp.add_argument("--jobs", type=int, default=1)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    try:
        _parse_partition_args(args)
        if getattr(args, "p", None) is not None:
            require_prime(args.p)
        code = args.func(args)
    except SpechtError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    return EXIT_OK if code is None else code


def main():
    sys.exit(run())
