"""Command-line front end: enumerate, verify, and report with a stable JSON schema."""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import zverify
from .barcomb import BarPartition, bar_core_quotient, bar_partitions, is_odd_prime, sigma
from .blocks import BlockId, basic_set, block_partition, brauer_count
from .isometry import basic_set_transport, block_kernel, broue_check, iso_I, local_side, perfect_check, swap_J
from .spinchar import SELF, SYM, SpinLabel

WORKERS_ENV = "SPINBARS_WORKERS"


def _label_json(x: SpinLabel) -> dict:
    return {"partition": list(x.lam.parts), "tag": x.tag}


def _quotient_json(q) -> dict:
    return {
        "lambda0": list(q.lambda0.parts),
        "components": [list(c.parts) for c in q.components],
    }


def _block_json(b: BlockId) -> dict:
    return {
        "group": b.group,
        "p": b.p,
        "core": list(b.core.parts),
        "weight": b.weight,
        "sign": b.sign,
        "n": b.n,
        "defect_zero": b.is_defect_zero(),
    }


def _parse_core(text: str) -> BarPartition:
    if text.strip() in ("", "-"):
        return BarPartition(())
    try:
        parts = tuple(int(tok) for tok in text.split(","))
        return BarPartition(parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(
            f"core must be comma-separated strictly decreasing positive integers: {exc}"
        ) from None


def _select_blocks(args) -> list[tuple[BlockId, tuple[SpinLabel, ...]]]:
    found = block_partition(args.group, args.n, args.p)
    if args.core is None:
        return found
    chosen = [(b, mem) for b, mem in found if b.core == args.core]
    if not chosen:
        raise ValueError(f"no spin block of n={args.n}, p={args.p} has core {args.core.parts}")
    return chosen


def _cmd_cores(args) -> tuple[list, int]:
    results = []
    for lam in bar_partitions(args.n):
        core, quotient = bar_core_quotient(lam, args.p)
        results.append(
            {
                "partition": list(lam.parts),
                "sign": sigma(lam),
                "core": list(core.parts),
                "weight": quotient.weight,
                "quotient": _quotient_json(quotient),
            }
        )
    if not results:  # n = 0: the empty partition is its own core
        results.append(
            {"partition": [], "sign": 1, "core": [], "weight": 0,
             "quotient": {"lambda0": [], "components": [[] for _ in range((args.p - 1) // 2)]}}
        )
    return results, 0


def _cmd_blocks(args) -> tuple[list, int]:
    results = []
    for b, members in _select_blocks(args):
        entry = _block_json(b)
        entry["labels"] = [_label_json(x) for x in members]
        results.append(entry)
    return results, 0


def _cmd_basic_set(args) -> tuple[list, int]:
    results = []
    for b, _ in _select_blocks(args):
        entry = _block_json(b)
        entry["basic_set"] = [_label_json(x) for x in basic_set(b)]
        results.append(entry)
    return results, 0


def _verify_one(b: BlockId) -> dict:
    matrix = zverify.restricted_matrix(b)
    report = zverify.z_span_equal(basic_set(b), matrix, b)
    entry = _block_json(b)
    entry["verdict"] = "pass" if report.verdict else "fail"
    entry["basic_set"] = [_label_json(x) for x in report.candidates]
    entry["rank"] = report.rank_full
    entry["relations"] = [
        {
            "label": _label_json(x),
            "coordinates": list(coords) if coords is not None else None,
        }
        for x, coords in report.coordinates.items()
    ]
    entry["classes"] = [
        {"type": list(c.pi), "branch": c.branch, "centralizer": c.centralizer_order}
        for c in matrix.classes
    ]
    entry["matrix"] = [
        {"label": _label_json(x), "values": [v.to_json() for v in row]}
        for x, row in zip(matrix.row_keys, matrix.entries)
    ]
    return entry


def _cmd_verify(args) -> tuple[list, int]:
    blocks = [b for b, _ in _select_blocks(args)]
    workers = int(os.environ.get(WORKERS_ENV, os.cpu_count() or 1))
    if workers > 1 and len(blocks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_verify_one, blocks))
    else:
        results = [_verify_one(b) for b in blocks]
    failed = sum(1 for r in results if r["verdict"] != "pass")
    summary = {"blocks": len(results), "pass": len(results) - failed, "fail": failed}
    return [{"summary": summary, "blocks": results}], (1 if failed else 0)


def _cmd_counts(args) -> tuple[list, int]:
    results = []
    for b, _ in _select_blocks(args):
        report = zverify.verify_basic_set(b)
        entry = _block_json(b)
        entry["basic_set_size"] = len(basic_set(b))
        entry["brauer_count"] = brauer_count(b)
        entry["rank"] = report.rank_full
        results.append(entry)
    return results, 0


def _cmd_isometry(args) -> tuple[list, int]:
    results = []
    for b, members in _select_blocks(args):
        entry = _block_json(b)
        if b.weight == 0:
            entry["isometry"] = None
        else:
            iso = iso_I(b)
            entry["isometry"] = {
                "side": local_side(b),
                "basic_transport": basic_set_transport(b),
                "mapping": [
                    {
                        "from": _label_json(s),
                        "to": {**_quotient_json(t.quotient), "tag": t.tag},
                        "sign": sign,
                    }
                    for s, t, sign in iso.mapping
                ],
            }
        swaps = []
        if b.group == SYM:  # pair swaps are a symmetric-cover construction
            for lam in sorted({x.lam.parts for x in members if x.tag != SELF}, reverse=True):
                J = swap_J(b, BarPartition(lam))
                kernel = block_kernel(J, b)
                swaps.append(
                    {
                        "pair": list(lam),
                        "broue": broue_check(kernel, b.p).passed,
                        "perfect": perfect_check(J, b.p, b),
                    }
                )
        entry["swaps"] = swaps
        results.append(entry)
    return results, 0


def _cmd_selftest(args) -> tuple[list, int]:
    from .algnum import AlgNum, I

    checks = []

    def check(name, fn):
        try:
            ok = bool(fn())
        except Exception:  # noqa: BLE001 - report, do not crash the battery
            ok = False
        checks.append({"check": name, "ok": ok})

    b = BlockId("sym", 3, BarPartition(()), 1)

    def micro():
        m = zverify.restricted_matrix(b)
        idx = {c.pi: i for i, c in enumerate(m.classes)}
        rows = {x.lam.parts + (x.tag,): r for x, r in zip(m.row_keys, m.entries)}
        return (
            rows[(3, "self")][idx[(1, 1, 1)]] == AlgNum.from_rational(2)
            and rows[(2, 1, "plus")][idx[(2, 1)]] == I
            and rows[(2, 1, "minus")][idx[(2, 1)]] == -I
            and zverify.verify_basic_set(b).verdict
        )

    check("worked-micro-instance", micro)
    check(
        "sign-identity-n<=12",
        lambda: all(
            sigma(lam) == sigma(bar_core_quotient(lam, p)[0]) * bar_core_quotient(lam, p)[1].sigma()
            for p in (3, 5)
            for n in range(13)
            for lam in bar_partitions(n)
        ),
    )
    check(
        "verification-n<=8",
        lambda: all(
            zverify.verify_basic_set(bid).verdict
            for group in ("sym", "alt")
            for bid, _ in block_partition(group, 8, 3)
        ),
    )
    failed = sum(1 for c in checks if not c["ok"])
    return checks, (1 if failed else 0)


COMMANDS = {
    "cores": _cmd_cores,
    "blocks": _cmd_blocks,
    "basic-set": _cmd_basic_set,
    "verify": _cmd_verify,
    "counts": _cmd_counts,
    "isometry": _cmd_isometry,
    "selftest": _cmd_selftest,
}


def _fmt_parts(parts) -> str:
    return "(" + ",".join(str(a) for a in parts) + ")"


def _fmt_label(label: dict) -> str:
    mark = {"self": "", "plus": "+", "minus": "-"}[label["tag"]]
    return _fmt_parts(label["partition"]) + mark


def _render_table(command: str, results: list) -> str:
    lines = []
    if command == "cores":
        for r in results:
            comps = " ".join(_fmt_parts(c) for c in r["quotient"]["components"])
            lines.append(
                f"{_fmt_parts(r['partition'])} sign={r['sign']:+d} core={_fmt_parts(r['core'])} "
                f"w={r['weight']} lambda0={_fmt_parts(r['quotient']['lambda0'])} components={comps}"
            )
    elif command == "blocks":
        for r in results:
            tagline = "defect-zero" if r["defect_zero"] else f"w={r['weight']}"
            labels = " ".join(_fmt_label(x) for x in r["labels"])
            lines.append(
                f"core={_fmt_parts(r['core'])} {tagline} sign={r['sign']:+d} "
                f"characters={len(r['labels'])}: {labels}"
            )
    elif command == "basic-set":
        for r in results:
            labels = " ".join(_fmt_label(x) for x in r["basic_set"])
            lines.append(f"core={_fmt_parts(r['core'])} w={r['weight']} basic-set: {labels}")
    elif command == "counts":
        for r in results:
            lines.append(
                f"core={_fmt_parts(r['core'])} w={r['weight']} basic={r['basic_set_size']} "
                f"brauer={r['brauer_count']} rank={r['rank']}"
            )
    elif command == "verify":
        summary = results[0]["summary"]
        for r in results[0]["blocks"]:
            rel = "; ".join(
                f"{_fmt_label(x['label'])} = {x['coordinates']}" for x in r["relations"]
            )
            basic = " ".join(_fmt_label(x) for x in r["basic_set"])
            lines.append(
                f"core={_fmt_parts(r['core'])} w={r['weight']} sign={r['sign']:+d} "
                f"verdict={r['verdict']} basic-set: {basic}" + (f" relations: {rel}" if rel else "")
            )
        lines.append(f"summary: {summary['pass']} pass, {summary['fail']} fail of {summary['blocks']}")
    elif command == "isometry":
        for r in results:
            if r["isometry"] is None:
                lines.append(f"core={_fmt_parts(r['core'])} defect-zero: no isometry")
            else:
                iso = r["isometry"]
                maps = "; ".join(
                    f"{_fmt_label(m['from'])} -> {m['sign']:+d}*"
                    + _fmt_parts(m["to"]["lambda0"])
                    + "|" + ",".join(_fmt_parts(c) for c in m["to"]["components"])
                    + {"self": "", "plus": "+", "minus": "-"}[m["to"]["tag"]]
                    for m in iso["mapping"]
                )
                lines.append(
                    f"core={_fmt_parts(r['core'])} w={r['weight']} side={iso['side']} "
                    f"transport={'ok' if iso['basic_transport'] else 'BROKEN'} {maps}"
                )
            for s in r["swaps"]:
                lines.append(
                    f"  swap {_fmt_parts(s['pair'])}: broue={'pass' if s['broue'] else 'fail'} "
                    f"perfect={'pass' if s['perfect'] else 'fail'}"
                )
    elif command == "selftest":
        for r in results:
            lines.append(f"{'ok  ' if r['ok'] else 'FAIL'} {r['check']}")
    else:
        for r in results:
            lines.append(json.dumps(r, sort_keys=True))
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinbars",
        description="Exact spin-block and basic-set computations for the double covers",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for verb in COMMANDS:
        sp = sub.add_parser(verb)
        if verb != "selftest":
            sp.add_argument("--n", type=int, required=(verb != "cores"), default=0)
            sp.add_argument("--p", type=int, required=True)
            sp.add_argument("--group", choices=["sym", "alt"], default="sym")
            sp.add_argument("--core", type=_parse_core, default=None)
        sp.add_argument("--format", choices=["json", "table"], default="json")
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command != "selftest":
        if not is_odd_prime(args.p):
            parser.error(f"--p must be an odd prime, got {args.p}")
        if args.command != "cores" and args.n < 1:
            parser.error("--n must be at least 1")
        if args.n < 0:
            parser.error("--n must be non-negative")
    try:
        results, status = COMMANDS[args.command](args)
    except SystemExit:
        raise
    except ValueError as exc:
        parser.error(str(exc))
    payload = {
        "command": args.command,
        "parameters": {
            "n": getattr(args, "n", None),
            "p": getattr(args, "p", None),
            "group": getattr(args, "group", None),
            "core": list(args.core.parts) if getattr(args, "core", None) is not None else None,
        },
        "results": results,
    }
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        print(_render_table(args.command, results))
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
